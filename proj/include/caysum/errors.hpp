// caysum/errors.hpp
//
// Error taxonomy shared by the whole library.  The command-line frontend maps
// these onto process exit codes (input 2, infeasible 3, cap 4); anything that
// escapes as std::logic_error is an internal bug and is never downgraded.

#ifndef CAYSUM_ERRORS_HPP_
#define CAYSUM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace caysum {

// Malformed or semantically invalid user input (files, element encodings,
// group parameters that violate constructor preconditions).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation is well-formed but outside the feasible region
// (e.g. a witness for an (alpha,beta) pair the theory excludes).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable exhaustive-search cap was exceeded (group too large,
// too many conjugacy classes, ...).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace caysum

#endif  // CAYSUM_ERRORS_HPP_
