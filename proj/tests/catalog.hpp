// tests/catalog.hpp
//
// The eight-group test catalog shared by the test suites, the acceptance
// gate, and the demos.  Mirrors data/groups/*.json; kept programmatic so
// library tests need no file I/O.

#ifndef CAYSUM_TESTS_CATALOG_HPP_
#define CAYSUM_TESTS_CATALOG_HPP_

#include <string>
#include <utility>
#include <vector>

#include "caysum/dicyclic.hpp"

namespace testcat {

struct Entry {
  std::string name;
  std::vector<long long> orders;
  std::vector<long long> b2;
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"q8", {4}, {2}},                 // quaternion group, A = Z4
      {"dic16", {8}, {4}},              // dicyclic of order 16, A = Z8
      {"z2z4_b10", {2, 4}, {1, 0}},     // A = Z2 x Z4, b^2 the Z2 involution
      {"z2z4_b02", {2, 4}, {0, 2}},     // A = Z2 x Z4, b^2 inside 2A
      {"z12", {12}, {6}},               // A = Z12: odd part present
      {"z2z2z2", {2, 2, 2}, {1, 0, 0}}, // elementary A: degenerate abelian G
      {"z4z4", {4, 4}, {0, 2}},         // A = Z4 x Z4: rank-2 2-torsion
      {"z2z8", {2, 8}, {0, 4}},         // A = Z2 x Z8: mixed exponents
  };
  return e;
}

inline std::vector<std::pair<std::string, caysum::DicyclicGroup>> make_catalog() {
  std::vector<std::pair<std::string, caysum::DicyclicGroup>> out;
  for (const Entry& e : entries())
    out.emplace_back(e.name, caysum::make_group(e.orders, e.b2));
  return out;
}

}  // namespace testcat

#endif  // CAYSUM_TESTS_CATALOG_HPP_
