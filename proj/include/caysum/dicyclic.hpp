// caysum/dicyclic.hpp
//
// The generalized dicyclic group G = <A, b> with
//
//   b^2 in A an involution,  b^4 = e,  b a b^{-1} = a^{-1}  for all a in A.
//
// G = A u Ab, so an element is a pair (a, f) with f in {0,1} meaning a*b^f;
// it is stored as the dense index f*|A| + a, making the numeric order equal
// to (flag, exponent-vector) lexicographic order.  Multiplication:
//
//   (x,0)(y,f) = (x+y, f)     (x,1)(y,0) = (x-y, 1)     (x,1)(y,1) = (x-y+b^2, 0)
//
// Cached at construction: the square subgroup B = {2a : a in A}, the
// involution-or-identity subgroup A' = {a : 2a = 0}, the full square set
// Sq(G) = B u {b^2}, and the conjugacy class partition
//
//   {a} for a in A',   {a, -a} for a in A \ A',   B+x+b per B-coset of Ab.
//
// If A is an elementary abelian 2-group the construction degenerates to an
// abelian G; it is permitted, and all cached sets remain correct (classes
// become singletons because B = {0}).

#ifndef CAYSUM_DICYCLIC_HPP_
#define CAYSUM_DICYCLIC_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "caysum/abelian.hpp"
#include "caysum/errors.hpp"

namespace caysum {

// A set of group elements tagged with the two validity checks a connection
// set must pass before it may define a Cayley sum graph.
struct ConnectionSet {
  std::vector<int> elements;  // sorted G-indices
  bool validated_normal = false;
  bool validated_square_free = false;
};

// Witnesses for a failed validation.
struct ValidationReport {
  // for each offending element, one class member that is missing from S
  std::vector<std::pair<int, int>> missing_class_members;
  std::vector<int> square_elements;  // elements of S that are squares
  bool normal() const { return missing_class_members.empty(); }
  bool square_free() const { return square_elements.empty(); }
};

class DicyclicGroup {
 public:
  DicyclicGroup(AbelianGroup A, int b_squared) : A_(std::move(A)), b2_(b_squared) {
    N_ = A_.order();
    if (N_ % 2 != 0)
      throw InputError("dicyclic extension requires |A| even");
    if (b2_ < 0 || b2_ >= N_ || A_.element_order(b2_) != 2)
      throw InputError("b^2 must be an involution of A");
    build_caches();
  }

  const AbelianGroup& A() const { return A_; }
  int b2() const { return b2_; }
  int abelian_order() const { return N_; }
  int order() const { return 2 * N_; }

  // ---- element encoding ----------------------------------------------------
  int flag(int g) const { return g >= N_ ? 1 : 0; }
  int apart(int g) const { return g >= N_ ? g - N_ : g; }
  int make(int a, int f) const { return f ? a + N_ : a; }
  int b() const { return make(0, 1); }

  int mul(int x, int y) const {
    int xa = apart(x), ya = apart(y);
    if (flag(x) == 0) return make(A_.add(xa, ya), flag(y));
    if (flag(y) == 0) return make(A_.sub(xa, ya), 1);
    return make(A_.add(A_.sub(xa, ya), b2_), 0);
  }

  int inv(int x) const {
    if (flag(x) == 0) return make(A_.neg(apart(x)), 0);
    return make(A_.add(apart(x), b2_), 1);
  }

  int conj(int g, int x) const {  // g x g^{-1}
    return mul(mul(g, x), inv(g));
  }

  long long element_order_g(int g) const {
    if (flag(g) == 0) return A_.element_order(apart(g));
    return 4;  // (x,1)^2 = (b^2, 0) and b^2 != e
  }

  // ---- cached structure ----------------------------------------------------
  const std::vector<int>& B_elements() const { return B_; }
  const std::vector<int>& A_prime_elements() const { return Aprime_; }
  bool in_B(int a) const { return in_B_[a] != 0; }
  bool in_A_prime(int a) const { return in_Ap_[a] != 0; }

  // Sq(G) = B u {b^2}, as sorted G-indices (all in the A part).
  const std::vector<int>& square_set() const { return squares_; }
  bool is_square(int g) const { return flag(g) == 0 && is_sq_a_[apart(g)] != 0; }

  // All involutions of G = A' \ {e}, as sorted G-indices.
  std::vector<int> involution_set() const {
    std::vector<int> out;
    for (int a : Aprime_)
      if (a != 0) out.push_back(a);
    return out;
  }

  long long n_nonsquares() const { return order() - static_cast<long long>(squares_.size()); }

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  bool class_is_square(int c) const { return class_sq_[c] != 0; }

  // ---- connection-set validation -------------------------------------------
  ConnectionSet validate_connection_set(std::vector<int> elems,
                                        ValidationReport* report = nullptr) const {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<char> in_s(order(), 0);
    for (int g : elems) {
      if (g < 0 || g >= order()) throw InputError("connection set element out of range");
      in_s[g] = 1;
    }
    ValidationReport local;
    ValidationReport& rep = report ? *report : local;
    for (int g : elems) {
      if (is_square(g)) rep.square_elements.push_back(g);
      for (int h : classes_[class_of_[g]]) {
        if (!in_s[h]) {
          rep.missing_class_members.emplace_back(g, h);
          break;
        }
      }
    }
    ConnectionSet S;
    S.elements = std::move(elems);
    S.validated_normal = rep.normal();
    S.validated_square_free = rep.square_free();
    return S;
  }

 private:
  void build_caches() {
    // B = {a^2 : a in A} (the image of doubling).
    in_B_.assign(N_, 0);
    for (int a = 0; a < N_; ++a) in_B_[A_.add(a, a)] = 1;
    for (int a = 0; a < N_; ++a)
      if (in_B_[a]) B_.push_back(a);
    // A' = {a : 2a = 0}.
    in_Ap_.assign(N_, 0);
    for (int a = 0; a < N_; ++a)
      if (A_.add(a, a) == 0) {
        in_Ap_[a] = 1;
        Aprime_.push_back(a);
      }
    // Sq(G) = B u {b^2}.
    is_sq_a_.assign(N_, 0);
    for (int a : B_) is_sq_a_[a] = 1;
    is_sq_a_[b2_] = 1;
    for (int a = 0; a < N_; ++a)
      if (is_sq_a_[a]) squares_.push_back(a);
    // Conjugacy classes, in canonical (minimal-element) order: the A part
    // first ({a} for involutions-or-identity, {a,-a} otherwise), then one
    // class B+x+b per B-coset of Ab.
    std::vector<char> done(2 * N_, 0);
    class_of_.assign(2 * N_, -1);
    for (int a = 0; a < N_; ++a) {
      if (done[a]) continue;
      std::vector<int> cls = {a};
      done[a] = 1;
      int na = A_.neg(a);
      if (!done[na]) {
        cls.push_back(na);
        done[na] = 1;
      }
      std::sort(cls.begin(), cls.end());
      push_class(std::move(cls));
    }
    for (int x = 0; x < N_; ++x) {
      int g = make(x, 1);
      if (done[g]) continue;
      std::vector<int> cls;
      for (int bb : B_) {
        int h = make(A_.add(x, bb), 1);
        done[h] = 1;
        cls.push_back(h);
      }
      std::sort(cls.begin(), cls.end());
      push_class(std::move(cls));
    }
    // Square-homogeneity of classes (conjugation preserves squares).
    for (const auto& cls : classes_) {
      bool sq = is_square(cls.front());
      for (int g : cls) {
        if (is_square(g) != sq)
          throw std::logic_error("conjugacy class mixes squares and non-squares");
      }
      class_sq_.push_back(sq ? 1 : 0);
    }
  }

  void push_class(std::vector<int> cls) {
    int id = static_cast<int>(classes_.size());
    for (int g : cls) class_of_[g] = id;
    classes_.push_back(std::move(cls));
  }

  AbelianGroup A_;
  int b2_;
  int N_ = 0;
  std::vector<int> B_, Aprime_, squares_;
  std::vector<char> in_B_, in_Ap_, is_sq_a_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<char> class_sq_;
};

// Convenience constructor: normalized coordinates for b^2.
inline DicyclicGroup make_group(const AbelianSpec& spec, const std::vector<int>& b2_coords) {
  AbelianGroup A(spec);
  return DicyclicGroup(A, A.index(b2_coords));
}

inline DicyclicGroup make_group(const std::vector<long long>& orders,
                                const std::vector<long long>& b2_user_coords) {
  AbelianGroup A(normalize_spec(orders));
  return DicyclicGroup(A, A.from_user_coords(b2_user_coords));
}

}  // namespace caysum

#endif  // CAYSUM_DICYCLIC_HPP_
