// caysum/subgroups.hpp
//
// Subgroup enumeration for G = <A,b> and the numeric invariants that the
// feasibility analysis consumes.
//
// Every subgroup of G is either a subgroup of A ("TypeA") or has the form
// K = H u Hzb with H = K n A of index 2 in K, which forces b^2 in H
// ("TypeZb", K = <H, zb>).  A TypeZb subgroup is stored normalized: z is the
// minimal element of its H-coset, so equal subgroups compare equal.
//
// The invariants live in the 2-torsion quotient V = A/B, an F2 vector space
// of dimension lambda (one coordinate per 2-power factor of A).  The image
// of H in V is row-reduced; the pivot factor indices give L, the complement
// gives T, and
//
//   u       = |H n B|  = |H| / 2^|L|
//   2^m     = |H n A'|
//   2^(m-r) = |H n A' n B|
//
// eps_bar in {0,1,2} is the offset in the admissible range 0 <= t <=
// 2^|L| - eps_bar for beta = t*u, computed by a four-way case split on
// (B <= H?, b^2 vs H and B).  script_L is the minimum number of non-squares
// in a coset Kx != K, the hard upper bound on beta.  J is the union of the
// self-inverse involution-free cosets of H in A: exactly the cosets whose
// connection-set elements must be chosen in inverse pairs.

#ifndef CAYSUM_SUBGROUPS_HPP_
#define CAYSUM_SUBGROUPS_HPP_

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "caysum/dicyclic.hpp"

namespace caysum {

// ---------------------------------------------------------------------------
// V = A/B as an F2 vector space of dimension lambda.
// Factor i (i < lambda) maps to bit lambda-1-i, so numeric order on masks
// equals lexicographic order on coordinate vectors.
// ---------------------------------------------------------------------------

inline unsigned v_bit(const AbelianGroup& A, int factor) {
  return 1u << (A.lambda() - 1 - factor);
}

inline unsigned v_image(const AbelianGroup& A, int a) {
  std::vector<int> c = A.coords(a);
  unsigned mask = 0;
  for (int i = 0; i < A.lambda(); ++i)
    if (c[i] & 1) mask |= v_bit(A, i);
  return mask;
}

// Reduced echelon basis over F2 (pivot = highest set bit, pivots cleared
// from every other row), returned with descending pivot bits, i.e. ascending
// pivot factor indices.
inline std::vector<unsigned> v_rref_basis(const AbelianGroup& A, const std::vector<int>& elems) {
  int lam = A.lambda();
  std::vector<unsigned> piv(lam, 0);
  for (int a : elems) {
    unsigned v = v_image(A, a);
    for (int bit = lam - 1; bit >= 0 && v; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (piv[bit]) {
        v ^= piv[bit];
      } else {
        piv[bit] = v;
        v = 0;
      }
    }
  }
  for (int bit = 0; bit < lam; ++bit) {
    if (!piv[bit]) continue;
    for (int hi = bit + 1; hi < lam; ++hi)
      if (piv[hi] && ((piv[hi] >> bit) & 1u)) piv[hi] ^= piv[bit];
  }
  std::vector<unsigned> basis;
  for (int bit = lam - 1; bit >= 0; --bit)
    if (piv[bit]) basis.push_back(piv[bit]);
  return basis;
}

inline bool v_in_span(const std::vector<unsigned>& basis, unsigned v) {
  for (unsigned b : basis) {
    unsigned pivot = static_cast<unsigned>(std::bit_width(b)) - 1;
    if ((v >> pivot) & 1u) v ^= b;
  }
  return v == 0;
}

// All 2^k masks spanned by the basis, in ascending (lexicographic) order.
inline std::vector<unsigned> v_span(const std::vector<unsigned>& basis) {
  std::vector<unsigned> out = {0u};
  for (unsigned b : basis) {
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// 0-based factor indices of the pivots of an RREF basis, ascending.
inline std::vector<int> v_pivot_factors(const AbelianGroup& A, const std::vector<unsigned>& basis) {
  std::vector<int> out;
  for (unsigned b : basis)
    out.push_back(A.lambda() - std::bit_width(b));
  std::sort(out.begin(), out.end());
  return out;
}

// Elements of H grouped by their image in V; each fiber is one coset of
// H n B inside H, listed in canonical element order.
inline std::map<unsigned, std::vector<int>> v_layers(const AbelianGroup& A, const SubgroupA& H) {
  std::map<unsigned, std::vector<int>> layers;
  for (int h : H.elements) layers[v_image(A, h)].push_back(h);
  return layers;
}

// ---------------------------------------------------------------------------
// Subgroups of G.
// ---------------------------------------------------------------------------

enum class SubgroupKind { TypeA = 0, TypeZb = 1 };

struct Subgroup {
  SubgroupKind kind = SubgroupKind::TypeA;
  SubgroupA H;                // K n A
  int z = 0;                  // TypeZb only: minimal representative of Hz
  std::vector<int> elements;  // sorted G-indices
  std::vector<int> gens;      // deterministic generating set of H (A-indices)
  std::string label;

  long long size() const { return static_cast<long long>(elements.size()); }
  bool contains_g(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
  }
  bool operator==(const Subgroup& o) const { return kind == o.kind && elements == o.elements; }
};

inline bool is_whole_group(const DicyclicGroup& G, const Subgroup& K) {
  return K.size() == G.order();
}

// Greedy deterministic generating set: scan H in canonical order, keep every
// element not already generated.
inline std::vector<int> minimal_generators(const AbelianGroup& A, const SubgroupA& H) {
  std::vector<int> gens;
  SubgroupA cur = A.subgroup_closure({});
  for (int a : H.elements) {
    if (cur.contains(a)) continue;
    gens.push_back(a);
    cur = A.subgroup_closure(gens);
    if (cur.size() == H.size()) break;
  }
  return gens;
}

namespace detail {

inline std::string coord_token(const AbelianGroup& A, int a) {
  std::ostringstream os;
  os << '(';
  std::vector<int> c = A.coords(a);
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c[i];
  }
  os << ')';
  return os.str();
}

inline std::string gens_token(const AbelianGroup& A, const std::vector<int>& gens) {
  if (gens.empty()) return "e";
  std::string s;
  for (int g : gens) s += coord_token(A, g);
  return s;
}

}  // namespace detail

inline Subgroup make_type_a(const DicyclicGroup& G, SubgroupA H) {
  Subgroup K;
  K.kind = SubgroupKind::TypeA;
  K.elements = H.elements;  // flag-0 indices coincide with A-indices
  K.gens = minimal_generators(G.A(), H);
  K.H = std::move(H);
  K.label = "A<" + detail::gens_token(G.A(), K.gens) + ">";
  return K;
}

inline Subgroup make_type_zb(const DicyclicGroup& G, SubgroupA H, int z) {
  if (!H.contains(G.b2()))
    throw InputError("a subgroup <H, zb> requires b^2 in H");
  Subgroup K;
  K.kind = SubgroupKind::TypeZb;
  int zmin = INT_MAX;
  for (int h : H.elements) zmin = std::min(zmin, G.A().add(h, z));
  K.z = zmin;
  for (int h : H.elements) {
    K.elements.push_back(h);
    K.elements.push_back(G.make(G.A().add(h, z), 1));
  }
  std::sort(K.elements.begin(), K.elements.end());
  K.gens = minimal_generators(G.A(), H);
  std::string hs = detail::gens_token(G.A(), K.gens);
  K.label = "Zb<H=" + hs + ";z=" + detail::coord_token(G.A(), K.z) + ">";
  K.H = std::move(H);
  return K;
}

// All subgroups of G: every subgroup of A, plus <H, zb> for every H
// containing b^2 and one z per coset of H in A.  Sorted by (size, kind,
// element list) so output order is reproducible.
inline std::vector<Subgroup> enumerate_all_subgroups(const DicyclicGroup& G, long long cap = 128) {
  if (G.order() > cap) {
    std::ostringstream os;
    os << "subgroup enumeration requires |G| <= " << cap << ", got " << G.order();
    throw CapExceeded(os.str());
  }
  std::vector<SubgroupA> subs = G.A().enumerate_subgroups(G.abelian_order());
  std::vector<Subgroup> out;
  for (const SubgroupA& H : subs) out.push_back(make_type_a(G, H));
  for (const SubgroupA& H : subs) {
    if (!H.contains(G.b2())) continue;
    for (const std::vector<int>& C : G.A().cosets(H))
      out.push_back(make_type_zb(G, H, C.front()));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    return x.elements < y.elements;
  });
  return out;
}

// ---------------------------------------------------------------------------
// J = union of cosets Ha (a not in H) with Ha = (Ha)^{-1} and Ha n A' empty.
// ---------------------------------------------------------------------------

struct JSet {
  std::vector<int> elements;             // sorted A-indices
  std::vector<std::vector<int>> cosets;  // constituent cosets, canonical order
  bool empty() const { return elements.empty(); }
};

inline JSet compute_J(const DicyclicGroup& G, const SubgroupA& H) {
  const AbelianGroup& A = G.A();
  JSet out;
  for (const std::vector<int>& C : A.cosets(H)) {
    if (C.front() == 0) continue;  // skip H itself
    bool self_inverse = true;
    bool meets_Ap = false;
    for (int x : C) {
      if (!std::binary_search(C.begin(), C.end(), A.neg(x))) {
        self_inverse = false;
        break;
      }
      if (G.in_A_prime(x)) meets_Ap = true;
    }
    if (!self_inverse || meets_Ap) continue;
    out.elements.insert(out.elements.end(), C.begin(), C.end());
    out.cosets.push_back(C);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// ---------------------------------------------------------------------------
// Invariants.
// ---------------------------------------------------------------------------

struct SubgroupInvariants {
  std::vector<int> L;  // 1-based indices of 2-power factors hit by the H-image
  std::vector<int> T;  // the complementary 1-based indices (among 1..lambda)
  int m = 0;           // |H n A'| = 2^m
  int r = 0;           // |H n A' n B| = 2^(m-r)
  long long h_unit = 1;  // u = |H n B|
  bool b2_in_H_minus_B = false;
  bool B_in_H = false;
  int eps = 0;           // 1 iff b^2 in H \ B
  int eps_bar = 1;       // offset in 0 <= t <= 2^|L| - eps_bar
  int eps_bar_cell = 0;  // which of the four cases fired (TypeA only, 1..4)
  std::string case_label;
  long long script_L = 0;  // min non-squares over cosets Kx != K
  JSet J;
  std::vector<unsigned> Hbar_basis;  // RREF basis of the image of H in V
  bool whole_group = false;
};

namespace detail {

inline int exact_log2(long long n, const char* what) {
  if (n <= 0 || (n & (n - 1)))
    throw std::logic_error(std::string(what) + " is not a power of two");
  int e = 0;
  while (n > 1) {
    n >>= 1;
    ++e;
  }
  return e;
}

}  // namespace detail

// Minimum of |Nsq(G) n Kx| over the cosets Kx != K; |K| by convention when
// K = G (no outside coset exists to constrain beta).
inline long long script_L_brute(const DicyclicGroup& G, const Subgroup& K) {
  if (is_whole_group(G, K)) return K.size();
  std::vector<char> assigned(G.order(), 0);
  for (int k : K.elements) assigned[k] = 1;
  long long best = LLONG_MAX;
  for (int x = 0; x < G.order(); ++x) {
    if (assigned[x]) continue;
    long long nsq = 0;
    for (int k : K.elements) {
      int g = G.mul(k, x);
      assigned[g] = 1;
      if (!G.is_square(g)) ++nsq;
    }
    best = std::min(best, nsq);
  }
  return best;
}

inline SubgroupInvariants subgroup_invariants(const DicyclicGroup& G, const Subgroup& K) {
  const AbelianGroup& A = G.A();
  const SubgroupA& H = K.H;
  SubgroupInvariants inv;
  inv.whole_group = is_whole_group(G, K);

  inv.Hbar_basis = v_rref_basis(A, H.elements);
  std::vector<int> L0 = v_pivot_factors(A, inv.Hbar_basis);
  for (int i : L0) inv.L.push_back(i + 1);
  for (int i = 1; i <= A.lambda(); ++i)
    if (!std::binary_search(inv.L.begin(), inv.L.end(), i)) inv.T.push_back(i);

  long long u = 0, nAp = 0, nApB = 0;
  for (int h : H.elements) {
    bool inB = G.in_B(h), inAp = G.in_A_prime(h);
    if (inB) ++u;
    if (inAp) ++nAp;
    if (inB && inAp) ++nApB;
  }
  inv.h_unit = u;
  int Lsz = static_cast<int>(inv.L.size());
  if (u << Lsz != H.size())
    throw std::logic_error("|H n B| != |H| / 2^|L|");
  inv.m = detail::exact_log2(nAp, "|H n A'|");
  inv.r = inv.m - detail::exact_log2(nApB, "|H n A' n B|");
  if (inv.m > Lsz && u % 2 != 0)
    throw std::logic_error("m > |L| requires |H n B| even");

  inv.B_in_H = true;
  for (int b : G.B_elements())
    if (!H.contains(b)) {
      inv.B_in_H = false;
      break;
    }
  bool b2_in_H = H.contains(G.b2());
  bool b2_in_B = G.in_B(G.b2());
  inv.b2_in_H_minus_B = b2_in_H && !b2_in_B;
  inv.eps = inv.b2_in_H_minus_B ? 1 : 0;

  if (K.kind == SubgroupKind::TypeA) {
    if (inv.B_in_H)
      inv.eps_bar_cell = b2_in_H ? 1 : 2;
    else if (!b2_in_H && !b2_in_B && v_in_span(inv.Hbar_basis, v_image(A, G.b2())))
      inv.eps_bar_cell = 3;  // Hb^2 meets B although b^2 lies outside H u B
    else
      inv.eps_bar_cell = 4;
    inv.eps_bar = inv.eps_bar_cell == 1 ? 0 : (inv.eps_bar_cell == 3 ? 2 : 1);
  } else {
    if (!b2_in_H) throw std::logic_error("TypeZb subgroup lost b^2");
    inv.eps_bar = inv.B_in_H ? 0 : 1;
  }

  if (K.kind == SubgroupKind::TypeA) {
    int c = inv.b2_in_H_minus_B ? (inv.m == 1 ? 1 : 2) : (inv.r == 0 ? 3 : 4);
    inv.case_label = "Thm1.1(" + std::to_string(c) + ")";
  } else {
    int c;
    if (inv.b2_in_H_minus_B)
      c = inv.m > Lsz ? 1 : 2;
    else
      c = inv.m > Lsz ? (inv.r == 0 ? 3 : 4) : 5;
    inv.case_label = "Thm1.2(" + std::to_string(c) + ")";
  }

  inv.J = compute_J(G, H);
  if (inv.J.empty() != (inv.m == Lsz))
    throw std::logic_error("J emptiness disagrees with m vs |L|");

  inv.script_L = script_L_brute(G, K);
  if (K.kind == SubgroupKind::TypeA) {
    long long closed = 0;
    switch (inv.eps_bar_cell) {
      case 1: closed = H.size(); break;
      case 2: closed = H.size() - 1; break;
      case 3: closed = H.size() - u - 1; break;
      case 4: closed = H.size() - u; break;
    }
    if (inv.script_L != closed)
      throw std::logic_error("coset non-square minimum disagrees with closed form");
  }
  return inv;
}

}  // namespace caysum

#endif  // CAYSUM_SUBGROUPS_HPP_
