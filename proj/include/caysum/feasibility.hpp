// caysum/feasibility.hpp
//
// The exact predicted set of (alpha, beta) pairs for which a subgroup K of
// G = <A,b> is an (alpha, beta)-regular set of some Cayley sum graph
// CayS(G, S), S normal and square-free.
//
// Two independent evaluations are computed for every subgroup and must
// agree, otherwise a hard internal error is raised:
//
//  (1) the direct classification: a box of (eta + t'*u, zeta + t*u) values
//      with per-case parity conditions, where u = |H n B|, labeled by the
//      case tags "Thm1.1(1..4)" (subgroups inside A) and "Thm1.2(1..5)"
//      (subgroups <H, zb>) that the JSON interface exposes;
//
//  (2) a composition of the per-component predictors:
//        alpha_only_set   achievable |S n H| for S inside H      (beta = 0)
//        beta_only_set_H  achievable slice size for S in A \ H   (alpha = 0)
//        zb_ab_pairs      contribution of S inside Ab
//        zb_beta_inA      off-H slice sizes in A for K = <H, zb>
//
// Two corrections to the direct box are required for the routes to agree
// (both verified against exhaustive enumeration):
//   - eta inherits the parity constraint of alpha_only_set (eta must be
//     even when b^2 in H\B with m = 1, or b^2 not in H\B with r = 0);
//   - zeta must be even not only when m > |L| (J nonempty forces paired
//     elements) but also when r = 0 and A' n B is not contained in H: in
//     that case some self-inverse coset of H has all of its involutions
//     inside the square set, leaving no odd-size option for the slice.
//
// The whole group K = G has no outside coset, so its region is the set of
// achievable (|S|, 0) and is flagged whole_group.

#ifndef CAYSUM_FEASIBILITY_HPP_
#define CAYSUM_FEASIBILITY_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "caysum/subgroups.hpp"

namespace caysum {

using PairSet = std::set<std::pair<long long, long long>>;

struct FeasibleRegion {
  PairSet pairs;
  std::string case_label;
  long long unit = 1;  // u = |H n B|: the grid spacing of the block counts
  int eps = 0;
  int eps_bar = 1;
  long long eta_max = 0;
  long long zeta_max = 0;
  long long t_max = 0;
  long long tp_max = 0;
  bool eta_even_only = false;
  bool zeta_even_only = false;
  bool whole_group = false;
};

namespace detail {

// Cheap invariants of H <= A shared by the predictors and constructors.
struct HStats {
  long long H_size = 1;
  int Lsz = 0;
  long long u = 1;
  int m = 0;
  int r = 0;
  bool b2_in_H = false;
  bool b2_in_B = false;
  bool b2_in_H_minus_B = false;
  bool B_in_H = false;
  bool AprimeB_in_H = false;  // A' n B subset of H
  int eps = 0;
  int eps_bar = 1;       // range offset for subgroups inside A (4-way split)
  int eps_bar_cell = 4;  // which case fired: 1..4
  int eps_bar_zb = 1;    // variant for <H, zb>: 0 iff B <= H
  std::vector<unsigned> basis;  // RREF basis of the image of H in V = A/B
};

inline HStats h_stats(const DicyclicGroup& G, const SubgroupA& H) {
  const AbelianGroup& A = G.A();
  HStats st;
  st.H_size = H.size();
  st.basis = v_rref_basis(A, H.elements);
  st.Lsz = static_cast<int>(st.basis.size());
  long long nAp = 0, nApB = 0;
  st.u = 0;
  for (int h : H.elements) {
    bool inB = G.in_B(h), inAp = G.in_A_prime(h);
    if (inB) ++st.u;
    if (inAp) ++nAp;
    if (inB && inAp) ++nApB;
  }
  if (st.u << st.Lsz != st.H_size)
    throw std::logic_error("|H n B| != |H| / 2^|L|");
  st.m = exact_log2(nAp, "|H n A'|");
  st.r = st.m - exact_log2(nApB, "|H n A' n B|");
  st.b2_in_H = H.contains(G.b2());
  st.b2_in_B = G.in_B(G.b2());
  st.b2_in_H_minus_B = st.b2_in_H && !st.b2_in_B;
  st.eps = st.b2_in_H_minus_B ? 1 : 0;
  st.B_in_H = true;
  for (int b : G.B_elements())
    if (!H.contains(b)) {
      st.B_in_H = false;
      break;
    }
  st.AprimeB_in_H = true;
  for (int a : G.A_prime_elements())
    if (G.in_B(a) && !H.contains(a)) {
      st.AprimeB_in_H = false;
      break;
    }
  if (st.B_in_H)
    st.eps_bar_cell = st.b2_in_H ? 1 : 2;
  else if (!st.b2_in_H && !st.b2_in_B && v_in_span(st.basis, v_image(A, G.b2())))
    st.eps_bar_cell = 3;
  else
    st.eps_bar_cell = 4;
  st.eps_bar = st.eps_bar_cell == 1 ? 0 : (st.eps_bar_cell == 3 ? 2 : 1);
  st.eps_bar_zb = st.B_in_H ? 0 : 1;
  return st;
}

inline int case_clause_a(const HStats& st) {
  if (st.b2_in_H_minus_B) return st.m == 1 ? 1 : 2;
  return st.r == 0 ? 3 : 4;
}

inline int case_clause_zb(const HStats& st) {
  if (st.b2_in_H_minus_B) return st.m > st.Lsz ? 1 : 2;
  return st.m > st.Lsz ? (st.r == 0 ? 3 : 4) : 5;
}

inline bool eta_even_only(const HStats& st) {
  return st.b2_in_H_minus_B ? (st.m == 1) : (st.r == 0);
}

inline bool zeta_even_only(const HStats& st) {
  return st.m > st.Lsz || (st.r == 0 && !st.AprimeB_in_H);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Component predictors.
// ---------------------------------------------------------------------------

// alpha with H an (alpha,0)-regular set, i.e. |S| for normal square-free
// S inside H.  Bound (2^|L|-1)u - eps; alpha even iff H offers no singleton
// involution outside B u {b^2}.
inline std::vector<long long> alpha_only_set(const DicyclicGroup& G, const SubgroupA& H) {
  detail::HStats st = detail::h_stats(G, H);
  long long amax = ((1LL << st.Lsz) - 1) * st.u - st.eps;
  bool even_only = detail::eta_even_only(st);
  std::vector<long long> out;
  for (long long a = 0; a <= amax; ++a)
    if (!even_only || a % 2 == 0) out.push_back(a);
  return out;
}

// beta with H a (0,beta)-regular set: beta = t*u for 0 <= t <= 2^|L| - eps_bar.
inline std::vector<long long> beta_only_set_H(const DicyclicGroup& G, const SubgroupA& H) {
  detail::HStats st = detail::h_stats(G, H);
  long long tmax = (1LL << st.Lsz) - st.eps_bar;
  std::vector<long long> out;
  for (long long t = 0; t <= tmax; ++t) out.push_back(t * st.u);
  return out;
}

// (|S n K|, |S n Kx|) contributions of normal S inside Ab, K = <H, zb>.
// When B <= H the two counts are independent multiples of u; when B is not
// inside H every B-block of Ab meets the K-side and the off-side cosets
// equally, forcing the diagonal.
inline PairSet zb_ab_pairs(const DicyclicGroup& G, const SubgroupA& H) {
  if (!H.contains(G.b2()))
    throw InputError("zb_ab_pairs requires b^2 in H");
  detail::HStats st = detail::h_stats(G, H);
  long long P = 1LL << st.Lsz;
  PairSet out;
  if (st.B_in_H) {
    for (long long tp = 0; tp <= P; ++tp)
      for (long long t = 0; t <= P; ++t) out.insert({tp * st.u, t * st.u});
  } else {
    for (long long t = 0; t <= P; ++t) out.insert({t * st.u, t * st.u});
  }
  return out;
}

// Off-H slice sizes zeta achievable with S inside A \ H for K = <H, zb>:
// 0 <= zeta <= |H| when B <= H (no coset of H outside H meets the square
// set), else 0 <= zeta <= (2^|L|-1)u.  See the header comment for the
// parity rule.
inline std::vector<long long> zb_beta_inA(const DicyclicGroup& G, const SubgroupA& H) {
  if (!H.contains(G.b2()))
    throw InputError("zb_beta_inA requires b^2 in H");
  detail::HStats st = detail::h_stats(G, H);
  long long zmax = st.B_in_H ? st.H_size : ((1LL << st.Lsz) - 1) * st.u;
  bool even_only = detail::zeta_even_only(st);
  std::vector<long long> out;
  for (long long z = 0; z <= zmax; ++z)
    if (!even_only || z % 2 == 0) out.push_back(z);
  return out;
}

// ---------------------------------------------------------------------------
// Full regions.
// ---------------------------------------------------------------------------

// Region for a subgroup H inside A: the product of the two component sets,
// asserted equal to the direct classification box.
inline FeasibleRegion feasible_pairs_H(const DicyclicGroup& G, const SubgroupA& H) {
  detail::HStats st = detail::h_stats(G, H);
  FeasibleRegion reg;
  reg.case_label = "Thm1.1(" + std::to_string(detail::case_clause_a(st)) + ")";
  reg.unit = st.u;
  reg.eps = st.eps;
  reg.eps_bar = st.eps_bar;
  reg.eta_max = ((1LL << st.Lsz) - 1) * st.u - st.eps;
  reg.t_max = (1LL << st.Lsz) - st.eps_bar;
  reg.eta_even_only = detail::eta_even_only(st);

  PairSet composed;
  for (long long a : alpha_only_set(G, H))
    for (long long b : beta_only_set_H(G, H)) composed.insert({a, b});
  composed.erase({0, 0});

  int clause = detail::case_clause_a(st);
  PairSet direct;
  for (long long a = 0; a <= reg.eta_max; ++a) {
    if ((clause == 1 || clause == 3) && a % 2 != 0) continue;
    for (long long t = 0; t <= reg.t_max; ++t) direct.insert({a, t * st.u});
  }
  direct.erase({0, 0});
  if (direct != composed)
    throw std::logic_error("direct and composed regions disagree for " + reg.case_label);
  reg.pairs = std::move(composed);
  return reg;
}

// Region for K = <H, zb>.  Both routes are evaluated; disagreement is an
// internal error, never silently resolved.
inline FeasibleRegion feasible_pairs_Hzb(const DicyclicGroup& G, const Subgroup& K) {
  if (K.kind != SubgroupKind::TypeZb)
    throw InputError("feasible_pairs_Hzb requires a subgroup of the form <H, zb>");
  const SubgroupA& H = K.H;
  detail::HStats st = detail::h_stats(G, H);
  bool whole = st.H_size == G.abelian_order();
  long long P = 1LL << st.Lsz;

  FeasibleRegion reg;
  reg.case_label = "Thm1.2(" + std::to_string(detail::case_clause_zb(st)) + ")";
  reg.unit = st.u;
  reg.eps = st.eps;
  reg.eps_bar = st.eps_bar_zb;
  reg.eta_max = (P - 1) * st.u - st.eps;
  reg.zeta_max = whole ? 0 : (P - st.eps_bar_zb) * st.u;
  reg.t_max = whole ? 0 : P;
  reg.tp_max = P;
  reg.eta_even_only = detail::eta_even_only(st);
  reg.zeta_even_only = detail::zeta_even_only(st);
  reg.whole_group = whole;

  PairSet composed;
  {
    std::vector<long long> zetas = whole ? std::vector<long long>{0} : zb_beta_inA(G, H);
    for (long long eta : alpha_only_set(G, H))
      for (long long zeta : zetas)
        for (const auto& ab : zb_ab_pairs(G, H)) {
          if (whole && ab.second != 0) continue;
          composed.insert({eta + ab.first, zeta + ab.second});
        }
    composed.erase({0, 0});
  }

  int clause = detail::case_clause_zb(st);
  PairSet direct;
  for (long long eta = 0; eta <= reg.eta_max; ++eta) {
    if (reg.eta_even_only && eta % 2 != 0) continue;
    for (long long zeta = 0; zeta <= reg.zeta_max; ++zeta) {
      if (reg.zeta_even_only && zeta % 2 != 0) continue;
      for (long long tp = 0; tp <= P; ++tp) {
        for (long long t = 0; t <= reg.t_max; ++t) {
          if (!st.B_in_H && tp != t) continue;  // coupled block counts
          long long a = eta + tp * st.u, b = zeta + t * st.u;
          if ((clause == 1 || clause == 3 || clause == 4) && b % 2 != 0) continue;
          if (clause == 3 && a % 2 != 0) continue;
          direct.insert({a, b});
        }
      }
    }
  }
  direct.erase({0, 0});

  if (direct != composed)
    throw std::logic_error("direct and composed regions disagree for " + reg.case_label);
  reg.pairs = std::move(composed);
  return reg;
}

inline FeasibleRegion feasible_region(const DicyclicGroup& G, const Subgroup& K) {
  if (K.kind == SubgroupKind::TypeA) return feasible_pairs_H(G, K.H);
  return feasible_pairs_Hzb(G, K);
}

}  // namespace caysum

#endif  // CAYSUM_FEASIBILITY_HPP_
