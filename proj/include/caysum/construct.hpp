// caysum/construct.hpp
//
// Explicit witness construction: given a subgroup K of G = <A,b> and a pair
// (alpha, beta) inside the predicted feasible region, emit a normal
// square-free connection set S with K an (alpha, beta)-regular set of
// CayS(G, S).  Every choice is deterministic (canonical element order), so
// witnesses are reproducible byte for byte.
//
// The witness is assembled from components with disjoint supports:
//
//   construct_alpha0        S inside H            profile (alpha, 0)
//   construct_0beta_H       S in G \ H, K = H     profile (0, t*u)
//   construct_zb_ab         S inside Ab           profile (t'*u, t*u) on <H,zb>
//   construct_zb_0beta_inA  S in A \ H            profile (0, zeta) on <H,zb>
//
// The A-side off-H pieces are built per coset orbit of H in A:
//   - paired orbits {C, C^-1} take the first needed non-squares of C plus
//     their inverses in C^-1;
//   - self-inverse cosets that contain involutions take a maximal odd or
//     even number of non-square involutions (singletons) plus inverse pairs;
//   - self-inverse cosets without involutions (the J-cosets) can only take
//     whole inverse pairs, which is what forces the parity conditions.
//
// construct_0beta_H instead translates whole fibers of H over a transversal:
// for each chosen nonzero layer of the image of H in V = A/B and each non-J
// coset with representative i, the block i + fiber(layer) is added; the
// transversal rules below guarantee the blocks avoid the square set.  On the
// Ab side whole B-blocks are selected by V-mask, one slice per layer.

#ifndef CAYSUM_CONSTRUCT_HPP_
#define CAYSUM_CONSTRUCT_HPP_

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "caysum/caysum_graph.hpp"
#include "caysum/feasibility.hpp"

namespace caysum {

// ---------------------------------------------------------------------------
// Transversal of the cosets of H in A.
//
// Representative rule, applied to cosets in canonical order (skipping any
// coset already assigned through pairing):
//   1. cosets meeting Sq(G) take a square representative, preferring an
//      involution (min of C n A' n Sq), then min of C n B, then b^2;
//   2. other self-inverse cosets take min of C n A' when the coset has
//      involutions, else min of C (J-cosets);
//   3. remaining cosets come in inverse pairs {C, C^-1}: the smaller element
//      of the union represents its coset and its inverse represents the
//      partner.
// Rule 1 may override the involution preference of rule 2 when a coset's
// involutions all avoid the square set while other square elements exist;
// blocks translated by such a representative still avoid Sq(G) because they
// are whole fibers of H over nonzero layers.  Outside J, a representative is
// either inverse-paired within the transversal or is itself a square.
// ---------------------------------------------------------------------------

struct TransversalEntry {
  std::vector<int> coset;  // sorted A-indices
  int rep = 0;
  bool is_H = false;
  bool is_J = false;
  bool self_inverse = false;
  bool meets_sq = false;
  int paired_with = -1;  // index of the inverse coset's entry, if distinct
};

struct Transversal {
  std::vector<TransversalEntry> entries;  // canonical coset order, H first
  std::vector<int> reps;                  // parallel to entries
};

inline Transversal build_transversal(const DicyclicGroup& G, const SubgroupA& H) {
  const AbelianGroup& A = G.A();
  std::vector<std::vector<int>> cosets = A.cosets(H);
  std::vector<int> coset_of(A.order(), -1);
  for (size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) coset_of[x] = static_cast<int>(i);

  Transversal T;
  T.entries.resize(cosets.size());
  std::vector<char> assigned(cosets.size(), 0);
  for (size_t i = 0; i < cosets.size(); ++i) {
    TransversalEntry& e = T.entries[i];
    e.coset = cosets[i];
    if (assigned[i]) continue;
    const std::vector<int>& C = cosets[i];
    e.is_H = std::binary_search(C.begin(), C.end(), 0);
    int inv_coset = coset_of[A.neg(C.front())];
    e.self_inverse = inv_coset == static_cast<int>(i);
    bool meets_ap = false;
    int min_ap = -1, min_ap_sq = -1, min_b = -1;
    for (int x : C) {
      bool sq = G.is_square(x);
      if (sq) e.meets_sq = true;
      if (G.in_A_prime(x)) {
        meets_ap = true;
        if (min_ap < 0) min_ap = x;
        if (sq && min_ap_sq < 0) min_ap_sq = x;
      }
      if (G.in_B(x) && min_b < 0) min_b = x;
    }
    e.is_J = !e.is_H && e.self_inverse && !meets_ap;
    if (e.meets_sq) {
      if (min_ap_sq >= 0)
        e.rep = min_ap_sq;
      else if (min_b >= 0)
        e.rep = min_b;
      else
        e.rep = G.b2();  // the only square left in the coset
      assigned[i] = 1;
      continue;
    }
    if (e.self_inverse) {
      e.rep = meets_ap ? min_ap : C.front();
      assigned[i] = 1;
      continue;
    }
    // inverse-paired cosets; both are square-free here
    TransversalEntry& p = T.entries[inv_coset];
    p.coset = cosets[inv_coset];
    int lo = std::min(C.front(), p.coset.front());
    if (lo == C.front()) {
      e.rep = lo;
      p.rep = A.neg(lo);
    } else {
      p.rep = lo;
      e.rep = A.neg(lo);
    }
    e.paired_with = inv_coset;
    p.paired_with = static_cast<int>(i);
    p.self_inverse = false;
    p.is_H = p.is_J = false;
    p.meets_sq = false;
    assigned[i] = assigned[inv_coset] = 1;
  }
  std::vector<char> seen_rep(A.order(), 0);
  for (const TransversalEntry& e : T.entries) {
    if (!std::binary_search(e.coset.begin(), e.coset.end(), e.rep))
      throw std::logic_error("transversal representative escaped its coset");
    seen_rep[e.rep] = 1;
    T.reps.push_back(e.rep);
  }
  for (const TransversalEntry& e : T.entries) {
    if (e.is_H || e.is_J) continue;
    if (!seen_rep[A.neg(e.rep)] && !G.is_square(e.rep))
      throw std::logic_error("transversal representative neither inverse-paired nor square");
  }
  if (!seen_rep[0]) throw std::logic_error("transversal must contain the identity");
  return T;
}

// ---------------------------------------------------------------------------
// Recipes and plans.
// ---------------------------------------------------------------------------

struct ConstructionRecipe {
  int case_id = 0;        // classification clause driving the build
  int sigma_parity = 0;   // parity of the requested count
  int delta_mr = 0;       // 1 iff m == r
  std::vector<std::string> piece_list;
};

struct DecompositionPlan {
  long long eta = 0;
  long long zeta = 0;
  long long t = 0;
  long long t_prime = 0;
};

namespace detail {

inline void note_piece(ConstructionRecipe* rec, const std::string& s) {
  if (rec) rec->piece_list.push_back(s);
}

// {x, -x} pairs available in a coset, squares excluded, sorted by smaller
// member; involutions never appear (x = -x would be one).
inline std::vector<std::pair<int, int>> inverse_pairs_in(const DicyclicGroup& G,
                                                         const std::vector<int>& C) {
  std::vector<std::pair<int, int>> out;
  for (int x : C) {
    int nx = G.A().neg(x);
    if (x < nx && !G.is_square(x) && std::binary_search(C.begin(), C.end(), nx))
      out.emplace_back(x, nx);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// (alpha, 0): S inside H.
// Singletons are the non-square involutions of H outside B u {b^2}; pairs
// {x, -x} come from H \ (A' u B).  Together they exhaust H minus the squares,
// so the greedy count below realizes every alpha in the predicted set.
// ---------------------------------------------------------------------------

inline ConnectionSet construct_alpha0(const DicyclicGroup& G, const SubgroupA& H, long long alpha,
                                      ConstructionRecipe* rec = nullptr) {
  std::vector<long long> ok = alpha_only_set(G, H);
  if (!std::binary_search(ok.begin(), ok.end(), alpha)) {
    std::ostringstream os;
    os << "alpha = " << alpha << " is not an achievable (alpha,0) value for this subgroup";
    throw InfeasibleError(os.str());
  }
  detail::HStats st = detail::h_stats(G, H);
  if (rec) {
    rec->case_id = detail::case_clause_a(st);
    rec->sigma_parity = static_cast<int>(alpha % 2);
    rec->delta_mr = st.m == st.r ? 1 : 0;
  }
  std::vector<int> singles;
  for (int h : H.elements)
    if (G.in_A_prime(h) && !G.in_B(h) && h != G.b2()) singles.push_back(h);
  std::vector<std::pair<int, int>> pairs;
  for (int h : H.elements) {
    int nh = G.A().neg(h);
    if (h < nh && !G.in_B(h) && H.contains(nh)) pairs.emplace_back(h, nh);
  }
  long long s = std::min<long long>(alpha, static_cast<long long>(singles.size()));
  if ((alpha - s) % 2 != 0) --s;
  long long p = (alpha - s) / 2;
  if (s < 0 || p > static_cast<long long>(pairs.size()))
    throw std::logic_error("alpha within bounds but the greedy split failed");
  std::vector<int> elems;
  for (long long i = 0; i < s; ++i) {
    elems.push_back(singles[i]);
    detail::note_piece(rec, "single " + detail::coord_token(G.A(), singles[i]));
  }
  for (long long i = 0; i < p; ++i) {
    elems.push_back(pairs[i].first);
    elems.push_back(pairs[i].second);
    detail::note_piece(rec, "pair " + detail::coord_token(G.A(), pairs[i].first) +
                                detail::coord_token(G.A(), pairs[i].second));
  }
  return G.validate_connection_set(elems);
}

// ---------------------------------------------------------------------------
// (0, beta) for K = H inside A: beta = t*u.
// t = 2^|L| (only possible when B u {b^2} <= H) takes all of G \ H.
// Otherwise t nonzero layers of the H-image are chosen in mask order, the
// layer of b^2 being skipped when the range offset is 2; each non-J coset
// receives the translated fibers, each J-coset t*u/2 inverse pairs, and the
// Ab side one whole mask-slice (B-blocks) per layer.
// ---------------------------------------------------------------------------

inline ConnectionSet construct_0beta_H(const DicyclicGroup& G, const SubgroupA& H, long long beta,
                                       ConstructionRecipe* rec = nullptr) {
  const AbelianGroup& A = G.A();
  detail::HStats st = detail::h_stats(G, H);
  long long P = 1LL << st.Lsz;
  if (beta < 0 || beta % st.u != 0 || beta / st.u > P - st.eps_bar) {
    std::ostringstream os;
    os << "beta = " << beta << " is not an achievable (0,beta) value for this subgroup";
    throw InfeasibleError(os.str());
  }
  long long t = beta / st.u;
  if (rec) {
    rec->case_id = st.eps_bar_cell;
    rec->sigma_parity = static_cast<int>(beta % 2);
    rec->delta_mr = st.m == st.r ? 1 : 0;
  }
  std::vector<int> elems;
  if (t == P) {  // whole complement; the square set lies inside H here
    for (int g = 0; g < G.order(); ++g)
      if (!(g < G.abelian_order() && H.contains(g))) elems.push_back(g);
    detail::note_piece(rec, "complement of H");
    return G.validate_connection_set(elems);
  }

  std::vector<unsigned> layers;
  unsigned b2bar = v_image(A, G.b2());
  for (unsigned w : v_span(st.basis)) {
    if (w == 0) continue;
    if (st.eps_bar == 2 && w == b2bar) continue;
    layers.push_back(w);
  }
  if (static_cast<long long>(layers.size()) < t) {
    std::ostringstream os;
    os << "translation layers exhausted: need " << t << ", have " << layers.size()
       << " (|L| = " << st.Lsz << ", range offset " << st.eps_bar << ")";
    throw std::logic_error(os.str());
  }
  layers.resize(static_cast<size_t>(t));

  std::map<unsigned, std::vector<int>> fibers = v_layers(A, H);
  Transversal T = build_transversal(G, H);
  for (const TransversalEntry& e : T.entries) {
    if (e.is_H) continue;
    if (e.is_J) {
      std::vector<std::pair<int, int>> pairs = detail::inverse_pairs_in(G, e.coset);
      long long need = (t * st.u) / 2;
      if ((t * st.u) % 2 != 0 || need > static_cast<long long>(pairs.size()))
        throw std::logic_error("J-coset cannot absorb the requested slice");
      for (long long i = 0; i < need; ++i) {
        elems.push_back(pairs[i].first);
        elems.push_back(pairs[i].second);
      }
      detail::note_piece(rec, "J-coset pairs at " + detail::coord_token(A, e.coset.front()));
      continue;
    }
    for (unsigned w : layers)
      for (int h : fibers.at(w)) elems.push_back(A.add(e.rep, h));
    detail::note_piece(rec, "translated fibers at rep " + detail::coord_token(A, e.rep));
  }

  // Ab side: for each layer, the full preimage of layer + W where W is the
  // canonical complement of the H-image in V.
  std::vector<unsigned> Wbasis;
  {
    std::vector<int> L0 = v_pivot_factors(A, st.basis);
    for (int i = 0; i < A.lambda(); ++i)
      if (!std::binary_search(L0.begin(), L0.end(), i)) Wbasis.push_back(v_bit(A, i));
  }
  std::vector<unsigned> W = v_span(Wbasis);
  std::vector<char> in_X(1u << A.lambda(), 0);
  for (unsigned w : layers)
    for (unsigned wv : W) in_X[w ^ wv] = 1;
  for (int x = 0; x < G.abelian_order(); ++x)
    if (in_X[v_image(A, x)]) elems.push_back(G.make(x, 1));
  if (t > 0) detail::note_piece(rec, "Ab mask-slices: " + std::to_string(t));
  return G.validate_connection_set(elems);
}

// ---------------------------------------------------------------------------
// S inside Ab for K = <H, zb>: whole B-blocks selected by V-mask.
// When B <= H the K-side mask coset (image of z) and the other mask cosets
// are loaded independently with t' and t blocks; when B is not inside H some
// off-coset of K reads the K-side mask coset, forcing t' = t.
// ---------------------------------------------------------------------------

inline ConnectionSet construct_zb_ab(const DicyclicGroup& G, const SubgroupA& H, int z,
                                     long long t_prime, long long t,
                                     ConstructionRecipe* rec = nullptr) {
  const AbelianGroup& A = G.A();
  if (!H.contains(G.b2())) throw InputError("construct_zb_ab requires b^2 in H");
  detail::HStats st = detail::h_stats(G, H);
  long long P = 1LL << st.Lsz;
  bool whole = st.H_size == A.order();
  if (t_prime < 0 || t < 0 || t_prime > P || t > P)
    throw InfeasibleError("block counts out of range");
  if (!st.B_in_H && t_prime != t)
    throw InfeasibleError("off-H cosets read the same mask blocks: counts must be equal");
  if (whole && t != 0)
    throw InfeasibleError("the whole group has no outside coset to load");
  if (rec) {
    rec->case_id = st.B_in_H ? 1 : 2;
    rec->sigma_parity = static_cast<int>((t_prime * st.u) % 2);
    rec->delta_mr = st.m == st.r ? 1 : 0;
  }

  // group all masks of V by their H-image coset, in mask order
  std::vector<unsigned> hbar = v_span(st.basis);
  unsigned zbar = v_image(A, z);
  std::vector<char> taken(1u << A.lambda(), 0);
  std::vector<char> in_X(1u << A.lambda(), 0);
  for (unsigned w = 0; w < (1u << A.lambda()); ++w) {
    if (taken[w]) continue;
    std::vector<unsigned> coset;
    for (unsigned h : hbar) {
      coset.push_back(w ^ h);
      taken[w ^ h] = 1;
    }
    std::sort(coset.begin(), coset.end());
    bool k_side = v_in_span(st.basis, w ^ zbar);
    long long take = k_side ? t_prime : t;
    for (long long i = 0; i < take; ++i) in_X[coset[static_cast<size_t>(i)]] = 1;
    detail::note_piece(rec, std::string(k_side ? "K-side" : "off") + " mask-coset at " +
                                std::to_string(coset.front()) + ": " + std::to_string(take) +
                                " blocks");
  }
  std::vector<int> elems;
  for (int x = 0; x < A.order(); ++x)
    if (in_X[v_image(A, x)]) elems.push_back(G.make(x, 1));
  return G.validate_connection_set(elems);
}

// ---------------------------------------------------------------------------
// S in A \ H with every coset of H outside H carrying exactly zeta elements,
// for K = <H, zb>.  Built per coset orbit as described in the header.
// ---------------------------------------------------------------------------

inline ConnectionSet construct_zb_0beta_inA(const DicyclicGroup& G, const SubgroupA& H, int z,
                                            long long zeta, ConstructionRecipe* rec = nullptr) {
  (void)z;  // the slice sizes do not depend on the coset of the Ab part
  const AbelianGroup& A = G.A();
  if (!H.contains(G.b2())) throw InputError("construct_zb_0beta_inA requires b^2 in H");
  std::vector<long long> ok = zb_beta_inA(G, H);
  bool whole = H.size() == A.order();
  if ((whole && zeta != 0) || !std::binary_search(ok.begin(), ok.end(), zeta)) {
    std::ostringstream os;
    os << "zeta = " << zeta << " is not an achievable off-H slice for this subgroup";
    throw InfeasibleError(os.str());
  }
  detail::HStats st = detail::h_stats(G, H);
  if (rec) {
    rec->case_id = st.B_in_H ? (st.m == st.Lsz ? 1 : 2) : (st.m == st.Lsz ? 3 : 4);
    rec->sigma_parity = static_cast<int>(zeta % 2);
    rec->delta_mr = st.m == st.r ? 1 : 0;
  }
  if (zeta == 0) return G.validate_connection_set({});

  std::vector<std::vector<int>> cosets = A.cosets(H);
  std::vector<int> coset_of(A.order(), -1);
  for (size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) coset_of[x] = static_cast<int>(i);
  std::vector<char> done(cosets.size(), 0);
  std::vector<int> elems;
  for (size_t i = 0; i < cosets.size(); ++i) {
    const std::vector<int>& C = cosets[i];
    if (C.front() == 0) continue;  // H itself
    if (done[i]) continue;
    done[i] = 1;
    int inv_idx = coset_of[A.neg(C.front())];
    if (inv_idx != static_cast<int>(i)) {
      // paired orbit: first zeta non-squares of the smaller coset + inverses
      done[inv_idx] = 1;
      std::vector<int> pool;
      for (int x : C)
        if (!G.is_square(x)) pool.push_back(x);
      if (zeta > static_cast<long long>(pool.size()))
        throw std::logic_error("paired coset cannot absorb the requested slice");
      for (long long j = 0; j < zeta; ++j) {
        elems.push_back(pool[static_cast<size_t>(j)]);
        elems.push_back(A.neg(pool[static_cast<size_t>(j)]));
      }
      detail::note_piece(rec, "paired cosets at " + detail::coord_token(A, C.front()));
      continue;
    }
    std::vector<int> singles;
    for (int x : C)
      if (G.in_A_prime(x) && !G.is_square(x)) singles.push_back(x);
    std::vector<std::pair<int, int>> pairs = detail::inverse_pairs_in(G, C);
    if (singles.empty()) {
      // J-coset: only inverse pairs fit, so zeta must be even here
      if (zeta % 2 != 0 || zeta / 2 > static_cast<long long>(pairs.size()))
        throw std::logic_error("J-coset cannot absorb the requested slice");
      for (long long j = 0; j < zeta / 2; ++j) {
        elems.push_back(pairs[static_cast<size_t>(j)].first);
        elems.push_back(pairs[static_cast<size_t>(j)].second);
      }
      detail::note_piece(rec, "J-coset pairs at " + detail::coord_token(A, C.front()));
      continue;
    }
    long long s = std::min<long long>(zeta, static_cast<long long>(singles.size()));
    if ((zeta - s) % 2 != 0) --s;
    long long p = (zeta - s) / 2;
    if (s < 0 || p > static_cast<long long>(pairs.size()))
      throw std::logic_error("self-inverse coset cannot absorb the requested slice");
    for (long long j = 0; j < s; ++j) elems.push_back(singles[static_cast<size_t>(j)]);
    for (long long j = 0; j < p; ++j) {
      elems.push_back(pairs[static_cast<size_t>(j)].first);
      elems.push_back(pairs[static_cast<size_t>(j)].second);
    }
    detail::note_piece(rec, "singles+pairs at " + detail::coord_token(A, C.front()));
  }
  return G.validate_connection_set(elems);
}

// ---------------------------------------------------------------------------
// Full witness for (alpha, beta) in the predicted region of K.
// ---------------------------------------------------------------------------

inline ConnectionSet construct_S(const DicyclicGroup& G, const Subgroup& K, long long alpha,
                                 long long beta, DecompositionPlan* plan_out = nullptr,
                                 ConstructionRecipe* rec = nullptr) {
  FeasibleRegion reg = feasible_region(G, K);
  if (!reg.pairs.count({alpha, beta})) {
    std::ostringstream os;
    os << "(" << alpha << "," << beta << ") lies outside the predicted region " << reg.case_label;
    throw InfeasibleError(os.str());
  }
  std::vector<int> elems;
  DecompositionPlan plan;
  if (K.kind == SubgroupKind::TypeA) {
    plan.eta = alpha;
    plan.zeta = 0;
    plan.t = beta / reg.unit;
    plan.t_prime = 0;
    ConnectionSet Sa = construct_alpha0(G, K.H, alpha, rec);
    ConnectionSet Sb = construct_0beta_H(G, K.H, beta, rec);
    elems = Sa.elements;
    elems.insert(elems.end(), Sb.elements.begin(), Sb.elements.end());
  } else {
    detail::HStats st = detail::h_stats(G, K.H);
    bool whole = is_whole_group(G, K);
    long long P = 1LL << st.Lsz;
    std::vector<long long> etas = alpha_only_set(G, K.H);
    std::vector<long long> zetas = whole ? std::vector<long long>{0} : zb_beta_inA(G, K.H);
    bool found = false;
    for (long long eta : etas) {
      if (found) break;
      long long rest_a = alpha - eta;
      if (rest_a < 0 || rest_a % st.u != 0 || rest_a / st.u > P) continue;
      long long tp = rest_a / st.u;
      for (long long zeta : zetas) {
        long long rest_b = beta - zeta;
        if (rest_b < 0 || rest_b % st.u != 0 || rest_b / st.u > P) continue;
        long long t = rest_b / st.u;
        if (whole && t != 0) continue;
        if (!st.B_in_H && tp != t) continue;
        plan = {eta, zeta, t, tp};
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("pair inside predicted region but no component decomposition found");
    ConnectionSet Sa = construct_alpha0(G, K.H, plan.eta, rec);
    ConnectionSet Sz = construct_zb_0beta_inA(G, K.H, K.z, plan.zeta, rec);
    ConnectionSet Sb = construct_zb_ab(G, K.H, K.z, plan.t_prime, plan.t, rec);
    elems = Sa.elements;
    elems.insert(elems.end(), Sz.elements.begin(), Sz.elements.end());
    elems.insert(elems.end(), Sb.elements.begin(), Sb.elements.end());
  }
  ConnectionSet S = G.validate_connection_set(elems);
  if (!S.validated_normal || !S.validated_square_free)
    throw std::logic_error("constructed witness failed validation");
  ProfileResult pr = subgroup_profile_fast(G, S, K);
  if (!pr.regular || pr.alpha != alpha || pr.beta != beta)
    throw std::logic_error("constructed witness does not realize the requested pair");
  if (plan_out) *plan_out = plan;
  return S;
}

}  // namespace caysum

#endif  // CAYSUM_CONSTRUCT_HPP_
