// caysum/caysum_graph.hpp
//
// The Cayley sum graph CayS(G, S): vertex set G, an edge {x, y} whenever
// x*y is in S (x != y).  S must be normal (closed under conjugation, which
// makes the adjacency relation symmetric) and square-free (no g with g*g in
// S, which rules out loops); both flags are required before a graph is
// built.  Every vertex then has degree exactly |S|.
//
// A subset C is (alpha, beta)-regular when every vertex inside C has exactly
// alpha neighbors in C and every vertex outside has exactly beta.  Two
// deciders are provided:
//
//   regular_profile        definition-level count over the built graph;
//   subgroup_profile_fast  for C = subgroup K: alpha = |S n K| and beta the
//                          common value of |S n Kx| over cosets Kx != K,
//                          never building the graph.
//
// For normal S the two agree exactly: y is a neighbor of x inside vK iff
// y lies in x^{-1}S n K, so the slow path counts left cosets |S n vK|, and
// conjugation by v maps S n vK bijectively onto S n Kv.

#ifndef CAYSUM_CAYSUM_GRAPH_HPP_
#define CAYSUM_CAYSUM_GRAPH_HPP_

#include <algorithm>
#include <vector>

#include "caysum/subgroups.hpp"

namespace caysum {

struct CaySumGraph {
  const DicyclicGroup* group = nullptr;
  ConnectionSet S;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  long long degree() const { return static_cast<long long>(S.elements.size()); }
};

inline CaySumGraph build_caysum(const DicyclicGroup& G, const ConnectionSet& S) {
  if (!S.validated_normal || !S.validated_square_free)
    throw InputError("connection set must be validated normal and square-free");
  CaySumGraph g;
  g.group = &G;
  g.S = S;
  std::vector<char> in_s(G.order(), 0);
  for (int s : S.elements) in_s[s] = 1;
  g.adjacency.resize(G.order());
  for (int x = 0; x < G.order(); ++x) {
    for (int y = 0; y < G.order(); ++y)
      if (y != x && in_s[G.mul(x, y)]) g.adjacency[x].push_back(y);
  }
  return g;
}

struct ProfileResult {
  bool regular = false;
  long long alpha = 0;
  long long beta = 0;
  bool whole_group = false;  // C = G: no outside vertex, beta reported as 0
  // failure diagnostics (regular == false):
  int witness_vertex = -1;       // vertex (slow path) or coset rep (fast path)
  long long witness_count = -1;  // its neighbor count in C / coset count
  long long expected_count = -1;
  bool witness_inside = false;   // witness vertex lies inside C
};

// Definition-level decision on an arbitrary subset C of the vertex set.
inline ProfileResult regular_profile(const CaySumGraph& g, std::vector<int> C) {
  const DicyclicGroup& G = *g.group;
  std::sort(C.begin(), C.end());
  C.erase(std::unique(C.begin(), C.end()), C.end());
  std::vector<char> in_c(G.order(), 0);
  for (int c : C) {
    if (c < 0 || c >= G.order()) throw InputError("subset element out of range");
    in_c[c] = 1;
  }
  ProfileResult res;
  if (C.empty()) {  // by convention: alpha vacuous, beta = 0
    res.regular = true;
    return res;
  }
  long long alpha = -1, beta = -1;
  for (int v = 0; v < G.order(); ++v) {
    long long cnt = 0;
    for (int y : g.adjacency[v])
      if (in_c[y]) ++cnt;
    long long& ref = in_c[v] ? alpha : beta;
    if (ref < 0) {
      ref = cnt;
    } else if (cnt != ref) {
      res.regular = false;
      res.witness_vertex = v;
      res.witness_count = cnt;
      res.expected_count = ref;
      res.witness_inside = in_c[v] != 0;
      return res;
    }
  }
  res.regular = true;
  res.alpha = alpha;
  if (beta < 0) {  // C = G
    res.beta = 0;
    res.whole_group = true;
  } else {
    res.beta = beta;
  }
  return res;
}

// Coset-count decision for a subgroup, without building the graph.
inline ProfileResult subgroup_profile_fast(const DicyclicGroup& G, const ConnectionSet& S,
                                           const Subgroup& K) {
  std::vector<char> in_s(G.order(), 0);
  for (int s : S.elements) in_s[s] = 1;
  ProfileResult res;
  for (int k : K.elements)
    if (in_s[k]) ++res.alpha;
  if (is_whole_group(G, K)) {
    res.regular = true;
    res.whole_group = true;
    return res;
  }
  std::vector<char> assigned(G.order(), 0);
  for (int k : K.elements) assigned[k] = 1;
  long long beta = -1;
  for (int x = 0; x < G.order(); ++x) {
    if (assigned[x]) continue;
    long long cnt = 0;
    for (int k : K.elements) {
      int g = G.mul(k, x);
      assigned[g] = 1;
      if (in_s[g]) ++cnt;
    }
    if (beta < 0) {
      beta = cnt;
    } else if (cnt != beta) {
      res.regular = false;
      res.witness_vertex = x;
      res.witness_count = cnt;
      res.expected_count = beta;
      return res;
    }
  }
  res.regular = true;
  res.beta = beta;
  return res;
}

}  // namespace caysum

#endif  // CAYSUM_CAYSUM_GRAPH_HPP_
