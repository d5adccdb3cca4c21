// demos/quaternion_tour.cpp
//
// A guided tour of the order-8 base case: A = Z4, b^2 = a^2.  Prints the
// structural data, every subgroup with its invariants and predicted region,
// builds one witness set and verifies it, then runs the exhaustive
// crosscheck.
//
//   build/demo_quaternion_tour

#include <cstdio>
#include <string>
#include <vector>

#include "caysum/bruteforce.hpp"
#include "caysum/construct.hpp"

using namespace caysum;

namespace {

std::string elem(const DicyclicGroup& G, int g) {
  int a = G.apart(g);
  std::string s;
  if (a == 0)
    s = G.flag(g) ? "" : "e";
  else if (a == 1)
    s = "a";
  else
    s = "a^" + std::to_string(a);
  if (G.flag(g)) s += "b";
  return s;
}

std::string elems(const DicyclicGroup& G, const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += elem(G, v[i]);
  }
  return s + "}";
}

std::string pairs(const PairSet& ps) {
  std::string s = "{";
  bool first = true;
  for (const auto& [a, b] : ps) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s + "}";
}

}  // namespace

int main() {
  DicyclicGroup G = make_group({4}, {2});
  const AbelianGroup& A = G.A();

  std::printf("== the quaternion group: A = Z4, b^2 = a^2 ==\n\n");
  std::printf("order %d, abelian part of order %d\n", G.order(), G.abelian_order());
  std::printf("squares:      %s\n", elems(G, G.square_set()).c_str());
  std::printf("involutions:  %s\n", elems(G, G.involution_set()).c_str());
  std::printf("B = 2A:       %s\n", elems(G, G.B_elements()).c_str());
  std::printf("conjugacy classes:\n");
  for (const auto& cls : G.conjugacy_classes()) std::printf("  %s\n", elems(G, cls).c_str());

  std::printf("\n== subgroups, invariants, predicted regions ==\n\n");
  for (const Subgroup& K : enumerate_all_subgroups(G)) {
    SubgroupInvariants inv = subgroup_invariants(G, K);
    FeasibleRegion R = feasible_region(G, K);
    std::printf("%-16s |K| = %-2lld  %-9s u = %lld, |L| = %zu, m = %d, r = %d, minNsq = %lld\n",
                K.label.c_str(), static_cast<long long>(K.size()), inv.case_label.c_str(),
                inv.h_unit, inv.L.size(), inv.m, inv.r, inv.script_L);
    std::printf("                 region %s\n", pairs(R.pairs).c_str());
  }

  std::printf("\n== constructing a witness: K = <a>, (alpha, beta) = (2, 4) ==\n\n");
  Subgroup K = make_type_a(G, A.subgroup_closure({1}));
  DecompositionPlan plan;
  ConstructionRecipe rec;
  ConnectionSet S = construct_S(G, K, 2, 4, &plan, &rec);
  std::printf("S = %s\n", elems(G, S.elements).c_str());
  std::printf("plan: eta = %lld, zeta = %lld, t' = %lld, t = %lld\n", plan.eta, plan.zeta,
              plan.t_prime, plan.t);
  for (const std::string& p : rec.piece_list) std::printf("  piece: %s\n", p.c_str());

  CaySumGraph g = build_caysum(G, S);
  ProfileResult pr = regular_profile(g, K.elements);
  std::printf("definition-level profile: regular = %s, alpha = %lld, beta = %lld\n",
              pr.regular ? "yes" : "no", pr.alpha, pr.beta);

  std::printf("\n== exhaustive crosscheck ==\n\n");
  CrosscheckReport rep = crosscheck(G, "q8");
  for (const SubgroupCheck& chk : rep.checks)
    std::printf("%-16s predicted %2zu pairs, achieved %2zu, %s\n", chk.K.label.c_str(),
                chk.region.pairs.size(), chk.achieved.size(),
                chk.equal ? "match" : "MISMATCH");
  std::printf("\nall subgroups %s (%.3fs)\n", rep.all_equal ? "match" : "MISMATCH",
              rep.seconds);
  return rep.all_equal ? 0 : 1;
}
