// tests/test_bruteforce.cpp
//
// Exhaustive enumeration: the incremental class-subset walk against an
// element-level recount, witness soundness, worker determinism, and the
// full prediction-vs-enumeration crosscheck on the small catalog groups.

#include <algorithm>
#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "catalog.hpp"
#include "caysum/bruteforce.hpp"
#include "caysum/caysum_graph.hpp"

using namespace caysum;

TEST_CASE("enumeration context on Q8") {
  DicyclicGroup G = make_group({4}, {2});
  Subgroup K = make_type_a(G, G.A().subgroup_closure({2}));
  BruteContext ctx = prepare_brute(G, K);

  CHECK(ctx.n_cosets == 4);
  REQUIRE(ctx.class_ids.size() == 3);  // {a,a^3}, {b,a^2 b}, {ab,a^3 b}
  for (size_t bit = 0; bit < ctx.class_ids.size(); ++bit) {
    const auto& cls = G.conjugacy_classes()[ctx.class_ids[bit]];
    CHECK_FALSE(G.class_is_square(ctx.class_ids[bit]));
    long long total = 0;
    for (long long c : ctx.contrib[bit]) total += c;
    CHECK(total == static_cast<long long>(cls.size()));
  }
  for (int g = 0; g < G.order(); ++g) {
    CHECK(ctx.coset_of[g] >= 0);
    CHECK(ctx.coset_of[g] < ctx.n_cosets);
  }
  CHECK(ctx.coset_of[0] == 0);
  CHECK(ctx.coset_of[2] == 0);
}

TEST_CASE("achieved pairs on Q8") {
  DicyclicGroup G = make_group({4}, {2});
  const AbelianGroup& A = G.A();

  PairSet grid;
  for (long long a : {0, 2})
    for (long long b : {0, 2, 4}) grid.insert({a, b});

  SECTION("center") {
    BruteOutcome out = achievable_pairs(G, make_type_a(G, A.subgroup_closure({2})));
    CHECK(out.pairs == PairSet{{0, 0}, {0, 2}});
    CHECK(out.n_classes == 3);
  }
  SECTION("index-two cyclic part") {
    BruteOutcome out = achievable_pairs(G, make_type_a(G, A.subgroup_closure({1})));
    CHECK(out.pairs == grid);
  }
  SECTION("mixed subgroup of order four") {
    BruteOutcome out = achievable_pairs(G, make_type_zb(G, A.subgroup_closure({2}), 0));
    CHECK(out.pairs == grid);
  }
  SECTION("trivial subgroup admits only the empty set") {
    BruteOutcome out = achievable_pairs(G, make_type_a(G, A.subgroup_closure({})));
    CHECK(out.pairs == PairSet{{0, 0}});
  }
  SECTION("whole group") {
    BruteOutcome out = achievable_pairs(G, make_type_zb(G, A.subgroup_closure({1}), 0));
    CHECK(out.pairs == PairSet{{0, 0}, {2, 0}, {4, 0}, {6, 0}});
  }
}

TEST_CASE("witnesses decode to sets realizing their pair") {
  for (auto& [name, G] : testcat::make_catalog()) {
    if (G.order() > 16) continue;  // q8 and dic16 keep this section fast
    INFO("group " << name);
    for (const Subgroup& K : enumerate_all_subgroups(G)) {
      INFO("subgroup " << K.label);
      BruteContext ctx = prepare_brute(G, K);
      BruteOutcome out = achievable_pairs(G, K);
      REQUIRE(out.pairs.size() == out.witness.size());
      for (const auto& [pair, mask] : out.witness) {
        ConnectionSet S = G.validate_connection_set(subset_elements(G, ctx, mask));
        REQUIRE(S.validated_normal);
        REQUIRE(S.validated_square_free);
        ProfileResult pr = subgroup_profile_fast(G, S, K);
        REQUIRE(pr.regular);
        CHECK(pr.alpha == pair.first);
        CHECK(pr.beta == (pr.whole_group ? 0 : pair.second));
      }
    }
  }
}

TEST_CASE("incremental walk agrees with an element-level recount") {
  DicyclicGroup G = make_group({4, 4}, {0, 2});
  Subgroup K = make_type_a(G, G.A().subgroup_closure({G.A().index({0, 1})}));
  BruteContext ctx = prepare_brute(G, K);
  BruteOutcome out = achievable_pairs(G, K);
  int c = static_cast<int>(ctx.class_ids.size());
  REQUIRE(c == 10);

  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t mask = rng() & ((1ull << c) - 1);
    std::vector<long long> counts = coset_counts_scratch(G, ctx, mask);
    bool constant = true;
    for (int i = 2; i < ctx.n_cosets; ++i)
      if (counts[i] != counts[1]) constant = false;
    if (!constant) continue;
    long long beta = ctx.n_cosets > 1 ? counts[1] : 0;
    CHECK(out.pairs.count({counts[0], beta}) == 1);
  }
  // and conversely every recorded witness recounts to its own pair
  for (const auto& [pair, mask] : out.witness) {
    std::vector<long long> counts = coset_counts_scratch(G, ctx, mask);
    CHECK(counts[0] == pair.first);
    for (int i = 1; i < ctx.n_cosets; ++i) CHECK(counts[i] == pair.second);
  }
}

TEST_CASE("worker split does not change the outcome") {
  DicyclicGroup G = make_group({16}, {8});
  Subgroup K = make_type_a(G, G.A().subgroup_closure({2}));
  BruteOutcome ref = achievable_pairs(G, K, 24, 1);
  for (int workers = 2; workers <= 4; ++workers) {
    BruteOutcome got = achievable_pairs(G, K, 24, workers);
    CHECK(got.pairs == ref.pairs);
    CHECK(got.witness == ref.witness);  // minimal masks are worker-independent
  }
}

TEST_CASE("class-count cap") {
  DicyclicGroup G = make_group({4}, {2});
  Subgroup K = make_type_a(G, G.A().subgroup_closure({1}));
  CHECK_THROWS_AS(achievable_pairs(G, K, 2), CapExceeded);
}

TEST_CASE("predictions match enumeration on the small groups") {
  for (auto& [name, G] : testcat::make_catalog()) {
    if (G.order() > 32) continue;
    INFO("group " << name);
    CrosscheckReport rep = crosscheck(G, name);
    CHECK(rep.all_equal);
    CHECK(rep.group_label == name);
    CHECK(rep.checks.size() == enumerate_all_subgroups(G).size());
    for (const SubgroupCheck& chk : rep.checks) {
      INFO("subgroup " << chk.K.label);
      CHECK(chk.equal);
      CHECK(chk.extra.empty());
      CHECK(chk.missing.empty());
      CHECK(chk.achieved.count({0, 0}) == 0);
    }
    if (name == "q8") CHECK(rep.n_classes == 3);
  }
}
