// tests/test_abelian.cpp
//
// Abelian-core checks: normalization of order lists into canonical
// prime-power form, dense-index arithmetic, subgroup machinery, and the
// user-coordinate mapping.

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "caysum/abelian.hpp"

using namespace caysum;

TEST_CASE("normalize_spec splits and orders prime-power factors") {
  SECTION("single 2-power order") {
    AbelianSpec s = normalize_spec({4});
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0].prime == 2);
    CHECK(s.factors[0].exponent == 2);
    CHECK(s.factors[0].modulus == 4);
    CHECK(s.lambda == 1);
    CHECK(s.mu == 0);
    CHECK(s.k == 0);
    CHECK(s.order == 4);
  }
  SECTION("composite order splits by CRT") {
    AbelianSpec s = normalize_spec({12});
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].modulus == 4);
    CHECK(s.factors[1].modulus == 3);
    CHECK(s.factors[0].source_index == 0);
    CHECK(s.factors[1].source_index == 0);
    CHECK(s.lambda == 1);
    CHECK(s.mu == 1);
    CHECK(s.k == 0);
    CHECK(s.order == 12);
  }
  SECTION("2-power factors sort by nondecreasing exponent") {
    AbelianSpec s = normalize_spec({2, 4});
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].modulus == 2);
    CHECK(s.factors[1].modulus == 4);
    CHECK(s.lambda == 2);
    CHECK(s.mu == 0);
    CHECK(s.k == 1);
  }
  SECTION("2-power factors precede odd ones regardless of input order") {
    AbelianSpec s = normalize_spec({3, 4});
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].modulus == 4);
    CHECK(s.factors[0].source_index == 1);
    CHECK(s.factors[1].modulus == 3);
    CHECK(s.factors[1].source_index == 0);
  }
  SECTION("ties keep user order (stable)") {
    AbelianSpec s = normalize_spec({6, 2});
    // factors: (2,1) from order 6, (2,1) from order 2, (3,1) from order 6
    REQUIRE(s.factors.size() == 3);
    CHECK(s.factors[0].modulus == 2);
    CHECK(s.factors[0].source_index == 0);
    CHECK(s.factors[1].modulus == 2);
    CHECK(s.factors[1].source_index == 1);
    CHECK(s.factors[2].modulus == 3);
    CHECK(s.lambda == 2);
    CHECK(s.k == 2);
    CHECK(s.mu == 1);
  }
  SECTION("renormalizing the canonical moduli is a fixed point") {
    for (const std::vector<long long>& orders :
         {std::vector<long long>{12}, {2, 4}, {4, 4}, {2, 2, 2}, {2, 8}, {60}}) {
      AbelianSpec s1 = normalize_spec(orders);
      std::vector<long long> moduli;
      for (const Factor& f : s1.factors) moduli.push_back(f.modulus);
      AbelianSpec s2 = normalize_spec(moduli);
      REQUIRE(s2.factors.size() == s1.factors.size());
      for (size_t i = 0; i < s1.factors.size(); ++i) {
        CHECK(s2.factors[i].prime == s1.factors[i].prime);
        CHECK(s2.factors[i].exponent == s1.factors[i].exponent);
      }
      CHECK(s2.lambda == s1.lambda);
      CHECK(s2.mu == s1.mu);
      CHECK(s2.k == s1.k);
    }
  }
  SECTION("bad inputs") {
    CHECK_THROWS_AS(normalize_spec({}), InputError);
    CHECK_THROWS_AS(normalize_spec({1}), InputError);
    CHECK_THROWS_AS(normalize_spec({4, 0}), InputError);
  }
}

TEST_CASE("cyclic arithmetic in Z4") {
  AbelianGroup A(normalize_spec({4}));
  CHECK(A.add(1, 3) == 0);
  CHECK(A.neg(1) == 3);
  CHECK(A.pow(1, 2) == 2);
  CHECK(A.pow(1, -1) == 3);
  CHECK(A.sub(0, 1) == 3);
  CHECK(A.element_order(0) == 1);
  CHECK(A.element_order(1) == 4);
  CHECK(A.element_order(2) == 2);
}

TEST_CASE("coordinate encoding is lexicographic") {
  AbelianGroup A(normalize_spec({2, 4}));
  REQUIRE(A.order() == 8);
  // rightmost factor has stride 1: index = 4*x + y for coords (x, y)
  CHECK(A.index({0, 0}) == 0);
  CHECK(A.index({0, 3}) == 3);
  CHECK(A.index({1, 0}) == 4);
  CHECK(A.index({1, 3}) == 7);
  CHECK(A.coords(5) == std::vector<int>{1, 1});
  CHECK(A.index({-1, 5}) == A.index({1, 1}));  // mod-reduction
  CHECK_THROWS_AS(A.index({1}), InputError);
}

TEST_CASE("projection extracts one coordinate") {
  AbelianGroup A(normalize_spec({2, 4}));
  int e13 = A.index({1, 3});
  CHECK(A.coords(A.projection(0, e13)) == std::vector<int>{1, 0});
  CHECK(A.coords(A.projection(1, e13)) == std::vector<int>{0, 3});
  CHECK(A.projection(1, A.index({1, 0})) == 0);
  CHECK_THROWS_AS(A.projection(2, e13), InputError);
  CHECK_THROWS_AS(A.projection(-1, e13), InputError);
}

TEST_CASE("subgroup closure") {
  AbelianGroup A(normalize_spec({4}));
  CHECK(A.subgroup_closure({2}).elements == std::vector<int>{0, 2});
  CHECK(A.subgroup_closure({}).elements == std::vector<int>{0});
  CHECK(A.subgroup_closure({1}).elements == std::vector<int>{0, 1, 2, 3});
  CHECK(A.subgroup_closure({3}).elements == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("subgroup enumeration matches known counts") {
  CHECK(AbelianGroup(normalize_spec({4})).enumerate_subgroups().size() == 3);
  CHECK(AbelianGroup(normalize_spec({2, 2})).enumerate_subgroups().size() == 5);
  CHECK(AbelianGroup(normalize_spec({2})).enumerate_subgroups().size() == 2);
  CHECK(AbelianGroup(normalize_spec({2, 4})).enumerate_subgroups().size() == 8);
  CHECK(AbelianGroup(normalize_spec({3})).enumerate_subgroups().size() == 2);

  SECTION("each result is closed and distinct") {
    AbelianGroup A(normalize_spec({2, 4}));
    std::set<std::vector<int>> seen;
    for (const SubgroupA& H : A.enumerate_subgroups()) {
      CHECK(seen.insert(H.elements).second);
      CHECK(H.contains(0));
      for (int x : H.elements)
        for (int y : H.elements) CHECK(H.contains(A.add(x, y)));
      // generators regenerate the subgroup
      CHECK(A.subgroup_closure(H.generators).elements == H.elements);
    }
  }
  SECTION("cap") {
    AbelianGroup big(normalize_spec({128}));
    CHECK_THROWS_AS(big.enumerate_subgroups(), CapExceeded);
    CHECK_NOTHROW(big.enumerate_subgroups(128));
  }
}

TEST_CASE("coset partition") {
  AbelianGroup A(normalize_spec({4}));
  SubgroupA H = A.subgroup_closure({2});
  auto blocks = A.cosets(H);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 2});
  CHECK(blocks[1] == std::vector<int>{1, 3});

  CHECK(A.cosets(A.subgroup_closure({})).size() == 4);
  CHECK(A.cosets(A.subgroup_closure({1})).size() == 1);

  SECTION("blocks partition A and start with H") {
    AbelianGroup M(normalize_spec({2, 8}));
    for (const SubgroupA& H2 : M.enumerate_subgroups()) {
      auto bl = M.cosets(H2);
      CHECK(bl[0] == H2.elements);
      std::vector<int> all;
      for (const auto& b : bl) {
        CHECK(static_cast<long long>(b.size()) == H2.size());
        all.insert(all.end(), b.begin(), b.end());
      }
      std::sort(all.begin(), all.end());
      std::vector<int> expect(M.order());
      std::iota(expect.begin(), expect.end(), 0);
      CHECK(all == expect);
    }
  }
}

TEST_CASE("randomized arithmetic laws") {
  std::mt19937 rng(20260813u);
  for (const std::vector<long long>& orders :
       {std::vector<long long>{12}, {2, 4}, {4, 4}, {2, 8}}) {
    AbelianGroup A(normalize_spec(orders));
    std::uniform_int_distribution<int> pick(0, A.order() - 1);
    for (int it = 0; it < 200; ++it) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      CHECK(A.add(x, y) == A.add(y, x));
      CHECK(A.add(A.add(x, y), z) == A.add(x, A.add(y, z)));
      CHECK(A.add(x, A.neg(x)) == 0);
      CHECK(A.add(x, 0) == x);
      CHECK(A.pow(x, 3) == A.add(x, A.add(x, x)));
      long long o = A.element_order(x);
      CHECK(A.pow(x, o) == 0);
      CHECK(A.order() % o == 0);
      for (long long d = 1; d < o; ++d)
        if (o % d == 0) CHECK(A.pow(x, d) != 0);
    }
  }
}

TEST_CASE("subset product") {
  AbelianGroup A(normalize_spec({4}));
  CHECK(A.subset_product({}) == 0);
  CHECK(A.subset_product({1, 3}) == 0);
  CHECK(A.subset_product({1, 2}) == 3);
  CHECK(A.subset_product({1, 2, 3}) == 2);
}

TEST_CASE("user coordinates round-trip through CRT") {
  SECTION("single composite order") {
    AbelianGroup A(normalize_spec({12}));
    int a = A.from_user_coords({7});
    CHECK(A.coords(a) == std::vector<int>{3, 1});  // 7 mod 4, 7 mod 3
    CHECK(A.to_user_coords(a) == std::vector<long long>{7});
    for (int x = 0; x < A.order(); ++x)
      CHECK(A.from_user_coords(A.to_user_coords(x)) == x);
  }
  SECTION("several orders, interleaved prime powers") {
    AbelianGroup A(normalize_spec({6, 2}));
    for (int x = 0; x < A.order(); ++x)
      CHECK(A.from_user_coords(A.to_user_coords(x)) == x);
    // user (5, 1) means 5 mod 6 in the first cyclic piece, 1 mod 2 in the second
    int a = A.from_user_coords({5, 1});
    std::vector<long long> back = A.to_user_coords(a);
    CHECK(back == std::vector<long long>{5, 1});
  }
  SECTION("wrong arity") {
    AbelianGroup A(normalize_spec({2, 4}));
    CHECK_THROWS_AS(A.from_user_coords({1}), InputError);
  }
}
