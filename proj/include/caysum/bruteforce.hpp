// caysum/bruteforce.hpp
//
// Independent ground truth: enumerate every normal square-free connection
// set of G and record exactly which (alpha, beta) pairs each subgroup
// achieves.
//
// Normal sets are unions of conjugacy classes, and square-free sets avoid
// the (class-homogeneous) square set, so the search space is the power set
// of the non-square classes: 2^c subsets for c usable classes.  Subsets are
// walked in Gray-code order so each step toggles a single class and updates
// a per-coset count vector incrementally — O(2^c * #cosets) additions total.
//
// The subset space is statically partitioned for parallelism: the wb highest
// class bits (2^wb >= workers, capped at c) split the walk into blocks, each
// block Gray-walks the low bits from its fixed seed; block p belongs to
// worker p mod W.  Workers keep private result maps; results are merged by
// minimal witness mask, so the outcome is identical for every worker count.

#ifndef CAYSUM_BRUTEFORCE_HPP_
#define CAYSUM_BRUTEFORCE_HPP_

#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "caysum/feasibility.hpp"

namespace caysum {

struct BruteContext {
  int n_cosets = 0;
  std::vector<int> coset_of;   // right-coset index per group element, K = 0
  std::vector<int> class_ids;  // usable (non-square) conjugacy classes
  std::vector<std::vector<long long>> contrib;  // per usable class: coset counts
};

inline BruteContext prepare_brute(const DicyclicGroup& G, const Subgroup& K) {
  BruteContext ctx;
  ctx.coset_of.assign(G.order(), -1);
  for (int k : K.elements) ctx.coset_of[k] = 0;
  int next = 1;
  for (int x = 0; x < G.order(); ++x) {
    if (ctx.coset_of[x] >= 0) continue;
    for (int k : K.elements) ctx.coset_of[G.mul(k, x)] = next;
    ++next;
  }
  ctx.n_cosets = next;
  const auto& classes = G.conjugacy_classes();
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    if (G.class_is_square(c)) continue;
    ctx.class_ids.push_back(c);
    std::vector<long long> row(ctx.n_cosets, 0);
    for (int g : classes[c]) ++row[ctx.coset_of[g]];
    ctx.contrib.push_back(std::move(row));
  }
  return ctx;
}

// Element-level recount of the coset vector for one subset mask, used to
// cross-check the incremental walk.
inline std::vector<long long> coset_counts_scratch(const DicyclicGroup& G,
                                                   const BruteContext& ctx, std::uint64_t mask) {
  std::vector<long long> counts(ctx.n_cosets, 0);
  const auto& classes = G.conjugacy_classes();
  for (size_t bit = 0; bit < ctx.class_ids.size(); ++bit) {
    if (!((mask >> bit) & 1u)) continue;
    for (int g : classes[ctx.class_ids[bit]]) ++counts[ctx.coset_of[g]];
  }
  return counts;
}

inline std::vector<int> subset_elements(const DicyclicGroup& G, const BruteContext& ctx,
                                        std::uint64_t mask) {
  std::vector<int> elems;
  const auto& classes = G.conjugacy_classes();
  for (size_t bit = 0; bit < ctx.class_ids.size(); ++bit) {
    if (!((mask >> bit) & 1u)) continue;
    const auto& cls = classes[ctx.class_ids[bit]];
    elems.insert(elems.end(), cls.begin(), cls.end());
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

struct BruteOutcome {
  PairSet pairs;  // includes (0,0), achieved by the empty set
  std::map<std::pair<long long, long long>, std::uint64_t> witness;  // minimal mask per pair
  int n_classes = 0;
};

namespace detail {

using WitnessMap = std::map<std::pair<long long, long long>, std::uint64_t>;

inline void brute_record(WitnessMap& wit, long long a, long long b, std::uint64_t mask) {
  auto it = wit.find({a, b});
  if (it == wit.end())
    wit.emplace(std::make_pair(a, b), mask);
  else if (mask < it->second)
    it->second = mask;
}

// Walk one block: the high bits are fixed to `seed`, the low `low_bits`
// bits run through the reflected Gray code.
inline void brute_block(const BruteContext& ctx, std::uint64_t seed, int low_bits,
                        WitnessMap& wit) {
  std::vector<long long> counts(ctx.n_cosets, 0);
  for (size_t bit = 0; bit < ctx.contrib.size(); ++bit) {
    if (!((seed >> bit) & 1u)) continue;
    for (int i = 0; i < ctx.n_cosets; ++i) counts[i] += ctx.contrib[bit][i];
  }
  auto evaluate = [&](std::uint64_t mask) {
    long long beta = ctx.n_cosets > 1 ? counts[1] : 0;
    for (int i = 2; i < ctx.n_cosets; ++i)
      if (counts[i] != beta) return;
    brute_record(wit, counts[0], beta, mask);
  };
  evaluate(seed);
  std::uint64_t n = 1ull << low_bits;
  for (std::uint64_t j = 1; j < n; ++j) {
    int bit = std::countr_zero(j);
    std::uint64_t g = j ^ (j >> 1);
    bool now_on = (g >> bit) & 1u;
    const std::vector<long long>& row = ctx.contrib[bit];
    if (now_on)
      for (int i = 0; i < ctx.n_cosets; ++i) counts[i] += row[i];
    else
      for (int i = 0; i < ctx.n_cosets; ++i) counts[i] -= row[i];
    evaluate(seed | g);
  }
}

}  // namespace detail

// All (alpha, beta) pairs achieved by some normal square-free S, with the
// minimal class mask achieving each pair.  (0,0) — the empty set — is always
// present; callers strip it before comparing against predictions.
inline BruteOutcome achievable_pairs(const DicyclicGroup& G, const Subgroup& K,
                                     int max_classes = 24, int workers = 4) {
  BruteContext ctx = prepare_brute(G, K);
  int c = static_cast<int>(ctx.class_ids.size());
  if (c > max_classes) {
    std::ostringstream os;
    os << "subset enumeration over " << c << " classes exceeds the cap " << max_classes;
    throw CapExceeded(os.str());
  }
  if (workers < 1) workers = 1;
  int wb = 0;
  while ((1 << wb) < workers && wb < c) ++wb;
  int low_bits = c - wb;
  int n_blocks = 1 << wb;

  BruteOutcome out;
  out.n_classes = c;
  if (workers == 1 || n_blocks == 1) {
    detail::WitnessMap wit;
    for (int p = 0; p < n_blocks; ++p)
      detail::brute_block(ctx, static_cast<std::uint64_t>(p) << low_bits, low_bits, wit);
    for (auto& kv : wit) {
      out.pairs.insert(kv.first);
      out.witness.insert(kv);
    }
    return out;
  }
  std::vector<detail::WitnessMap> wits(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int p = w; p < n_blocks; p += workers)
        detail::brute_block(ctx, static_cast<std::uint64_t>(p) << low_bits, low_bits, wits[w]);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& wm : wits)
    for (const auto& kv : wm) detail::brute_record(out.witness, kv.first.first, kv.first.second,
                                                   kv.second);
  for (const auto& kv : out.witness) out.pairs.insert(kv.first);
  return out;
}

// ---------------------------------------------------------------------------
// Crosscheck: predicted region vs exhaustive enumeration, per subgroup.
// ---------------------------------------------------------------------------

struct SubgroupCheck {
  Subgroup K;
  FeasibleRegion region;
  PairSet achieved;  // (0,0) stripped
  bool equal = false;
  double seconds = 0.0;
  PairSet extra;    // achieved but not predicted (witnesses available)
  PairSet missing;  // predicted but never achieved
  std::map<std::pair<long long, long long>, std::uint64_t> witnesses;
};

struct CrosscheckReport {
  std::string group_label;
  int n_classes = 0;  // usable classes of G
  std::vector<SubgroupCheck> checks;
  bool all_equal = true;
  double seconds = 0.0;
};

inline CrosscheckReport crosscheck(const DicyclicGroup& G, const std::string& group_label,
                                   int max_classes = 24, int workers = 4) {
  auto t0 = std::chrono::steady_clock::now();
  CrosscheckReport rep;
  rep.group_label = group_label;
  for (int c = 0; c < static_cast<int>(G.conjugacy_classes().size()); ++c)
    if (!G.class_is_square(c)) ++rep.n_classes;
  for (const Subgroup& K : enumerate_all_subgroups(G)) {
    auto t1 = std::chrono::steady_clock::now();
    SubgroupCheck chk;
    chk.K = K;
    chk.region = feasible_region(G, K);
    BruteOutcome got = achievable_pairs(G, K, max_classes, workers);
    chk.achieved = got.pairs;
    chk.achieved.erase({0, 0});
    chk.equal = chk.achieved == chk.region.pairs;
    for (const auto& p : chk.achieved)
      if (!chk.region.pairs.count(p)) {
        chk.extra.insert(p);
        chk.witnesses[p] = got.witness.at(p);
      }
    for (const auto& p : chk.region.pairs)
      if (!chk.achieved.count(p)) chk.missing.insert(p);
    auto t2 = std::chrono::steady_clock::now();
    chk.seconds = std::chrono::duration<double>(t2 - t1).count();
    rep.all_equal = rep.all_equal && chk.equal;
    rep.checks.push_back(std::move(chk));
  }
  auto t3 = std::chrono::steady_clock::now();
  rep.seconds = std::chrono::duration<double>(t3 - t0).count();
  return rep;
}

}  // namespace caysum

#endif  // CAYSUM_BRUTEFORCE_HPP_
