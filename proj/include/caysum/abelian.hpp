// caysum/abelian.hpp
//
// Arithmetic in a finite abelian group A given as a list of cyclic orders.
//
// The constructor normalizes an arbitrary order list into the canonical
// prime-power form used throughout the library:
//
//   A = Z_{2^{e_1}} x ... x Z_{2^{e_lambda}} x Z_{p_{lambda+1}^{e_..}} x ...
//
// with all 2-power factors first (exponents nondecreasing, so the k factors
// of order exactly 2 lead), followed by the odd prime-power factors.  Every
// composite user order is split by CRT and the per-factor provenance is kept
// so user coordinates remain interpretable.
//
// Elements are dense indices 0..|A|-1 under the mixed-radix encoding whose
// numeric order coincides with lexicographic order on exponent vectors; all
// element sets in the library are kept sorted in this canonical order so
// outputs are deterministic and diffable.

#ifndef CAYSUM_ABELIAN_HPP_
#define CAYSUM_ABELIAN_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "caysum/errors.hpp"

namespace caysum {

// One canonical cyclic factor Z_{prime^exponent} and the user order it came from.
struct Factor {
  long long prime = 0;
  int exponent = 0;
  long long modulus = 0;    // prime^exponent
  int source_index = 0;     // position in the user's order list
};

// Canonical decomposition of A plus bookkeeping for the user's coordinates.
struct AbelianSpec {
  std::vector<Factor> factors;
  std::vector<long long> user_orders;
  int lambda = 0;  // number of 2-power factors
  int mu = 0;      // number of odd prime-power factors
  int k = 0;       // number of leading factors of order exactly 2
  long long order = 1;
};

namespace detail {

inline std::vector<std::pair<long long, int>> prime_power_split(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Extended gcd: returns g and x,y with a*x + b*y = g.
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace detail

// Split each order into prime-power cyclic factors and reorder canonically.
inline AbelianSpec normalize_spec(const std::vector<long long>& orders) {
  if (orders.empty()) throw InputError("normalize_spec: empty order list");
  AbelianSpec spec;
  spec.user_orders = orders;
  for (size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] < 2) throw InputError("normalize_spec: cyclic order must be >= 2");
    for (auto [p, e] : detail::prime_power_split(orders[j])) {
      Factor f;
      f.prime = p;
      f.exponent = e;
      f.modulus = detail::ipow(p, e);
      f.source_index = static_cast<int>(j);
      spec.factors.push_back(f);
    }
  }
  // 2-power factors first with nondecreasing exponents, then odd prime powers
  // by increasing modulus; ties keep user order (stable).
  std::stable_sort(spec.factors.begin(), spec.factors.end(),
                   [](const Factor& a, const Factor& b) {
                     bool a2 = (a.prime == 2), b2 = (b.prime == 2);
                     if (a2 != b2) return a2;
                     if (a.modulus != b.modulus) return a.modulus < b.modulus;
                     return false;
                   });
  for (const Factor& f : spec.factors) {
    spec.order *= f.modulus;
    if (f.prime == 2) {
      ++spec.lambda;
      if (f.exponent == 1) ++spec.k;
    } else {
      ++spec.mu;
    }
  }
  return spec;
}

// A subgroup of A stored by its full (sorted) element list plus the
// generating list that produced it (informational).
struct SubgroupA {
  std::vector<int> elements;    // sorted element indices, always contains 0
  std::vector<int> generators;  // informational

  bool contains(int a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }
  long long size() const { return static_cast<long long>(elements.size()); }
  bool operator==(const SubgroupA& o) const { return elements == o.elements; }
};

// Dense-index arithmetic over a normalized AbelianSpec.
class AbelianGroup {
 public:
  explicit AbelianGroup(AbelianSpec spec) : spec_(std::move(spec)) {
    const size_t n = spec_.factors.size();
    strides_.assign(n, 1);
    for (size_t i = n; i-- > 1;)
      strides_[i - 1] = strides_[i] * spec_.factors[i].modulus;
    order_ = static_cast<int>(spec_.order);
  }

  const AbelianSpec& spec() const { return spec_; }
  int order() const { return order_; }
  int n_factors() const { return static_cast<int>(spec_.factors.size()); }
  long long modulus(int i) const { return spec_.factors[i].modulus; }
  int lambda() const { return spec_.lambda; }

  std::vector<int> coords(int a) const {
    std::vector<int> c(n_factors());
    for (int i = 0; i < n_factors(); ++i) {
      c[i] = static_cast<int>((a / strides_[i]) % modulus(i));
    }
    return c;
  }

  int index(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != n_factors())
      throw InputError("element has wrong number of coordinates");
    long long a = 0;
    for (int i = 0; i < n_factors(); ++i) {
      long long m = modulus(i);
      long long x = ((c[i] % m) + m) % m;
      a += x * strides_[i];
    }
    return static_cast<int>(a);
  }

  int zero() const { return 0; }

  int add(int a, int b) const {
    long long r = 0;
    for (int i = 0; i < n_factors(); ++i) {
      long long m = modulus(i);
      long long x = (a / strides_[i]) % m + (b / strides_[i]) % m;
      if (x >= m) x -= m;
      r += x * strides_[i];
    }
    return static_cast<int>(r);
  }

  int neg(int a) const {
    long long r = 0;
    for (int i = 0; i < n_factors(); ++i) {
      long long m = modulus(i);
      long long x = (a / strides_[i]) % m;
      r += (x ? m - x : 0) * strides_[i];
    }
    return static_cast<int>(r);
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  // n-fold sum of a (n may be negative).
  int pow(int a, long long n) const {
    long long r = 0;
    for (int i = 0; i < n_factors(); ++i) {
      long long m = modulus(i);
      long long x = ((a / strides_[i]) % m) * (n % m) % m;
      if (x < 0) x += m;
      r += x * strides_[i];
    }
    return static_cast<int>(r);
  }

  long long element_order(int a) const {
    long long o = 1;
    for (int i = 0; i < n_factors(); ++i) {
      long long m = modulus(i);
      long long x = (a / strides_[i]) % m;
      o = std::lcm(o, m / std::gcd(m, x == 0 ? m : x));
    }
    return o;
  }

  // phi_i: keep coordinate i (0-based), identity elsewhere.
  int projection(int i, int a) const {
    if (i < 0 || i >= n_factors())
      throw InputError("projection: factor index out of range");
    long long x = (a / strides_[i]) % modulus(i);
    return static_cast<int>(x * strides_[i]);
  }

  // Smallest subgroup containing gens (closure iteration; A abelian, so the
  // closure of <S, g> is the union of the translates S + j*g).
  SubgroupA subgroup_closure(const std::vector<int>& gens) const {
    std::set<int> cur = {0};
    for (int g : gens) {
      long long o = element_order(g);
      std::set<int> next;
      int t = 0;
      for (long long j = 0; j < o; ++j, t = add(t, g))
        for (int s : cur) next.insert(add(s, t));
      cur.swap(next);
    }
    SubgroupA H;
    H.elements.assign(cur.begin(), cur.end());
    H.generators = gens;
    return H;
  }

  // Every subgroup of A exactly once, ordered by (size, element list).
  // Closure-based lattice walk: repeatedly extend known subgroups by one
  // element.  Guarded by a hard cap since the walk is exponential in theory.
  std::vector<SubgroupA> enumerate_subgroups(long long cap = 64) const {
    if (order_ > cap)
      throw CapExceeded("subgroup enumeration cap exceeded: |A| = " +
                        std::to_string(order_) + " > " + std::to_string(cap));
    std::map<std::vector<int>, std::vector<int>> found;  // elements -> gens
    found[{0}] = {};
    std::vector<std::vector<int>> work = {{0}};
    while (!work.empty()) {
      std::vector<std::vector<int>> next_work;
      for (const auto& elems : work) {
        const std::vector<int>& gens = found.at(elems);
        for (int x = 1; x < order_; ++x) {
          if (std::binary_search(elems.begin(), elems.end(), x)) continue;
          // <elems, x> = union of translates elems + j*x.
          std::set<int> bigger(elems.begin(), elems.end());
          int t = x;
          while (t != 0) {
            for (int s : elems) bigger.insert(add(s, t));
            t = add(t, x);
          }
          std::vector<int> key(bigger.begin(), bigger.end());
          if (!found.count(key)) {
            std::vector<int> g2 = gens;
            g2.push_back(x);
            found[key] = g2;
            next_work.push_back(key);
          }
        }
      }
      work.swap(next_work);
    }
    std::vector<SubgroupA> out;
    for (auto& [elems, gens] : found) {
      SubgroupA H;
      H.elements = elems;
      H.generators = gens;
      out.push_back(std::move(H));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupA& a, const SubgroupA& b) {
      if (a.elements.size() != b.elements.size())
        return a.elements.size() < b.elements.size();
      return a.elements < b.elements;
    });
    return out;
  }

  // Coset partition of A by H; the first block is H itself, blocks are sorted
  // internally and appear in order of their minimal element.
  std::vector<std::vector<int>> cosets(const SubgroupA& H) const {
    std::vector<char> seen(order_, 0);
    std::vector<std::vector<int>> blocks;
    for (int a = 0; a < order_; ++a) {
      if (seen[a]) continue;
      std::vector<int> blk;
      blk.reserve(H.elements.size());
      for (int h : H.elements) {
        int x = add(a, h);
        seen[x] = 1;
        blk.push_back(x);
      }
      std::sort(blk.begin(), blk.end());
      blocks.push_back(std::move(blk));
    }
    return blocks;
  }

  // Product (sum) of all elements of C; identity for empty C.
  int subset_product(const std::vector<int>& C) const {
    int r = 0;
    for (int c : C) r = add(r, c);
    return r;
  }

  // ---- user-coordinate mapping -------------------------------------------

  // User coordinates (one entry per user order) -> canonical element index.
  int from_user_coords(const std::vector<long long>& uc) const {
    if (uc.size() != spec_.user_orders.size())
      throw InputError("element coordinate count does not match the group's order list");
    std::vector<int> c(n_factors());
    for (int i = 0; i < n_factors(); ++i) {
      const Factor& f = spec_.factors[i];
      long long m = f.modulus;
      long long x = ((uc[f.source_index] % m) + m) % m;
      c[i] = static_cast<int>(x);
    }
    return index(c);
  }

  // Canonical element index -> user coordinates, via CRT per user order.
  std::vector<long long> to_user_coords(int a) const {
    std::vector<int> c = coords(a);
    std::vector<long long> uc(spec_.user_orders.size(), 0);
    std::vector<long long> mod_so_far(spec_.user_orders.size(), 1);
    for (int i = 0; i < n_factors(); ++i) {
      const Factor& f = spec_.factors[i];
      long long& x = uc[f.source_index];
      long long& m = mod_so_far[f.source_index];
      // combine x (mod m) with c[i] (mod f.modulus); moduli are coprime
      long long p, q;
      detail::ext_gcd(m, f.modulus, p, q);
      long long M = m * f.modulus;
      long long r = (x * q % M * f.modulus + static_cast<long long>(c[i]) * p % M * m) % M;
      if (r < 0) r += M;
      x = r;
      m = M;
    }
    return uc;
  }

 private:
  AbelianSpec spec_;
  std::vector<long long> strides_;
  int order_ = 0;
};

}  // namespace caysum

#endif  // CAYSUM_ABELIAN_HPP_
