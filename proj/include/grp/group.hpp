#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "grp/bitmask.hpp"
#include "grp/error.hpp"

namespace grp {

// Construction-time limits. Identity is always element 0 and all indexings
// are deterministic, so identical inputs rebuild bit-identical groups.
struct BuildOptions {
  int max_order = 20000;       // Cayley table memory bound
  int full_assoc_bound = 512;  // exhaustive associativity check up to this order
  int assoc_samples = 10000;   // sampled triples above the bound
  std::uint64_t assoc_seed = 0x9e3779b97f4a7c15ULL;  // fixed construction seed
};

// A finite group as an order-n Cayley table over element indices 0..n-1.
// Immutable after construction; cheap to share read-only across threads.
class FiniteGroup {
public:
  // `flat` is row-major: flat[a*n + b] = a*b. Validates the table:
  // identity at 0, rows/columns are permutations, associativity
  // (exhaustive up to opts.full_assoc_bound, sampled above), then
  // precomputes inverses, element orders and the abelian flag.
  static FiniteGroup from_table(int n, std::vector<std::uint16_t> flat,
                                const BuildOptions& opts = {}) {
    if (n <= 0) throw InvalidParameter("group order must be positive");
    if (n > opts.max_order)
      throw ProductExceedsCap("order " + std::to_string(n) + " exceeds max_order " +
                              std::to_string(opts.max_order));
    if (n > 65535) throw ProductExceedsCap("order exceeds index type bound 65535");
    if (flat.size() != std::size_t(n) * n) throw InvalidParameter("table size mismatch");

    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(flat);
    g.validate(opts);
    g.finish();
    return g;
  }

  int order() const { return n_; }

  int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  int element_order(int a) const { return element_order_[a]; }

  // a^k for any integer k.
  int pow(int a, long k) const {
    int m = element_order_[a];
    long r = k % m;
    if (r < 0) r += m;
    int acc = 0;
    for (long i = 0; i < r; ++i) acc = mul(acc, a);
    return acc;
  }

  bool is_abelian() const { return abelian_; }

  Bitmask full_mask() const {
    Bitmask m(n_);
    for (int i = 0; i < n_; ++i) m.set(i);
    return m;
  }
  Bitmask identity_mask() const {
    Bitmask m(n_);
    m.set(0);
    return m;
  }

private:
  FiniteGroup() = default;

  void validate(const BuildOptions& opts) const {
    for (int a = 0; a < n_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a)
        throw InvalidParameter("element 0 is not an identity");
    }
    std::vector<char> seen(n_);
    for (int a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n_; ++b) {
        int v = mul(a, b);
        if (v >= n_ || seen[v]) throw InvalidParameter("row is not a permutation");
        seen[v] = 1;
      }
    }
    for (int b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int a = 0; a < n_; ++a) {
        int v = mul(a, b);
        if (seen[v]) throw InvalidParameter("column is not a permutation");
        seen[v] = 1;
      }
    }
    if (n_ <= opts.full_assoc_bound) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw InvalidParameter("table is not associative");
    } else {
      std::mt19937_64 rng(opts.assoc_seed);
      std::uniform_int_distribution<int> pick(0, n_ - 1);
      for (int s = 0; s < opts.assoc_samples; ++s) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvalidParameter("table is not associative (sampled)");
      }
    }
  }

  void finish() {
    inverse_.assign(n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = std::uint16_t(b);
          break;
        }
    element_order_.assign(n_, 1);
    for (int a = 0; a < n_; ++a) {
      int x = a, k = 1;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      element_order_[a] = k;
      if (n_ % k != 0) throw InvalidParameter("element order violates Lagrange");
    }
    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) {
          abelian_ = false;
          break;
        }
  }

  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<int> element_order_;
  bool abelian_ = true;
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest power of p dividing n.
inline long p_part(long n, long p) {
  if (n <= 0 || p < 2) throw InvalidParameter("p_part needs n > 0 and p >= 2");
  long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p <= n; ++p)
    if (is_prime(p) && n % p == 0) ps.push_back(p);
  return ps;
}

// Returns p if q = p^k for a prime p and k >= 1, else 0.
inline long prime_power_base(long q) {
  if (q < 2) return 0;
  for (long p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1 ? p : 0;
    }
  return q;  // q itself is prime
}

// ---- Named constructions -------------------------------------------------
//
// Each construction documents its element indexing; all are deterministic.

// Z/n with index a = the residue a; a*b = (a+b) mod n.
inline FiniteGroup cyclic(int n, const BuildOptions& opts = {}) {
  if (n <= 0) throw InvalidParameter("cyclic: n must be positive");
  std::vector<std::uint16_t> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
  return FiniteGroup::from_table(n, std::move(t), opts);
}

// Componentwise product; pairs indexed lexicographically with the left
// factor major: (g, h) -> g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  const BuildOptions& opts = {}) {
  long n = long(g.order()) * h.order();
  if (n > opts.max_order)
    throw ProductExceedsCap("direct product order " + std::to_string(n) + " exceeds bound");
  int ng = g.order(), nh = h.order(), nn = int(n);
  std::vector<std::uint16_t> t(std::size_t(nn) * nn);
  for (int a = 0; a < nn; ++a) {
    int a1 = a / nh, a2 = a % nh;
    for (int b = 0; b < nn; ++b) {
      int b1 = b / nh, b2 = b % nh;
      t[std::size_t(a) * nn + b] = std::uint16_t(g.mul(a1, b1) * nh + h.mul(a2, b2));
    }
  }
  (void)ng;
  return FiniteGroup::from_table(nn, std::move(t), opts);
}

// Direct product of cyclic groups of the given prime-power orders, indexed
// mixed-radix with the first factor major (same layout as folding
// direct_product left to right). An empty list yields the trivial group.
inline FiniteGroup abelian_of_type(const std::vector<int>& prime_powers,
                                   const BuildOptions& opts = {}) {
  long n = 1;
  for (int q : prime_powers) {
    if (q < 2 || prime_power_base(q) == 0)
      throw InvalidParameter("abelian_of_type: entries must be prime powers >= 2");
    n *= q;
    if (n > opts.max_order) throw ProductExceedsCap("abelian_of_type order exceeds bound");
  }
  FiniteGroup g = cyclic(1, opts);
  for (int q : prime_powers) g = direct_product(g, cyclic(q, opts), opts);
  return g;
}

inline FiniteGroup klein_four(const BuildOptions& opts = {}) {
  return abelian_of_type({2, 2}, opts);
}

inline FiniteGroup elementary_abelian(int p, int k, const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidParameter("elementary_abelian: p must be prime");
  if (k <= 0) throw InvalidParameter("elementary_abelian: k must be positive");
  return abelian_of_type(std::vector<int>(k, p), opts);
}

// Dihedral group of order 2m. Element s^f r^i has index f*m + i, so the
// rotations come first and index 0 is the identity.
inline FiniteGroup dihedral(int m, const BuildOptions& opts = {}) {
  if (m <= 0) throw InvalidParameter("dihedral: m must be positive");
  int n = 2 * m;
  if (n > opts.max_order) throw ProductExceedsCap("dihedral order exceeds bound");
  auto idx = [m](int f, int i) { return f * m + i; };
  std::vector<std::uint16_t> t(std::size_t(n) * n);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int i2 = 0; i2 < m; ++i2) {
          // s^f1 r^i1 * s^f2 r^i2 = s^(f1+f2) r^(±i1 + i2)
          int i = f2 ? (m - i1 + i2) % m : (i1 + i2) % m;
          t[std::size_t(idx(f1, i1)) * n + idx(f2, i2)] = std::uint16_t(idx((f1 + f2) % 2, i));
        }
  return FiniteGroup::from_table(n, std::move(t), opts);
}

// Quaternion group {±1, ±i, ±j, ±k}; basis unit b with sign s has index
// 2b + s, so 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
inline FiniteGroup quaternion8(const BuildOptions& opts = {}) {
  // unit_mul[a][b] = (unit, sign) of the product of basis units 1,i,j,k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[i][j]: i*i = j*j = k*k = -1, i*j = k, j*k = i, k*i = j, reversed negated
  std::vector<std::uint16_t> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a >> 1, sa = a & 1, ub = b >> 1, sb = b & 1;
      int u = unit[ua][ub];
      int s = (sa + sb + sign[ua][ub]) % 2;
      t[std::size_t(a) * 8 + b] = std::uint16_t(2 * u + s);
    }
  return FiniteGroup::from_table(8, std::move(t), opts);
}

// ---- Permutation input ---------------------------------------------------

// Input encoding for catalog groups: generators as image arrays on 0..d-1.
struct PermSpec {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

namespace detail {
inline void check_perm(const std::vector<int>& img, int degree) {
  if (int(img.size()) != degree) throw InvalidPermutation("image array has wrong length");
  std::vector<char> seen(degree, 0);
  for (int v : img) {
    if (v < 0 || v >= degree || seen[v]) throw InvalidPermutation("image array is not a bijection");
    seen[v] = 1;
  }
}

// a then b: result[i] = b[a[i]].
inline std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}
}  // namespace detail

// Closes the generated permutation group by BFS from the identity,
// applying generators on the right in list order; elements are indexed in
// discovery order, identity first. The group product a*b means "apply a,
// then b" on points.
inline FiniteGroup from_generators(const PermSpec& spec, int cap,
                                   const BuildOptions& opts = {}) {
  if (spec.degree <= 0) throw InvalidPermutation("degree must be positive");
  if (cap <= 0) throw InvalidParameter("cap must be positive");
  for (const auto& g : spec.generators) detail::check_perm(g, spec.degree);

  std::vector<int> ident(spec.degree);
  std::iota(ident.begin(), ident.end(), 0);

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  elems.push_back(ident);
  index.emplace(ident, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : spec.generators) {
      auto f = detail::compose_perm(elems[head], g);
      if (index.emplace(f, int(elems.size())).second) {
        elems.push_back(std::move(f));
        if (int(elems.size()) > cap)
          throw ClosureExceedsCap("closure exceeds cap " + std::to_string(cap));
      }
    }
  }

  int n = int(elems.size());
  if (n > opts.max_order) throw ProductExceedsCap("closure order exceeds max_order");
  std::vector<std::uint16_t> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[std::size_t(a) * n + b] = std::uint16_t(index.at(detail::compose_perm(elems[a], elems[b])));
  return FiniteGroup::from_table(n, std::move(t), opts);
}

// ---- Elementwise queries ---------------------------------------------------

inline Bitmask center(const FiniteGroup& g) {
  int n = g.order();
  Bitmask m(n);
  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int a = 0; a < n && central; ++a) central = g.mul(z, a) == g.mul(a, z);
    if (central) m.set(z);
  }
  return m;
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    int id = int(classes.size());
    classes.push_back({});
    std::vector<int> stack{x};
    cls[x] = id;
    classes[id].push_back(x);
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int a = 0; a < n; ++a) {
        int z = g.conj(a, y);
        if (cls[z] < 0) {
          cls[z] = id;
          classes[id].push_back(z);
          stack.push_back(z);
        }
      }
    }
    std::sort(classes[id].begin(), classes[id].end());
  }
  return classes;
}

inline long exponent(const FiniteGroup& g) {
  long e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, long(g.element_order(a)));
  return e;
}

}  // namespace grp
