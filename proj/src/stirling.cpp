#include "conesum/stirling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace conesum {

namespace {

// Triangular memo table, rows appended on demand.
struct Triangle {
  std::vector<std::vector<Rational>> rows;
};

struct Cache {
  std::mutex mu;
  unsigned nMax = 256;
  Triangle first, second, firstB;
  // bruteCounts[kind][n] -> counts[k][r]
  std::map<unsigned, std::vector<std::vector<std::uint64_t>>> brutePerm;
  std::map<unsigned, std::vector<std::vector<std::uint64_t>>> brutePart;
};

Cache& cache() {
  static Cache c;
  return c;
}

void checkLimit(const Cache& c, unsigned n) {
  if (n > c.nMax)
    throw std::length_error("stirling: n exceeds configured limit");
}

// Grows `tri` so that rows 0..n exist. next(row n-1, k-1) + factor(n,k)*next(row n-1, k).
template <class Factor>
void growTriangle(Triangle& tri, unsigned n, Factor factor) {
  if (tri.rows.empty()) tri.rows.push_back({Rational(1)});
  while (tri.rows.size() <= n) {
    const unsigned m = static_cast<unsigned>(tri.rows.size());
    const auto& prev = tri.rows.back();
    std::vector<Rational> row(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
      Rational v = (k > 0) ? prev[k - 1] : Rational(0);
      if (k < m) v += factor(m, k) * prev[k];
      row[k] = std::move(v);
    }
    tri.rows.push_back(std::move(row));
  }
}

Rational lookupFirst(unsigned n, unsigned k) {
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  checkLimit(c, n);
  growTriangle(c.first, n,
               [](unsigned m, unsigned) { return Rational(static_cast<std::int64_t>(m) - 1); });
  if (k > n) return Rational(0);
  return c.first.rows[n][k];
}

Rational lookupSecond(unsigned n, unsigned k) {
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  checkLimit(c, n);
  growTriangle(c.second, n,
               [](unsigned, unsigned kk) { return Rational(static_cast<std::int64_t>(kk)); });
  if (k > n) return Rational(0);
  return c.second.rows[n][k];
}

Rational lookupFirstB(unsigned n, unsigned k) {
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  checkLimit(c, n);
  growTriangle(c.firstB, n, [](unsigned m, unsigned) {
    return Rational(2 * static_cast<std::int64_t>(m) - 1);
  });
  if (k > n) return Rational(0);
  return c.firstB.rows[n][k];
}

// Cycle structure bucketing for the permutation oracle: counts[k][r] is the
// number of permutations with k cycles in which 1..r lie in distinct cycles.
std::vector<std::vector<std::uint64_t>> enumeratePermutations(unsigned n) {
  std::vector<std::vector<std::uint64_t>> counts(n + 1,
                                                 std::vector<std::uint64_t>(n + 1, 0));
  if (n == 0) {
    counts[0][0] = 1; // the empty permutation, every r constraint vacuous
    return counts;
  }
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<unsigned> cycleOf(n);
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      for (unsigned j = i; !seen[j]; j = perm[j]) {
        seen[j] = 1;
        cycleOf[j] = cycles;
      }
      ++cycles;
    }
    // largest r such that elements 1..r (indices 0..r-1) are pairwise in
    // distinct cycles; cycles are discovered in order of smallest element,
    // so the prefix is violated exactly at the first repeat
    unsigned rMax = n;
    for (unsigned r = 1; r < n; ++r) {
      bool repeat = false;
      for (unsigned s = 0; s < r && !repeat; ++s) repeat = cycleOf[s] == cycleOf[r];
      if (repeat) {
        rMax = r;
        break;
      }
    }
    for (unsigned r = 0; r <= rMax; ++r) ++counts[cycles][r];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

// Set-partition bucketing via restricted growth strings.
std::vector<std::vector<std::uint64_t>> enumeratePartitions(unsigned n) {
  std::vector<std::vector<std::uint64_t>> counts(n + 1,
                                                 std::vector<std::uint64_t>(n + 1, 0));
  if (n == 0) {
    counts[0][0] = 1;
    return counts;
  }
  std::vector<unsigned> rgs(n, 0);
  auto record = [&] {
    unsigned blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    // element i is in block rgs[i]; restricted growth means element i can
    // only collide with an earlier element, so the first prefix collision
    // caps r as in the permutation case
    unsigned rMax = n;
    for (unsigned r = 1; r < n; ++r) {
      bool repeat = false;
      for (unsigned s = 0; s < r && !repeat; ++s) repeat = rgs[s] == rgs[r];
      if (repeat) {
        rMax = r;
        break;
      }
    }
    for (unsigned r = 0; r <= rMax; ++r) ++counts[blocks][r];
  };
  // iterate restricted growth strings: rgs[0]=0, rgs[i] <= 1+max(prefix)
  while (true) {
    record();
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      unsigned maxPrefix = 0;
      for (int s = 0; s < i; ++s) maxPrefix = std::max(maxPrefix, rgs[s]);
      if (rgs[i] <= maxPrefix) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0u);
        break;
      }
    }
    if (i == 0) break;
  }
  return counts;
}

} // namespace

Rational stirling1(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return lookupFirst(n, k);
}

Rational stirling2(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return lookupSecond(n, k);
}

Rational stirling1B(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return lookupFirstB(n, k);
}

Rational stirling2B(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Rational sum(0);
  Rational pow2(1);
  for (unsigned m = k; m <= n; ++m) {
    sum += pow2 * Rational::binomial(n, m) * stirling2(m, k);
    pow2 *= Rational(2);
  }
  return sum;
}

Rational rStirling1(unsigned n, unsigned k, const Rational& r) {
  if (k > n) return Rational(0);
  Rational sum(0);
  for (unsigned m = 0; m + k <= n; ++m)
    sum += Rational::binomial(n, m) * stirling1(n - m, k) * risingFactorial(r, m);
  return sum;
}

Rational rStirling2(unsigned n, unsigned k, const Rational& r) {
  if (k > n) return Rational(0);
  Rational sum(0);
  for (unsigned m = k; m <= n; ++m)
    sum += Rational::binomial(n, m) * stirling2(m, k) * r.pow(n - m);
  return sum;
}

unsigned stirlingLimit() {
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  return c.nMax;
}

void setStirlingLimit(unsigned nMax) {
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  c.nMax = nMax;
}

Rational bruteStirling(BruteKind kind, unsigned n, unsigned k, unsigned r) {
  if (n > 10)
    throw std::invalid_argument("bruteStirling: n > 10 rejected (cost guard)");
  if (k > n || r > n) return Rational(0);
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  auto& store = (kind == BruteKind::First) ? c.brutePerm : c.brutePart;
  auto it = store.find(n);
  if (it == store.end()) {
    auto counts = (kind == BruteKind::First) ? enumeratePermutations(n)
                                             : enumeratePartitions(n);
    it = store.emplace(n, std::move(counts)).first;
  }
  return Rational(static_cast<std::int64_t>(it->second[k][r]));
}

} // namespace conesum
