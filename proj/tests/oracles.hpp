#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mps/canonical.hpp"
#include "mps/designs.hpp"
#include "mps/integer_mps.hpp"
#include "mps/rational.hpp"

// Test-only reference implementations. They share no code paths with the
// library beyond the value types.
namespace oracle {

using mps::IntMatrix;
using mps::IntegerMps;
using mps::Rational;

// Every symmetric pattern with diagonal ±d and off-diagonal ±1 whose scaled
// matrix Q satisfies Q Q^T = (d^2 + n - 1) I, found without any pruning.
// For d = 0 only the all-plus diagonal is produced. Sorted by entry codes.
inline std::vector<IntegerMps> naive_real_search(std::size_t n, const Rational& d) {
  const long long num = d.num(), den = d.den();
  const long long target = num * num + den * den * static_cast<long long>(n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t diag_count = num == 0 ? 1 : (std::uint64_t{1} << n);
  std::vector<std::pair<std::vector<int>, IntMatrix>> hits;
  for (std::uint64_t dm = 0; dm < diag_count; ++dm) {
    for (std::uint64_t om = 0; om < (std::uint64_t{1} << pairs.size()); ++om) {
      IntMatrix s(n, n, 1);
      for (std::size_t i = 0; i < n; ++i) s(i, i) = (dm >> i) & 1 ? -1 : 1;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const long long v = (om >> k) & 1 ? -1 : 1;
        s(pairs[k].first, pairs[k].second) = v;
        s(pairs[k].second, pairs[k].first) = v;
      }
      IntMatrix q(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = i == j ? s(i, i) * num : s(i, j) * den;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          long long acc = 0;
          for (std::size_t k = 0; k < n; ++k) acc += q(i, k) * q(j, k);
          ok = acc == (i == j ? target : 0);
        }
      if (!ok) continue;
      std::vector<int> codes;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) codes.push_back(num == 0 || s(i, i) > 0 ? 0 : 3);
          else codes.push_back(s(i, j) > 0 ? 1 : 2);
        }
      hits.emplace_back(std::move(codes), std::move(s));
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<IntegerMps> out;
  for (auto& h : hits) out.emplace_back(d, std::move(h.second));
  return out;
}

// Smallest code sequence over every relabelling, switching and global sign.
inline std::vector<std::uint8_t> brute_canonical_codes(const IntegerMps& m) {
  const std::size_t n = m.n();
  const bool zero = m.d() == Rational(0);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best, cur(n * n);
  do {
    for (std::uint64_t sw = 0; sw < (std::uint64_t{1} << n); ++sw)
      for (int g : {1, -1}) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const int sa = (sw >> a) & 1 ? -1 : 1, sb = (sw >> b) & 1 ? -1 : 1;
            const int v = g * sa * sb * m.sign(perm[a], perm[b]);
            cur[a * n + b] = a == b ? (zero || v > 0 ? 0 : 3) : (v > 0 ? 1 : 2);
          }
        if (best.empty() || cur < best) best = cur;
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Random element of the equivalence group applied to m: returns M' with
// M'(p(i), p(j)) = g s(i) s(j) M(i, j).
inline IntegerMps scramble(const IntegerMps& m, std::mt19937_64& rng) {
  const std::size_t n = m.n();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<int> s(n);
  for (auto& x : s) x = rng() & 1 ? -1 : 1;
  const int g = rng() & 1 ? -1 : 1;
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(p[i], p[j]) = g * s[i] * s[j] * m.sign(i, j);
  return IntegerMps(m.d(), out);
}

// Quadratic residue character modulo a prime q.
inline int legendre(long long a, long long q) {
  a = ((a % q) + q) % q;
  if (a == 0) return 0;
  for (long long x = 1; x < q; ++x)
    if (x * x % q == a) return 1;
  return -1;
}

// Paley type I Hadamard matrix of order q + 1 for a prime q = 3 (mod 4).
inline IntMatrix paley_hadamard(long long q) {
  const auto n = static_cast<std::size_t>(q + 1);
  IntMatrix c(n, n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    c(0, j) = 1;
    c(j, 0) = -1;
  }
  for (long long i = 0; i < q; ++i)
    for (long long j = 0; j < q; ++j) c(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1)) = legendre(j - i, q);
  for (std::size_t i = 0; i < n; ++i) c(i, i) += 1;
  return c;
}

// Lines {i, i+1, i+3} mod 7.
inline IntMatrix fano() {
  IntMatrix a(7, 7, 0);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t off : {0u, 1u, 3u}) a(i, (i + off) % 7) = 1;
  return a;
}

inline bool is_exact_scaled_orthogonal(const IntegerMps& m) {
  const IntMatrix q = m.scaled();
  const long long den = m.d().den(), num = m.d().num();
  const long long target = num * num + den * den * static_cast<long long>(m.n() - 1);
  const IntMatrix g = q * q.transpose();
  return g == IntMatrix::identity(m.n()) * target;
}

}  // namespace oracle
