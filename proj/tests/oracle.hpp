// Test-side reference computations. Deliberately independent of the library's algorithms:
// exhaustive subset search, long double closed forms, rational arithmetic.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// Clique number by checking every vertex subset (n <= 20). Vertices 1-based in `edges`.
inline int clique_number(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : edges) {
    nbr[u - 1] |= 1u << (v - 1);
    nbr[v - 1] |= 1u << (u - 1);
  }
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((s >> v & 1) && ((s & ~(1u << v)) & ~nbr[v])) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Lexicographically least maximum clique, by exhaustive search.
inline std::vector<int> least_max_clique(int n, const std::vector<std::pair<int, int>>& edges) {
  const int omega = clique_number(n, edges);
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : edges) {
    nbr[u - 1] |= 1u << (v - 1);
    nbr[v - 1] |= 1u << (u - 1);
  }
  std::vector<int> best;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (__builtin_popcount(s) != omega) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((s >> v & 1) && ((s & ~(1u << v)) & ~nbr[v])) ok = false;
    if (!ok) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) members.push_back(v + 1);
    if (best.empty() || members < best) best = members;
  }
  return best;
}

/// Exact fraction with 64-bit numerator and denominator.
struct Frac {
  std::int64_t p, q;
  Frac(std::int64_t a = 0, std::int64_t b = 1) : p(a), q(b) {
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) p = -p, q = -q;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
  friend Frac operator*(Frac a, Frac b) { return {a.p * b.p, a.q * b.q}; }
  friend Frac operator/(Frac a, Frac b) { return {a.p * b.q, a.q * b.p}; }
  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

/// 1 - 1/(2k), (1 - 1/(2(k-1)) + 1 - 1/(2k))/2, (1/(k-1) - 1/k)/2, eps_a^2/8 as exact fractions.
struct NisanConstants {
  Frac c00, c_ell, eps_a, eps;
};
inline NisanConstants nisan_constants(int k) {
  const Frac one(1), half(1, 2);
  const Frac c00 = one - Frac(1, 2 * k);
  const Frac c_ell = half * ((one - Frac(1, 2 * (k - 1))) + c00);
  const Frac eps_a = half * (Frac(1, k - 1) - Frac(1, k));
  return {c00, c_ell, eps_a, eps_a * eps_a / Frac(8)};
}

/// x . C x for raw Nisan-Bomze C = A + I/2, computed by summing over vertex pairs.
inline long double raw_potential(int n, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<long double>& x) {
  long double s = 0;
  for (int i = 0; i < n; ++i) s += 0.5L * x[i] * x[i];
  for (auto [u, v] : edges) s += 2.0L * x[u - 1] * x[v - 1];
  return s;
}

/// One Hedge step in long double, written from the closed form without any stabilisation.
inline std::vector<long double> hedge(const std::vector<std::vector<long double>>& c,
                                      const std::vector<long double>& x, long double alpha) {
  const std::size_t n = x.size();
  std::vector<long double> w(n);
  long double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double p = 0;
    for (std::size_t j = 0; j < n; ++j) p += c[i][j] * x[j];
    w[i] = x[i] * std::exp(alpha * p);
    total += w[i];
  }
  for (auto& v : w) v /= total;
  return w;
}

}  // namespace oracle
