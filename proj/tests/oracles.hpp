#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the spectral or attack code paths it is used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tropattack/matrix.hpp"
#include "tropattack/triad.hpp"

namespace oracle {

using tropattack::Rational;
using tropattack::RatScalar;
using tropattack::TropMatrix;
using tropattack::TropScalar;
using tropattack::Triad;
using tropattack::TriadMatrix;

inline TropScalar random_scalar(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                                double neginf_density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < neginf_density) return TropScalar::neg_inf();
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline TropMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                std::int64_t lo, std::int64_t hi, double neginf_density = 0.0) {
  TropMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, lo, hi, neginf_density);
  }
  return m;
}

inline Triad random_triad(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                          double neginf_density = 0.0) {
  return {random_scalar(rng, lo, hi, neginf_density), random_scalar(rng, lo, hi, neginf_density),
          random_scalar(rng, lo, hi, neginf_density)};
}

inline TriadMatrix random_triad_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                       std::int64_t hi, double neginf_density = 0.0) {
  TriadMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_triad(rng, lo, hi, neginf_density);
  }
  return m;
}

// max with -inf as the identity, + with -inf absorbing, written out directly.
inline TropScalar max_of(TropScalar a, TropScalar b) {
  if (a.is_neg_inf()) return b;
  if (b.is_neg_inf()) return a;
  return a.value() >= b.value() ? a : b;
}

inline TropScalar plus_of(TropScalar a, TropScalar b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropScalar::neg_inf();
  return a.value() + b.value();
}

inline TropMatrix naive_mul(const TropMatrix& a, const TropMatrix& b) {
  TropMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      TropScalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = max_of(acc, plus_of(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

inline TropMatrix naive_pow(const TropMatrix& a, unsigned t) {
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) = 0;
  for (unsigned k = 0; k < t; ++k) out = naive_mul(out, a);
  return out;
}

// Nine-term triad product spelled out term by term.
inline Triad naive_triad_mul(const Triad& u, const Triad& v) {
  auto m3 = [](TropScalar x, TropScalar y, TropScalar z) { return max_of(max_of(x, y), z); };
  return {m3(plus_of(u.a, v.a), plus_of(u.b, v.c), plus_of(u.c, v.b)),
          m3(plus_of(u.a, v.b), plus_of(u.b, v.a), plus_of(u.c, v.c)),
          m3(plus_of(u.a, v.c), plus_of(u.b, v.b), plus_of(u.c, v.a))};
}

// Maximum cycle mean by enumerating every simple cycle. Each cycle is found
// once, from its smallest vertex. nullopt means acyclic.
inline std::optional<Rational> max_cycle_mean_brute(const TropMatrix& a) {
  const std::size_t n = a.rows();
  std::optional<Rational> best;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v, std::int64_t weight,
                 std::int64_t length) -> void {
    for (std::size_t w = start; w < n; ++w) {
      if (a(v, w).is_neg_inf()) continue;
      const std::int64_t wt = weight + a(v, w).value();
      if (w == start) {
        Rational mean(wt, length);
        if (!best || *best < mean) best = mean;
      } else if (!used[w]) {
        used[w] = 1;
        self(self, start, w, wt, length + 1);
        used[w] = 0;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = 1;
    dfs(dfs, s, s, 0, 1);
    used[s] = 0;
  }
  return best;
}

// Every simple cycle as a vertex list (starting at its smallest vertex).
inline std::vector<std::vector<std::size_t>> simple_cycles(const TropMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    for (std::size_t w = start; w < n; ++w) {
      if (a(v, w).is_neg_inf()) continue;
      if (w == start) {
        out.push_back(path);
      } else if (!used[w]) {
        used[w] = 1;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    dfs(dfs, s, s);
    used[s] = 0;
  }
  return out;
}

inline bool strongly_connected(const TropMatrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t s = 0; s < n; ++s) {
    // Reachability by nonempty paths, so a lone vertex needs its loop.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (a(v, w).is_finite() && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (char c : seen) {
      if (!c) return false;
    }
  }
  return true;
}

// Lexicographically first (x, y) with p x + q y = r, x >= bx, y >= by,
// found by scanning x upward and y upward within a box.
inline std::optional<std::pair<std::int64_t, std::int64_t>> enumerate_linear(
    std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t bx, std::int64_t by,
    std::int64_t box) {
  for (std::int64_t x = bx; x <= bx + box; ++x) {
    for (std::int64_t y = by; y <= by + box; ++y) {
      if (p * x + q * y == r) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace oracle
