#include "tropattack/spectral.hpp"

#include <algorithm>
#include <optional>

namespace tropattack {

bool CriticalCycle::contains(std::size_t v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::size_t CriticalCycle::next(std::size_t v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw ValidationError("vertex is not on the cycle");
  ++it;
  return it == vertices.end() ? vertices.front() : *it;
}

namespace {

// Strongly connected components that contain at least one cycle, each listed
// in increasing vertex order.
std::vector<std::vector<std::size_t>> cyclic_components(const RatTropMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = a(i, j).is_finite();
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) reach[i][j] |= reach[k][j];
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<char> assigned(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i] || !reach[i][i]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t j = i; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) {
        comp.push_back(j);
        assigned[j] = 1;
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Karp: lambda = max_v min_k (D_m(v) - D_k(v)) / (m - k), where D_k(v) is
// the heaviest k-arc walk from a fixed source to v inside the component.
Rational karp(const RatTropMatrix& a, const std::vector<std::size_t>& comp) {
  const std::size_t m = comp.size();
  std::vector<std::vector<RatScalar>> walk(m + 1, std::vector<RatScalar>(m));
  walk[0][0] = Rational(0);
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t v = 0; v < m; ++v) {
      RatScalar best;
      for (std::size_t u = 0; u < m; ++u) {
        best = oplus(best, otimes(walk[k - 1][u], a(comp[u], comp[v])));
      }
      walk[k][v] = best;
    }
  }
  std::optional<Rational> lambda;
  for (std::size_t v = 0; v < m; ++v) {
    if (walk[m][v].is_neg_inf()) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < m; ++k) {
      if (walk[k][v].is_neg_inf()) continue;
      Rational mean = (walk[m][v].value() - walk[k][v].value()) /
                      Rational(static_cast<std::int64_t>(m - k));
      if (!worst || mean < *worst) worst = mean;
    }
    if (worst && (!lambda || *lambda < *worst)) lambda = worst;
  }
  if (!lambda) throw ValidationError("karp: component without a closed walk");
  return *lambda;
}

}  // namespace

RatScalar max_cycle_mean(const RatTropMatrix& a) {
  if (!a.is_square()) throw ShapeError("max_cycle_mean: matrix is not square");
  RatScalar best;
  for (const auto& comp : cyclic_components(a)) best = oplus(best, RatScalar(karp(a, comp)));
  return best;
}

RatScalar max_cycle_mean(const TropMatrix& a) { return max_cycle_mean(to_rational(a)); }

RatTropMatrix normalize(const TropMatrix& a, const Rational& lambda) {
  return scale(RatScalar(-lambda), to_rational(a));
}

RatTropMatrix kleene_star(const RatTropMatrix& a) {
  if (!a.is_square()) throw ShapeError("kleene_star: matrix is not square");
  const std::size_t n = a.rows();
  RatTropMatrix d = a;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) d(i, j) = oplus(d(i, j), otimes(d(i, k), d(k, j)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i).is_finite() && d(i, i).value() > Rational(0)) {
      throw DivergentStarError("kleene_star: positive cycle through vertex " + std::to_string(i));
    }
  }
  return mat_add(d, identity<RatScalar>(n));
}

CriticalCycle critical_cycle(const TropMatrix& a, const Rational& lambda) {
  const std::size_t n = a.rows();
  const RatTropMatrix norm = normalize(a, lambda);
  const RatTropMatrix star = kleene_star(norm);
  const RatScalar zero(Rational(0));

  auto critical = [&](std::size_t i, std::size_t j) {
    return norm(i, j).is_finite() && otimes(norm(i, j), star(j, i)) == zero;
  };
  auto successor = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < n; ++j) {
      if (critical(i, j)) return j;
    }
    return std::nullopt;
  };

  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n && !start; ++i) {
    if (successor(i)) start = i;
  }
  if (!start) throw AcyclicError("critical_cycle: no critical arc (is lambda correct?)");

  std::vector<std::size_t> walk{*start};
  std::vector<std::ptrdiff_t> position(n, -1);
  position[*start] = 0;
  while (true) {
    auto next = successor(walk.back());
    if (!next) throw ValidationError("critical_cycle: critical walk got stuck");
    if (position[*next] >= 0) {
      return CriticalCycle{{walk.begin() + position[*next], walk.end()}};
    }
    position[*next] = static_cast<std::ptrdiff_t>(walk.size());
    walk.push_back(*next);
  }
}

CsrDecomposition csr_decompose(const TropMatrix& a) {
  if (!a.is_square()) throw ShapeError("csr_decompose: matrix is not square");
  const RatScalar lambda = max_cycle_mean(a);
  if (lambda.is_neg_inf()) throw AcyclicError("csr_decompose: matrix has no cycle");

  CsrDecomposition d;
  d.lambda = lambda.value();
  d.cycle = critical_cycle(a, d.lambda);
  const std::size_t n = a.rows();
  const RatTropMatrix norm = normalize(a, d.lambda);
  d.U = kleene_star(mat_pow(norm, d.cycle.length()));

  std::vector<char> on_cycle(n, 0);
  for (auto v : d.cycle.vertices) on_cycle[v] = 1;

  d.C = RatTropMatrix(n, n);
  d.R = RatTropMatrix(n, n);
  d.S = RatTropMatrix(n, n);
  d.B = RatTropMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (on_cycle[j]) d.C(i, j) = d.U(i, j);
      if (on_cycle[i]) d.R(i, j) = d.U(i, j);
      if (!on_cycle[i] && !on_cycle[j]) d.B(i, j) = to_rational(a(i, j));
    }
  }
  for (auto v : d.cycle.vertices) {
    const std::size_t w = d.cycle.next(v);
    d.S(v, w) = norm(v, w);
  }
  return d;
}

RatTropMatrix csr_power(const CsrDecomposition& d, std::uint64_t t) {
  const std::uint64_t rem = t % d.cycle.length();
  const RatTropMatrix core = mat_mul(mat_mul(d.C, mat_pow(d.S, rem)), d.R);
  const Rational shift = d.lambda * Rational(static_cast<std::int64_t>(t));
  return mat_add(scale(RatScalar(shift), core), mat_pow(d.B, t));
}

std::uint64_t observed_csr_threshold(const TropMatrix& a, const CsrDecomposition& d,
                                     std::uint64_t horizon) {
  const std::size_t n = a.rows();
  const std::size_t l = d.cycle.length();
  std::vector<RatTropMatrix> cores;
  RatTropMatrix s_pow = identity<RatScalar>(n);
  for (std::size_t r = 0; r < l; ++r) {
    cores.push_back(mat_mul(mat_mul(d.C, s_pow), d.R));
    s_pow = mat_mul(s_pow, d.S);
  }
  const RatTropMatrix ra = to_rational(a);
  RatTropMatrix a_pow = identity<RatScalar>(n);
  RatTropMatrix b_pow = identity<RatScalar>(n);
  std::uint64_t threshold = 0;
  for (std::uint64_t t = 0; t <= horizon; ++t) {
    const Rational shift = d.lambda * Rational(static_cast<std::int64_t>(t));
    const RatTropMatrix expansion = mat_add(scale(RatScalar(shift), cores[t % l]), b_pow);
    if (!(expansion == a_pow)) threshold = t + 1;
    a_pow = mat_mul(a_pow, ra);
    b_pow = mat_mul(b_pow, d.B);
  }
  return threshold;
}

}  // namespace tropattack
