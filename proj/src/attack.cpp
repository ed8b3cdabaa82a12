#include "tropattack/attack.hpp"

#include <limits>
#include <numeric>
#include <vector>

namespace tropattack {

std::string to_string(RecoveryMethod m) {
  return m == RecoveryMethod::csr ? "csr" : "brute_force";
}

std::optional<Rational> residue_check(const TropMatrix& U, const RatTropMatrix& sz_pow,
                                      const RatTropMatrix& rz, const TropMatrix& M,
                                      const RatTropMatrix& cw, const RatTropMatrix& sw_pow,
                                      const CriticalCycle& Z, const CriticalCycle& W) {
  const RatTropMatrix left = mat_mul(mat_mul(sz_pow, rz), to_rational(M));
  const RatTropMatrix product = mat_mul(left, mat_mul(cw, sw_pow));
  std::optional<Rational> beta;
  for (auto i : Z.vertices) {
    for (auto j : W.vertices) {
      if (U(i, j).is_neg_inf() || product(i, j).is_neg_inf()) return std::nullopt;
      const Rational diff = Rational(U(i, j).value()) - product(i, j).value();
      if (!beta) {
        beta = diff;
      } else if (diff != *beta) {
        return std::nullopt;
      }
    }
  }
  return beta;
}

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Returns g = gcd(a, b) >= 0 with a*x + b*y = g.
i128 extended_gcd(i128 a, i128 b, i128& x, i128& y) {
  i128 old_r = a, r = b;
  i128 old_s = 1, s = 0;
  i128 old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

using Pair = std::pair<std::int64_t, std::int64_t>;

// Up to `limit` solutions of p x + q y = r with x >= bx, y >= by, in
// lexicographic order.
std::vector<Pair> integer_solutions(i128 p, i128 q, i128 r, i128 bx, i128 by, std::size_t limit) {
  std::vector<Pair> out;
  auto push = [&](i128 x, i128 y) {
    if (fits64(x) && fits64(y)) out.emplace_back(static_cast<std::int64_t>(x),
                                                 static_cast<std::int64_t>(y));
  };
  if (p == 0 && q == 0) {
    if (r != 0) return out;
    for (std::size_t k = 0; k < limit; ++k) push(bx, by + static_cast<i128>(k));
    return out;
  }
  if (p == 0) {
    if (r % q != 0 || r / q < by) return out;
    for (std::size_t k = 0; k < limit; ++k) push(bx + static_cast<i128>(k), r / q);
    return out;
  }
  if (q == 0) {
    if (r % p != 0 || r / p < bx) return out;
    for (std::size_t k = 0; k < limit; ++k) push(r / p, by + static_cast<i128>(k));
    return out;
  }
  i128 x0, y0;
  const i128 g = extended_gcd(p, q, x0, y0);
  if (r % g != 0) return out;
  x0 *= r / g;
  y0 *= r / g;
  // x = x0 + k*sx, y = y0 - k*sy.
  const i128 sx = q / g;
  const i128 sy = p / g;
  // Orient k so that x grows with k.
  const i128 dir = sx > 0 ? 1 : -1;
  const i128 step_x = sx * dir;   // > 0
  const i128 step_y = -sy * dir;  // y = y0 + k*step_y
  i128 kmin = ceil_div(bx - x0, step_x);
  i128 kmax = std::numeric_limits<i128>::max();
  if (step_y > 0) {
    kmin = std::max(kmin, ceil_div(by - y0, step_y));
  } else {
    kmax = floor_div(y0 - by, -step_y);
  }
  for (i128 k = kmin; k <= kmax && out.size() < limit; ++k) {
    push(x0 + k * step_x, y0 + k * step_y);
    if (k == kmax) break;
  }
  return out;
}

std::vector<Pair> shift_equation_solutions(const ShiftEquation& e, std::size_t limit) {
  const Rational lz(static_cast<std::int64_t>(e.lZ));
  const Rational lw(static_cast<std::int64_t>(e.lW));
  const Rational target = e.beta - Rational(e.tau) -
                          e.lambda1 * Rational(static_cast<std::int64_t>(e.tbar1)) -
                          e.lambda2 * Rational(static_cast<std::int64_t>(e.tbar2));
  const Rational coef_x = e.lambda1 * lz;
  const Rational coef_y = e.lambda2 * lw;
  const std::int64_t scale = lcm_checked(lcm_checked(target.den(), coef_x.den()), coef_y.den());
  const Rational s(scale);
  const i128 p = (coef_x * s).to_integer();
  const i128 q = (coef_y * s).to_integer();
  const i128 r = (target * s).to_integer();

  const std::int64_t n1 = static_cast<std::int64_t>(e.n) - 1;
  const Rational bound_x = (Rational(n1) * lz - Rational(static_cast<std::int64_t>(e.tbar1))) / lz;
  const Rational bound_y = (Rational(n1) * lw - Rational(static_cast<std::int64_t>(e.tbar2))) / lw;
  const i128 bx = std::max<std::int64_t>(0, bound_x.ceil());
  const i128 by = std::max<std::int64_t>(0, bound_y.ceil());
  return integer_solutions(p, q, r, bx, by, limit);
}

RatTropMatrix shifted(const TropMatrix& m, std::int64_t tau) {
  return scale(RatScalar(Rational(tau)), to_rational(m));
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> solve_shift_equation(const ShiftEquation& e) {
  auto sols = shift_equation_solutions(e, 1);
  if (sols.empty()) return std::nullopt;
  return sols.front();
}

bool reproduces(const DlogInstance& inst, std::uint64_t t1, std::uint64_t t2) {
  TropMatrix product = mat_mul(mat_mul(mat_pow(inst.D1, t1), inst.M), mat_pow(inst.D2, t2));
  if (inst.tau != 0) product = scale(TropScalar(inst.tau), product);
  return product == inst.U;
}

std::optional<AttackSolution> two_sided_dlog(const DlogInstance& inst, const DlogOptions& options) {
  const std::size_t n = inst.U.rows();
  for (const TropMatrix* m : {&inst.U, &inst.D1, &inst.M, &inst.D2}) {
    if (m->rows() != n || m->cols() != n) throw ShapeError("two_sided_dlog: sizes disagree");
  }
  const CsrDecomposition d1 = csr_decompose(inst.D1);
  const CsrDecomposition d2 = csr_decompose(inst.D2);
  const CriticalCycle& Z = d1.cycle;
  const CriticalCycle& W = d2.cycle;

  std::vector<RatTropMatrix> sw_tail;  // C_W S_W^tbar2
  RatTropMatrix acc = d2.C;
  for (std::size_t r = 0; r < W.length(); ++r) {
    sw_tail.push_back(acc);
    acc = mat_mul(acc, d2.S);
  }

  RatTropMatrix sz_pow = identity<RatScalar>(n);
  for (std::uint64_t tbar1 = 0; tbar1 < Z.length(); ++tbar1) {
    for (std::uint64_t tbar2 = 0; tbar2 < W.length(); ++tbar2) {
      const auto beta = residue_check(inst.U, sz_pow, d1.R, inst.M, sw_tail[tbar2],
                                      identity<RatScalar>(n), Z, W);
      if (!beta) continue;
      const ShiftEquation eq{*beta, inst.tau, d1.lambda, d2.lambda, tbar1, tbar2,
                             Z.length(),  W.length(), n};
      for (const auto& [x, y] : shift_equation_solutions(eq, options.candidates_per_residue)) {
        const auto t1 = static_cast<std::uint64_t>(x) * Z.length() + tbar1;
        const auto t2 = static_cast<std::uint64_t>(y) * W.length() + tbar2;
        if (reproduces(inst, t1, t2)) return AttackSolution{t1, t2, tbar1, tbar2, inst.tau, true};
      }
    }
    sz_pow = mat_mul(sz_pow, d1.S);
  }
  return std::nullopt;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_force_dlog(const DlogInstance& inst,
                                                                        std::uint64_t max_t) {
  const RatTropMatrix target = to_rational(inst.U);
  RatTropMatrix left = shifted(inst.M, inst.tau);
  const RatTropMatrix d1 = to_rational(inst.D1);
  const RatTropMatrix d2 = to_rational(inst.D2);
  for (std::uint64_t t1 = 0; t1 <= max_t; ++t1) {
    RatTropMatrix current = left;
    for (std::uint64_t t2 = 0; t2 <= max_t; ++t2) {
      if (current == target) return std::make_pair(t1, t2);
      if (t2 < max_t) current = mat_mul(current, d2);
    }
    if (t1 < max_t) left = mat_mul(d1, left);
  }
  return std::nullopt;
}

DlogInstance dlog_instance_from(const Transcript& t) {
  auto plain = [&](const AnyMatrix& m) -> TropMatrix {
    if (t.semiring == Semiring::triad) return embed(std::get<TriadMatrix>(m));
    return std::get<TropMatrix>(m);
  };
  DlogInstance inst;
  inst.D1 = plain(t.X);
  inst.D2 = plain(t.Y);
  inst.U = plain(t.A);
  inst.M = trop_identity(inst.U.rows());
  inst.tau = 0;
  return inst;
}

KeyRecovery recover_key(const Transcript& t, const RecoveryOptions& options) {
  const DlogInstance inst = dlog_instance_from(t);
  const TropMatrix b = t.semiring == Semiring::triad ? embed(std::get<TriadMatrix>(t.B))
                                                     : std::get<TropMatrix>(t.B);

  KeyRecovery out;
  std::optional<AttackSolution> solution;
  try {
    solution = two_sided_dlog(inst, options.dlog);
  } catch (const AcyclicError&) {
    solution.reset();
  }
  if (solution) {
    out.method = RecoveryMethod::csr;
  } else if (auto brute = brute_force_dlog(inst, options.fallback_bound)) {
    solution = AttackSolution{brute->first, brute->second, 0, 0, inst.tau, true};
    out.method = RecoveryMethod::brute_force;
  } else {
    throw AttackFailedError("no exponent pair reproduces A (CSR scan and brute force up to " +
                            std::to_string(options.fallback_bound) + ")");
  }
  out.solution = *solution;
  const TropMatrix key = derive_key(inst.D1, inst.D2, b, solution->t1, solution->t2);
  if (t.semiring == Semiring::triad) {
    out.key = extract(key);
  } else {
    out.key = key;
  }
  return out;
}

}  // namespace tropattack
