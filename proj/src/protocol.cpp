#include "tropattack/protocol.hpp"

namespace tropattack {

std::string to_string(Semiring s) { return s == Semiring::triad ? "triad" : "tropical"; }

Semiring semiring_from_string(const std::string& s) {
  if (s == "triad") return Semiring::triad;
  if (s == "tropical") return Semiring::tropical;
  throw ValidationError("unknown semiring '" + s + "' (expected tropical or triad)");
}

void ProtocolParams::validate() const {
  if (n == 0) throw ValidationError("n must be at least 1");
  if (entry_min > entry_max) throw ValidationError("entry-min must not exceed entry-max");
  if (!(neginf_density >= 0.0 && neginf_density < 1.0)) {
    throw ValidationError("neginf-density must lie in [0, 1)");
  }
  if (exp_min < 1) throw ValidationError("exp-min must be at least 1");
  if (exp_min > exp_max) throw ValidationError("exp-min must not exceed exp-max");
}

Semiring semiring_of(const AnyMatrix& m) {
  return std::holds_alternative<TriadMatrix>(m) ? Semiring::triad : Semiring::tropical;
}

std::size_t size_of(const AnyMatrix& m) {
  return std::visit([](const auto& mat) { return mat.rows(); }, m);
}

AnyMatrix derive_key(const AnyMatrix& x, const AnyMatrix& y, const AnyMatrix& other,
                     std::uint64_t e1, std::uint64_t e2) {
  return std::visit(
      [&](const auto& xm) -> AnyMatrix {
        using M = std::decay_t<decltype(xm)>;
        if (!std::holds_alternative<M>(y) || !std::holds_alternative<M>(other)) {
          throw ShapeError("derive_key: mixed semirings");
        }
        return derive_key(xm, std::get<M>(y), std::get<M>(other), e1, e2);
      },
      x);
}

Instance run_exchange(const AnyMatrix& x, const AnyMatrix& y, std::uint64_t a, std::uint64_t b,
                      std::uint64_t c, std::uint64_t d) {
  Instance inst;
  inst.params.n = size_of(x);
  inst.params.semiring = semiring_of(x);
  Transcript& t = inst.transcript;
  t.semiring = semiring_of(x);
  t.X = x;
  t.Y = y;
  t.A = std::visit(
      [&](const auto& xm) -> AnyMatrix {
        using M = std::decay_t<decltype(xm)>;
        const M& ym = std::get<M>(y);
        return mat_mul(mat_pow(xm, a), mat_pow(ym, b));
      },
      x);
  t.B = std::visit(
      [&](const auto& xm) -> AnyMatrix {
        using M = std::decay_t<decltype(xm)>;
        const M& ym = std::get<M>(y);
        return mat_mul(mat_pow(xm, c), mat_pow(ym, d));
      },
      x);
  AnyMatrix key_a = derive_key(x, y, t.B, a, b);
  AnyMatrix key_b = derive_key(x, y, t.A, c, d);
  if (!(key_a == key_b)) throw IntegrityError("key agreement failed: K_A != K_B");
  inst.keys = KeyMaterial{a, b, c, d, std::move(key_a)};
  return inst;
}

TropScalar sample_scalar(CounterRng& rng, std::int64_t lo, std::int64_t hi,
                         double neginf_density) {
  if (neginf_density > 0.0 && rng.uniform01() < neginf_density) return TropScalar::neg_inf();
  return rng.uniform_int(lo, hi);
}

TropMatrix random_trop_matrix(CounterRng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                              double neginf_density) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sample_scalar(rng, lo, hi, neginf_density);
  }
  return m;
}

TriadMatrix random_triad_matrix(CounterRng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                                double neginf_density) {
  TriadMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Triad& u = m(i, j);
      u.a = sample_scalar(rng, lo, hi, neginf_density);
      u.b = sample_scalar(rng, lo, hi, neginf_density);
      u.c = sample_scalar(rng, lo, hi, neginf_density);
    }
  }
  return m;
}

Instance generate_instance(const ProtocolParams& params) {
  params.validate();
  CounterRng rng(params.seed);
  AnyMatrix x, y;
  if (params.semiring == Semiring::triad) {
    x = random_triad_matrix(rng, params.n, params.entry_min, params.entry_max,
                            params.neginf_density);
    y = random_triad_matrix(rng, params.n, params.entry_min, params.entry_max,
                            params.neginf_density);
  } else {
    x = random_trop_matrix(rng, params.n, params.entry_min, params.entry_max,
                           params.neginf_density);
    y = random_trop_matrix(rng, params.n, params.entry_min, params.entry_max,
                           params.neginf_density);
  }
  auto exponent = [&] {
    return static_cast<std::uint64_t>(rng.uniform_int(static_cast<std::int64_t>(params.exp_min),
                                                      static_cast<std::int64_t>(params.exp_max)));
  };
  const std::uint64_t a = exponent();
  const std::uint64_t b = exponent();
  const std::uint64_t c = exponent();
  const std::uint64_t d = exponent();
  Instance inst = run_exchange(x, y, a, b, c, d);
  inst.params = params;
  return inst;
}

}  // namespace tropattack
