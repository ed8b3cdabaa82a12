#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "tropattack/matrix.hpp"
#include "tropattack/rng.hpp"
#include "tropattack/triad.hpp"

namespace tropattack {

enum class Semiring { tropical, triad };

std::string to_string(Semiring s);
Semiring semiring_from_string(const std::string& s);  // throws ValidationError

struct ProtocolParams {
  std::size_t n = 4;
  std::int64_t entry_min = -100;
  std::int64_t entry_max = 100;
  double neginf_density = 0.0;
  std::uint64_t exp_min = std::uint64_t{1} << 10;
  std::uint64_t exp_max = std::uint64_t{1} << 20;
  Semiring semiring = Semiring::triad;
  std::uint64_t seed = 0;

  void validate() const;  // throws ValidationError
};

using AnyMatrix = std::variant<TropMatrix, TriadMatrix>;

Semiring semiring_of(const AnyMatrix& m);
std::size_t size_of(const AnyMatrix& m);

// Public data of one exchange.
struct Transcript {
  Semiring semiring = Semiring::triad;
  AnyMatrix X;
  AnyMatrix Y;
  AnyMatrix A;  // X^a Y^b
  AnyMatrix B;  // X^c Y^d
};

struct KeyMaterial {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  AnyMatrix K;
};

struct Instance {
  ProtocolParams params;
  Transcript transcript;
  KeyMaterial keys;
};

// X^e1 ⊙ other ⊙ Y^e2.
template <class S>
BasicMatrix<S> derive_key(const BasicMatrix<S>& x, const BasicMatrix<S>& y,
                          const BasicMatrix<S>& other, std::uint64_t e1, std::uint64_t e2) {
  return mat_mul(mat_mul(mat_pow(x, e1), other), mat_pow(y, e2));
}

AnyMatrix derive_key(const AnyMatrix& x, const AnyMatrix& y, const AnyMatrix& other,
                     std::uint64_t e1, std::uint64_t e2);

// Runs both sides with the given secrets. Throws IntegrityError if the two
// derived keys differ.
Instance run_exchange(const AnyMatrix& x, const AnyMatrix& y, std::uint64_t a, std::uint64_t b,
                      std::uint64_t c, std::uint64_t d);

// Samples X, Y (row-major, X first; triad entries coordinate by coordinate)
// and then a, b, c, d from CounterRng(params.seed), and runs the exchange.
Instance generate_instance(const ProtocolParams& params);

// An entry is -inf with probability `neginf_density` (one uniform01 draw,
// skipped entirely when the density is 0), else uniform in [lo, hi].
TropScalar sample_scalar(CounterRng& rng, std::int64_t lo, std::int64_t hi, double neginf_density);
TropMatrix random_trop_matrix(CounterRng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                              double neginf_density);
TriadMatrix random_triad_matrix(CounterRng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                                double neginf_density);

}  // namespace tropattack
