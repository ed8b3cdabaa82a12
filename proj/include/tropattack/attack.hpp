#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "tropattack/matrix.hpp"
#include "tropattack/protocol.hpp"
#include "tropattack/spectral.hpp"

namespace tropattack {

// U = tau ⊙ D1^t1 ⊙ M ⊙ D2^t2 with t1, t2 unknown and tau known.
struct DlogInstance {
  TropMatrix U;
  TropMatrix D1;
  TropMatrix M;
  TropMatrix D2;
  std::int64_t tau = 0;
};

struct AttackSolution {
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
  std::uint64_t tbar1 = 0;  // t1 mod l_Z
  std::uint64_t tbar2 = 0;  // t2 mod l_W
  std::int64_t tau = 0;
  bool verified = false;

  friend bool operator==(const AttackSolution&, const AttackSolution&) = default;
};

// beta - tau - lambda1*tbar1 - lambda2*tbar2 = (lambda1*lZ) x + (lambda2*lW) y
// with x >= ((n-1) lZ - tbar1) / lZ and y >= ((n-1) lW - tbar2) / lW.
struct ShiftEquation {
  Rational beta;
  std::int64_t tau = 0;
  Rational lambda1;
  Rational lambda2;
  std::uint64_t tbar1 = 0;
  std::uint64_t tbar2 = 0;
  std::uint64_t lZ = 1;
  std::uint64_t lW = 1;
  std::uint64_t n = 1;
};

// Returns beta when (U - S_Z^tbar1 R_Z M C_W S_W^tbar2)_ij is one finite
// constant over all i in Z, j in W. Any -inf at a checked position fails.
std::optional<Rational> residue_check(const TropMatrix& U, const RatTropMatrix& sz_pow,
                                      const RatTropMatrix& rz, const TropMatrix& M,
                                      const RatTropMatrix& cw, const RatTropMatrix& sw_pow,
                                      const CriticalCycle& Z, const CriticalCycle& W);

// Lexicographically smallest (x, y), both >= 0, meeting the equation and
// both lower bounds; nullopt if none exists.
std::optional<std::pair<std::int64_t, std::int64_t>> solve_shift_equation(const ShiftEquation& e);

// Exact test of tau ⊙ D1^t1 ⊙ M ⊙ D2^t2 == U.
bool reproduces(const DlogInstance& inst, std::uint64_t t1, std::uint64_t t2);

struct DlogOptions {
  // How many consecutive solutions of the shift equation to try per residue
  // pair when the smallest one fails exact verification.
  std::size_t candidates_per_residue = 1;
};

// CSR attack: scans residue pairs (tbar1, tbar2) in [0, l_Z) x [0, l_W)
// lexicographically and returns the first exactly verified solution.
// Throws AcyclicError if D1 or D2 has no cycle.
std::optional<AttackSolution> two_sided_dlog(const DlogInstance& inst,
                                             const DlogOptions& options = {});

// Scans t1 then t2 ascending over [0, max_t]^2 with incremental products.
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_force_dlog(const DlogInstance& inst,
                                                                        std::uint64_t max_t);

enum class RecoveryMethod { csr, brute_force };

std::string to_string(RecoveryMethod m);

struct RecoveryOptions {
  // Largest exponent tried by the brute-force fallback; (31 + 1)^2 is about
  // a thousand matrix products.
  std::uint64_t fallback_bound = 31;
  DlogOptions dlog;
};

struct KeyRecovery {
  AnyMatrix key;
  AttackSolution solution;
  RecoveryMethod method = RecoveryMethod::csr;
};

// The dlog instance an eavesdropper builds from a transcript: U = A, D1 = X,
// M = I, D2 = Y, all embedded into 3n x 3n tropical matrices for triad data.
DlogInstance dlog_instance_from(const Transcript& t);

// Recovers the shared key from public data only. Throws AttackFailedError
// when neither the CSR attack nor the fallback succeeds.
KeyRecovery recover_key(const Transcript& t, const RecoveryOptions& options = {});

}  // namespace tropattack
