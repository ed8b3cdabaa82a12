#pragma once

// Implementations behind the `tropattack` CLI subcommands. Each returns a
// process exit code (see ExitCode) and reports problems on `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropattack/attack.hpp"
#include "tropattack/protocol.hpp"

namespace tropattack {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitParse = 3,
  kExitAttackFailed = 4,
  kExitMismatch = 5,
  kExitIntegrity = 6,
};

struct GenOptions {
  ProtocolParams params;
  std::string out;
  std::string secrets_out;  // empty: derived from `out`
};

// "t.json" -> "t.secrets.json"; other names get ".secrets.json" appended.
std::string default_secrets_path(const std::string& out);

struct AttackOptions {
  std::string transcript;
  std::string out;
  RecoveryOptions recovery;
  bool timing = true;
};

struct VerifyOptions {
  std::string transcript;
  std::string secrets;
  std::string attack;
};

struct BenchOptions {
  std::vector<std::size_t> n_list{3, 4, 5};
  std::size_t trials = 50;
  ProtocolParams params;  // n and seed are overridden per trial
  RecoveryOptions recovery;
  std::string out;
  bool timing = true;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t csr_successes = 0;
  std::size_t fallback_successes = 0;
  std::vector<std::uint64_t> failed_seeds;
  std::vector<double> attack_ms;
  // CSR statistics for the embedded X: cycle length l_Z, the bound
  // (N - 1) l_Z used by the attack, and the observed threshold (smallest T
  // with an exact expansion on [T, bound + 2 l_Z]).
  std::vector<std::uint64_t> cycle_lengths;
  std::vector<std::uint64_t> csr_bounds;
  std::vector<std::uint64_t> observed_thresholds;

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

// Runs trials in parallel; trial k of every row uses seed params.seed + k.
std::vector<BenchRow> run_bench(const BenchOptions& options);
std::string bench_table_json(const BenchOptions& options, const std::vector<BenchRow>& rows);

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_attack(const AttackOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace tropattack
