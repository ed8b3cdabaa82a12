// tropattack: generate triad/tropical key-exchange transcripts, attack them
// from public data only, verify recovered keys and benchmark the attack.
//
// Exit codes: 0 ok, 1 internal error, 2 invalid flags or parameters,
// 3 unreadable or malformed input, 4 attack failed, 5 key mismatch,
// 6 secrets inconsistent with the transcript.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropattack/commands.hpp"

namespace {

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size() || v == 0) throw CLI::ValidationError("--n-list", "bad size " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw CLI::ValidationError("--n-list", "empty list");
  return out;
}

void add_params(CLI::App* cmd, tropattack::ProtocolParams& p, std::string& semiring) {
  cmd->add_option("--entry-min", p.entry_min, "smallest matrix entry")->capture_default_str();
  cmd->add_option("--entry-max", p.entry_max, "largest matrix entry")->capture_default_str();
  cmd->add_option("--neginf-density", p.neginf_density, "probability of a -inf entry")
      ->capture_default_str();
  cmd->add_option("--exp-min", p.exp_min, "smallest secret exponent (>= 1)")
      ->capture_default_str();
  cmd->add_option("--exp-max", p.exp_max, "largest secret exponent")->capture_default_str();
  cmd->add_option("--semiring", semiring, "tropical or triad")
      ->check(CLI::IsMember({"tropical", "triad"}))
      ->capture_default_str();
  cmd->add_option("--seed", p.seed, "generator seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tropattack;
  CLI::App app{"Tropical triad key exchange: simulation and CSR key-recovery attack"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string gen_semiring = "triad";
  auto* gen_cmd = app.add_subcommand("gen", "generate a transcript and a separate secrets file");
  gen_cmd->add_option("--n", gen.params.n, "matrix size")->capture_default_str();
  add_params(gen_cmd, gen.params, gen_semiring);
  gen_cmd->add_option("--out", gen.out, "transcript file")->required();
  gen_cmd->add_option("--secrets-out", gen.secrets_out, "secrets file (default: <out>.secrets.json)");

  AttackOptions attack;
  bool attack_deterministic = false;
  auto* attack_cmd = app.add_subcommand("attack", "recover the shared key from a transcript");
  attack_cmd->add_option("--transcript", attack.transcript, "transcript file")->required();
  attack_cmd->add_option("--out", attack.out, "attack document")->required();
  attack_cmd->add_option("--fallback-bound", attack.recovery.fallback_bound,
                         "largest exponent tried by the brute-force fallback")
      ->capture_default_str();
  attack_cmd->add_option("--candidates", attack.recovery.dlog.candidates_per_residue,
                         "shift-equation solutions tried per residue pair")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  attack_cmd->add_flag("--deterministic", attack_deterministic, "omit wall-clock timing");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check an attack document against the secrets");
  verify_cmd->add_option("--transcript", verify.transcript)->required();
  verify_cmd->add_option("--secrets", verify.secrets)->required();
  verify_cmd->add_option("--attack", verify.attack)->required();

  BenchOptions bench;
  std::string bench_semiring = "triad";
  std::string n_list = "3,4,5";
  bool bench_deterministic = false;
  auto* bench_cmd = app.add_subcommand("bench", "run seeded gen -> attack cycles");
  bench_cmd->add_option("--n-list", n_list, "comma-separated matrix sizes")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "trials per size")->capture_default_str();
  add_params(bench_cmd, bench.params, bench_semiring);
  bench_cmd->add_option("--fallback-bound", bench.recovery.fallback_bound)->capture_default_str();
  bench_cmd->add_option("--candidates", bench.recovery.dlog.candidates_per_residue)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "JSON summary table");
  bench_cmd->add_flag("--deterministic", bench_deterministic, "omit wall-clock timing columns");

  try {
    app.parse(argc, argv);
    if (bench_cmd->parsed()) bench.n_list = parse_n_list(n_list);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "invalid flags: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (gen_cmd->parsed()) {
      gen.params.semiring = semiring_from_string(gen_semiring);
      return cmd_gen(gen, std::cout, std::cerr);
    }
    if (attack_cmd->parsed()) {
      attack.timing = !attack_deterministic;
      return cmd_attack(attack, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify, std::cout, std::cerr);
    if (bench_cmd->parsed()) {
      bench.params.semiring = semiring_from_string(bench_semiring);
      bench.timing = !bench_deterministic;
      if (bench.trials == 0) {
        std::cerr << "invalid input: --trials must be at least 1\n";
        return kExitValidation;
      }
      return cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
