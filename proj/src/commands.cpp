#include "tropattack/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>

#include <omp.h>

#include "tropattack/io.hpp"

namespace tropattack {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const io::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotCirculantError& e) {
    err << "shape error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const OverflowError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const AttackFailedError& e) {
    err << "attack failed: " << e.what() << "\n";
    return kExitAttackFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

template <class T>
double median(std::vector<T> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return static_cast<double>(v[mid]);
  return (static_cast<double>(v[mid - 1]) + static_cast<double>(v[mid])) / 2.0;
}

template <class T>
T maximum(const std::vector<T>& v) {
  return v.empty() ? T{} : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::string default_secrets_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + ".secrets.json";
  }
  return out + ".secrets.json";
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    options.params.validate();
    if (options.out.empty()) throw ValidationError("--out is required");
    const Instance inst = generate_instance(options.params);
    const std::string secrets =
        options.secrets_out.empty() ? default_secrets_path(options.out) : options.secrets_out;
    io::write_json_file(options.out, io::transcript_to_json(inst.params, inst.transcript));
    io::write_json_file(secrets, io::secrets_to_json(inst.keys));
    out << "transcript: " << options.out << "\nsecrets: " << secrets << "\n";
    return kExitOk;
  });
}

int cmd_attack(const AttackOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.out.empty()) throw ValidationError("--out is required");
    const Transcript transcript = io::transcript_from_json(io::read_json_file(options.transcript));
    io::AttackDocument doc;
    doc.semiring = transcript.semiring;
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
      KeyRecovery rec = recover_key(transcript, options.recovery);
      doc.verified = rec.solution.verified;
      doc.method = rec.method;
      doc.solution = rec.solution;
      doc.key = std::move(rec.key);
    } catch (const AttackFailedError& e) {
      err << "attack failed: " << e.what() << "\n";
      code = kExitAttackFailed;
    }
    if (options.timing) doc.timing_ms = elapsed_ms(start);
    io::write_json_file(options.out, io::to_json(doc));
    if (code == kExitOk) {
      out << "recovered key via " << to_string(*doc.method) << " (t1=" << doc.solution->t1
          << ", t2=" << doc.solution->t2 << ")\n";
    }
    return code;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Transcript t = io::transcript_from_json(io::read_json_file(options.transcript));
    const KeyMaterial keys = io::secrets_from_json(io::read_json_file(options.secrets));
    const io::AttackDocument attack = io::attack_from_json(io::read_json_file(options.attack));
    if (semiring_of(keys.K) != t.semiring || size_of(keys.K) != size_of(t.X)) {
      throw ShapeError("secrets do not match the transcript's semiring or size");
    }
    const AnyMatrix key_a = derive_key(t.X, t.Y, t.B, keys.a, keys.b);
    const AnyMatrix key_b = derive_key(t.X, t.Y, t.A, keys.c, keys.d);
    if (!(key_a == key_b)) throw IntegrityError("K_A != K_B for the given secrets");
    if (!(key_a == keys.K)) throw IntegrityError("stored key differs from the recomputed K");
    if (attack.verified && attack.key && *attack.key == key_a) {
      out << "MATCH\n";
      return kExitOk;
    }
    out << "MISMATCH\n";
    return kExitMismatch;
  });
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.trials == 0) throw ValidationError("--trials must be at least 1");
  if (options.n_list.empty()) throw ValidationError("--n-list must not be empty");
  std::vector<BenchRow> rows;
  for (std::size_t n : options.n_list) {
    ProtocolParams base = options.params;
    base.n = n;
    base.validate();

    struct Trial {
      bool ok = false;
      RecoveryMethod method = RecoveryMethod::csr;
      double ms = 0.0;
      std::uint64_t lz = 0, bound = 0, observed = 0;
    };
    std::vector<Trial> trials(options.trials);
    std::vector<std::string> errors(options.trials);
    const auto count = static_cast<std::ptrdiff_t>(options.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      try {
        ProtocolParams p = base;
        p.seed = base.seed + static_cast<std::uint64_t>(k);
        const Instance inst = generate_instance(p);
        Trial& trial = trials[static_cast<std::size_t>(k)];
        const auto start = std::chrono::steady_clock::now();
        try {
          KeyRecovery rec = recover_key(inst.transcript, options.recovery);
          trial.ok = rec.key == inst.keys.K;
          trial.method = rec.method;
        } catch (const AttackFailedError&) {
          trial.ok = false;
        }
        trial.ms = elapsed_ms(start);

        const DlogInstance dl = dlog_instance_from(inst.transcript);
        try {
          const CsrDecomposition d = csr_decompose(dl.D1);
          trial.lz = d.cycle.length();
          trial.bound = (dl.D1.rows() - 1) * trial.lz;
          trial.observed = observed_csr_threshold(dl.D1, d, trial.bound + 2 * trial.lz);
        } catch (const AcyclicError&) {
        }
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(k)] = e.what();
      }
    }
    for (const auto& e : errors) {
      if (!e.empty()) throw Error("bench trial failed: " + e);
    }

    BenchRow row;
    row.n = n;
    row.trials = options.trials;
    for (std::size_t k = 0; k < trials.size(); ++k) {
      const Trial& t = trials[k];
      if (t.ok) {
        ++row.successes;
        ++(t.method == RecoveryMethod::csr ? row.csr_successes : row.fallback_successes);
      } else {
        row.failed_seeds.push_back(base.seed + k);
      }
      row.attack_ms.push_back(t.ms);
      row.cycle_lengths.push_back(t.lz);
      row.csr_bounds.push_back(t.bound);
      row.observed_thresholds.push_back(t.observed);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_table_json(const BenchOptions& options, const std::vector<BenchRow>& rows) {
  io::json table = io::json::array();
  for (const BenchRow& r : rows) {
    io::json row{{"n", r.n},
                 {"trials", r.trials},
                 {"successes", r.successes},
                 {"success_rate", r.success_rate()},
                 {"csr_successes", r.csr_successes},
                 {"fallback_successes", r.fallback_successes},
                 {"failed_seeds", r.failed_seeds},
                 {"cycle_length_max", maximum(r.cycle_lengths)},
                 {"csr_bound_median", median(r.csr_bounds)},
                 {"csr_bound_max", maximum(r.csr_bounds)},
                 {"observed_threshold_median", median(r.observed_thresholds)},
                 {"observed_threshold_max", maximum(r.observed_thresholds)}};
    if (options.timing) {
      row["attack_ms_median"] = median(r.attack_ms);
      row["attack_ms_max"] = maximum(r.attack_ms);
    }
    table.push_back(std::move(row));
  }
  io::json doc{{"format", "tropattack-bench"},
               {"version", 1},
               {"params", io::to_json(options.params)},
               {"fallback_bound", options.recovery.fallback_bound},
               {"rows", table}};
  return io::dump(doc);
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    options.params.validate();
    const auto rows = run_bench(options);
    const std::string doc = bench_table_json(options, rows);
    if (!options.out.empty()) {
      std::ofstream file(options.out, std::ios::binary);
      if (!file) throw ValidationError("cannot write " + options.out);
      file << doc;
    }
    out << std::left << std::setw(5) << "n" << std::setw(8) << "trials" << std::setw(10)
        << "success" << std::setw(6) << "csr" << std::setw(10) << "fallback" << std::setw(12)
        << "bound_max" << std::setw(14) << "observed_max";
    if (options.timing) out << std::setw(12) << "median_ms" << "max_ms";
    out << "\n";
    for (const BenchRow& r : rows) {
      out << std::left << std::setw(5) << r.n << std::setw(8) << r.trials << std::setw(10)
          << std::fixed << std::setprecision(3) << r.success_rate() << std::setw(6)
          << r.csr_successes << std::setw(10) << r.fallback_successes << std::setw(12)
          << maximum(r.csr_bounds) << std::setw(14) << maximum(r.observed_thresholds);
      if (options.timing) {
        out << std::setw(12) << median(r.attack_ms) << maximum(r.attack_ms);
      }
      out << "\n";
    }
    return kExitOk;
  });
}

}  // namespace tropattack
