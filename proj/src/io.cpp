#include "tropattack/io.hpp"

#include <fstream>
#include <sstream>

namespace tropattack::io {

namespace {

constexpr int kVersion = 1;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

void expect_format(const json& j, const char* format) {
  if (get_as<std::string>(j, "format") != format) {
    throw ParseError(std::string("not a ") + format + " document");
  }
  if (get_as<int>(j, "version") != kVersion) throw ParseError("unsupported document version");
}

json scalar_to_json(const TropScalar& s) {
  return s.is_finite() ? json(s.value()) : json(nullptr);
}

TropScalar scalar_from_json(const json& j) {
  if (j.is_null()) return TropScalar::neg_inf();
  if (!j.is_number_integer()) throw ParseError("matrix entries must be integers or null");
  return j.get<std::int64_t>();
}

}  // namespace

json to_json(const AnyMatrix& m) {
  json entries = json::array();
  std::visit(
      [&](const auto& mat) {
        for (std::size_t i = 0; i < mat.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < mat.cols(); ++j) {
            const auto& e = mat(i, j);
            if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Triad>) {
              row.push_back(json::array({scalar_to_json(e.a), scalar_to_json(e.b),
                                         scalar_to_json(e.c)}));
            } else {
              row.push_back(scalar_to_json(e));
            }
          }
          entries.push_back(std::move(row));
        }
      },
      m);
  return json{{"semiring", to_string(semiring_of(m))}, {"n", size_of(m)}, {"entries", entries}};
}

AnyMatrix matrix_from_json(const json& j) {
  Semiring semiring;
  try {
    semiring = semiring_from_string(get_as<std::string>(j, "semiring"));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  const auto n = get_as<std::size_t>(j, "n");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != n) throw ParseError("entries must have n rows");
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != n) throw ParseError("every row must have n entries");
  }
  if (semiring == Semiring::tropical) {
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar_from_json(entries[i][k]);
    }
    return m;
  }
  TriadMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const json& e = entries[i][k];
      if (!e.is_array() || e.size() != 3) throw ParseError("triad entries must have 3 elements");
      m(i, k) = Triad{scalar_from_json(e[0]), scalar_from_json(e[1]), scalar_from_json(e[2])};
    }
  }
  return m;
}

json to_json(const ProtocolParams& p) {
  return json{{"n", p.n},
              {"entry_min", p.entry_min},
              {"entry_max", p.entry_max},
              {"neginf_density", p.neginf_density},
              {"exp_min", p.exp_min},
              {"exp_max", p.exp_max},
              {"semiring", to_string(p.semiring)},
              {"seed", p.seed}};
}

ProtocolParams params_from_json(const json& j) {
  ProtocolParams p;
  p.n = get_as<std::size_t>(j, "n");
  p.entry_min = get_as<std::int64_t>(j, "entry_min");
  p.entry_max = get_as<std::int64_t>(j, "entry_max");
  p.neginf_density = get_as<double>(j, "neginf_density");
  p.exp_min = get_as<std::uint64_t>(j, "exp_min");
  p.exp_max = get_as<std::uint64_t>(j, "exp_max");
  try {
    p.semiring = semiring_from_string(get_as<std::string>(j, "semiring"));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  p.seed = get_as<std::uint64_t>(j, "seed");
  return p;
}

json transcript_to_json(const ProtocolParams& params, const Transcript& t) {
  return json{{"format", "tropattack-transcript"},
              {"version", kVersion},
              {"params", to_json(params)},
              {"X", to_json(t.X)},
              {"Y", to_json(t.Y)},
              {"A", to_json(t.A)},
              {"B", to_json(t.B)}};
}

Transcript transcript_from_json(const json& j) {
  expect_format(j, "tropattack-transcript");
  Transcript t;
  t.X = matrix_from_json(field(j, "X"));
  t.Y = matrix_from_json(field(j, "Y"));
  t.A = matrix_from_json(field(j, "A"));
  t.B = matrix_from_json(field(j, "B"));
  t.semiring = semiring_of(t.X);
  const std::size_t n = size_of(t.X);
  for (const AnyMatrix* m : {&t.Y, &t.A, &t.B}) {
    if (semiring_of(*m) != t.semiring || size_of(*m) != n) {
      throw ParseError("transcript matrices disagree in semiring or size");
    }
  }
  return t;
}

ProtocolParams transcript_params_from_json(const json& j) {
  expect_format(j, "tropattack-transcript");
  return params_from_json(field(j, "params"));
}

json secrets_to_json(const KeyMaterial& k) {
  return json{{"format", "tropattack-secrets"},
              {"version", kVersion},
              {"a", k.a},
              {"b", k.b},
              {"c", k.c},
              {"d", k.d},
              {"K", to_json(k.K)}};
}

KeyMaterial secrets_from_json(const json& j) {
  expect_format(j, "tropattack-secrets");
  KeyMaterial k;
  k.a = get_as<std::uint64_t>(j, "a");
  k.b = get_as<std::uint64_t>(j, "b");
  k.c = get_as<std::uint64_t>(j, "c");
  k.d = get_as<std::uint64_t>(j, "d");
  k.K = matrix_from_json(field(j, "K"));
  return k;
}

json to_json(const AttackDocument& d) {
  json j{{"format", "tropattack-attack"},
         {"version", kVersion},
         {"semiring", to_string(d.semiring)},
         {"verified", d.verified},
         {"method", d.method ? json(to_string(*d.method)) : json(nullptr)}};
  if (d.solution) {
    j["t1"] = d.solution->t1;
    j["t2"] = d.solution->t2;
    j["tau"] = d.solution->tau;
    j["residues"] = d.method == RecoveryMethod::csr
                        ? json::array({d.solution->tbar1, d.solution->tbar2})
                        : json(nullptr);
  } else {
    j["t1"] = nullptr;
    j["t2"] = nullptr;
    j["tau"] = nullptr;
    j["residues"] = nullptr;
  }
  j["key"] = d.key ? to_json(*d.key) : json(nullptr);
  if (d.timing_ms) j["timing_ms"] = *d.timing_ms;
  return j;
}

AttackDocument attack_from_json(const json& j) {
  expect_format(j, "tropattack-attack");
  AttackDocument d;
  try {
    d.semiring = semiring_from_string(get_as<std::string>(j, "semiring"));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  d.verified = get_as<bool>(j, "verified");
  const json& method = field(j, "method");
  if (!method.is_null()) {
    const auto m = method.get<std::string>();
    if (m == "csr") {
      d.method = RecoveryMethod::csr;
    } else if (m == "brute_force") {
      d.method = RecoveryMethod::brute_force;
    } else {
      throw ParseError("unknown method '" + m + "'");
    }
  }
  if (!field(j, "t1").is_null()) {
    AttackSolution s;
    s.t1 = get_as<std::uint64_t>(j, "t1");
    s.t2 = get_as<std::uint64_t>(j, "t2");
    s.tau = get_as<std::int64_t>(j, "tau");
    s.verified = d.verified;
    const json& residues = field(j, "residues");
    if (!residues.is_null()) {
      if (!residues.is_array() || residues.size() != 2) throw ParseError("residues must be a pair");
      s.tbar1 = residues[0].get<std::uint64_t>();
      s.tbar2 = residues[1].get<std::uint64_t>();
    }
    d.solution = s;
  }
  if (!field(j, "key").is_null()) d.key = matrix_from_json(j["key"]);
  if (j.contains("timing_ms")) d.timing_ms = get_as<double>(j, "timing_ms");
  return d;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << dump(j);
  if (!out) throw ValidationError("failed writing " + path);
}

}  // namespace tropattack::io
