#pragma once

// JSON documents exchanged by the CLI. -inf is always written as null.
//
//   matrix:     {"semiring": "tropical"|"triad", "n": N,
//                "entries": [[e, ...], ...]}   e = int | null, or [e, e, e] for triad
//   transcript: {"format": "tropattack-transcript", "version": 1, "params": {...},
//                "X": matrix, "Y": matrix, "A": matrix, "B": matrix}
//   secrets:    {"format": "tropattack-secrets", "version": 1,
//                "a": .., "b": .., "c": .., "d": .., "K": matrix}
//   attack:     {"format": "tropattack-attack", "version": 1, "semiring": ..,
//                "verified": bool, "method": "csr"|"brute_force"|null,
//                "t1", "t2", "tau", "residues": [tbar1, tbar2] | null,
//                "key": matrix | null, "timing_ms": number (optional)}

#include <optional>
#include <string>

#include "json.hpp"

#include "tropattack/attack.hpp"
#include "tropattack/protocol.hpp"

namespace tropattack::io {

using json = nlohmann::json;

json to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const json& j);  // throws ParseError

json to_json(const ProtocolParams& p);
ProtocolParams params_from_json(const json& j);

json transcript_to_json(const ProtocolParams& params, const Transcript& t);
Transcript transcript_from_json(const json& j);
ProtocolParams transcript_params_from_json(const json& j);

json secrets_to_json(const KeyMaterial& k);
KeyMaterial secrets_from_json(const json& j);

struct AttackDocument {
  Semiring semiring = Semiring::triad;
  bool verified = false;
  std::optional<RecoveryMethod> method;
  std::optional<AttackSolution> solution;
  std::optional<AnyMatrix> key;
  std::optional<double> timing_ms;

  friend bool operator==(const AttackDocument&, const AttackDocument&) = default;
};

json to_json(const AttackDocument& d);
AttackDocument attack_from_json(const json& j);

// Parse failures and unreadable files raise ParseError.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// Canonical text form: two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace tropattack::io
