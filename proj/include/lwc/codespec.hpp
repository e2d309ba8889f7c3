#pragma once

// Serializable code descriptions shared by the CLI and the simulator.
//
// JSON form: {"n": int, "k": int, "construction": {...}} where construction
// is one of
//   {"type": "explicit-G0", "rows": [[0,1],...]}    n x (n-k), LWC only
//   {"type": "explicit-G",  "rows": [[...],...]}    n x k generator
//   {"type": "explicit-H",  "rows": [[...],...]}    n x (n-k) parity check
//   {"type": "cyclic", "genpoly": [1,1,0,1]}        coefficient of x^i at i
//   {"type": "flip"}
//   {"type": "groupflip", "groups": g}
//   {"type": "from-lrc", "lrc": {...}}              nested spec
// Matrices are arrays of 0/1 row arrays; row index = coordinate, 0-based.
//
// Stock names usable in place of a file: flipN, groupflipN-G, hamming7,
// simplex7, repetitionN, spcN, and NAME-lwc for the LWC built from the
// parity check matrix of the named code (e.g. hamming7-lwc).

#include <string>

#include "lwc/additive.hpp"
#include "lwc/codes.hpp"

#include <json.hpp>

namespace lwc {

struct CodeSpec {
    int n = 0;
    int k = 0;
    nlohmann::json construction;

    static CodeSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Resolves a CLI argument: a registered stock name, or a path to a JSON
// spec file.
CodeSpec resolve_spec(const std::string& name_or_path);

// Interpret the spec as an LWC. A "cyclic" construction makes the cyclic
// code C0 and uses its generator matrix as G0.
AdditiveCode make_additive(const CodeSpec& spec, int cap_log2 = kDefaultEnumCapLog2);

// Interpret the spec as a plain linear code (the LRC side).
LinearCode make_linear(const CodeSpec& spec);

}  // namespace lwc
