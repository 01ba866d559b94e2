#pragma once

#include <string>

#include <json.hpp>

#include "edf/bounds.hpp"
#include "edf/nat.hpp"

namespace edf::json_io {

using nlohmann::json;

// Naturals are emitted as JSON numbers while they fit in 63 bits and as
// decimal strings beyond that; both forms are accepted on input.
json nat_to_json(const Nat& n);
Nat nat_from_json(const json& j);

// "inf" for the infinite value.
json extnat_to_json(const ExtNat& v);
ExtNat extnat_from_json(const json& j);

json finseq_to_json(const FinSeq& s);
FinSeq finseq_from_json(const json& j);

// Bit sequences as compact 0/1 strings.
json bits_to_json(const Bits& b);
Bits bits_from_json(const json& j);

// F-spec format: {"prefix": [...], "tail": {"kind": "constant"|"infinity"|
// "affine"|"periodic", ...}}.
json boundspec_to_json(const bounds::BoundSpec& spec);
bounds::BoundSpec boundspec_from_json(const json& j);
bounds::BoundSpec load_fspec(const std::string& path);

}  // namespace edf::json_io
