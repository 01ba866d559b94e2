#include "edf/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace edf::json_io {

namespace {
const Nat kJsonNumberMax = (Nat(1) << 63) - 1;
}

json nat_to_json(const Nat& n) {
  if (n <= kJsonNumberMax) return static_cast<uint64_t>(n);
  return n.str();
}

Nat nat_from_json(const json& j) {
  if (j.is_number_unsigned()) return Nat(j.get<uint64_t>());
  if (j.is_number_integer()) {
    int64_t v = j.get<int64_t>();
    if (v < 0) throw std::invalid_argument("natural cannot be negative");
    return Nat(v);
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("not a decimal natural: '" + s + "'");
    return Nat(s);
  }
  throw std::invalid_argument("expected a natural (number or decimal string)");
}

json extnat_to_json(const ExtNat& v) {
  if (v.is_inf()) return "inf";
  return nat_to_json(v.value());
}

ExtNat extnat_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf")
    return ExtNat::infinity();
  return ExtNat(nat_from_json(j));
}

json finseq_to_json(const FinSeq& s) {
  json arr = json::array();
  for (const Nat& v : s) arr.push_back(nat_to_json(v));
  return arr;
}

FinSeq finseq_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  FinSeq out;
  for (const auto& v : j) out.push_back(nat_from_json(v));
  return out;
}

json bits_to_json(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (uint8_t bit : b) s.push_back(bit ? '1' : '0');
  return s;
}

Bits bits_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a 0/1 string");
  Bits out;
  for (char ch : j.get<std::string>()) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("bit string may only contain 0 and 1");
    out.push_back(ch == '1' ? 1 : 0);
  }
  return out;
}

json boundspec_to_json(const bounds::BoundSpec& spec) {
  json tail;
  switch (spec.tail.kind) {
    case bounds::TailRule::Kind::Constant:
      tail = {{"kind", "constant"}, {"value", nat_to_json(spec.tail.constant_value)}};
      break;
    case bounds::TailRule::Kind::Infinity:
      tail = {{"kind", "infinity"}};
      break;
    case bounds::TailRule::Kind::Affine:
      tail = {{"kind", "affine"},
              {"a", nat_to_json(spec.tail.affine_a)},
              {"b", nat_to_json(spec.tail.affine_b)}};
      break;
    case bounds::TailRule::Kind::Periodic: {
      json pat = json::array();
      for (const auto& v : spec.tail.pattern) pat.push_back(extnat_to_json(v));
      tail = {{"kind", "periodic"}, {"pattern", pat}};
      break;
    }
  }
  json prefix = json::array();
  for (const auto& v : spec.prefix) prefix.push_back(extnat_to_json(v));
  return {{"prefix", prefix}, {"tail", tail}};
}

bounds::BoundSpec boundspec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("fspec must be an object");
  std::vector<ExtNat> prefix;
  if (j.contains("prefix"))
    for (const auto& v : j.at("prefix")) prefix.push_back(extnat_from_json(v));

  bounds::TailRule tail = bounds::TailRule::infinity();
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    std::string kind = t.at("kind").get<std::string>();
    if (kind == "constant") {
      tail = bounds::TailRule::constant(nat_from_json(t.at("value")));
    } else if (kind == "infinity") {
      tail = bounds::TailRule::infinity();
    } else if (kind == "affine") {
      tail = bounds::TailRule::affine(nat_from_json(t.at("a")),
                                      nat_from_json(t.at("b")));
    } else if (kind == "periodic") {
      std::vector<ExtNat> pat;
      for (const auto& v : t.at("pattern")) pat.push_back(extnat_from_json(v));
      tail = bounds::TailRule::periodic(std::move(pat));
    } else {
      throw std::invalid_argument("unknown tail kind: " + kind);
    }
  }
  return bounds::BoundSpec(std::move(prefix), std::move(tail));
}

bounds::BoundSpec load_fspec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fspec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("fspec parse error in " + path + ": " +
                                e.what());
  }
  return boundspec_from_json(j);
}

}  // namespace edf::json_io
