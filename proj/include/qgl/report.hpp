#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

namespace qgl {

/// Serializable experiment result. Canonical form: sorted keys, floats rendered
/// with 17 significant digits, no whitespace; the digest is a 64-bit FNV-1a hash
/// of the canonical serialization (excluding the digest field itself).
struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json metrics = nlohmann::json::object();
  nlohmann::json perItem = nlohmann::json::array();
  bool verdict = false;

  nlohmann::json toJson() const;        // includes determinismDigest
  std::string canonicalString() const;  // canonical serialization including the digest
  std::string digest() const;           // hex digest of the digest-free canonical form
};

/// Canonical rendering of any json value (sorted keys, fixed float format).
std::string canonicalJson(const nlohmann::json& j);

std::uint64_t fnv1a64(const std::string& data);

Report reportFromJson(const nlohmann::json& j);

}  // namespace qgl
