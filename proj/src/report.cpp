#include "qgl/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <map>
#include <sstream>

namespace qgl {

namespace {

void appendCanonical(const nlohmann::json& j, std::string& out) {
  using value_t = nlohmann::json::value_t;
  switch (j.type()) {
    case value_t::object: {
      // nlohmann keeps object keys sorted (std::map), so iteration order is canonical.
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        appendCanonical(it.value(), out);
      }
      out += '}';
      break;
    }
    case value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        appendCanonical(v, out);
      }
      out += ']';
      break;
    }
    case value_t::number_float: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string canonicalJson(const nlohmann::json& j) {
  std::string out;
  appendCanonical(j, out);
  return out;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Report::digest() const {
  nlohmann::json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["metrics"] = metrics;
  j["perItem"] = perItem;
  j["verdict"] = verdict;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a64(canonicalJson(j)));
  return std::string(buf);
}

nlohmann::json Report::toJson() const {
  nlohmann::json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["metrics"] = metrics;
  j["perItem"] = perItem;
  j["verdict"] = verdict;
  j["determinismDigest"] = digest();
  return j;
}

std::string Report::canonicalString() const { return canonicalJson(toJson()); }

Report reportFromJson(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.value("parameters", nlohmann::json::object());
  r.metrics = j.value("metrics", nlohmann::json::object());
  r.perItem = j.value("perItem", nlohmann::json::array());
  r.verdict = j.at("verdict").get<bool>();
  return r;
}

}  // namespace qgl
