#include "possind/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "possind/error.hpp"

namespace possind {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

json to_document(const Distribution& dist) {
  const auto& space = dist.space();
  const auto idx = dist.scope().indices();
  json vars = json::array();
  for (auto i : idx) {
    vars.push_back({{"name", space.variable(i).name},
                    {"frame", space.variable(i).frame}});
  }
  json values = json::array();
  for (std::size_t n = 0; n < dist.size(); ++n) {
    const auto a = space.decode(dist.scope(), n);
    json binding = json::object();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& v = space.variable(idx[k]);
      binding[v.name] = v.frame[a.values[k]];
    }
    values.push_back({{"assignment", binding}, {"possibility", dist[n]}});
  }
  return {{"variables", vars}, {"values", values}};
}

}  // namespace

Distribution distribution_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }

  try {
    std::vector<Variable> vars;
    for (const auto& v : field(doc, "variables")) {
      vars.push_back({field(v, "name").get<std::string>(),
                      field(v, "frame").get<std::vector<std::string>>()});
    }
    Space space(std::move(vars));

    std::vector<std::pair<Assignment, double>> entries;
    std::set<std::size_t> seen;
    for (const auto& entry : field(doc, "values")) {
      std::vector<std::pair<std::string, std::string>> bindings;
      for (const auto& [name, value] : field(entry, "assignment").items()) {
        bindings.emplace_back(name, value.get<std::string>());
      }
      auto a = space.assignment(bindings);
      if (a.scope != space.all()) {
        throw Error(ErrorCode::ScopeMismatch,
                    "assignment '" + space.format(a) +
                        "' does not bind every variable");
      }
      if (!seen.insert(space.offset(a)).second) {
        throw Error(ErrorCode::Parse,
                    "assignment '" + space.format(a) + "' listed twice");
      }
      const auto& p = field(entry, "possibility");
      if (!p.is_number()) {
        throw Error(ErrorCode::Parse, "possibility must be a number");
      }
      entries.emplace_back(std::move(a), p.get<double>());
    }
    return make_distribution(space, space.all(), entries);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse,
                std::string("malformed distribution document: ") + e.what());
  }
}

Distribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return distribution_from_json(buf.str());
}

std::string distribution_to_json(const Distribution& dist, int indent) {
  return to_document(dist).dump(indent);
}

std::string reproducer_to_json(const Distribution& dist, const Conjunction& c,
                               std::uint64_t seed, std::string_view property,
                               std::string_view detail) {
  auto doc = to_document(dist);
  doc["conjunction"] = c.to_string();
  doc["seed"] = seed;
  doc["property"] = std::string(property);
  doc["detail"] = std::string(detail);
  return doc.dump(2);
}

}  // namespace possind
