#include "mdl/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mdl/errors.hpp"

namespace mdl {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> stringList(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ModelError("'" + where + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ModelError("'" + where + "' must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

const Json& requireKey(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ModelError("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

void rejectUnknownKeys(const Json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || item.key() == k;
    if (!ok) throw ModelError("unexpected key '" + item.key() + "' in " + where);
  }
}

}  // namespace

InterpretationData parseModelDocument(std::string_view json) {
  Json doc;
  try {
    doc = Json::parse(json.begin(), json.end());
  } catch (const Json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model document must be a JSON object");
  rejectUnknownKeys(doc, {"signature", "worlds", "domain", "concept_ext", "role_ext"}, "document");

  InterpretationData data;
  const Json& sig = requireKey(doc, "signature", "document");
  if (!sig.is_object()) throw ModelError("'signature' must be an object");
  rejectUnknownKeys(sig, {"concepts", "roles"}, "signature");
  data.concepts = stringList(requireKey(sig, "concepts", "signature"), "signature.concepts");
  data.roles = stringList(requireKey(sig, "roles", "signature"), "signature.roles");
  data.worlds = stringList(requireKey(doc, "worlds", "document"), "worlds");
  data.domain = stringList(requireKey(doc, "domain", "document"), "domain");

  if (auto it = doc.find("concept_ext"); it != doc.end()) {
    if (!it->is_object()) throw ModelError("'concept_ext' must be an object");
    for (const auto& [name, perWorld] : it->items()) {
      if (!perWorld.is_object()) throw ModelError("concept_ext." + name + " must be an object");
      auto& slot = data.conceptExt[name];
      for (const auto& [world, members] : perWorld.items())
        slot[world] = stringList(members, "concept_ext." + name + "." + world);
    }
  }
  if (auto it = doc.find("role_ext"); it != doc.end()) {
    if (!it->is_object()) throw ModelError("'role_ext' must be an object");
    for (const auto& [role, perWorld] : it->items()) {
      if (!perWorld.is_object()) throw ModelError("role_ext." + role + " must be an object");
      auto& slot = data.roleExt[role];
      for (const auto& [world, pairs] : perWorld.items()) {
        const std::string where = "role_ext." + role + "." + world;
        if (!pairs.is_array()) throw ModelError("'" + where + "' must be an array of pairs");
        auto& out = slot[world];
        for (const auto& p : pairs) {
          auto names = stringList(p, where);
          if (names.size() != 2) throw ModelError("'" + where + "' must contain pairs");
          out.emplace_back(names[0], names[1]);
        }
      }
    }
  }
  return data;
}

Interpretation loadModel(std::string_view json) {
  return Interpretation::fromData(parseModelDocument(json));
}

Interpretation loadModelFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return loadModel(buf.str());
}

std::string saveModel(const Interpretation& interp) {
  const auto& sig = interp.signature();
  Json doc = Json::object();
  doc["signature"] = {{"concepts", sig.concepts()}, {"roles", sig.roles()}};
  doc["worlds"] = interp.worlds();
  doc["domain"] = interp.domain();
  Json concepts = Json::object();
  for (std::size_t a = 0; a < interp.conceptCount(); ++a) {
    Json perWorld = Json::object();
    for (std::size_t w = 0; w < interp.worldCount(); ++w) {
      Json members = Json::array();
      for (std::size_t d = 0; d < interp.domainSize(); ++d)
        if (interp.hasConcept(a, w, d)) members.push_back(interp.domain()[d]);
      perWorld[interp.worlds()[w]] = std::move(members);
    }
    concepts[sig.concepts()[a]] = std::move(perWorld);
  }
  doc["concept_ext"] = std::move(concepts);
  Json roles = Json::object();
  for (std::size_t r = 0; r < interp.roleCount(); ++r) {
    Json perWorld = Json::object();
    for (std::size_t w = 0; w < interp.worldCount(); ++w) {
      Json pairs = Json::array();
      for (std::size_t d = 0; d < interp.domainSize(); ++d)
        for (std::size_t e : interp.successors(r, w, d))
          pairs.push_back(Json::array({interp.domain()[d], interp.domain()[e]}));
      perWorld[interp.worlds()[w]] = std::move(pairs);
    }
    roles[sig.roles()[r]] = std::move(perWorld);
  }
  doc["role_ext"] = std::move(roles);
  return doc.dump();
}

}  // namespace mdl
