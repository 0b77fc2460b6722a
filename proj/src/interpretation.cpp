#include "mdl/interpretation.hpp"

#include <algorithm>
#include <set>

#include "mdl/errors.hpp"

namespace mdl {

namespace {

void checkNames(const std::vector<std::string>& names, const std::string& what,
                std::vector<std::string>& out) {
  if (names.empty()) out.push_back(what + " empty");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) out.push_back("duplicate " + what + " entry '" + n + "'");
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::vector<std::string> validate(const InterpretationData& data) {
  std::vector<std::string> out;
  checkNames(data.worlds, "worlds", out);
  checkNames(data.domain, "domain", out);
  {
    std::set<std::string> seen;
    for (const auto* names : {&data.concepts, &data.roles})
      for (const auto& n : *names)
        if (!seen.insert(n).second) out.push_back("duplicate signature symbol '" + n + "'");
  }
  for (const auto& [name, perWorld] : data.conceptExt) {
    if (!contains(data.concepts, name))
      out.push_back("concept_ext references undeclared concept '" + name + "'");
    for (const auto& [world, members] : perWorld) {
      if (!contains(data.worlds, world))
        out.push_back("concept_ext of '" + name + "' references undeclared world '" + world + "'");
      for (const auto& d : members)
        if (!contains(data.domain, d))
          out.push_back("concept_ext of '" + name + "' at '" + world +
                        "' references undeclared individual '" + d + "'");
    }
  }
  for (const auto& [role, perWorld] : data.roleExt) {
    if (!contains(data.roles, role))
      out.push_back("role_ext references undeclared role '" + role + "'");
    for (const auto& [world, pairs] : perWorld) {
      if (!contains(data.worlds, world))
        out.push_back("role_ext of '" + role + "' references undeclared world '" + world + "'");
      for (const auto& [d, e] : pairs)
        for (const auto* x : {&d, &e})
          if (!contains(data.domain, *x))
            out.push_back("role_ext of '" + role + "' at '" + world +
                          "' references undeclared individual '" + *x + "'");
    }
  }
  return out;
}

Interpretation::Interpretation(Signature sig, std::vector<std::string> worlds,
                               std::vector<std::string> domain)
    : sig_(std::move(sig)), worlds_(std::move(worlds)), domain_(std::move(domain)) {
  std::vector<std::string> violations;
  checkNames(worlds_, "worlds", violations);
  checkNames(domain_, "domain", violations);
  if (!violations.empty()) throw ModelError(std::move(violations));
  for (std::size_t i = 0; i < worlds_.size(); ++i) worldIndex_.emplace(worlds_[i], i);
  for (std::size_t i = 0; i < domain_.size(); ++i) individualIndex_.emplace(domain_[i], i);
  const std::size_t nw = worlds_.size(), nd = domain_.size();
  conceptBits_.assign(conceptCount() * nw * nd, 0);
  roleBits_.assign(roleCount() * nw * nd * nd, 0);
  succ_.assign(roleCount() * nw * nd, {});
  pred_.assign(roleCount() * nw * nd, {});
}

Interpretation Interpretation::fromData(const InterpretationData& data) {
  auto violations = validate(data);
  if (!violations.empty()) throw ModelError(std::move(violations));
  Interpretation out(Signature(data.concepts, data.roles), data.worlds, data.domain);
  for (const auto& [name, perWorld] : data.conceptExt) {
    const std::size_t a = out.conceptIndex(name);
    for (const auto& [world, members] : perWorld)
      for (const auto& d : members) out.setConcept(a, out.world(world), out.individual(d));
  }
  for (const auto& [role, perWorld] : data.roleExt) {
    const std::size_t r = out.roleIndex(role);
    for (const auto& [world, pairs] : perWorld)
      for (const auto& [d, e] : pairs)
        out.setRole(r, out.world(world), out.individual(d), out.individual(e));
  }
  return out;
}

InterpretationData Interpretation::toData() const {
  InterpretationData data;
  data.concepts = sig_.concepts();
  data.roles = sig_.roles();
  data.worlds = worlds_;
  data.domain = domain_;
  for (std::size_t a = 0; a < conceptCount(); ++a) {
    auto& perWorld = data.conceptExt[sig_.concepts()[a]];
    for (std::size_t w = 0; w < worldCount(); ++w) {
      auto& members = perWorld[worlds_[w]];
      for (std::size_t d = 0; d < domainSize(); ++d)
        if (hasConcept(a, w, d)) members.push_back(domain_[d]);
    }
  }
  for (std::size_t r = 0; r < roleCount(); ++r) {
    auto& perWorld = data.roleExt[sig_.roles()[r]];
    for (std::size_t w = 0; w < worldCount(); ++w) {
      auto& pairs = perWorld[worlds_[w]];
      for (std::size_t d = 0; d < domainSize(); ++d)
        for (std::size_t e : successors(r, w, d)) pairs.emplace_back(domain_[d], domain_[e]);
    }
  }
  return data;
}

std::optional<std::size_t> Interpretation::findWorld(std::string_view name) const {
  auto it = worldIndex_.find(std::string(name));
  if (it == worldIndex_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Interpretation::findIndividual(std::string_view name) const {
  auto it = individualIndex_.find(std::string(name));
  if (it == individualIndex_.end()) return std::nullopt;
  return it->second;
}

std::size_t Interpretation::world(std::string_view name) const {
  if (auto w = findWorld(name)) return *w;
  throw SemanticError("unknown world '" + std::string(name) + "'");
}

std::size_t Interpretation::individual(std::string_view name) const {
  if (auto d = findIndividual(name)) return *d;
  throw SemanticError("unknown individual '" + std::string(name) + "'");
}

std::size_t Interpretation::conceptIndex(std::string_view name) const {
  if (auto a = sig_.conceptIndex(name)) return *a;
  throw SignatureError("undeclared concept name '" + std::string(name) + "'");
}

std::size_t Interpretation::roleIndex(std::string_view name) const {
  if (auto r = sig_.roleIndex(name)) return *r;
  throw SignatureError("undeclared role name '" + std::string(name) + "'");
}

void Interpretation::setConcept(std::size_t name, std::size_t world, std::size_t d,
                                bool member) {
  conceptBits_.at((name * worlds_.size() + world) * domain_.size() + d) = member ? 1 : 0;
}

void Interpretation::setRole(std::size_t role, std::size_t world, std::size_t d, std::size_t e,
                             bool member) {
  const std::size_t nd = domain_.size();
  if (d >= nd || e >= nd) throw ModelError("individual index out of range");
  auto& bit = roleBits_.at(((role * worlds_.size() + world) * nd + d) * nd + e);
  if ((bit != 0) == member) return;
  bit = member ? 1 : 0;
  auto update = [member](std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (member) v.insert(it, x);
    else v.erase(it);
  };
  const std::size_t base = (role * worlds_.size() + world) * nd;
  update(succ_[base + d], e);
  update(pred_[base + e], d);
}

bool Interpretation::operator==(const Interpretation& other) const {
  return sig_ == other.sig_ && worlds_ == other.worlds_ && domain_ == other.domain_ &&
         conceptBits_ == other.conceptBits_ && roleBits_ == other.roleBits_;
}

}  // namespace mdl
