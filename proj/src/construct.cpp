#include "mdl/construct.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "mdl/errors.hpp"

namespace mdl {

Interpretation restrict(const Interpretation& interp, std::span<const std::size_t> individuals) {
  if (individuals.empty()) throw ModelError("restriction to an empty set of individuals");
  std::vector<bool> keep(interp.domainSize(), false);
  for (std::size_t d : individuals) {
    if (d >= interp.domainSize()) throw ModelError("restriction set is not a subset of the domain");
    keep[d] = true;
  }
  std::vector<std::size_t> oldOf;
  std::vector<std::size_t> newOf(interp.domainSize(), 0);
  std::vector<std::string> names;
  for (std::size_t d = 0; d < interp.domainSize(); ++d) {
    if (!keep[d]) continue;
    newOf[d] = oldOf.size();
    oldOf.push_back(d);
    names.push_back(interp.domain()[d]);
  }
  Interpretation out(interp.signature(), interp.worlds(), std::move(names));
  for (std::size_t w = 0; w < interp.worldCount(); ++w) {
    for (std::size_t nd = 0; nd < oldOf.size(); ++nd) {
      const std::size_t d = oldOf[nd];
      for (std::size_t a = 0; a < interp.conceptCount(); ++a)
        if (interp.hasConcept(a, w, d)) out.setConcept(a, w, nd);
      for (std::size_t r = 0; r < interp.roleCount(); ++r)
        for (std::size_t e : interp.successors(r, w, d))
          if (keep[e]) out.setRole(r, w, nd, newOf[e]);
    }
  }
  return out;
}

std::size_t GaifmanData::edgeCount() const {
  std::size_t n = 0;
  for (std::size_t d = 0; d < adjacent.size(); ++d)
    for (std::size_t e = d + 1; e < adjacent.size(); ++e) n += adjacent[d][e] ? 1 : 0;
  return n;
}

GaifmanData gaifman(const Interpretation& interp) {
  const std::size_t n = interp.domainSize();
  GaifmanData g;
  g.adjacent.assign(n, std::vector<bool>(n, false));
  for (std::size_t r = 0; r < interp.roleCount(); ++r)
    for (std::size_t w = 0; w < interp.worldCount(); ++w)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t e : interp.successors(r, w, d))
          if (d != e) g.adjacent[d][e] = g.adjacent[e][d] = true;

  g.distance.assign(n, std::vector<std::size_t>(n, GaifmanData::kUnreachable));
  for (std::size_t s = 0; s < n; ++s) {
    auto& dist = g.distance[s];
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t d = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < n; ++e) {
        if (g.adjacent[d][e] && dist[e] == GaifmanData::kUnreachable) {
          dist[e] = dist[d] + 1;
          queue.push_back(e);
        }
      }
    }
  }
  return g;
}

std::vector<std::size_t> neighborhood(const GaifmanData& g, std::span<const std::size_t> tuple,
                                      std::size_t radius) {
  if (tuple.empty()) throw ModelError("neighbourhood of an empty tuple");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.distance.size(); ++e) {
    for (std::size_t d : tuple) {
      if (d >= g.distance.size()) throw ModelError("tuple entry outside the domain");
      if (g.distance[d][e] <= radius) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> neighborhood(const Interpretation& interp,
                                      std::span<const std::size_t> tuple, std::size_t radius) {
  return neighborhood(gaifman(interp), tuple, radius);
}

bool gaifmanAcyclic(const Interpretation& interp) {
  const GaifmanData g = gaifman(interp);
  std::vector<std::size_t> parent(interp.domainSize());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 0; d < g.adjacent.size(); ++d) {
    for (std::size_t e = d + 1; e < g.adjacent.size(); ++e) {
      if (!g.adjacent[d][e]) continue;
      const std::size_t a = find(d), b = find(e);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

namespace {

struct Part {
  const Interpretation* interp;
  std::string suffix;  // empty: keep names
};

void requireSharedWorlds(const Interpretation& a, const Interpretation& b) {
  if (!(a.signature() == b.signature()))
    throw SemanticError("disjoint extension requires identical signatures");
  if (a.worlds() != b.worlds())
    throw SemanticError("disjoint extension requires identical world sets");
}

Interpretation disjointSum(const std::vector<Part>& parts) {
  const Interpretation& first = *parts.front().interp;
  std::vector<std::string> names;
  std::vector<std::size_t> offset;
  for (const auto& p : parts) {
    offset.push_back(names.size());
    for (const auto& x : p.interp->domain()) names.push_back(x + p.suffix);
  }
  Interpretation out(first.signature(), first.worlds(), std::move(names));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Interpretation& src = *parts[k].interp;
    for (std::size_t w = 0; w < src.worldCount(); ++w) {
      for (std::size_t d = 0; d < src.domainSize(); ++d) {
        for (std::size_t a = 0; a < src.conceptCount(); ++a)
          if (src.hasConcept(a, w, d)) out.setConcept(a, w, offset[k] + d);
        for (std::size_t r = 0; r < src.roleCount(); ++r)
          for (std::size_t e : src.successors(r, w, d)) out.setRole(r, w, offset[k] + d, offset[k] + e);
      }
    }
  }
  return out;
}

}  // namespace

Interpretation disjointUnion(const Interpretation& left, const Interpretation& right) {
  requireSharedWorlds(left, right);
  return disjointSum({{&left, "#1"}, {&right, "#2"}});
}

Interpretation addCopies(const Interpretation& i, const Interpretation& j, std::size_t n) {
  requireSharedWorlds(i, j);
  std::vector<Part> parts{{&i, ""}};
  for (std::size_t k = 1; k <= n; ++k) parts.push_back({&i, "#i" + std::to_string(k)});
  for (std::size_t k = 1; k <= n; ++k) parts.push_back({&j, "#j" + std::to_string(k)});
  return disjointSum(parts);
}

namespace {

// Paths from d0 with at most `maxEdges` edges, in breadth-first order; each
// step follows some role at some world.
std::vector<std::vector<std::size_t>> collectPaths(const Interpretation& interp, std::size_t d0,
                                                   std::size_t maxEdges, bool& extensible) {
  const std::size_t n = interp.domainSize();
  // one-step reachability, any role, any world
  std::vector<std::vector<std::size_t>> step(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < interp.roleCount(); ++r)
      for (std::size_t w = 0; w < interp.worldCount(); ++w)
        for (std::size_t e : interp.successors(r, w, d)) seen[e] = true;
    for (std::size_t e = 0; e < n; ++e)
      if (seen[e]) step[d].push_back(e);
  }
  std::vector<std::vector<std::size_t>> paths{{d0}};
  extensible = false;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto cur = paths[i];
    const auto& next = step[cur.back()];
    if (cur.size() - 1 == maxEdges) {
      extensible = extensible || !next.empty();
      continue;
    }
    for (std::size_t e : next) {
      auto p = cur;
      p.push_back(e);
      paths.push_back(std::move(p));
    }
  }
  return paths;
}

std::string pathName(const Interpretation& interp, const std::vector<std::size_t>& path) {
  std::string name;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) name += '/';
    name += interp.domain()[path[k]];
  }
  return name;
}

}  // namespace

Unravelling treeUnravelling(const Interpretation& interp, std::size_t d0, std::size_t depthLimit) {
  if (d0 >= interp.domainSize()) throw SemanticError("unravelling root outside the domain");
  bool extensible = false;
  auto paths = collectPaths(interp, d0, depthLimit, extensible);
  std::vector<std::string> names;
  for (const auto& p : paths) names.push_back(pathName(interp, p));
  Unravelling u{Interpretation(interp.signature(), interp.worlds(), std::move(names)), paths, {}, 0,
                extensible};
  // paths are generated parent-first, so children of node k have larger indices
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    index.emplace(paths[k], k);
    u.projection.push_back(paths[k].back());
  }
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const std::size_t last = paths[k].back();
    for (std::size_t w = 0; w < interp.worldCount(); ++w) {
      for (std::size_t a = 0; a < interp.conceptCount(); ++a)
        if (interp.hasConcept(a, w, last)) u.model.setConcept(a, w, k);
      for (std::size_t r = 0; r < interp.roleCount(); ++r) {
        for (std::size_t e : interp.successors(r, w, last)) {
          auto child = paths[k];
          child.push_back(e);
          if (auto it = index.find(child); it != index.end()) u.model.setRole(r, w, k, it->second);
        }
      }
    }
  }
  return u;
}

Unravelling partialUnravelling(const Interpretation& interp, std::size_t d0, std::size_t radius) {
  if (d0 >= interp.domainSize()) throw SemanticError("unravelling root outside the domain");
  bool extensible = false;
  auto paths = collectPaths(interp, d0, radius, extensible);
  const std::size_t treeSize = paths.size();
  std::vector<std::string> names;
  for (const auto& p : paths) names.push_back(pathName(interp, p));
  for (const auto& x : interp.domain()) names.push_back(x + "#copy");

  Unravelling u{Interpretation(interp.signature(), interp.worlds(), std::move(names)), paths, {}, 0,
                false};
  u.paths.resize(treeSize + interp.domainSize());
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < treeSize; ++k) {
    index.emplace(paths[k], k);
    u.projection.push_back(paths[k].back());
  }
  for (std::size_t d = 0; d < interp.domainSize(); ++d) u.projection.push_back(d);

  for (std::size_t w = 0; w < interp.worldCount(); ++w) {
    for (std::size_t k = 0; k < treeSize; ++k) {
      const std::size_t last = paths[k].back();
      for (std::size_t a = 0; a < interp.conceptCount(); ++a)
        if (interp.hasConcept(a, w, last)) u.model.setConcept(a, w, k);
      for (std::size_t r = 0; r < interp.roleCount(); ++r) {
        for (std::size_t e : interp.successors(r, w, last)) {
          if (paths[k].size() - 1 < radius) {
            auto child = paths[k];
            child.push_back(e);
            u.model.setRole(r, w, k, index.at(child));
          } else {
            // leaf at distance radius+1, identified with e in the copy
            u.model.setRole(r, w, k, treeSize + e);
          }
        }
      }
    }
    for (std::size_t d = 0; d < interp.domainSize(); ++d) {
      for (std::size_t a = 0; a < interp.conceptCount(); ++a)
        if (interp.hasConcept(a, w, d)) u.model.setConcept(a, w, treeSize + d);
      for (std::size_t r = 0; r < interp.roleCount(); ++r)
        for (std::size_t e : interp.successors(r, w, d)) u.model.setRole(r, w, treeSize + d, treeSize + e);
    }
  }
  return u;
}

std::vector<PointPair> projectionRelation(const Interpretation& original, const Unravelling& u) {
  std::vector<PointPair> rel;
  for (std::size_t w = 0; w < original.worldCount(); ++w)
    for (std::size_t x = 0; x < u.model.domainSize(); ++x)
      rel.push_back({Point{w, u.projection[x]}, Point{w, x}});
  return rel;
}

}  // namespace mdl
