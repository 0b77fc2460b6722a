#include "mdl/normal_form.hpp"

#include <algorithm>
#include <set>

#include "mdl/errors.hpp"
#include "mdl/translate.hpp"

namespace mdl {

namespace {

std::strong_ordering compareLists(const std::vector<NormalForm>& a, const std::vector<NormalForm>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end(),
                                                [](const NormalForm& x, const NormalForm& y) {
                                                  return compare(x, y);
                                                });
}

}  // namespace

std::strong_ordering compare(const NormalForm& a, const NormalForm& b) {
  if (auto c = a.rank <=> b.rank; c != 0) return c;
  const std::size_t s = std::min(a.concepts.size(), b.concepts.size());
  for (std::size_t k = 0; k < s; ++k)
    if (a.concepts[k] != b.concepts[k])
      return a.concepts[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.concepts.size() <=> b.concepts.size(); c != 0) return c;
  const std::size_t t = std::min(a.successors.size(), b.successors.size());
  for (std::size_t r = 0; r < t; ++r)
    if (auto c = compareLists(a.successors[r], b.successors[r]); c != 0) return c;
  if (auto c = a.successors.size() <=> b.successors.size(); c != 0) return c;
  return compareLists(a.diamonds, b.diamonds);
}

NormalFormTable::NormalFormTable(Signature sig, std::size_t maxRank)
    : sig_(std::move(sig)), maxRank_(maxRank), index_(maxRank + 1), forms_(maxRank + 1) {}

// Key layout: concept bits, then per role the child count and the sorted
// child ids, then the diamond count and ids. Rank 0 stops after the bits.
std::size_t NormalFormTable::intern(std::size_t rank, std::vector<std::size_t> key) {
  auto [it, inserted] = index_[rank].emplace(key, forms_[rank].size());
  if (!inserted) return it->second;
  const std::size_t s = sig_.concepts().size();
  NormalForm nf;
  nf.rank = rank;
  nf.concepts.assign(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(s));
  if (rank > 0) {
    std::size_t pos = s;
    auto readList = [&] {
      std::vector<NormalForm> list;
      const std::size_t n = key[pos++];
      for (std::size_t k = 0; k < n; ++k) list.push_back(forms_[rank - 1][key[pos++]]);
      std::sort(list.begin(), list.end(), NormalFormLess{});
      return list;
    };
    for (std::size_t r = 0; r < sig_.roles().size(); ++r) nf.successors.push_back(readList());
    nf.diamonds = readList();
  }
  forms_[rank].push_back(std::move(nf));
  return it->second;
}

std::vector<std::vector<std::size_t>> NormalFormTable::add(const Interpretation& m) {
  if (!(m.signature() == sig_)) throw SemanticError("model signature differs from the table's");
  const std::size_t W = m.worldCount(), D = m.domainSize(), P = m.pointCount();
  std::vector<std::vector<std::size_t>> ids(maxRank_ + 1, std::vector<std::size_t>(P));
  for (std::size_t p = 0; p < P; ++p) {
    std::vector<std::size_t> key;
    for (std::size_t a = 0; a < m.conceptCount(); ++a) key.push_back(m.hasConcept(a, p / D, p % D));
    ids[0][p] = intern(0, std::move(key));
  }
  for (std::size_t k = 1; k <= maxRank_; ++k) {
    const auto& below = ids[k - 1];
    for (std::size_t p = 0; p < P; ++p) {
      const std::size_t w = p / D, d = p % D;
      std::vector<std::size_t> key;
      for (std::size_t a = 0; a < m.conceptCount(); ++a) key.push_back(m.hasConcept(a, w, d));
      auto appendSet = [&key](std::set<std::size_t> children) {
        key.push_back(children.size());
        key.insert(key.end(), children.begin(), children.end());
      };
      for (std::size_t r = 0; r < m.roleCount(); ++r) {
        std::set<std::size_t> children;
        for (std::size_t e : m.successors(r, w, d)) children.insert(below[w * D + e]);
        appendSet(std::move(children));
      }
      std::set<std::size_t> diamonds;
      for (std::size_t v = 0; v < W; ++v) diamonds.insert(below[v * D + d]);
      appendSet(std::move(diamonds));
      ids[k][p] = intern(k, std::move(key));
    }
  }
  return ids;
}

NormalForm computeNf(const Interpretation& interp, std::size_t world, std::size_t d, std::size_t k) {
  if (world >= interp.worldCount() || d >= interp.domainSize())
    throw SemanticError("point outside the interpretation");
  NormalFormTable table(interp.signature(), k);
  const auto ids = table.add(interp);
  return table.form(k, ids[k][interp.pointIndex({world, d})]);
}

bool nfEqual(const NormalForm& a, const NormalForm& b) {
  if (a.rank != b.rank) throw SemanticError("normal forms of different rank");
  return a == b;
}

namespace {

// All subsets of `items`, in binary-counter order.
template <class T>
std::vector<std::vector<T>> subsets(const std::vector<T>& items) {
  std::vector<std::vector<T>> out;
  const std::size_t n = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<T> s;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1U) s.push_back(items[k]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

AtomUniverse AtomUniverse::full(const Signature& sig, std::size_t k, std::size_t maxForms) {
  AtomUniverse u{sig, k, {}};
  const std::size_t s = sig.concepts().size(), t = sig.roles().size();
  for (std::size_t j = 1; j <= k; ++j) {
    // level j-1 forms: every sign pattern over at_{j-1}
    const std::size_t atoms = j == 1 ? s : s + (t + 1) * u.children[j - 2].size();
    if (atoms >= 63 || (std::uint64_t{1} << atoms) > maxForms)
      throw CapExceeded("full atom universe at rank " + std::to_string(j) + " is too large");
    std::vector<NormalForm> level;
    const std::vector<NormalForm> none;
    const auto childSets = j == 1 ? std::vector<std::vector<NormalForm>>{{}} : subsets(u.children[j - 2]);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
      std::vector<bool> concepts(s);
      for (std::size_t a = 0; a < s; ++a) concepts[a] = bits >> a & 1U;
      if (j == 1) {
        level.push_back(NormalForm{0, concepts, {}, {}});
        continue;
      }
      // odometer over (role lists..., diamond list)
      std::vector<std::size_t> choice(t + 1, 0);
      while (true) {
        NormalForm nf{j - 1, concepts, {}, childSets[choice[t]]};
        for (std::size_t r = 0; r < t; ++r) nf.successors.push_back(childSets[choice[r]]);
        level.push_back(std::move(nf));
        std::size_t pos = 0;
        while (pos <= t && ++choice[pos] == childSets.size()) choice[pos++] = 0;
        if (pos > t) break;
      }
    }
    std::sort(level.begin(), level.end(), NormalFormLess{});
    u.children.push_back(std::move(level));
  }
  return u;
}

AtomUniverse AtomUniverse::realized(const NormalFormTable& table, std::size_t k) {
  if (k > 0 && k - 1 > table.maxRank()) throw SemanticError("table does not reach the requested rank");
  AtomUniverse u{table.signature(), k, {}};
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<NormalForm> level;
    for (std::size_t id = 0; id < table.count(j - 1); ++id) level.push_back(table.form(j - 1, id));
    std::sort(level.begin(), level.end(), NormalFormLess{});
    u.children.push_back(std::move(level));
  }
  return u;
}

std::size_t AtomUniverse::atomCount(std::size_t j) const {
  const std::size_t s = sig.concepts().size(), t = sig.roles().size();
  return j == 0 ? s : s + (t + 1) * children.at(j - 1).size();
}

namespace {

class Renderer {
 public:
  explicit Renderer(const AtomUniverse& u) : u_(u), cache_(u.rank) {}

  Concept render(const NormalForm& n) {
    const auto& sig = u_.sig;
    if (n.concepts.size() != sig.concepts().size() ||
        (n.rank > 0 && n.successors.size() != sig.roles().size()))
      throw SemanticError("normal form does not match the universe's signature");
    std::vector<Concept> parts;
    for (std::size_t a = 0; a < sig.concepts().size(); ++a) {
      Concept atom = Concept::atom(sig.concepts()[a]);
      parts.push_back(n.concepts[a] ? atom : Concept::negation(atom));
    }
    if (n.rank > 0) {
      const auto& level = u_.children[n.rank - 1];
      auto emit = [&](const std::vector<NormalForm>& positive, auto make) {
        for (const auto& c : positive)
          if (!std::binary_search(level.begin(), level.end(), c, NormalFormLess{}))
            throw SemanticError("positive atom outside the atom universe");
        for (std::size_t idx = 0; idx < level.size(); ++idx) {
          Concept atom = make(child(n.rank - 1, idx));
          const bool pos = std::binary_search(positive.begin(), positive.end(), level[idx], NormalFormLess{});
          parts.push_back(pos ? atom : Concept::negation(atom));
        }
      };
      for (std::size_t r = 0; r < sig.roles().size(); ++r)
        emit(n.successors[r], [&](Concept c) {
          return Concept::exists(RoleExpr{RoleKind::Local, sig.roles()[r]}, std::move(c));
        });
      emit(n.diamonds, [](Concept c) { return Concept::diamond(std::move(c)); });
    }
    return Concept::conjunction(std::move(parts));
  }

 private:
  const Concept& child(std::size_t level, std::size_t idx) {
    auto& slot = cache_[level];
    if (slot.empty()) slot.resize(u_.children[level].size());
    if (!slot[idx]) slot[idx] = render(u_.children[level][idx]);
    return *slot[idx];
  }

  const AtomUniverse& u_;
  std::vector<std::vector<std::optional<Concept>>> cache_;
};

}  // namespace

Concept nfToConcept(const NormalForm& n, const AtomUniverse& universe) {
  if (n.rank != universe.rank) throw SemanticError("normal form and universe differ in rank");
  return Renderer(universe).render(n);
}

boost::multiprecision::cpp_int countAtoms(const Signature& sig, std::size_t k) {
  using boost::multiprecision::cpp_int;
  const cpp_int s = sig.concepts().size(), t = sig.roles().size();
  cpp_int atoms = s;
  for (std::size_t j = 1; j <= k; ++j) {
    if (atoms > (cpp_int(1) << 24)) throw CapExceeded("atom count exceeds representable size");
    atoms = s + (t + 1) * (cpp_int(1) << static_cast<unsigned>(atoms));
  }
  return atoms;
}

nlohmann::ordered_json nfToJson(const NormalForm& n, const Signature& sig) {
  nlohmann::ordered_json out;
  out["rank"] = n.rank;
  nlohmann::ordered_json positive = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < n.concepts.size(); ++a)
    if (n.concepts[a]) positive.push_back(sig.concepts().at(a));
  out["positive"] = positive;
  nlohmann::ordered_json exists = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < n.successors.size(); ++r) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : n.successors[r]) list.push_back(nfToJson(c, sig));
    exists[sig.roles().at(r)] = list;
  }
  out["exists"] = exists;
  nlohmann::ordered_json diamonds = nlohmann::ordered_json::array();
  for (const auto& c : n.diamonds) diamonds.push_back(nfToJson(c, sig));
  out["diamond"] = diamonds;
  return out;
}

Characterization characterize(const Formula& phi, std::size_t k,
                              std::span<const Interpretation> models) {
  const auto free = freeVariables(phi);
  if (free.size() != 1) throw SemanticError("characterize needs exactly one free variable");
  if (models.empty()) throw SemanticError("empty model class");
  const Signature& sig = models.front().signature();
  const FormulaEvaluator ev(phi, sig);

  NormalFormTable table(sig, k);
  std::set<std::size_t> satisfying;
  Characterization out;
  for (const auto& m : models) {
    const auto ids = table.add(m);
    for (std::size_t p = 0; p < m.pointCount(); ++p) {
      const Point pt = m.point(p);
      const std::size_t value[] = {pt.individual};
      if (ev.evaluate(m, pt.world, value)) {
        satisfying.insert(ids[k][p]);
        ++out.satisfyingPoints;
      }
    }
  }
  out.models = models.size();

  const AtomUniverse universe = AtomUniverse::realized(table, k);
  for (const auto& level : universe.children) out.universeSizes.push_back(level.size());
  std::vector<NormalForm> forms;
  for (std::size_t id : satisfying) forms.push_back(table.form(k, id));
  std::sort(forms.begin(), forms.end(), NormalFormLess{});
  Renderer renderer(universe);
  std::vector<Concept> disjuncts;
  for (const auto& nf : forms) disjuncts.push_back(renderer.render(nf));
  out.disjuncts = disjuncts.size();
  out.result = Concept::disjunction(std::move(disjuncts));
  out.counterexample = equivalentOnClass(phi, standardTranslation(out.result, *free.begin()), models);
  return out;
}

}  // namespace mdl
