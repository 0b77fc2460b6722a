#include "mdl/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "mdl/construct.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/errors.hpp"
#include "mdl/games.hpp"
#include "mdl/model_io.hpp"
#include "mdl/normal_form.hpp"
#include "mdl/parser.hpp"
#include "mdl/random.hpp"
#include "mdl/semantics.hpp"
#include "mdl/translate.hpp"

namespace mdl {

namespace {

constexpr std::size_t kClassCap = 20000;

using Json = nlohmann::ordered_json;

std::vector<Interpretation> loadClass(const SuiteOptions& o) {
  ModelEnumerator en(o.sig, o.maxWorlds, o.maxDomain);
  if (en.total() > kClassCap && !o.force)
    throw CapExceeded("class of " + std::to_string(en.total()) + " models exceeds the cap of " +
                      std::to_string(kClassCap) + " (use --force)");
  return enumerateModels(o.sig, o.maxWorlds, o.maxDomain);
}

std::string describe(const std::vector<Interpretation>& models, std::size_t index, Point p) {
  const Interpretation& m = models[index];
  return "model #" + std::to_string(index) + " " + saveModel(m) + " at (" + m.worlds()[p.world] +
         "," + m.domain()[p.individual] + ")";
}

// Records the first failure and counts every check.
struct Tally {
  SuiteReport& report;
  std::size_t failures = 0;

  void check(bool ok, const std::function<std::string()>& what) {
    ++report.checks;
    if (ok) return;
    ++failures;
    if (!report.counterexample) report.counterexample = what();
    report.passed = false;
  }
};

// Calls f(a, b, solver) for every ordered pair of class members.
void forEachPair(const std::vector<Interpretation>& models,
                 const std::function<void(std::size_t, std::size_t, const BisimSolver&)>& f) {
  std::vector<GameView> views;
  views.reserve(models.size());
  for (const auto& m : models) views.emplace_back(m);
  for (std::size_t a = 0; a < models.size(); ++a)
    for (std::size_t b = 0; b < models.size(); ++b) f(a, b, BisimSolver(views[a], views[b]));
}

std::vector<Concept> sampleConcepts(const Signature& sig, std::size_t n, std::size_t maxRank,
                                    std::mt19937_64& rng) {
  std::vector<Concept> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(randomConcept(sig, maxRank, rng));
  return out;
}

// Truth of each concept at each point, packed per point.
std::vector<std::vector<std::uint64_t>> truthBits(const Interpretation& m,
                                                  const std::vector<Concept>& concepts) {
  const std::size_t words = (concepts.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(m.pointCount(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < concepts.size(); ++c) {
    const auto t = conceptTable(m, concepts[c]);
    for (std::size_t p = 0; p < m.pointCount(); ++p)
      if (t[p]) bits[p][c / 64] |= std::uint64_t{1} << (c % 64);
  }
  return bits;
}

SuiteReport suiteSt(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "st";
  Tally tally{r};
  const std::size_t maxRank = o.rank.value_or(3), samples = o.samples.value_or(200);
  std::mt19937_64 rng(o.seed);
  const auto models = loadClass(o);
  const auto concepts = sampleConcepts(o.sig, samples, maxRank, rng);
  for (const auto& c : concepts) {
    const Formula st = standardTranslation(c, "x");
    const FormulaEvaluator ev(st, o.sig);
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
      const auto& m = models[mi];
      const auto table = conceptTable(m, c);
      for (std::size_t p = 0; p < m.pointCount(); ++p) {
        const Point pt = m.point(p);
        const std::size_t value[] = {pt.individual};
        const bool viaSt = ev.freeVariables().empty() ? ev.evaluate(m, pt.world, {})
                                                      : ev.evaluate(m, pt.world, value);
        tally.check(table[p] == viaSt, [&] {
          return "concept " + toString(c) + " disagrees with " + toString(st) + " on " +
                 describe(models, mi, pt);
        });
      }
    }
    tally.check(rank(c) == rank(st), [&] { return "rank changed by translating " + toString(c); });
  }
  r.details["concepts"] = concepts.size();
  r.details["max_rank"] = maxRank;
  r.details["models"] = models.size();
  r.details["mismatches"] = tally.failures;
  return r;
}

SuiteReport suiteTwoSorted(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "twosorted";
  Tally tally{r};
  const std::size_t maxRank = o.rank.value_or(2), samples = o.samples.value_or(100);
  std::mt19937_64 rng(o.seed);
  const auto models = loadClass(o);
  const std::vector<std::string> vars{"x", "y"};
  std::size_t instances = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Formula f = randomFormula(o.sig, maxRank, vars, rng);
    const TwoSortedFormula t = twoSortedTranslation(f, "v");
    const FormulaEvaluator ev(f, o.sig);
    const auto& free = ev.freeVariables();
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
      const auto& m = models[mi];
      std::vector<std::size_t> values(free.size(), 0);
      for (std::size_t w = 0; w < m.worldCount(); ++w) {
        std::fill(values.begin(), values.end(), 0);
        while (true) {
          Valuation eta;
          for (std::size_t i = 0; i < free.size(); ++i) eta[free[i]] = values[i];
          const bool direct = ev.evaluate(m, w, values);
          const bool reference = checkTwoSorted(m, t, eta, {{"v", w}});
          ++instances;
          tally.check(direct == reference, [&] {
            return "formula " + toString(f) + " vs " + toString(t) + " on " +
                   describe(models, mi, {w, values.empty() ? 0 : values[0]});
          });
          std::size_t pos = values.size();
          while (pos > 0 && ++values[pos - 1] == m.domainSize()) values[--pos] = 0;
          if (pos == 0) break;
        }
      }
    }
  }
  r.details["formulas"] = samples;
  r.details["max_rank"] = maxRank;
  r.details["models"] = models.size();
  r.details["instances"] = instances;
  r.details["mismatches"] = tally.failures;
  return r;
}

SuiteReport suiteAbisim(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "abisim";
  Tally tally{r};
  const std::size_t maxN = o.rank.value_or(2);
  const auto models = loadClass(o);
  std::size_t pointPairs = 0;
  forEachPair(models, [&](std::size_t a, std::size_t b, const BisimSolver& s) {
    const auto depth = s.depth(2 * maxN + 1);
    const auto alt = s.altDepth(maxN);
    pointPairs += models[a].pointCount() * models[b].pointCount();
    for (std::size_t n = 0; n <= maxN; ++n) {
      tally.check(depth[2 * n + 1].subsetOf(alt[n]), [&] {
        return "≈_" + std::to_string(2 * n + 1) + " ⊄ ≈^alt_" + std::to_string(n) + " between model #" +
               std::to_string(a) + " and model #" + std::to_string(b);
      });
      tally.check(alt[n].subsetOf(depth[n]), [&] {
        return "≈^alt_" + std::to_string(n) + " ⊄ ≈_" + std::to_string(n) + " between model #" +
               std::to_string(a) + " and model #" + std::to_string(b);
      });
    }
    tally.check(s.greatest() == s.altGreatest(), [&] {
      return "≈ ≠ ≈^alt between model #" + std::to_string(a) + " and model #" + std::to_string(b);
    });
  });
  r.details["models"] = models.size();
  r.details["pointed_pairs"] = pointPairs;
  r.details["max_n"] = maxN;
  r.details["violations"] = tally.failures;
  return r;
}

SuiteReport suiteInvariance(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "invariance";
  Tally tally{r};
  const std::size_t maxN = o.rank.value_or(2), samples = o.samples.value_or(100);
  std::mt19937_64 rng(o.seed);
  const auto models = loadClass(o);
  // group 0: rank <= maxN for ≈; group 1 + n: rank <= n for ≈_n
  std::vector<std::vector<Concept>> groups{sampleConcepts(o.sig, samples, maxN, rng)};
  for (std::size_t n = 0; n <= maxN; ++n) groups.push_back(sampleConcepts(o.sig, samples, n, rng));
  std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> bits(models.size());
  for (std::size_t mi = 0; mi < models.size(); ++mi)
    for (const auto& g : groups) bits[mi].push_back(truthBits(models[mi], g));

  std::vector<std::size_t> related(maxN + 2, 0);
  forEachPair(models, [&](std::size_t a, std::size_t b, const BisimSolver& s) {
    const auto depth = s.depth(maxN);
    const Relation full = s.greatest();
    auto sweep = [&](const Relation& rel, std::size_t group) {
      for (auto [p, q] : rel.members()) {
        ++related[group];
        tally.check(bits[a][group][p] == bits[b][group][q], [&] {
          return "related pair disagrees on a concept of group " + std::to_string(group) + ": " +
                 describe(models, a, models[a].point(p)) + " vs " + describe(models, b, models[b].point(q));
        });
      }
    };
    sweep(full, 0);
    for (std::size_t n = 0; n <= maxN; ++n) sweep(depth[n], n + 1);
  });
  r.details["models"] = models.size();
  r.details["concepts_per_group"] = samples;
  r.details["bisimilar_pairs"] = related[0];
  Json depthPairs = Json::array();
  for (std::size_t n = 0; n <= maxN; ++n) depthPairs.push_back(related[n + 1]);
  r.details["depth_bisimilar_pairs"] = depthPairs;
  r.details["mismatches"] = tally.failures;
  return r;
}

// Conjuncts of a left-nested conjunction.
void flatten(const Concept& c, std::vector<Concept>& out) {
  if (c.kind == ConceptKind::And) {
    flatten(c.child(0), out);
    flatten(c.child(1), out);
  } else if (c.kind != ConceptKind::Top) {
    out.push_back(c);
  }
}

SuiteReport suiteNf(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "nf";
  Tally tally{r};
  const std::size_t maxK = o.rank.value_or(2);
  const auto models = loadClass(o);

  // satisfaction and uniqueness, rendering over the forms realized in the model itself
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const auto& m = models[mi];
    NormalFormTable own(o.sig, maxK);
    const auto ids = own.add(m);
    for (std::size_t k = 0; k <= maxK; ++k) {
      const AtomUniverse u = AtomUniverse::realized(own, k);
      for (std::size_t p = 0; p < m.pointCount(); ++p) {
        const Concept c = nfToConcept(own.form(k, ids[k][p]), u);
        tally.check(conceptTable(m, c)[p], [&] {
          return "rank-" + std::to_string(k) + " normal form fails at " + describe(models, mi, m.point(p));
        });
        std::vector<Concept> literals;
        flatten(c, literals);
        for (std::size_t i = 0; i < literals.size(); ++i) {
          auto flipped = literals;
          flipped[i] = flipped[i].kind == ConceptKind::Not ? flipped[i].child() : Concept::negation(flipped[i]);
          tally.check(!conceptTable(m, Concept::conjunction(flipped))[p], [&] {
            return "flipping literal " + std::to_string(i) + " of a rank-" + std::to_string(k) +
                   " normal form still holds at " + describe(models, mi, m.point(p));
          });
        }
      }
    }
  }

  // nf_equal ⇔ ≈_k across the class
  NormalFormTable table(o.sig, maxK);
  std::vector<std::vector<std::vector<std::size_t>>> ids;
  for (const auto& m : models) ids.push_back(table.add(m));
  forEachPair(models, [&](std::size_t a, std::size_t b, const BisimSolver& s) {
    const auto depth = s.depth(maxK);
    for (std::size_t k = 0; k <= maxK; ++k)
      for (std::size_t p = 0; p < models[a].pointCount(); ++p)
        for (std::size_t q = 0; q < models[b].pointCount(); ++q)
          tally.check((ids[a][k][p] == ids[b][k][q]) == depth[k].contains(p, q), [&] {
            return "nf_equal and ≈_" + std::to_string(k) + " disagree: " +
                   describe(models, a, models[a].point(p)) + " vs " + describe(models, b, models[b].point(q));
          });
  });

  r.details["models"] = models.size();
  r.details["max_rank"] = maxK;
  Json forms = Json::array(), atoms = Json::array();
  for (std::size_t k = 0; k <= maxK; ++k) {
    forms.push_back(table.count(k));
    atoms.push_back(countAtoms(o.sig, k).str());
  }
  r.details["distinct_forms"] = forms;
  r.details["count_atoms"] = atoms;
  r.details["violations"] = tally.failures;
  return r;
}

std::string substitute(std::string text, const Signature& sig) {
  auto replaceAll = [&text](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos; pos += to.size())
      text.replace(pos, from.size(), to);
  };
  replaceAll("$A", sig.concepts().front());
  replaceAll("$r", sig.roles().front());
  return text;
}

const std::vector<std::string>& efFormulas() {
  static const std::vector<std::string> formulas{
      "$A(x)",
      "$r(x,x)",
      "exists y . $r(x,y)",
      "exists y . ($r(x,y) & $A(y))",
      "exists y . ~(x = y)",
      "box $A(x)",
      "dia $r(x,x)",
      "forall y . ($r(x,y) -> $r(y,x))",
      "exists y . ($r(y,x) & ~$A(y))",
      "forall y . (x = y | $A(y))",
      "box ($A(x) | $r(x,x))",
      "dia (exists y . ($r(x,y) & $A(y)))",
      "exists y . box (x = y | $r(y,x))",
      "exists y . dia ($r(x,y) & $A(y))",
      "$A(x) | exists y . exists z . ($r(y,z) & ~(y = z))",
      "forall y . dia ($r(x,y) -> $A(y))",
  };
  return formulas;
}

void requireAr(const Signature& sig) {
  if (sig.concepts().empty() || sig.roles().empty())
    throw SemanticError("this suite needs at least one concept name and one role name");
}

SuiteReport suiteEfinv(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "efinv";
  Tally tally{r};
  requireAr(o.sig);
  const std::size_t rounds = o.rank.value_or(2), samples = o.samples.value_or(500);
  std::mt19937_64 rng(o.seed);
  const auto models = loadClass(o);

  std::vector<Formula> formulas;
  std::vector<FormulaEvaluator> evaluators;
  for (const auto& text : efFormulas()) {
    formulas.push_back(parseFormula(substitute(text, o.sig), o.sig));
    if (rank(formulas.back()) > rounds) {
      formulas.pop_back();
      continue;
    }
    evaluators.emplace_back(formulas.back(), o.sig);
  }

  // Pairs drawn uniformly rarely agree for n rounds; half of the candidates
  // are drawn from the same rank-n normal form (a necessary condition).
  std::vector<std::pair<std::size_t, std::size_t>> points;
  NormalFormTable table(o.sig, rounds);
  std::map<std::size_t, std::vector<std::size_t>> byForm;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const auto ids = table.add(models[mi]);
    for (std::size_t p = 0; p < models[mi].pointCount(); ++p) {
      byForm[ids[rounds][p]].push_back(points.size());
      points.emplace_back(mi, p);
    }
  }
  std::vector<std::size_t> formOf(points.size());
  for (const auto& [form, members] : byForm)
    for (std::size_t idx : members) formOf[idx] = form;

  std::size_t agreeing = 0, attempts = 0;
  const std::size_t maxAttempts = samples * 400;
  EfOptions ef;
  ef.force = o.force;
  while (agreeing < samples && attempts < maxAttempts) {
    ++attempts;
    const std::size_t left = std::uniform_int_distribution<std::size_t>(0, points.size() - 1)(rng);
    std::size_t right;
    if (rng() % 2 == 0) {
      const auto& bucket = byForm[formOf[left]];
      right = bucket[std::uniform_int_distribution<std::size_t>(0, bucket.size() - 1)(rng)];
    } else {
      right = std::uniform_int_distribution<std::size_t>(0, points.size() - 1)(rng);
    }
    const auto& [ma, pa] = points[left];
    const auto& [mb, pb] = points[right];
    const Point x = models[ma].point(pa), y = models[mb].point(pb);
    const std::size_t dx[] = {x.individual}, dy[] = {y.individual};
    if (!efEquivalentN(models[ma], x.world, dx, models[mb], y.world, dy, rounds, ef)) continue;
    ++agreeing;
    for (std::size_t f = 0; f < evaluators.size(); ++f) {
      tally.check(evaluators[f].evaluate(models[ma], x.world, dx) ==
                      evaluators[f].evaluate(models[mb], y.world, dy),
                  [&] {
                    return toString(formulas[f]) + " distinguishes EF-equivalent " +
                           describe(models, ma, x) + " and " + describe(models, mb, y);
                  });
    }
  }
  tally.check(agreeing >= samples, [&] {
    return "only " + std::to_string(agreeing) + " EF-equivalent pairs found in " +
           std::to_string(attempts) + " attempts";
  });
  r.details["rounds"] = rounds;
  r.details["formulas"] = formulas.size();
  r.details["equivalent_pairs"] = agreeing;
  r.details["attempts"] = attempts;
  r.details["mismatches"] = tally.failures;
  return r;
}

std::size_t power3(std::size_t n) {
  std::size_t v = 1;
  while (n--) v *= 3;
  return v;
}

SuiteReport suiteLocality(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "locality";
  Tally tally{r};
  const std::size_t maxRank = o.rank.value_or(1), samples = o.samples.value_or(20);
  std::mt19937_64 rng(o.seed);
  const auto models = loadClass(o);
  Json radii = Json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    // alternate target ranks so that every rank up to maxRank is covered
    const Concept c = randomConcept(o.sig, k % (maxRank + 1), rng);
    const Formula phi = standardTranslation(c, "x");
    const std::size_t radius = power3(rank(c));
    radii.push_back(radius);
    const FormulaEvaluator ev(phi, o.sig);
    if (ev.freeVariables().empty()) {
      // x dropped out (e.g. only constants); locality is then trivial per tuple
      ++r.checks;
      continue;
    }
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
      const auto& m = models[mi];
      for (std::size_t p = 0; p < m.pointCount(); ++p) {
        const Point pt = m.point(p);
        const std::size_t tuple[] = {pt.individual};
        tally.check(isLocalAt(phi, m, pt.world, tuple, radius), [&] {
          return toString(phi) + " is not " + std::to_string(radius) + "-local at " +
                 describe(models, mi, pt);
        });
      }
    }
  }
  r.details["concepts"] = samples;
  r.details["radii"] = radii;
  r.details["models"] = models.size();
  r.details["violations"] = tally.failures;
  return r;
}

SuiteReport suiteUnravel(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "unravel";
  Tally tally{r};
  const std::size_t radius = o.rank.value_or(2), samples = o.samples.value_or(50);
  std::mt19937_64 rng(o.seed);
  const auto models = loadClass(o);

  std::size_t largest = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t mi = std::uniform_int_distribution<std::size_t>(0, models.size() - 1)(rng);
    const auto& m = models[mi];
    for (std::size_t d = 0; d < m.domainSize(); ++d) {
      const Unravelling u = partialUnravelling(m, d, radius);
      largest = std::max(largest, u.model.domainSize());
      const auto rel = projectionRelation(m, u);
      const auto violation = checkBisimulation(m, u.model, rel);
      tally.check(!violation, [&] {
        return "projection relation of the partial unravelling fails clause " +
               std::to_string(violation->clause) + " for " + describe(models, mi, {0, d});
      });
      const std::size_t root[] = {u.root};
      const Interpretation ball = restrict(u.model, neighborhood(u.model, root, radius));
      tally.check(gaifmanAcyclic(ball), [&] {
        return "radius neighbourhood of the partial unravelling is cyclic for " +
               describe(models, mi, {0, d});
      });
    }
  }

  // I,w,d ≈^alt_l I|U^l(d),w,d
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const auto& m = models[mi];
    const GameView whole(m);
    for (std::size_t d = 0; d < m.domainSize(); ++d) {
      for (std::size_t l = 0; l <= radius; ++l) {
        const std::size_t tuple[] = {d};
        const auto u = neighborhood(m, tuple, l);
        const Interpretation local = restrict(m, u);
        const std::size_t dl = static_cast<std::size_t>(std::find(u.begin(), u.end(), d) - u.begin());
        const GameView part(local);
        const Relation alt = BisimSolver(whole, part).altDepth(l).back();
        for (std::size_t w = 0; w < m.worldCount(); ++w)
          tally.check(alt.contains(m.pointIndex({w, d}), local.pointIndex({w, dl})), [&] {
            return "neighbourhood restriction not ≈^alt_" + std::to_string(l) + " at " +
                   describe(models, mi, {w, d});
          });
      }
    }
  }
  r.details["radius"] = radius;
  r.details["sampled_models"] = samples;
  r.details["largest_unravelling"] = largest;
  r.details["models"] = models.size();
  r.details["violations"] = tally.failures;
  return r;
}

SuiteReport suiteMc3(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "mc3";
  Tally tally{r};
  const auto models = loadClass(o);
  std::vector<std::string> texts;
  if (o.conceptText) {
    texts.push_back(*o.conceptText);
  } else {
    requireAr(o.sig);
    for (const char* t : {"$A", "dia $A", "exists $r . $A", "box ~$A", "exists $r . dia $A"})
      texts.push_back(substitute(t, o.sig));
  }
  Json cases = Json::array();
  for (const auto& text : texts) {
    const Concept c0 = parseConcept(text, o.sig);
    if (!isLocalFragment(c0)) throw SemanticError("mc3 needs a concept without modalized roles");
    const std::size_t k = o.rank.value_or(rank(c0));
    const Characterization ch = characterize(standardTranslation(c0, "x"), k, models);
    const std::string synthesized = toString(ch.result);
    tally.check(!ch.counterexample, [&] {
      return "characterization of " + text + " differs at " +
             describe(models, ch.counterexample->model,
                      {ch.counterexample->world, ch.counterexample->valuation.at(0).second});
    });
    // an empty disjunction renders as `false`, of rank 0
    tally.check(ch.disjuncts == 0 || rank(ch.result) == k, [&] {
      return "characterization of " + text + " has rank " + std::to_string(rank(ch.result));
    });
    Json entry;
    entry["concept"] = toString(c0);
    entry["rank"] = k;
    entry["disjuncts"] = ch.disjuncts;
    entry["result_rank"] = rank(ch.result);
    entry["equivalent_on_class"] = !ch.counterexample;
    if (o.conceptText || synthesized.size() <= 4096) entry["synthesized"] = synthesized;
    else entry["synthesized_length"] = synthesized.size();
    cases.push_back(entry);
  }
  if (!o.conceptText) {
    // r(x,x) is not bisimulation invariant: the scan must fail somewhere
    const std::string text = substitute("$r(x,x)", o.sig);
    const Characterization ch = characterize(parseFormula(text, o.sig), o.rank.value_or(2), models);
    tally.check(ch.counterexample.has_value(),
                [&] { return text + " was characterized without a counterexample"; });
    Json entry;
    entry["formula"] = text;
    entry["rank"] = o.rank.value_or(2);
    entry["equivalent_on_class"] = !ch.counterexample;
    if (ch.counterexample)
      entry["counterexample"] = describe(models, ch.counterexample->model,
                                         {ch.counterexample->world, ch.counterexample->valuation.at(0).second});
    cases.push_back(entry);
  }
  r.details["models"] = models.size();
  r.details["cases"] = cases;
  return r;
}

}  // namespace

std::vector<std::string> suiteNames() {
  return {"st", "twosorted", "abisim", "invariance", "nf", "efinv", "locality", "unravel", "mc3"};
}

SuiteReport runSuite(const std::string& name, const SuiteOptions& options) {
  if (name == "st") return suiteSt(options);
  if (name == "twosorted") return suiteTwoSorted(options);
  if (name == "abisim") return suiteAbisim(options);
  if (name == "invariance") return suiteInvariance(options);
  if (name == "nf") return suiteNf(options);
  if (name == "efinv") return suiteEfinv(options);
  if (name == "locality") return suiteLocality(options);
  if (name == "unravel") return suiteUnravel(options);
  if (name == "mc3") return suiteMc3(options);
  throw SemanticError("unknown suite '" + name + "'");
}

}  // namespace mdl
