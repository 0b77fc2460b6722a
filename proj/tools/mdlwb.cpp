// mdlwb: command-line front end of the modal description logic workbench.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdl/construct.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/errors.hpp"
#include "mdl/games.hpp"
#include "mdl/model_io.hpp"
#include "mdl/normal_form.hpp"
#include "mdl/parser.hpp"
#include "mdl/semantics.hpp"
#include "mdl/suites.hpp"
#include "mdl/translate.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kSemantic = 3 };

struct Outcome {
  Json report;
  int exit = kTrue;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bundled fixtures are found next to the binary (build tree) or in the
// install prefix when the path does not exist as given.
fs::path resolveInput(const std::string& path) {
  if (fs::exists(path)) return path;
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    for (const fs::path& dir : {exe.parent_path() / "fixtures", exe.parent_path().parent_path() / "share" / "mdlwb"}) {
      if (fs::exists(dir / path)) return dir / path;
    }
  }
  throw UsageError("cannot open '" + path + "'");
}

std::string readFile(const std::string& path) {
  std::ifstream in(resolveInput(path), std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mdl::Interpretation readModel(const std::string& path) { return mdl::loadModel(readFile(path)); }

std::vector<std::string> splitComma(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

// "w,d" or "w,d1,d2,..."
std::pair<std::size_t, std::vector<std::size_t>> parsePointed(const mdl::Interpretation& m,
                                                              const std::string& text) {
  const auto parts = splitComma(text);
  if (parts.size() < 2) throw UsageError("expected world,individual but got '" + text + "'");
  std::vector<std::size_t> tuple;
  for (std::size_t k = 1; k < parts.size(); ++k) tuple.push_back(m.individual(parts[k]));
  return {m.world(parts[0]), tuple};
}

mdl::Point parsePoint(const mdl::Interpretation& m, const std::string& text) {
  const auto [w, tuple] = parsePointed(m, text);
  if (tuple.size() != 1) throw UsageError("expected world,individual but got '" + text + "'");
  return {w, tuple[0]};
}

Json pointJson(const mdl::Interpretation& m, mdl::Point p) {
  return Json::array({m.worlds()[p.world], m.domain()[p.individual]});
}

mdl::Signature signatureOf(const std::string& concepts, const std::string& roles) {
  auto names = [](const std::string& text) {
    std::vector<std::string> out;
    for (auto& s : splitComma(text))
      if (!s.empty()) out.push_back(s);
    return out;
  };
  return mdl::Signature(names(concepts), names(roles));
}

// Rewrites the two-character short flags (-m1, -p2, ...) into long ones.
std::vector<std::string> normalizeArgs(int argc, char** argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a == "-m1" || a == "-m2" || a == "-p1" || a == "-p2") a = "-" + a;
    args.push_back(a);
  }
  return args;
}

void printHuman(const Json& j, const std::string& indent, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      printHuman(value, indent + "  ", out);
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for S5 modal description logic: model checking, bisimulation and "
               "Ehrenfeucht-Fraisse games, normal forms, locality."};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false, timing = false;
  app.add_flag("--human", human, "plain-text report instead of JSON");
  app.add_flag("--timing", timing, "add wall-clock time to the report");

  // shared option storage
  std::string model, model1, model2, world, individual, conceptText, formulaText, point1, point2,
      relationPath, tupleText, fromText, var = "x", universeKind = "model", conceptsSig = "A",
      rolesSig = "r", suite;
  std::size_t depth = 0, rounds = 0, rankK = 0, radius = 0, maxWorlds = 2, maxDomain = 2, samples = 0;
  std::uint64_t seed = 0;
  bool alt = false, render = false, partial = false, st = false, twoSorted = false, countOnly = false,
       force = false, showRelation = false;
  std::vector<std::string> assignments;

  auto addSig = [&](CLI::App* sub) {
    sub->add_option("--concepts", conceptsSig, "comma-separated concept names")->capture_default_str();
    sub->add_option("--roles", rolesSig, "comma-separated role names")->capture_default_str();
  };
  auto addBounds = [&](CLI::App* sub) {
    sub->add_option("--max-worlds", maxWorlds)->capture_default_str();
    sub->add_option("--max-domain", maxDomain)->capture_default_str();
  };

  auto* checkConcept = app.add_subcommand("check-concept", "truth of a concept at a pointed model");
  checkConcept->add_option("-m,--model", model)->required();
  checkConcept->add_option("-w,--world", world)->required();
  checkConcept->add_option("-d,--individual", individual)->required();
  checkConcept->add_option("-c,--concept", conceptText)->required();

  auto* checkFormula = app.add_subcommand("check-formula", "truth of a formula under a valuation");
  checkFormula->add_option("-m,--model", model)->required();
  checkFormula->add_option("-w,--world", world)->required();
  checkFormula->add_option("-f,--formula", formulaText)->required();
  checkFormula->add_option("-a,--assign", assignments, "var=individual, repeatable");

  auto* extension = app.add_subcommand("extension", "individuals satisfying a concept at a world");
  extension->add_option("-m,--model", model)->required();
  extension->add_option("-w,--world", world)->required();
  extension->add_option("-c,--concept", conceptText)->required();

  auto* bisim = app.add_subcommand("bisim", "bisimilarity of two pointed models");
  bisim->add_option("--m1", model1)->required();
  bisim->add_option("--p1", point1, "world,individual")->required();
  bisim->add_option("--m2", model2)->required();
  bisim->add_option("--p2", point2, "world,individual")->required();
  auto* depthOpt = bisim->add_option("--depth", depth, "rounds of the bounded game");
  bisim->add_flag("--alt", alt, "alternating game");
  bisim->add_flag("--relation", showRelation, "include the largest bisimulation");

  auto* verifyBisim = app.add_subcommand("verify-bisim", "check a candidate bisimulation");
  verifyBisim->add_option("--m1", model1)->required();
  verifyBisim->add_option("--m2", model2)->required();
  verifyBisim->add_option("-r,--relation", relationPath)->required();

  auto* ef = app.add_subcommand("ef", "bounded S5 Ehrenfeucht-Fraisse equivalence");
  ef->add_option("--m1", model1)->required();
  ef->add_option("--p1", point1, "world,d1[,d2...]")->required();
  ef->add_option("--m2", model2)->required();
  ef->add_option("--p2", point2, "world,e1[,e2...]")->required();
  ef->add_option("--rounds", rounds)->required();
  ef->add_flag("--force", force, "lift round and domain caps");

  auto* nf = app.add_subcommand("nf", "rank-k normal form of a pointed model");
  nf->add_option("-m,--model", model)->required();
  nf->add_option("-w,--world", world)->required();
  nf->add_option("-d,--individual", individual)->required();
  nf->add_option("--rank", rankK)->required();
  nf->add_flag("--render", render, "render as a concept");
  nf->add_option("--universe", universeKind, "model|full: atoms used when rendering")
      ->check(CLI::IsMember({"model", "full"}))
      ->capture_default_str();

  auto* characterizeCmd = app.add_subcommand("characterize", "synthesize a concept for a formula over a class");
  characterizeCmd->add_option("-f,--formula", formulaText)->required();
  characterizeCmd->add_option("--rank", rankK)->required();
  addBounds(characterizeCmd);
  addSig(characterizeCmd);
  characterizeCmd->add_flag("--force", force, "lift the class-size cap");

  auto* unravel = app.add_subcommand("unravel", "tree or partial unravelling");
  unravel->add_option("-m,--model", model)->required();
  unravel->add_option("-d,--individual", individual)->required();
  auto* unravelDepth = unravel->add_option("--depth", depth, "depth limit of the tree unravelling");
  auto* partialFlag = unravel->add_flag("--partial", partial, "partial unravelling");
  unravel->add_option("--radius", radius, "radius of the partial unravelling");
  unravelDepth->excludes(partialFlag);

  auto* gaifmanCmd = app.add_subcommand("gaifman", "Gaifman graph and distances");
  gaifmanCmd->add_option("-m,--model", model)->required();
  gaifmanCmd->add_option("--from", fromText, "individual: distances from it only");

  auto* locality = app.add_subcommand("locality", "check radius-locality of a formula");
  locality->add_option("-f,--formula", formulaText)->required();
  locality->add_option("--radius", radius)->required();
  locality->add_option("-m,--model", model, "check this model (default: the enumerated class)");
  locality->add_option("-w,--world", world);
  locality->add_option("-t,--tuple", tupleText, "comma-separated individuals");
  addBounds(locality);
  addSig(locality);

  auto* translate = app.add_subcommand("translate", "standard or two-sorted translation");
  auto* stFlag = translate->add_flag("--st", st, "concept to formula");
  auto* tsFlag = translate->add_flag("--two-sorted", twoSorted, "formula to the two-sorted language");
  stFlag->excludes(tsFlag);
  translate->add_option("-c,--concept", conceptText);
  translate->add_option("-f,--formula", formulaText);
  translate->add_option("--var", var, "free variable (--st) or world variable (--two-sorted)");
  translate->add_option("-m,--model", model, "take the signature from this model");
  addSig(translate);

  auto* enumerate = app.add_subcommand("enumerate", "list or count all models within bounds");
  addBounds(enumerate);
  addSig(enumerate);
  enumerate->add_flag("--count", countOnly, "only count");

  auto* verify = app.add_subcommand("verify", "run a verification suite over the enumerated class");
  verify->add_option("suite", suite, "abisim|nf|locality|st|efinv|mc3|invariance|unravel|twosorted")
      ->required();
  addBounds(verify);
  addSig(verify);
  auto* verifyRank = verify->add_option("--rank", rankK);
  auto* verifyConcept = verify->add_option("--concept", conceptText);
  verify->add_option("--seed", seed)->capture_default_str();
  auto* verifySamples = verify->add_option("--samples", samples);
  verify->add_flag("--force", force, "lift caps");

  std::vector<std::string> args = normalizeArgs(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  Json echo = Json::array();
  for (int k = 1; k < argc; ++k) echo.push_back(argv[k]);
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Json& rep = out.report;
    rep["command"] = name;
    rep["arguments"] = echo;

    if (sub == checkConcept) {
      const auto m = readModel(model);
      const auto c = mdl::parseConcept(conceptText, m.signature());
      const bool value = mdl::checkConcept(m, m.world(world), m.individual(individual), c);
      rep["result"] = value;
      out.exit = value ? kTrue : kFalse;
    } else if (sub == checkFormula) {
      const auto m = readModel(model);
      const auto f = mdl::parseFormula(formulaText, m.signature());
      mdl::Valuation eta;
      for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw UsageError("assignment must look like var=individual");
        eta[a.substr(0, eq)] = m.individual(a.substr(eq + 1));
      }
      const bool value = mdl::checkFormula(m, m.world(world), eta, f);
      rep["result"] = value;
      out.exit = value ? kTrue : kFalse;
    } else if (sub == extension) {
      const auto m = readModel(model);
      const auto c = mdl::parseConcept(conceptText, m.signature());
      Json members = Json::array();
      for (auto d : mdl::conceptExtension(m, m.world(world), c)) members.push_back(m.domain()[d]);
      rep["result"] = members;
    } else if (sub == bisim) {
      const auto i = readModel(model1), j = readModel(model2);
      const auto p = parsePoint(i, point1), q = parsePoint(j, point2);
      const bool bounded = depthOpt->count() > 0;
      bool value;
      if (alt) value = bounded ? mdl::bisimilarAltN(i, p, j, q, depth) : mdl::bisimilarAlt(i, p, j, q);
      else value = bounded ? mdl::bisimilarN(i, p, j, q, depth) : mdl::bisimilar(i, p, j, q);
      rep["game"] = std::string(alt ? "alternating" : "standard") + (bounded ? "" : ", unbounded");
      if (bounded) rep["depth"] = depth;
      rep["result"] = value;
      if (showRelation) {
        Json pairs = Json::array();
        for (const auto& [a, b] : mdl::bisimRelation(i, j))
          pairs.push_back(Json::array({pointJson(i, a), pointJson(j, b)}));
        rep["relation"] = pairs;
      }
      out.exit = value ? kTrue : kFalse;
    } else if (sub == verifyBisim) {
      const auto i = readModel(model1), j = readModel(model2);
      const auto rel = mdl::parseRelation(readFile(relationPath), i, j);
      const auto violation = mdl::checkBisimulation(i, j, rel);
      rep["pairs"] = rel.size();
      rep["result"] = !violation;
      if (violation) {
        Json v;
        v["clause"] = violation->clause;
        v["pair"] = Json::array({pointJson(i, violation->pair.first), pointJson(j, violation->pair.second)});
        if (!violation->role.empty()) v["role"] = violation->role;
        if (violation->move) {
          const bool onLeft = violation->clause == 2 || violation->clause == 4;
          v["move"] = pointJson(onLeft ? i : j, *violation->move);
        }
        rep["violation"] = v;
      }
      out.exit = violation ? kFalse : kTrue;
    } else if (sub == ef) {
      const auto i = readModel(model1), j = readModel(model2);
      const auto [w, dbar] = parsePointed(i, point1);
      const auto [v, ebar] = parsePointed(j, point2);
      mdl::EfOptions options;
      options.force = force;
      const bool value = mdl::efEquivalentN(i, w, dbar, j, v, ebar, rounds, options);
      rep["rounds"] = rounds;
      rep["result"] = value;
      out.exit = value ? kTrue : kFalse;
    } else if (sub == nf) {
      const auto m = readModel(model);
      const std::size_t w = m.world(world), d = m.individual(individual);
      mdl::NormalFormTable table(m.signature(), rankK);
      const auto ids = table.add(m);
      const auto form = table.form(rankK, ids[rankK][m.pointIndex({w, d})]);
      rep["result"] = mdl::nfToJson(form, m.signature());
      if (render) {
        const auto universe = universeKind == "full" ? mdl::AtomUniverse::full(m.signature(), rankK)
                                                     : mdl::AtomUniverse::realized(table, rankK);
        rep["universe"] = universeKind;
        rep["concept"] = mdl::toString(mdl::nfToConcept(form, universe));
      }
    } else if (sub == characterizeCmd) {
      const auto sig = signatureOf(conceptsSig, rolesSig);
      const auto phi = mdl::parseFormula(formulaText, sig);
      mdl::ModelEnumerator en(sig, maxWorlds, maxDomain);
      if (en.total() > 20000 && !force)
        throw mdl::CapExceeded("class of " + std::to_string(en.total()) + " models exceeds the cap (use --force)");
      const auto models = mdl::enumerateModels(sig, maxWorlds, maxDomain);
      const auto ch = mdl::characterize(phi, rankK, models);
      rep["rank"] = rankK;
      rep["class"] = {{"max_worlds", maxWorlds}, {"max_domain", maxDomain}, {"models", models.size()}};
      rep["disjuncts"] = ch.disjuncts;
      rep["result_rank"] = mdl::rank(ch.result);
      rep["result"] = mdl::toString(ch.result);
      rep["equivalent_on_class"] = !ch.counterexample;
      if (ch.counterexample) {
        const auto& ce = *ch.counterexample;
        const auto& m = models[ce.model];
        Json c;
        c["model"] = Json::parse(mdl::saveModel(m));
        c["world"] = m.worlds()[ce.world];
        Json val = Json::object();
        for (const auto& [x, d] : ce.valuation) val[x] = m.domain()[d];
        c["valuation"] = val;
        c["formula"] = ce.lhs;
        c["synthesized"] = ce.rhs;
        rep["counterexample"] = c;
      }
      out.exit = ch.counterexample ? kFalse : kTrue;
    } else if (sub == unravel) {
      const auto m = readModel(model);
      const std::size_t d = m.individual(individual);
      if (partial && !unravel->get_option("--radius")->count())
        throw UsageError("--partial needs --radius");
      if (!partial && !unravelDepth->count()) throw UsageError("give --depth or --partial --radius");
      const auto u = partial ? mdl::partialUnravelling(m, d, radius) : mdl::treeUnravelling(m, d, depth);
      rep["kind"] = partial ? "partial" : "tree";
      rep["root"] = u.model.domain()[u.root];
      if (!partial) rep["truncated"] = u.truncated;
      Json projection = Json::object();
      for (std::size_t x = 0; x < u.model.domainSize(); ++x)
        projection[u.model.domain()[x]] = m.domain()[u.projection[x]];
      rep["projection"] = projection;
      rep["result"] = Json::parse(mdl::saveModel(u.model));
    } else if (sub == gaifmanCmd) {
      const auto m = readModel(model);
      const auto g = mdl::gaifman(m);
      Json edges = Json::array();
      for (std::size_t a = 0; a < m.domainSize(); ++a)
        for (std::size_t b = a + 1; b < m.domainSize(); ++b)
          if (g.adjacent[a][b]) edges.push_back(Json::array({m.domain()[a], m.domain()[b]}));
      rep["edges"] = edges;
      auto row = [&](std::size_t a) {
        Json r = Json::object();
        for (std::size_t b = 0; b < m.domainSize(); ++b) {
          const auto dist = g.distance[a][b];
          r[m.domain()[b]] = dist == mdl::GaifmanData::kUnreachable ? Json("inf") : Json(dist);
        }
        return r;
      };
      if (!fromText.empty()) {
        rep["from"] = fromText;
        rep["result"] = row(m.individual(fromText));
      } else {
        Json all = Json::object();
        for (std::size_t a = 0; a < m.domainSize(); ++a) all[m.domain()[a]] = row(a);
        rep["result"] = all;
      }
    } else if (sub == locality) {
      std::vector<mdl::Interpretation> models;
      if (!model.empty()) models.push_back(readModel(model));
      else models = mdl::enumerateModels(signatureOf(conceptsSig, rolesSig), maxWorlds, maxDomain);
      const auto phi = mdl::parseFormula(formulaText, models.front().signature());
      const auto free = mdl::freeVariables(phi);
      rep["radius"] = radius;
      rep["instances"] = 0;
      bool ok = true;
      std::size_t instances = 0;
      for (std::size_t mi = 0; mi < models.size() && ok; ++mi) {
        const auto& m = models[mi];
        std::vector<std::size_t> worlds, fixedTuple;
        if (!world.empty()) worlds.push_back(m.world(world));
        else for (std::size_t w = 0; w < m.worldCount(); ++w) worlds.push_back(w);
        if (!tupleText.empty())
          for (const auto& name : splitComma(tupleText)) fixedTuple.push_back(m.individual(name));
        std::vector<std::size_t> tuple(std::max<std::size_t>(free.size(), 1), 0);
        for (std::size_t w : worlds) {
          if (!ok) break;
          std::fill(tuple.begin(), tuple.end(), 0);
          while (true) {
            const auto& t = fixedTuple.empty() ? tuple : fixedTuple;
            ++instances;
            if (!mdl::isLocalAt(phi, m, w, t, radius)) {
              ok = false;
              Json c;
              c["model"] = Json::parse(mdl::saveModel(m));
              c["world"] = m.worlds()[w];
              Json names = Json::array();
              for (auto d : t) names.push_back(m.domain()[d]);
              c["tuple"] = names;
              rep["counterexample"] = c;
              break;
            }
            if (!fixedTuple.empty()) break;
            std::size_t pos = tuple.size();
            while (pos > 0 && ++tuple[pos - 1] == m.domainSize()) tuple[--pos] = 0;
            if (pos == 0) break;
          }
        }
      }
      rep["instances"] = instances;
      rep["result"] = ok;
      out.exit = ok ? kTrue : kFalse;
    } else if (sub == translate) {
      const auto sig = model.empty() ? signatureOf(conceptsSig, rolesSig) : readModel(model).signature();
      if (st == twoSorted) throw UsageError("give exactly one of --st and --two-sorted");
      if (st) {
        if (conceptText.empty()) throw UsageError("--st needs -c");
        const auto f = mdl::standardTranslation(mdl::parseConcept(conceptText, sig), var);
        rep["result"] = mdl::toString(f);
        rep["rank"] = mdl::rank(f);
      } else {
        if (formulaText.empty()) throw UsageError("--two-sorted needs -f");
        const auto f = mdl::twoSortedTranslation(mdl::parseFormula(formulaText, sig), var == "x" ? "v" : var);
        rep["result"] = mdl::toString(f);
      }
    } else if (sub == enumerate) {
      mdl::ModelEnumerator en(signatureOf(conceptsSig, rolesSig), maxWorlds, maxDomain);
      rep["count"] = en.total();
      if (!countOnly) {
        if (en.total() > 20000 && !force) throw mdl::CapExceeded("too many models to list (use --count)");
        Json models = Json::array();
        while (auto m = en.next()) models.push_back(Json::parse(mdl::saveModel(*m)));
        rep["result"] = models;
      } else {
        rep["result"] = en.total();
      }
    } else if (sub == verify) {
      mdl::SuiteOptions o;
      o.sig = signatureOf(conceptsSig, rolesSig);
      o.maxWorlds = maxWorlds;
      o.maxDomain = maxDomain;
      if (verifyRank->count()) o.rank = rankK;
      if (verifyConcept->count()) o.conceptText = conceptText;
      if (verifySamples->count()) o.samples = samples;
      o.seed = seed;
      o.force = force;
      const auto names = mdl::suiteNames();
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
      const auto r = mdl::runSuite(suite, o);
      rep["suite"] = r.suite;
      rep["seed"] = seed;
      rep["checks"] = r.checks;
      rep["details"] = r.details;
      if (r.counterexample) rep["counterexample"] = *r.counterexample;
      rep["result"] = r.passed ? "pass" : "fail";
      out.exit = r.passed ? kTrue : kFalse;
    }
  } catch (const UsageError& e) {
    std::cerr << "mdlwb: " << e.what() << "\n";
    return kUsage;
  } catch (const mdl::ParseError& e) {
    std::cerr << "mdlwb: " << e.what() << "\n";
    return kUsage;
  } catch (const mdl::ModelError& e) {
    std::cerr << "mdlwb: " << e.what() << "\n";
    return kUsage;
  } catch (const mdl::Error& e) {
    // SemanticError, SignatureError, CapExceeded
    std::cerr << "mdlwb: " << e.what() << "\n";
    return kSemantic;
  }

  if (timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    out.report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  if (human) printHuman(out.report, "", std::cout);
  else std::cout << out.report.dump() << "\n";
  return out.exit;
}
