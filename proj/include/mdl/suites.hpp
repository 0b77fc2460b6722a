#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdl/signature.hpp"

namespace mdl {

struct SuiteOptions {
  Signature sig{{"A"}, {"r"}};
  std::size_t maxWorlds = 2;
  std::size_t maxDomain = 2;
  std::optional<std::size_t> rank;     // suite-specific default
  std::optional<std::string> conceptText;  // mc3: characterize this concept only
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;  // suite-specific default
  bool force = false;                  // lift the class-size cap
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::size_t checks = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::optional<std::string> counterexample;  // first violation, human-readable
};

// Suites, by name:
//   st         ST_x correctness on random local concepts
//   twosorted  two-sorted translation against check_formula on random formulas
//   abisim     ≈_{2n+1} ⊆ ≈^alt_n ⊆ ≈_n and ≈ = ≈^alt over all pointed pairs
//   invariance concept invariance under ≈ and ≈_n
//   nf         normal-form satisfaction/uniqueness and nf_equal ⇔ ≈_k
//   efinv      formula invariance under ≅_2 on sampled pairs
//   locality   ST_x(C) is 3^rank(C)-local at every instance
//   unravel    partial unravellings and the neighbourhood restriction property
//   mc3        characterize on the class
std::vector<std::string> suiteNames();

/// Throws SemanticError for unknown suites and CapExceeded for classes of
/// more than 20000 models unless forced.
SuiteReport runSuite(const std::string& name, const SuiteOptions& options);

}  // namespace mdl
