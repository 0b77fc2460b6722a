#pragma once

#include <string>

#include "mdl/model_io.hpp"
#include "mdl/parser.hpp"

namespace mdl::test {

inline Interpretation fixture(const std::string& name) {
  return loadModelFile(std::string(MDL_FIXTURE_DIR) + "/" + name);
}

inline const Signature& tinySig() {
  static const Signature sig({"A"}, {"r"});
  return sig;
}

inline Concept concept_(const std::string& text) { return parseConcept(text, tinySig()); }
inline Formula formula(const std::string& text) { return parseFormula(text, tinySig()); }

}  // namespace mdl::test
