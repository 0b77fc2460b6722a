#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mdl/interpretation.hpp"

namespace mdl {

// Model documents are JSON objects with keys, in this order:
//   {"signature":{"concepts":[...],"roles":[...]},"worlds":[...],"domain":[...],
//    "concept_ext":{A:{world:[d,...]}},"role_ext":{r:{world:[[d,e],...]}}}
// A missing world (or concept/role) key inside the extension maps means an
// empty extension. The canonical form written by saveModel() is compact,
// lists every concept/role and world in declaration order, and lists members
// and pairs in domain order.

/// Throws ModelError on malformed documents.
InterpretationData parseModelDocument(std::string_view json);
/// Parses and validates; throws ModelError.
Interpretation loadModel(std::string_view json);
Interpretation loadModelFile(const std::filesystem::path& path);
std::string saveModel(const Interpretation& interp);

}  // namespace mdl
