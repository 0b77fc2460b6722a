#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdl {

/// Finite vocabulary: concept names (unary) and role names (binary).
/// The declaration order is the fixed total order used wherever a canonical
/// ordering of symbols is needed.
class Signature {
 public:
  Signature() = default;
  /// Throws SignatureError on duplicates or on a name declared as both kinds.
  Signature(std::vector<std::string> concepts, std::vector<std::string> roles);

  const std::vector<std::string>& concepts() const noexcept { return concepts_; }
  const std::vector<std::string>& roles() const noexcept { return roles_; }

  std::optional<std::size_t> conceptIndex(std::string_view name) const;
  std::optional<std::size_t> roleIndex(std::string_view name) const;

  bool isConcept(std::string_view name) const { return conceptIndex(name).has_value(); }
  bool isRole(std::string_view name) const { return roleIndex(name).has_value(); }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
};

bool isIdentifier(std::string_view text);

}  // namespace mdl
