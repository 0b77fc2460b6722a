#include "mdl/signature.hpp"

#include <algorithm>
#include <set>

#include "mdl/errors.hpp"

namespace mdl {

ModelError::ModelError(std::vector<std::string> violations)
    : Error([&] {
        std::string msg = "invalid interpretation";
        for (const auto& v : violations) msg += "; " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

Signature::Signature(std::vector<std::string> concepts, std::vector<std::string> roles)
    : concepts_(std::move(concepts)), roles_(std::move(roles)) {
  std::set<std::string> seen;
  for (const auto* names : {&concepts_, &roles_}) {
    for (const auto& n : *names) {
      if (!seen.insert(n).second) throw SignatureError("duplicate symbol '" + n + "' in signature");
    }
  }
}

std::optional<std::size_t> Signature::conceptIndex(std::string_view name) const {
  auto it = std::find(concepts_.begin(), concepts_.end(), name);
  if (it == concepts_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

std::optional<std::size_t> Signature::roleIndex(std::string_view name) const {
  auto it = std::find(roles_.begin(), roles_.end(), name);
  if (it == roles_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roles_.begin());
}

bool isIdentifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

}  // namespace mdl
