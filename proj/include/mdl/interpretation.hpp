#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdl/signature.hpp"

namespace mdl {

/// A world/individual position (w, d), by index.
struct Point {
  std::size_t world = 0;
  std::size_t individual = 0;

  auto operator<=>(const Point&) const = default;
};

/// ((w,d), (v,e)): a configuration of the bisimulation game.
using PointPair = std::pair<Point, Point>;

/// Name-keyed description of an S5-interpretation, as read from or written to
/// a document. Nothing about it is checked; see validate().
struct InterpretationData {
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  std::vector<std::string> worlds;
  std::vector<std::string> domain;
  /// concept -> world -> members
  std::map<std::string, std::map<std::string, std::vector<std::string>>> conceptExt;
  /// role -> world -> pairs
  std::map<std::string, std::map<std::string, std::vector<std::pair<std::string, std::string>>>>
      roleExt;
};

/// Every invariant violation of `data`; empty iff it describes a valid interpretation.
std::vector<std::string> validate(const InterpretationData& data);

/// Finite S5-interpretation: nonempty worlds and domain (constant across
/// worlds) and, per world, an extension of every concept name and role name.
/// Worlds and individuals carry string identifiers but are addressed by index.
class Interpretation {
 public:
  /// Empty extensions everywhere. Throws ModelError if worlds or domain are
  /// empty or contain duplicates.
  Interpretation(Signature sig, std::vector<std::string> worlds, std::vector<std::string> domain);

  /// Throws ModelError listing every violation.
  static Interpretation fromData(const InterpretationData& data);
  InterpretationData toData() const;

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<std::string>& worlds() const noexcept { return worlds_; }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  std::size_t worldCount() const noexcept { return worlds_.size(); }
  std::size_t domainSize() const noexcept { return domain_.size(); }
  std::size_t pointCount() const noexcept { return worlds_.size() * domain_.size(); }
  std::size_t conceptCount() const noexcept { return sig_.concepts().size(); }
  std::size_t roleCount() const noexcept { return sig_.roles().size(); }

  std::size_t pointIndex(Point p) const noexcept { return p.world * domain_.size() + p.individual; }
  Point point(std::size_t index) const noexcept {
    return {index / domain_.size(), index % domain_.size()};
  }

  std::optional<std::size_t> findWorld(std::string_view name) const;
  std::optional<std::size_t> findIndividual(std::string_view name) const;
  /// Throw SemanticError for unknown names.
  std::size_t world(std::string_view name) const;
  std::size_t individual(std::string_view name) const;
  std::size_t conceptIndex(std::string_view name) const;
  std::size_t roleIndex(std::string_view name) const;

  bool hasConcept(std::size_t name, std::size_t world, std::size_t d) const {
    return conceptBits_[(name * worlds_.size() + world) * domain_.size() + d] != 0;
  }
  bool hasRole(std::size_t role, std::size_t world, std::size_t d, std::size_t e) const {
    return roleBits_[((role * worlds_.size() + world) * domain_.size() + d) * domain_.size() + e] !=
           0;
  }
  /// Sorted r-successors of d at world w.
  const std::vector<std::size_t>& successors(std::size_t role, std::size_t world,
                                             std::size_t d) const {
    return succ_[(role * worlds_.size() + world) * domain_.size() + d];
  }
  const std::vector<std::size_t>& predecessors(std::size_t role, std::size_t world,
                                               std::size_t e) const {
    return pred_[(role * worlds_.size() + world) * domain_.size() + e];
  }

  void setConcept(std::size_t name, std::size_t world, std::size_t d, bool member = true);
  void setRole(std::size_t role, std::size_t world, std::size_t d, std::size_t e,
               bool member = true);

  bool operator==(const Interpretation& other) const;

 private:
  Signature sig_;
  std::vector<std::string> worlds_;
  std::vector<std::string> domain_;
  std::unordered_map<std::string, std::size_t> worldIndex_;
  std::unordered_map<std::string, std::size_t> individualIndex_;
  std::vector<std::uint8_t> conceptBits_;
  std::vector<std::uint8_t> roleBits_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
};

/// A pointed model (I, w, d).
struct PointedModel {
  const Interpretation* interp = nullptr;
  Point point;
};

}  // namespace mdl
