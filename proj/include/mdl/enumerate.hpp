#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mdl/interpretation.hpp"

namespace mdl {

/// Streams every labelled interpretation over `sig` with at most `maxWorlds`
/// worlds and at most `maxDomain` individuals, each exactly once. Worlds are
/// named w1, w2, ... and individuals d1, d2, ...; models come ordered by
/// world count, then domain size, then the binary code of their extensions.
class ModelEnumerator {
 public:
  /// Throws SemanticError for zero bounds and CapExceeded if a single size
  /// class needs more than 62 extension bits.
  ModelEnumerator(Signature sig, std::size_t maxWorlds, std::size_t maxDomain);

  std::optional<Interpretation> next();

  /// Closed-form size of the stream.
  std::uint64_t total() const;

 private:
  std::size_t bits(std::size_t worlds, std::size_t domain) const;

  Signature sig_;
  std::size_t maxWorlds_;
  std::size_t maxDomain_;
  std::size_t worlds_ = 1;
  std::size_t domain_ = 1;
  std::uint64_t code_ = 0;
  bool done_ = false;
};

std::vector<Interpretation> enumerateModels(const Signature& sig, std::size_t maxWorlds,
                                            std::size_t maxDomain);

}  // namespace mdl
