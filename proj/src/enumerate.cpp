#include "mdl/enumerate.hpp"

#include "mdl/errors.hpp"

namespace mdl {

ModelEnumerator::ModelEnumerator(Signature sig, std::size_t maxWorlds, std::size_t maxDomain)
    : sig_(std::move(sig)), maxWorlds_(maxWorlds), maxDomain_(maxDomain) {
  if (maxWorlds == 0 || maxDomain == 0)
    throw SemanticError("enumeration bounds must be at least 1");
  if (bits(maxWorlds, maxDomain) > 62)
    throw CapExceeded("enumeration needs more than 62 extension bits per model");
}

std::size_t ModelEnumerator::bits(std::size_t worlds, std::size_t domain) const {
  return worlds * (sig_.concepts().size() * domain + sig_.roles().size() * domain * domain);
}

std::uint64_t ModelEnumerator::total() const {
  std::uint64_t n = 0;
  for (std::size_t w = 1; w <= maxWorlds_; ++w)
    for (std::size_t d = 1; d <= maxDomain_; ++d) n += std::uint64_t{1} << bits(w, d);
  return n;
}

std::optional<Interpretation> ModelEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<std::string> worlds, domain;
  for (std::size_t w = 1; w <= worlds_; ++w) worlds.push_back("w" + std::to_string(w));
  for (std::size_t d = 1; d <= domain_; ++d) domain.push_back("d" + std::to_string(d));
  Interpretation out(sig_, std::move(worlds), std::move(domain));

  std::uint64_t code = code_;
  auto take = [&code] {
    const bool bit = code & 1;
    code >>= 1;
    return bit;
  };
  for (std::size_t a = 0; a < sig_.concepts().size(); ++a)
    for (std::size_t w = 0; w < worlds_; ++w)
      for (std::size_t d = 0; d < domain_; ++d)
        if (take()) out.setConcept(a, w, d);
  for (std::size_t r = 0; r < sig_.roles().size(); ++r)
    for (std::size_t w = 0; w < worlds_; ++w)
      for (std::size_t d = 0; d < domain_; ++d)
        for (std::size_t e = 0; e < domain_; ++e)
          if (take()) out.setRole(r, w, d, e);

  if (++code_ == (std::uint64_t{1} << bits(worlds_, domain_))) {
    code_ = 0;
    if (++domain_ > maxDomain_) {
      domain_ = 1;
      if (++worlds_ > maxWorlds_) done_ = true;
    }
  }
  return out;
}

std::vector<Interpretation> enumerateModels(const Signature& sig, std::size_t maxWorlds,
                                            std::size_t maxDomain) {
  ModelEnumerator en(sig, maxWorlds, maxDomain);
  std::vector<Interpretation> out;
  out.reserve(static_cast<std::size_t>(en.total()));
  while (auto m = en.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace mdl
