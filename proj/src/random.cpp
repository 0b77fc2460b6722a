#include "mdl/random.hpp"

#include <algorithm>
#include <vector>

#include "mdl/errors.hpp"

namespace mdl {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

class ConceptGen {
 public:
  ConceptGen(const Signature& sig, std::mt19937_64& rng, bool localOnly)
      : sig_(sig), rng_(rng), localOnly_(localOnly) {}

  // `depth` bounds the Boolean nesting so that samples stay small.
  Concept gen(std::size_t rank, std::size_t depth) {
    const bool modal = rank > 0;
    const bool roles = modal && !sig_.roles().empty();
    // 0 atom, 1 constant, 2 not, 3 and, 4 or, 5 exists, 6 forall, 7 box, 8 dia
    std::vector<int> weights{4, 1, 2, 2, 2, roles ? 3 : 0, roles ? 2 : 0, modal ? 2 : 0, modal ? 3 : 0};
    if (depth == 0) weights = {4, 1, 0, 0, 0, roles ? 3 : 0, roles ? 2 : 0, modal ? 2 : 0, modal ? 3 : 0};
    if (sig_.concepts().empty()) weights[0] = 0;
    std::discrete_distribution<int> dist(weights.begin(), weights.end());
    const std::size_t below = depth == 0 ? 0 : depth - 1;
    switch (dist(rng_)) {
      case 0:
        return Concept::atom(sig_.concepts()[pick(rng_, sig_.concepts().size())]);
      case 1:
        return pick(rng_, 2) ? Concept::top() : Concept::bottom();
      case 2:
        return Concept::negation(gen(rank, below));
      case 3:
        return Concept::conj(gen(rank, below), gen(rank, below));
      case 4:
        return Concept::disj(gen(rank, below), gen(rank, below));
      case 5:
        return Concept::exists(role(), gen(rank - 1, 2));
      case 6:
        return Concept::forall(role(), gen(rank - 1, 2));
      case 7:
        return Concept::box(gen(rank - 1, 2));
      default:
        return Concept::diamond(gen(rank - 1, 2));
    }
  }

 private:
  RoleExpr role() {
    RoleExpr r{RoleKind::Local, sig_.roles()[pick(rng_, sig_.roles().size())]};
    if (!localOnly_) {
      const std::size_t k = pick(rng_, 4);
      if (k == 1) r.kind = RoleKind::Boxed;
      if (k == 2) r.kind = RoleKind::Diamond;
    }
    return r;
  }

  const Signature& sig_;
  std::mt19937_64& rng_;
  bool localOnly_;
};

class FormulaGen {
 public:
  FormulaGen(const Signature& sig, std::mt19937_64& rng) : sig_(sig), rng_(rng) {}

  Formula gen(std::size_t rank, std::size_t depth, std::vector<std::string>& scope) {
    const bool modal = rank > 0;
    // 0 predicate, 1 equality, 2 not, 3 and, 4 or, 5 implies, 6 exists, 7 forall, 8 box, 9 dia
    std::vector<int> weights{5, 1, 2, 2, 2, 1, modal ? 3 : 0, modal ? 2 : 0, modal ? 2 : 0, modal ? 2 : 0};
    if (depth == 0) std::fill(weights.begin() + 2, weights.begin() + 6, 0);
    if (scope.empty()) {
      weights[0] = weights[1] = 0;
      if (!modal) throw SemanticError("cannot build a closed rank-0 formula");
      weights[8] = weights[9] = 0;
    }
    if (sig_.concepts().empty() && sig_.roles().empty()) weights[0] = 0;
    std::discrete_distribution<int> dist(weights.begin(), weights.end());
    const std::size_t below = depth == 0 ? 0 : depth - 1;
    const int kind = dist(rng_);
    switch (kind) {
      case 0: {
        const std::size_t s = sig_.concepts().size(), t = sig_.roles().size();
        const std::size_t k = pick(rng_, s + t);
        if (k < s) return Formula::pred(sig_.concepts()[k], {var(scope)});
        return Formula::pred(sig_.roles()[k - s], {var(scope), var(scope)});
      }
      case 1:
        return Formula::equal(var(scope), var(scope));
      case 2:
        return Formula::negation(gen(rank, below, scope));
      case 3:
        return Formula::conj(gen(rank, below, scope), gen(rank, below, scope));
      case 4:
        return Formula::disj(gen(rank, below, scope), gen(rank, below, scope));
      case 5:
        return Formula::implies(gen(rank, below, scope), gen(rank, below, scope));
      case 6:
      case 7: {
        const bool exists = kind == 6;
        static const std::vector<std::string> pool{"x", "y", "z"};
        const std::string v = pool[pick(rng_, pool.size())];
        scope.push_back(v);
        Formula body = gen(rank - 1, 2, scope);
        scope.pop_back();
        return exists ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
      }
      case 8:
        return Formula::box(gen(rank - 1, 2, scope));
      default:
        return Formula::diamond(gen(rank - 1, 2, scope));
    }
  }

 private:
  std::string var(const std::vector<std::string>& scope) { return scope[pick(rng_, scope.size())]; }

  const Signature& sig_;
  std::mt19937_64& rng_;
};

}  // namespace

Concept randomConcept(const Signature& sig, std::size_t maxRank, std::mt19937_64& rng,
                      bool localOnly) {
  if (sig.concepts().empty() && sig.roles().empty())
    throw SemanticError("random concepts need a nonempty signature");
  return ConceptGen(sig, rng, localOnly).gen(maxRank, 3);
}

Formula randomFormula(const Signature& sig, std::size_t maxRank,
                      std::span<const std::string> freeVars, std::mt19937_64& rng) {
  std::vector<std::string> scope(freeVars.begin(), freeVars.end());
  return FormulaGen(sig, rng).gen(maxRank, 3, scope);
}

}  // namespace mdl
