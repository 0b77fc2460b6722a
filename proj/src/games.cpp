#include "mdl/games.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "mdl/errors.hpp"

namespace mdl {

Relation::Relation(std::size_t leftPoints, std::size_t rightPoints)
    : left_(leftPoints),
      right_(rightPoints),
      words_((rightPoints + 63) / 64),
      bits_(leftPoints * ((rightPoints + 63) / 64), 0) {}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (auto word : bits_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

bool Relation::subsetOf(const Relation& other) const {
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

Relation Relation::transposed() const {
  Relation t(right_, left_);
  for (std::size_t p = 0; p < left_; ++p)
    for (std::size_t q = 0; q < right_; ++q)
      if (contains(p, q)) t.insert(q, p);
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::members() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < left_; ++p)
    for (std::size_t q = 0; q < right_; ++q)
      if (contains(p, q)) out.emplace_back(p, q);
  return out;
}

GameView::GameView(const Interpretation& interp)
    : interp_(&interp), pointCount_(interp.pointCount()), words_((interp.pointCount() + 63) / 64) {
  const std::size_t W = interp.worldCount(), D = interp.domainSize();
  auto set = [](std::uint64_t* row, std::size_t q) { row[q / 64] |= std::uint64_t{1} << (q % 64); };
  indiv_.assign(D * words_, 0);
  for (std::size_t e = 0; e < D; ++e)
    for (std::size_t v = 0; v < W; ++v) set(indiv_.data() + e * words_, v * D + e);
  succ_.assign(interp.roleCount() * pointCount_ * words_, 0);
  for (std::size_t r = 0; r < interp.roleCount(); ++r)
    for (std::size_t v = 0; v < W; ++v)
      for (std::size_t e = 0; e < D; ++e)
        for (std::size_t f : interp.successors(r, v, e))
          set(succ_.data() + (r * pointCount_ + v * D + e) * words_, v * D + f);
  const std::size_t labelWords = std::max<std::size_t>(1, (interp.conceptCount() + 63) / 64);
  labels_.assign(pointCount_, std::vector<std::uint64_t>(labelWords, 0));
  for (std::size_t p = 0; p < pointCount_; ++p)
    for (std::size_t a = 0; a < interp.conceptCount(); ++a)
      if (interp.hasConcept(a, p / D, p % D)) labels_[p][a / 64] |= std::uint64_t{1} << (a % 64);
}

namespace {

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k)
    if (a[k] & b[k]) return true;
  return false;
}

bool covers(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k)
    if (b[k] & ~a[k]) return false;
  return true;
}

// Calls f(q) for every set bit q of the row.
template <class F>
void forEachBit(const std::uint64_t* row, std::size_t words, F&& f) {
  for (std::size_t k = 0; k < words; ++k) {
    std::uint64_t word = row[k];
    while (word) {
      const int bit = std::countr_zero(word);
      f(k * 64 + static_cast<std::size_t>(bit));
      word &= word - 1;
    }
  }
}

}  // namespace

BisimSolver::BisimSolver(const GameView& left, const GameView& right)
    : left_(&left), right_(&right) {
  const Interpretation& i = left.interp();
  const Interpretation& j = right.interp();
  if (!(i.signature() == j.signature()))
    throw SemanticError("interpretations have different signatures");
  aa_ = Relation(i.pointCount(), j.pointCount());
  for (std::size_t p = 0; p < i.pointCount(); ++p)
    for (std::size_t q = 0; q < j.pointCount(); ++q)
      if (left.label(p) == right.label(q)) aa_.insert(p, q);
}

bool BisimSolver::worldOk(std::size_t p, std::size_t q, const Relation& x) const {
  const Interpretation& i = left_->interp();
  const std::size_t DI = i.domainSize(), DJ = right_->interp().domainSize();
  const std::size_t words = x.words();
  const std::uint64_t* target = right_->sameIndividual(q % DJ);
  const std::size_t d = p % DI;
  std::uint64_t reach[4];
  std::vector<std::uint64_t> wide;
  std::uint64_t* acc = reach;
  if (words > 4) {
    wide.assign(words, 0);
    acc = wide.data();
  } else {
    std::fill(reach, reach + 4, 0);
  }
  for (std::size_t w = 0; w < i.worldCount(); ++w) {
    const std::uint64_t* row = x.row(w * DI + d);
    if (!intersects(row, target, words)) return false;
    for (std::size_t k = 0; k < words; ++k) acc[k] |= row[k];
  }
  return covers(acc, target, words);
}

bool BisimSolver::deltaOk(std::size_t p, std::size_t q, const Relation& x) const {
  const Interpretation& i = left_->interp();
  const std::size_t DI = i.domainSize();
  const std::size_t w = p / DI, d = p % DI;
  const std::size_t words = x.words();
  std::uint64_t reach[4];
  std::vector<std::uint64_t> wide;
  std::uint64_t* acc = reach;
  if (words > 4) wide.resize(words);
  if (words > 4) acc = wide.data();
  for (std::size_t r = 0; r < i.roleCount(); ++r) {
    const std::uint64_t* target = right_->successors(r, q);
    std::fill(acc, acc + words, 0);
    for (std::size_t dp : i.successors(r, w, d)) {
      const std::uint64_t* row = x.row(w * DI + dp);
      if (!intersects(row, target, words)) return false;
      for (std::size_t k = 0; k < words; ++k) acc[k] |= row[k];
    }
    if (!covers(acc, target, words)) return false;
  }
  return true;
}

Relation BisimSolver::worldStep(const Relation& x) const {
  Relation out(aa_.leftPoints(), aa_.rightPoints());
  for (std::size_t p = 0; p < aa_.leftPoints(); ++p)
    forEachBit(aa_.row(p), aa_.words(), [&](std::size_t q) {
      if (worldOk(p, q, x)) out.insert(p, q);
    });
  return out;
}

Relation BisimSolver::deltaStep(const Relation& x) const {
  Relation out(aa_.leftPoints(), aa_.rightPoints());
  for (std::size_t p = 0; p < aa_.leftPoints(); ++p)
    forEachBit(aa_.row(p), aa_.words(), [&](std::size_t q) {
      if (deltaOk(p, q, x)) out.insert(p, q);
    });
  return out;
}

Relation BisimSolver::step(const Relation& x) const {
  Relation out(aa_.leftPoints(), aa_.rightPoints());
  for (std::size_t p = 0; p < aa_.leftPoints(); ++p)
    forEachBit(aa_.row(p), aa_.words(), [&](std::size_t q) {
      if (worldOk(p, q, x) && deltaOk(p, q, x)) out.insert(p, q);
    });
  return out;
}

Relation BisimSolver::greatest() const {
  // step is monotone and step(AA) ⊆ AA, so iterating from AA only deletes
  Relation x = aa_;
  while (true) {
    Relation next = step(x);
    if (next == x) return x;
    x = std::move(next);
  }
}

std::vector<Relation> BisimSolver::depth(std::size_t n) const {
  std::vector<Relation> out{aa_};
  for (std::size_t m = 0; m < n; ++m) out.push_back(step(out.back()));
  return out;
}

Relation BisimSolver::altBase() const { return worldStep(aa_); }

Relation BisimSolver::alt(const Relation& x) const {
  // Positions after the W-phase: atoms agree and the Δ-phase can be answered.
  const Relation y = deltaStep(x);
  Relation out(aa_.leftPoints(), aa_.rightPoints());
  for (std::size_t p = 0; p < y.leftPoints(); ++p)
    forEachBit(y.row(p), y.words(), [&](std::size_t q) {
      if (worldOk(p, q, y)) out.insert(p, q);
    });
  return out;
}

std::vector<Relation> BisimSolver::altDepth(std::size_t n) const {
  std::vector<Relation> out{altBase()};
  for (std::size_t m = 0; m < n; ++m) out.push_back(alt(out.back()));
  return out;
}

Relation BisimSolver::altGreatest() const {
  Relation x = aa_;
  while (true) {
    Relation next = alt(x);
    if (next == x) return x;
    x = std::move(next);
  }
}

std::size_t maxProductStates() {
  if (const char* env = std::getenv("MDLWB_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

void requirePoint(const Interpretation& m, Point p) {
  if (p.world >= m.worldCount() || p.individual >= m.domainSize())
    throw SemanticError("point outside the interpretation");
}

template <class F>
auto solve(const Interpretation& i, Point p, const Interpretation& j, Point q, std::size_t maxStates,
           F&& f) {
  requirePoint(i, p);
  requirePoint(j, q);
  if (i.pointCount() * j.pointCount() > maxStates)
    throw CapExceeded("product space of " + std::to_string(i.pointCount() * j.pointCount()) +
                      " configurations exceeds the cap of " + std::to_string(maxStates));
  const GameView left(i), right(j);
  const BisimSolver solver(left, right);
  return f(solver).contains(i.pointIndex(p), j.pointIndex(q));
}

}  // namespace

bool bisimilar(const Interpretation& i, Point p, const Interpretation& j, Point q,
               std::size_t maxStates) {
  return solve(i, p, j, q, maxStates, [](const BisimSolver& s) { return s.greatest(); });
}

bool bisimilarN(const Interpretation& i, Point p, const Interpretation& j, Point q, std::size_t n,
                std::size_t maxStates) {
  return solve(i, p, j, q, maxStates, [n](const BisimSolver& s) { return s.depth(n).back(); });
}

bool bisimilarAltN(const Interpretation& i, Point p, const Interpretation& j, Point q,
                   std::size_t n, std::size_t maxStates) {
  return solve(i, p, j, q, maxStates, [n](const BisimSolver& s) { return s.altDepth(n).back(); });
}

bool bisimilarAlt(const Interpretation& i, Point p, const Interpretation& j, Point q,
                  std::size_t maxStates) {
  return solve(i, p, j, q, maxStates, [](const BisimSolver& s) { return s.altGreatest(); });
}

std::vector<PointPair> bisimRelation(const Interpretation& i, const Interpretation& j,
                                     std::size_t maxStates) {
  if (i.pointCount() * j.pointCount() > maxStates)
    throw CapExceeded("product space exceeds the cap of " + std::to_string(maxStates));
  const GameView left(i), right(j);
  const Relation r = BisimSolver(left, right).greatest();
  std::vector<PointPair> out;
  for (auto [p, q] : r.members()) out.push_back({i.point(p), j.point(q)});
  return out;
}

bool atomicAgreement(const Interpretation& i, Point p, const Interpretation& j, Point q) {
  requirePoint(i, p);
  requirePoint(j, q);
  if (!(i.signature() == j.signature()))
    throw SemanticError("interpretations have different signatures");
  for (std::size_t a = 0; a < i.conceptCount(); ++a)
    if (i.hasConcept(a, p.world, p.individual) != j.hasConcept(a, q.world, q.individual))
      return false;
  return true;
}

std::optional<BisimViolation> checkBisimulation(const Interpretation& i, const Interpretation& j,
                                                std::span<const PointPair> relation) {
  if (!(i.signature() == j.signature()))
    throw SemanticError("interpretations have different signatures");
  const std::set<PointPair> rel(relation.begin(), relation.end());
  auto in = [&rel](Point a, Point b) { return rel.count({a, b}) > 0; };
  for (const auto& pair : relation) {
    const auto [p, q] = pair;
    requirePoint(i, p);
    requirePoint(j, q);
    if (!atomicAgreement(i, p, j, q)) return BisimViolation{1, pair, {}, std::nullopt};
    for (std::size_t w = 0; w < i.worldCount(); ++w) {
      bool answered = false;
      for (std::size_t v = 0; v < j.worldCount() && !answered; ++v)
        answered = in({w, p.individual}, {v, q.individual});
      if (!answered) return BisimViolation{2, pair, {}, Point{w, p.individual}};
    }
    for (std::size_t v = 0; v < j.worldCount(); ++v) {
      bool answered = false;
      for (std::size_t w = 0; w < i.worldCount() && !answered; ++w)
        answered = in({w, p.individual}, {v, q.individual});
      if (!answered) return BisimViolation{3, pair, {}, Point{v, q.individual}};
    }
    for (std::size_t r = 0; r < i.roleCount(); ++r) {
      const std::string& role = i.signature().roles()[r];
      for (std::size_t dp : i.successors(r, p.world, p.individual)) {
        bool answered = false;
        for (std::size_t ep : j.successors(r, q.world, q.individual))
          answered = answered || in({p.world, dp}, {q.world, ep});
        if (!answered) return BisimViolation{4, pair, role, Point{p.world, dp}};
      }
      for (std::size_t ep : j.successors(r, q.world, q.individual)) {
        bool answered = false;
        for (std::size_t dp : i.successors(r, p.world, p.individual))
          answered = answered || in({p.world, dp}, {q.world, ep});
        if (!answered) return BisimViolation{5, pair, role, Point{q.world, ep}};
      }
    }
  }
  return std::nullopt;
}

std::vector<PointPair> parseRelation(std::string_view json, const Interpretation& i,
                                     const Interpretation& j) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed relation document: ") + e.what());
  }
  auto point = [](const nlohmann::json& node, const Interpretation& m) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_string() || !node[1].is_string())
      throw ModelError("relation entries must be [[world, individual], [world, individual]]");
    return Point{m.world(node[0].get<std::string>()), m.individual(node[1].get<std::string>())};
  };
  if (!doc.is_array()) throw ModelError("relation document must be an array");
  std::vector<PointPair> out;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2)
      throw ModelError("relation entries must be [[world, individual], [world, individual]]");
    out.push_back({point(entry[0], i), point(entry[1], j)});
  }
  return out;
}

std::string relationToJson(std::span<const PointPair> relation, const Interpretation& i,
                           const Interpretation& j) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& [p, q] : relation)
    doc.push_back(nlohmann::json::array({nlohmann::json::array({i.worlds()[p.world], i.domain()[p.individual]}),
                                         nlohmann::json::array({j.worlds()[q.world], j.domain()[q.individual]})}));
  return doc.dump();
}

bool isPartialIsomorphism(const Interpretation& i, std::size_t w, std::span<const std::size_t> dbar,
                          const Interpretation& j, std::size_t v, std::span<const std::size_t> ebar) {
  if (dbar.size() != ebar.size()) throw SemanticError("tuples of different length");
  if (!(i.signature() == j.signature()))
    throw SemanticError("interpretations have different signatures");
  const std::size_t k = dbar.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if ((dbar[a] == dbar[b]) != (ebar[a] == ebar[b])) return false;
      for (std::size_t r = 0; r < i.roleCount(); ++r)
        if (i.hasRole(r, w, dbar[a], dbar[b]) != j.hasRole(r, v, ebar[a], ebar[b])) return false;
    }
    for (std::size_t c = 0; c < i.conceptCount(); ++c)
      if (i.hasConcept(c, w, dbar[a]) != j.hasConcept(c, v, ebar[a])) return false;
  }
  return true;
}

namespace {

// The game value depends on a configuration only through the worlds and the
// set of distinct pairs (d_k, e_k): repeated pairs add no constraint to the
// partial-isomorphism test, and every move extends the set in the same way.
// The memo is keyed on exactly that quotient.
class EfSolver {
 public:
  EfSolver(const Interpretation& i, const Interpretation& j)
      : i_(i), j_(j), DJ_(j.domainSize()), words_((i.domainSize() * j.domainSize() + 63) / 64) {}

  std::size_t words() const noexcept { return words_; }

  bool win(std::size_t w, std::size_t v, std::vector<std::pair<std::size_t, std::size_t>>& pairs,
           std::vector<std::uint64_t>& bits, std::size_t m) {
    std::vector<std::uint64_t> key{w, v, m};
    key.insert(key.end(), bits.begin(), bits.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = compute(w, v, pairs, bits, m);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : k) h = (h ^ x) * 1099511628211ULL;
      return h;
    }
  };

  bool partialIso(std::size_t w, std::size_t v,
                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const {
    for (const auto& [d1, e1] : pairs) {
      for (std::size_t c = 0; c < i_.conceptCount(); ++c)
        if (i_.hasConcept(c, w, d1) != j_.hasConcept(c, v, e1)) return false;
      for (const auto& [d2, e2] : pairs) {
        if ((d1 == d2) != (e1 == e2)) return false;
        for (std::size_t r = 0; r < i_.roleCount(); ++r)
          if (i_.hasRole(r, w, d1, d2) != j_.hasRole(r, v, e1, e2)) return false;
      }
    }
    return true;
  }

  // Extends the configuration by (d, e), evaluates, and undoes the change.
  bool extended(std::size_t w, std::size_t v, std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                std::vector<std::uint64_t>& bits, std::size_t m, std::size_t d, std::size_t e) {
    const std::size_t bit = d * DJ_ + e;
    const bool present = (bits[bit / 64] >> (bit % 64)) & 1U;
    if (present) return win(w, v, pairs, bits, m);
    bits[bit / 64] |= std::uint64_t{1} << (bit % 64);
    pairs.emplace_back(d, e);
    const bool result = win(w, v, pairs, bits, m);
    pairs.pop_back();
    bits[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
    return result;
  }

  bool compute(std::size_t w, std::size_t v, std::vector<std::pair<std::size_t, std::size_t>>& pairs,
               std::vector<std::uint64_t>& bits, std::size_t m) {
    if (!partialIso(w, v, pairs)) return false;
    if (m == 0) return true;
    for (std::size_t wp = 0; wp < i_.worldCount(); ++wp) {
      bool answered = false;
      for (std::size_t vp = 0; vp < j_.worldCount() && !answered; ++vp)
        answered = win(wp, vp, pairs, bits, m - 1);
      if (!answered) return false;
    }
    for (std::size_t vp = 0; vp < j_.worldCount(); ++vp) {
      bool answered = false;
      for (std::size_t wp = 0; wp < i_.worldCount() && !answered; ++wp)
        answered = win(wp, vp, pairs, bits, m - 1);
      if (!answered) return false;
    }
    for (std::size_t d = 0; d < i_.domainSize(); ++d) {
      bool answered = false;
      for (std::size_t e = 0; e < j_.domainSize() && !answered; ++e)
        answered = extended(w, v, pairs, bits, m - 1, d, e);
      if (!answered) return false;
    }
    for (std::size_t e = 0; e < j_.domainSize(); ++e) {
      bool answered = false;
      for (std::size_t d = 0; d < i_.domainSize() && !answered; ++d)
        answered = extended(w, v, pairs, bits, m - 1, d, e);
      if (!answered) return false;
    }
    return true;
  }

  const Interpretation& i_;
  const Interpretation& j_;
  std::size_t DJ_;
  std::size_t words_;
  std::unordered_map<std::vector<std::uint64_t>, bool, Hash> memo_;
};

}  // namespace

bool efEquivalentN(const Interpretation& i, std::size_t w, std::span<const std::size_t> dbar,
                   const Interpretation& j, std::size_t v, std::span<const std::size_t> ebar,
                   std::size_t n, const EfOptions& options) {
  if (dbar.size() != ebar.size()) throw SemanticError("tuples of different length");
  if (dbar.empty()) throw SemanticError("tuples must be nonempty");
  if (!(i.signature() == j.signature()))
    throw SemanticError("interpretations have different signatures");
  if (w >= i.worldCount() || v >= j.worldCount()) throw SemanticError("world outside the interpretation");
  for (auto d : dbar)
    if (d >= i.domainSize()) throw SemanticError("individual outside the interpretation");
  for (auto e : ebar)
    if (e >= j.domainSize()) throw SemanticError("individual outside the interpretation");
  if (!options.force) {
    if (n > options.maxRounds)
      throw CapExceeded("EF game limited to " + std::to_string(options.maxRounds) + " rounds");
    if (i.domainSize() > options.maxDomain || j.domainSize() > options.maxDomain)
      throw CapExceeded("EF game limited to domains of size " + std::to_string(options.maxDomain));
  }
  EfSolver solver(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::uint64_t> bits(solver.words(), 0);
  for (std::size_t k = 0; k < dbar.size(); ++k) {
    const std::size_t bit = dbar[k] * j.domainSize() + ebar[k];
    if ((bits[bit / 64] >> (bit % 64)) & 1U) continue;
    bits[bit / 64] |= std::uint64_t{1} << (bit % 64);
    pairs.emplace_back(dbar[k], ebar[k]);
  }
  return solver.win(w, v, pairs, bits, n);
}

}  // namespace mdl
