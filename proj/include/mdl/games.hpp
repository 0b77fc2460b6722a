#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/interpretation.hpp"

namespace mdl {

/// A set of configurations ((w,d),(v,e)) over I x J, stored as one bitset row
/// per point of I (point indices as in Interpretation::pointIndex).
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t leftPoints, std::size_t rightPoints);

  std::size_t leftPoints() const noexcept { return left_; }
  std::size_t rightPoints() const noexcept { return right_; }
  std::size_t words() const noexcept { return words_; }

  bool contains(std::size_t p, std::size_t q) const {
    return (bits_[p * words_ + q / 64] >> (q % 64)) & 1U;
  }
  void insert(std::size_t p, std::size_t q) { bits_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64); }
  void erase(std::size_t p, std::size_t q) { bits_[p * words_ + q / 64] &= ~(std::uint64_t{1} << (q % 64)); }

  std::uint64_t* row(std::size_t p) { return bits_.data() + p * words_; }
  const std::uint64_t* row(std::size_t p) const { return bits_.data() + p * words_; }

  std::size_t size() const;
  /// this ⊆ other
  bool subsetOf(const Relation& other) const;
  Relation transposed() const;
  std::vector<std::pair<std::size_t, std::size_t>> members() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Per-interpretation data used when the interpretation is the right-hand
/// side of a product: point bitsets for "same individual" and for role
/// successors at a world. Build once and reuse across many pairs.
class GameView {
 public:
  explicit GameView(const Interpretation& interp);

  const Interpretation& interp() const noexcept { return *interp_; }
  std::size_t words() const noexcept { return words_; }
  /// {(v,e) : v in W}
  const std::uint64_t* sameIndividual(std::size_t e) const { return indiv_.data() + e * words_; }
  /// {(v,e') : (e,e') in r^{v}}
  const std::uint64_t* successors(std::size_t r, std::size_t point) const {
    return succ_.data() + (r * pointCount_ + point) * words_;
  }
  /// concept names true at the point, as a bit vector over concept indices
  const std::vector<std::uint64_t>& label(std::size_t point) const { return labels_[point]; }

 private:
  const Interpretation* interp_;
  std::size_t pointCount_;
  std::size_t words_;
  std::vector<std::uint64_t> indiv_;
  std::vector<std::uint64_t> succ_;
  std::vector<std::vector<std::uint64_t>> labels_;
};

/// Product-space solvers for the bisimulation games between I (left) and J
/// (right). Every relation is a subset of the atomic-agreement relation.
class BisimSolver {
 public:
  /// Views must outlive the solver and share a signature.
  BisimSolver(const GameView& left, const GameView& right);

  /// Configurations where both sides satisfy the same concept names.
  const Relation& atomicAgreement() const noexcept { return aa_; }

  /// AA ∩ {cfg : W-moves of S on either side can be answered into x}.
  Relation worldStep(const Relation& x) const;
  /// AA ∩ {cfg : Δ-moves of S on either side can be answered into x}.
  Relation deltaStep(const Relation& x) const;
  /// AA ∩ all four back-and-forth clauses into x.
  Relation step(const Relation& x) const;

  /// Largest bisimulation.
  Relation greatest() const;
  /// R_0, ..., R_n of the n-round game.
  std::vector<Relation> depth(std::size_t n) const;

  /// Positions from which D survives an optional final W-phase.
  Relation altBase() const;
  /// One round of the alternating game: optional W-phase, then a Δ-phase
  /// into x, with atomic agreement kept after every move.
  Relation alt(const Relation& x) const;
  /// Alt^0(B), ..., Alt^n(B).
  std::vector<Relation> altDepth(std::size_t n) const;
  /// Greatest fixpoint of alt.
  Relation altGreatest() const;

 private:
  bool worldOk(std::size_t p, std::size_t q, const Relation& x) const;
  bool deltaOk(std::size_t p, std::size_t q, const Relation& x) const;

  const GameView* left_;
  const GameView* right_;
  Relation aa_;
};

/// Product-size cap read from MDLWB_MAX_STATES (default 10^6).
std::size_t maxProductStates();

/// Point queries. Throw CapExceeded when |W^I×Δ^I|·|W^J×Δ^J| exceeds
/// `maxStates`; SemanticError on signature mismatch.
bool bisimilar(const Interpretation& i, Point p, const Interpretation& j, Point q,
               std::size_t maxStates = maxProductStates());
bool bisimilarN(const Interpretation& i, Point p, const Interpretation& j, Point q, std::size_t n,
                std::size_t maxStates = maxProductStates());
bool bisimilarAltN(const Interpretation& i, Point p, const Interpretation& j, Point q, std::size_t n,
                   std::size_t maxStates = maxProductStates());
bool bisimilarAlt(const Interpretation& i, Point p, const Interpretation& j, Point q,
                  std::size_t maxStates = maxProductStates());
/// All pairs of the largest bisimulation, ordered by (p, q).
std::vector<PointPair> bisimRelation(const Interpretation& i, const Interpretation& j,
                                     std::size_t maxStates = maxProductStates());

bool atomicAgreement(const Interpretation& i, Point p, const Interpretation& j, Point q);

/// First failed condition of the bisimulation definition, scanning R in order
/// and clauses 1..5 per pair.
struct BisimViolation {
  int clause = 0;       // 1 atoms, 2/3 world forth/back, 4/5 role forth/back
  PointPair pair;
  std::string role;     // clauses 4, 5
  std::optional<Point> move;  // S's move: on I for 2 and 4, on J for 3 and 5
};

std::optional<BisimViolation> checkBisimulation(const Interpretation& i, const Interpretation& j,
                                                std::span<const PointPair> relation);

/// Candidate relation document: [[["v1","a"],["w1","a"]], ...]. Throws
/// ModelError on malformed documents and SemanticError on unknown names.
std::vector<PointPair> parseRelation(std::string_view json, const Interpretation& i,
                                     const Interpretation& j);
std::string relationToJson(std::span<const PointPair> relation, const Interpretation& i,
                           const Interpretation& j);

struct EfOptions {
  std::size_t maxRounds = 4;
  std::size_t maxDomain = 6;
  bool force = false;
};

/// Equal equality patterns and equal memberships of every unary/binary
/// predicate over the tuples at the current worlds.
bool isPartialIsomorphism(const Interpretation& i, std::size_t w, std::span<const std::size_t> dbar,
                          const Interpretation& j, std::size_t v, std::span<const std::size_t> ebar);

/// D wins the n-round S5 Ehrenfeucht-Fraïssé game. Throws SemanticError on a
/// length mismatch or empty tuples, CapExceeded beyond the caps unless forced.
bool efEquivalentN(const Interpretation& i, std::size_t w, std::span<const std::size_t> dbar,
                   const Interpretation& j, std::size_t v, std::span<const std::size_t> ebar,
                   std::size_t n, const EfOptions& options = {});

}  // namespace mdl
