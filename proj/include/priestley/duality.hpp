#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "priestley/lattice.hpp"

namespace priestley {

/// The prime-filter space of a finite distributive lattice.
///
/// Points are the proper prime filters of `base`, sorted by member mask,
/// ordered by inclusion. The Stone topology is the one generated by the
/// sets σ(a) and their complements; it is kept as its partition into atoms
/// (for a finite dual every atom is a singleton, but nothing here assumes
/// that). Y is computed from the topology as {x : ↓x is clopen}.
class PriestleyDual {
 public:
  const FinLattice& base() const { return base_; }
  const std::vector<Filter>& points() const { return points_; }
  const FinPoset& order() const { return order_; }
  std::size_t size() const { return points_.size(); }
  ElemSet all() const { return ElemSet::full(size()); }
  /// σ(a) = {x : a ∈ x}.
  ElemSet sigma(int a) const { return sigma_[a]; }
  ElemSet y() const { return y_; }
  const std::vector<ElemSet>& atoms() const { return atoms_; }

  bool isOpen(ElemSet s) const;
  bool isClosed(ElemSet s) const { return isOpen(all() - s); }
  bool isClopen(ElemSet s) const { return isOpen(s) && isClosed(s); }
  /// Smallest closed superset.
  ElemSet closureOf(ElemSet s) const;
  /// Largest open subset.
  ElemSet interiorOf(ElemSet s) const;
  /// Every union of atoms, ascending mask order.
  std::vector<ElemSet> clopens(const Bounds& bounds = {}) const;

 private:
  friend PriestleyDual dualSpace(const FinLattice& l, const Bounds& bounds);

  FinLattice base_;
  std::vector<Filter> points_;
  FinPoset order_;
  std::vector<ElemSet> sigma_;
  std::vector<ElemSet> atoms_;
  ElemSet y_;
};

/// A closed upset of a PriestleyDual.
struct ClosedUpset {
  ElemSet members;
  auto operator<=>(const ClosedUpset&) const = default;
};

/// Throws NotDistributive (with the triple) or BoundExceeded.
PriestleyDual dualSpace(const FinLattice& l, const Bounds& bounds = {});

ClosedUpset makeClosedUpset(const PriestleyDual& xd, ElemSet s);
/// ClUp(X) in ascending mask order.
std::vector<ClosedUpset> closedUpsets(const PriestleyDual& xd, const Bounds& bounds = {});

struct Reconstruction {
  /// Clopen upsets of the dual, ascending mask order.
  std::vector<ElemSet> clopenUpsets;
  /// Lattice of clopen upsets under inclusion, indexed like clopenUpsets.
  FinLattice upsetLattice;
  /// a ↦ index of σ(a) in clopenUpsets.
  std::vector<int> sigmaImage;
};

/// Rebuilds the base lattice as the clopen upsets of the dual and checks
/// that σ is a bounded-lattice isomorphism onto them. Throws IsoFailure.
Reconstruction reconstruct(const PriestleyDual& xd);

/// σ(a∧b) = σa ∩ σb, σ(a∨b) = σa ∪ σb, a ≤ b ⇔ σa ⊆ σb, σ0 = ∅, σ1 = X.
bool isStoneEmbedding(const PriestleyDual& xd);

/// K_F = ⋂{σ(a) : a ∈ F}.
ClosedUpset filterToK(const PriestleyDual& xd, const Filter& f);
/// F_K = {a : K ⊆ σ(a)}.
Filter kToFilter(const PriestleyDual& xd, const ClosedUpset& k);

struct FilterBijection {
  std::size_t filters = 0;
  std::size_t closedUpsets = 0;
  bool mutualInverse = false;
  /// F ⊆ F' ⇔ K_F' ⊆ K_F over all pairs.
  bool antitone = false;
  /// First filter where a round trip failed.
  std::optional<Filter> witness;
  bool ok() const { return mutualInverse && antitone && filters == closedUpsets; }
};

/// Filt(D) against ClUp(X) through filterToK / kToFilter.
FilterBijection filterBijection(const PriestleyDual& xd, const Bounds& bounds = {});

/// ζ(a) = σ(a) ∩ Y.
ElemSet zeta(const PriestleyDual& xd, int a);

/// min K ⊆ Y.
bool isSUpset(const PriestleyDual& xd, const ClosedUpset& k);

enum class ScottRoute {
  /// All 2^n subfamilies (bounded by Bounds::scott).
  Literal,
  /// All ideals.
  Ideals,
};

/// The three equivalent conditions on a filter, each evaluated on its own.
struct FilterConditions {
  bool scottOpen = false;
  bool minInY = false;
  /// K_F ⊆ cl(U) ⇒ K_F ⊆ U for every open upset U.
  bool closureCondition = false;
  bool coherent() const { return scottOpen == minInY && minInY == closureCondition; }
};

FilterConditions filterConditions(const PriestleyDual& xd, const Filter& f, const Bounds& bounds = {},
                                   ScottRoute route = ScottRoute::Literal);

struct ScottOpenIso {
  std::size_t scottOpenFilters = 0;
  std::size_t sUpsets = 0;
  std::size_t compactSaturatedInY = 0;
  /// (Scott-open filter, K_F ∩ Y) with point indices of the dual.
  std::vector<std::pair<Filter, ElemSet>> pairs;
  bool conditionsCoherent = false;
  bool gAfterF = false;   ///< ↑(K ∩ Y) = K on SUp
  bool fAfterG = false;   ///< ↑Q ∩ Y = Q on KSat(Y)
  bool orderIso = false;  ///< reverse inclusion of filters vs inclusion of Q
  bool ok() const {
    return conditionsCoherent && gAfterF && fAfterG && orderIso && scottOpenFilters == sUpsets &&
           sUpsets == compactSaturatedInY;
  }
};

/// OFilt(L) ≅ SUp(X) ≅ KSat(Y), with f(K) = K ∩ Y and g(Q) = ↑Q.
ScottOpenIso hmFiniteIso(const PriestleyDual& xd, const Bounds& bounds = {},
                         ScottRoute route = ScottRoute::Literal);

struct PrimeSingletonRow {
  Filter filter;
  ElemSet minK;
  bool completelyPrime = false;
  bool singletonMatches = false;
  bool intersectionMatches = false;
};

struct PrimeSingletonReport {
  std::vector<PrimeSingletonRow> rows;
  bool ok() const;
};

/// For every Scott-open filter: completely prime ⇔ |min K_F| = 1, and F is
/// the intersection of the points containing it.
PrimeSingletonReport primeSingletonCheck(const PriestleyDual& xd, const Bounds& bounds = {},
                             ScottRoute route = ScottRoute::Literal);

struct ValidatorResult {
  bool ok = true;
  std::vector<int> witness;
};

struct StructuralReport {
  ValidatorResult separation;
  ValidatorResult esakia;
  ValidatorResult extremallyOrderDisconnected;
  ValidatorResult downsetOfClosedIsClosed;
  bool ok() const {
    return separation.ok && esakia.ok && extremallyOrderDisconnected.ok && downsetOfClosedIsClosed.ok;
  }
};

/// Priestley separation, the Esakia condition, extremal order-disconnectedness,
/// and closedness of downsets of closed sets, quantified over the topology.
StructuralReport structuralValidators(const PriestleyDual& xd, const Bounds& bounds = {});

/// Density of Y against order-separation by completely prime filters.
/// Throws IsoFailure if the two disagree.
bool spatialViaDensity(const PriestleyDual& xd, const Bounds& bounds = {});

/// σ(⋁S) = cl(⋃ σ(s)).
bool sigmaJoinCheck(const PriestleyDual& xd, ElemSet s);
/// sigmaJoinCheck over every S ⊆ L; throws BoundExceeded past bounds.scott.
bool sigmaJoinsAllSubsets(const PriestleyDual& xd, const Bounds& bounds = {});

/// a is compact ⇔ σ(a) is an S-upset, for every a.
bool compactIffSUpset(const PriestleyDual& xd, const Bounds& bounds = {},
                      ScottRoute route = ScottRoute::Literal);

}  // namespace priestley
