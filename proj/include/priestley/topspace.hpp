#pragma once

#include <optional>
#include <vector>

#include "priestley/duality.hpp"

namespace priestley {

/// A topology on {0..n-1} given by its full list of open sets.
class FiniteTopSpace {
 public:
  std::size_t size() const { return n_; }
  ElemSet all() const { return ElemSet::full(n_); }
  /// Deduplicated, ascending mask order.
  const std::vector<ElemSet>& opens() const { return opens_; }
  bool isOpen(ElemSet s) const;
  bool isClosed(ElemSet s) const { return isOpen(all() - s); }
  ElemSet closureOf(ElemSet s) const;
  ElemSet interiorOf(ElemSet s) const;
  /// Complements of the opens, ascending mask order.
  std::vector<ElemSet> closedSets() const;

  bool operator==(const FiniteTopSpace&) const = default;

 private:
  friend FiniteTopSpace buildSpace(std::size_t n, std::vector<ElemSet> opens);
  std::size_t n_ = 0;
  std::vector<ElemSet> opens_;
};

/// Validates and normalizes. Throws NotATopology with the witness sets
/// (a missing ∅ or X, or the pair whose union/intersection is absent).
FiniteTopSpace buildSpace(std::size_t n, std::vector<ElemSet> opens);

/// Opens are the upsets of P.
FiniteTopSpace alexandrov(const FinPoset& p, const Bounds& bounds = {});

/// O(X) under inclusion; element i is opens()[i]. Throws NotDistributive
/// if validation fails, which would be a bug.
FinLattice openFrame(const FiniteTopSpace& x);

bool isT0(const FiniteTopSpace& x);
/// x ≤ y iff x ∈ cl{y}. Throws NotT0 with the indistinguishable pair.
FinPoset specialization(const FiniteTopSpace& x);

/// Every nonempty irreducible closed set is cl{x} for exactly one x.
bool isSober(const FiniteTopSpace& x, const Bounds& bounds = {});
/// An irreducible closed set without a unique generic point, if any.
std::optional<ElemSet> soberWitness(const FiniteTopSpace& x, const Bounds& bounds = {});

/// Every open cover of K has a finite subcover. The covers are all
/// subfamilies of opens() when O(X) is within bounds.scott, and the ideals
/// of O(X) otherwise.
bool isCompactSubset(const FiniteTopSpace& x, ElemSet k, const Bounds& bounds = {});

/// KSat(X): saturated sets (S = ⋂ of the opens containing S) that pass
/// isCompactSubset, ascending mask order. Throws NotT0, or IsoFailure if
/// the result differs from the upsets of the specialization order.
std::vector<ElemSet> compactSaturated(const FiniteTopSpace& x, const Bounds& bounds = {});

struct HofmannMisloveReport {
  std::size_t filters = 0;
  std::size_t scottOpenFilters = 0;
  std::size_t compactSaturated = 0;
  /// (Scott-open filter of O(X), ⋂F)
  std::vector<std::pair<Filter, ElemSet>> pairs;
  bool mutualInverse = false;
  bool orderReversing = false;
  bool ok() const { return mutualInverse && orderReversing && scottOpenFilters == compactSaturated; }
};

/// OFilt(O(X)) against KSat(X) through F ↦ ⋂F and K ↦ {U : K ⊆ U}.
/// Throws NotSober.
HofmannMisloveReport hofmannMislove(const FiniteTopSpace& x, const Bounds& bounds = {});

struct FramePoints {
  FiniteTopSpace space;
  /// Completely prime filters of L, ascending mask order; point i of space.
  std::vector<Filter> points;
};

/// The space of points of L with opens ζ(a). Throws NotDistributive.
FramePoints framePointsFinite(const FinLattice& l, const Bounds& bounds = {});

/// x ↦ {U : x ∈ U} as a homeomorphism X → pt(O(X)); entry x is the index
/// of its image in framePointsFinite(openFrame(X)).points. Throws IsoFailure.
std::vector<int> pointsHomeomorphism(const FiniteTopSpace& x, const Bounds& bounds = {});

/// The dual's points with the open-upset topology. Throws IsoFailure if
/// ClUp(X) differs from its compact saturated sets.
FiniteTopSpace spectralFromPriestley(const PriestleyDual& xd, const Bounds& bounds = {});

}  // namespace priestley
