#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "priestley/error.hpp"
#include "priestley/scott.hpp"

namespace priestley {

enum class FixtureId { ChainOmegaPlusOne, CofiniteNat };

std::string_view toString(FixtureId id);

/// Finite set of naturals; canonical when sorted and deduplicated.
using NatSet = std::vector<std::uint64_t>;

NatSet canonical(NatSet s);
std::string toString(const NatSet& s);

/// Chain ω+1: Nat(k) | Top. Cofinite frame over ℕ: Empty | Missing(A),
/// the cofinite set ℕ∖A; Missing(∅) is the top.
struct ElementDesc {
  enum class Kind { Nat, Top, Empty, Missing };
  Kind kind = Kind::Nat;
  std::uint64_t k = 0;
  NatSet missing;

  static ElementDesc nat(std::uint64_t k) { return {Kind::Nat, k, {}}; }
  static ElementDesc top() { return {Kind::Top, 0, {}}; }
  static ElementDesc empty() { return {Kind::Empty, 0, {}}; }
  static ElementDesc cofinite(NatSet a) { return {Kind::Missing, 0, canonical(std::move(a))}; }

  auto operator<=>(const ElementDesc&) const = default;
  std::string toString() const;
};

/// A join family. Finite families list their members. Rule families are
/// sequences g(0), g(1), ... with a closed-form join:
///   NatRun(s, cap)      g(k) = Nat(min(s+k, cap)); join Top if uncapped
///   Holes(A, s, t)      g(k) = Empty for k < t, else Missing(A ∪ {s+k}); join Missing(A)
///   Shrinking(A, B)     g(k) = Missing(B ∪ A minus its first k elements); join Missing(B)
///   AllEmpty            g(k) = Empty
/// Finite subfamilies of a sequence are dominated by its prefixes, so the
/// Scott condition only needs the prefix joins g(0) ∨ ... ∨ g(k).
struct FamilyDesc {
  enum class Kind { Finite, NatRun, Holes, Shrinking, AllEmpty };
  Kind kind = Kind::Finite;
  std::vector<ElementDesc> members;
  std::uint64_t start = 0;
  std::optional<std::uint64_t> cap;
  std::uint64_t skip = 0;
  NatSet a;
  NatSet b;

  static FamilyDesc finite(std::vector<ElementDesc> members);
  static FamilyDesc natRun(std::uint64_t start, std::optional<std::uint64_t> cap = std::nullopt);
  static FamilyDesc holes(NatSet a, std::uint64_t start = 0, std::uint64_t skip = 0);
  static FamilyDesc shrinking(NatSet a, NatSet b);
  static FamilyDesc allEmpty();

  bool isRule() const { return kind != Kind::Finite; }
  auto operator<=>(const FamilyDesc&) const = default;
  std::string toString() const;
};

/// Chain: Principal(x) | Improper. Cofinite: Principal(U) | ContainsAll(A) |
/// AllNonzero | Improper. Use the factories; they normalize.
struct FilterDesc {
  enum class Kind { Principal, ContainsAll, AllNonzero, Improper };
  Kind kind = Kind::Improper;
  ElementDesc generator;
  NatSet set;

  auto operator<=>(const FilterDesc&) const = default;
  std::string toString() const;
};

/// Chain: P(m) = ↑Nat(m), m ≥ 1. Cofinite: F(n) = the cofinite sets
/// containing n, and Generic = the nonzero elements.
struct PointDesc {
  enum class Kind { P, F, Generic };
  Kind kind = Kind::Generic;
  std::uint64_t n = 0;

  auto operator<=>(const PointDesc&) const = default;
  std::string toString() const;
};

/// Chain: EmptySet | PrefixPoints(m) = {P(1)..P(m)}. Cofinite: EmptySet |
/// GenericOnly | FinitePlusGeneric(S) | CofinitePlusGeneric(B), the last
/// being {F(n) : n ∉ B} ∪ {Generic}.
struct SatSetDesc {
  enum class Kind { EmptySet, PrefixPoints, GenericOnly, FinitePlusGeneric, CofinitePlusGeneric };
  Kind kind = Kind::EmptySet;
  std::uint64_t m = 0;
  NatSet set;

  auto operator<=>(const SatSetDesc&) const = default;
  std::string toString() const;
};

/// Inverses of the toString() text forms, e.g. "Missing({1,2})",
/// "Principal(Nat(3))", "Holes(A={0},start=1,skip=0)". Throw ParseError.
ElementDesc parseElementDesc(std::string_view text);
FamilyDesc parseFamilyDesc(std::string_view text);
FilterDesc parseFilterDesc(std::string_view text);
PointDesc parsePointDesc(std::string_view text);
SatSetDesc parseSatSetDesc(std::string_view text);

/// One of the two fixture frames. Every operation checks that its
/// descriptors belong to the fixture and throws FixtureMismatch otherwise.
class SymbolicFrame {
 public:
  static SymbolicFrame chain() { return SymbolicFrame(FixtureId::ChainOmegaPlusOne); }
  static SymbolicFrame cofinite() { return SymbolicFrame(FixtureId::CofiniteNat); }

  FixtureId id() const { return id_; }
  bool isChain() const { return id_ == FixtureId::ChainOmegaPlusOne; }
  ElementDesc bottom() const { return isChain() ? ElementDesc::nat(0) : ElementDesc::empty(); }
  ElementDesc top() const { return isChain() ? ElementDesc::top() : ElementDesc::cofinite({}); }

  void require(const ElementDesc& a) const;
  void require(const FamilyDesc& f) const;
  void require(const FilterDesc& f) const;
  void require(const PointDesc& p) const;
  void require(const SatSetDesc& q) const;

 private:
  explicit SymbolicFrame(FixtureId id) : id_(id) {}
  FixtureId id_;
};

// Elements.

bool elemLeq(const SymbolicFrame& fr, const ElementDesc& a, const ElementDesc& b);
ElementDesc elemMeet(const SymbolicFrame& fr, const ElementDesc& a, const ElementDesc& b);
ElementDesc elemJoin(const SymbolicFrame& fr, const ElementDesc& a, const ElementDesc& b);
/// ⋁∅ is the bottom.
ElementDesc elemJoinFinite(const SymbolicFrame& fr, const std::vector<ElementDesc>& list);
/// The largest natural named by the descriptor, 0 if none.
std::uint64_t naturalsBound(const ElementDesc& a);

// Families.

/// Closed-form join.
ElementDesc familyJoin(const SymbolicFrame& fr, const FamilyDesc& fam);
/// g(k) for rules; the k-th member of a finite family (InvalidArgument past the end).
ElementDesc familyTerm(const SymbolicFrame& fr, const FamilyDesc& fam, std::uint64_t k);
/// g(0) ∨ ... ∨ g(k); for a finite family the join of its first k+1 members.
ElementDesc prefixJoin(const SymbolicFrame& fr, const FamilyDesc& fam, std::uint64_t k);
/// Least k whose prefix join equals the closed-form join, if one exists.
std::optional<std::uint64_t> convergenceIndex(const SymbolicFrame& fr, const FamilyDesc& fam);
/// The family {a ∧ g(k)}, again a built-in family.
FamilyDesc familyMeet(const SymbolicFrame& fr, const ElementDesc& a, const FamilyDesc& fam);
/// Past this index, g(k) is constant up to naturals above every parameter.
std::uint64_t familyHorizon(const FamilyDesc& fam);

// Filters.

FilterDesc principal(const SymbolicFrame& fr, const ElementDesc& x);
FilterDesc containsAll(const SymbolicFrame& fr, NatSet a);
FilterDesc allNonzero(const SymbolicFrame& fr);
FilterDesc improper(const SymbolicFrame& fr);
bool filterMember(const SymbolicFrame& fr, const FilterDesc& f, const ElementDesc& a);
/// F ⊆ G, from the closed-form inclusion table.
bool filterSubset(const SymbolicFrame& fr, const FilterDesc& f, const FilterDesc& g);
std::uint64_t filterHorizon(const FilterDesc& f);

// Scott-openness against the rule-tabled families.

/// The built-in family catalog plus families built from the naturals that
/// `f` names; the latter come first.
std::vector<FamilyDesc> familiesFor(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds = {});
std::vector<FamilyDesc> builtInFamilies(const SymbolicFrame& fr, const Bounds& bounds = {});
/// Elements used by the sampled law checks: naturals up to `limit`.
std::vector<ElementDesc> sampleElements(const SymbolicFrame& fr, std::uint64_t limit);

/// JoinFamilyView over a fixed list of descriptor families. Rule families
/// are scanned up to max(family horizon, filter horizon, minimumScan).
class SymbolicView {
 public:
  using Element = ElementDesc;
  using Family = FamilyDesc;

  SymbolicView(const SymbolicFrame& fr, std::vector<FamilyDesc> families, std::uint64_t filterHorizon,
               std::uint64_t minimumScan = 0);

  std::size_t familyCount() const { return families_.size(); }
  Family family(std::size_t i) const { return families_[i]; }
  Element join(const Family& f) const { return familyJoin(frame_, f); }
  std::optional<Family> finiteWitness(const Family& f, const std::function<bool(const Element&)>& inside) const;
  std::optional<Element> memberWitness(const Family& f, const std::function<bool(const Element&)>& inside) const;

 private:
  std::uint64_t scanLimit(const Family& f) const;
  SymbolicFrame frame_;
  std::vector<FamilyDesc> families_;
  std::uint64_t filterHorizon_;
  std::uint64_t minimumScan_;
};

/// Pass iff the family's join is outside F or some prefix join is inside.
FamilyVerdict<FamilyDesc> refuteScottOpen(const SymbolicFrame& fr, const FilterDesc& f, const FamilyDesc& fam,
                                          std::uint64_t minimumScan = 0);
/// The Scott condition for F over familiesFor(F).
FamilyVerdict<FamilyDesc> scottOpenByFamilies(const SymbolicFrame& fr, const FilterDesc& f,
                                              const Bounds& bounds = {}, std::uint64_t minimumScan = 0);

struct ScottClassification {
  bool scottOpen = true;
  /// Present exactly when scottOpen is false.
  std::optional<FamilyDesc> witness;
};

/// Rule table: only the chain's Principal(Top) fails. The table is checked
/// against scottOpenByFamilies and the witness against refuteScottOpen;
/// a disagreement throws FixtureMismatch.
ScottClassification classifyScottOpen(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds = {});

/// a is compact iff ↑a is Scott-open.
ScottClassification isCompactElementSym(const SymbolicFrame& fr, const ElementDesc& a, const Bounds& bounds = {});

// Points.

FilterDesc pointFilter(const SymbolicFrame& fr, const PointDesc& p);
bool pointMember(const SymbolicFrame& fr, const PointDesc& p, const ElementDesc& a);
/// Spectrum order, which is inclusion of the filters: P(j) ≤ P(k) iff k ≤ j;
/// F(n) pairwise incomparable, all below Generic.
bool pointLeq(const SymbolicFrame& fr, const PointDesc& p, const PointDesc& q);

struct PointSchema {
  std::string description;
  /// Instances with naturals up to the sampling bound.
  std::vector<PointDesc> sample;
};

PointSchema pointsOf(const SymbolicFrame& fr, const Bounds& bounds = {});

/// ⋁S ∈ F ⇒ S ∩ F ≠ ∅ over familiesFor(F).
FamilyVerdict<FamilyDesc> completelyPrimeByFamilies(const SymbolicFrame& fr, const FilterDesc& f,
                                                    const Bounds& bounds = {});
/// F proper and a ∨ b ∈ F ⇒ a ∈ F or b ∈ F over sampled pairs. Returns a
/// violating pair, or (bottom, bottom) when F is improper.
std::optional<std::pair<ElementDesc, ElementDesc>> primeWitness(const SymbolicFrame& fr, const FilterDesc& f,
                                                                std::uint64_t limit = 12);

/// All prime filters with naturals up to `limit`, points and non-points.
std::vector<FilterDesc> primeSpectrumSample(const SymbolicFrame& fr, std::uint64_t limit);
bool isPointFilter(const SymbolicFrame& fr, const FilterDesc& f);

struct FrameCompactness {
  bool topCompact = false;
  bool minimalPrimesArePoints = false;
  std::optional<FamilyDesc> witness;
  bool agree() const { return topCompact == minimalPrimesArePoints; }
};

FrameCompactness frameCompactRoutes(const SymbolicFrame& fr, const Bounds& bounds = {});
/// Throws FixtureMismatch if the two routes disagree.
bool frameCompact(const SymbolicFrame& fr, const Bounds& bounds = {});

// Compact saturated sets of Y.

SatSetDesc emptySat();
SatSetDesc prefixPoints(std::uint64_t m);
SatSetDesc genericOnly();
SatSetDesc finitePlusGeneric(NatSet s);
SatSetDesc cofinitePlusGeneric(NatSet b);
bool satContains(const SymbolicFrame& fr, const SatSetDesc& q, const PointDesc& p);
bool satSubset(const SymbolicFrame& fr, const SatSetDesc& q, const SatSetDesc& r);
/// Points of Q whose naturals are ≤ limit, in spectrum-table order.
std::vector<PointDesc> satPointsWithin(const SymbolicFrame& fr, const SatSetDesc& q, std::uint64_t limit);
/// Minimal points of Q in the spectrum order, naturals ≤ limit.
std::vector<PointDesc> satMinimal(const SymbolicFrame& fr, const SatSetDesc& q, std::uint64_t limit);
std::uint64_t satHorizon(const SatSetDesc& q);
/// Q ⊆ ζ(a).
bool zetaContains(const SymbolicFrame& fr, const SatSetDesc& q, const ElementDesc& a);

/// The points containing F. Throws NotScottOpen.
SatSetDesc hmMap(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds = {});
/// {a : Q ⊆ ζ(a)}.
FilterDesc hmInv(const SymbolicFrame& fr, const SatSetDesc& q);

/// Scott-open filter classes used by the fixture suites.
std::vector<FilterDesc> sampleScottOpenFilters(const SymbolicFrame& fr, std::uint64_t limit);

struct SymPrimeSingletonRow {
  FilterDesc filter;
  SatSetDesc points;
  std::size_t minimalCount = 0;
  bool completelyPrime = false;
  bool singletonMatches = false;
  bool intersectionMatches = false;
};

struct SymPrimeSingletonReport {
  std::vector<SymPrimeSingletonRow> rows;
  bool ok() const;
};

/// For each filter: min of its point set is a singleton iff F is completely
/// prime, and F agrees with the intersection of the points above it on
/// sampled elements.
SymPrimeSingletonReport primeSingletonSym(const SymbolicFrame& fr, const std::vector<FilterDesc>& filters,
                              const Bounds& bounds = {});
SymPrimeSingletonRow primeSingletonRow(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds = {});

}  // namespace priestley
