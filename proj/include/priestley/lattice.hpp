#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "priestley/poset.hpp"
#include "priestley/scott.hpp"

namespace priestley {

/// A finite bounded lattice with precomputed meet and join tables.
class FinLattice {
 public:
  const FinPoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int meet(int a, int b) const { return meet_[index(a, b)]; }
  int join(int a, int b) const { return join_[index(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  ElemSet all() const { return poset_.all(); }
  const std::string& label(int a) const { return poset_.label(a); }

  /// ⋁S; the bottom for S = ∅.
  int joinOf(ElemSet s) const;
  /// ⋀S; the top for S = ∅.
  int meetOf(ElemSet s) const;

 private:
  friend FinLattice buildLattice(FinPoset p);
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * size() + b; }

  FinPoset poset_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  int bottom_ = 0;
  int top_ = 0;
};

/// A filter of some FinLattice: nonempty, upward closed, closed under binary
/// meets. The improper filter (every element) is a filter.
struct Filter {
  ElemSet members;
  auto operator<=>(const Filter&) const = default;
};

/// Throws NotALattice with the offending pair when some glb or lub is missing.
FinLattice buildLattice(FinPoset p);

/// First triple (a, b, c) in lexicographic order with
/// a∧(b∨c) ≠ (a∧b)∨(a∧c), or nullopt.
std::optional<std::array<int, 3>> checkDistributive(const FinLattice& l);
/// Throws NotDistributive with the triple as witness.
void requireDistributive(const FinLattice& l);

/// The downsets of P ordered by inclusion.
FinLattice downsetLattice(const FinPoset& p, const Bounds& bounds = {});

bool isFilter(const FinLattice& l, ElemSet s);
/// Validating constructor.
Filter makeFilter(const FinLattice& l, ElemSet s);
Filter principalFilter(const FinLattice& l, int a);
Filter improperFilter(const FinLattice& l);
bool isProper(const FinLattice& l, const Filter& f);

/// Smallest filter containing S; {top} for S = ∅.
Filter filterGenerated(const FinLattice& l, ElemSet s);
/// Every filter, improper one included, in ascending mask order.
std::vector<Filter> enumerateFilters(const FinLattice& l, const Bounds& bounds = {});

/// a∨b ∈ F ⇒ a ∈ F or b ∈ F; false for the improper filter.
bool isPrime(const FinLattice& l, const Filter& f);
/// ⋁S ∈ F ⇒ S ∩ F ≠ ∅ for every S ⊆ L.
bool isCompletelyPrimeFinite(const FinLattice& l, const Filter& f);

/// Every subset of a finite lattice as a join family.
class FiniteLatticeView {
 public:
  using Element = int;
  using Family = ElemSet;

  explicit FiniteLatticeView(const FinLattice& l) : lattice_(&l) {}

  std::size_t familyCount() const { return std::size_t{1} << lattice_->size(); }
  Family family(std::size_t i) const { return ElemSet(i); }
  Element join(const Family& f) const { return lattice_->joinOf(f); }
  /// A finite family is its own finite subfamily; members are dropped while
  /// the join stays inside, so the witness is irredundant.
  std::optional<Family> finiteWitness(const Family& f, const std::function<bool(const int&)>& inside) const;
  std::optional<Element> memberWitness(const Family& f, const std::function<bool(const int&)>& inside) const;

 private:
  const FinLattice* lattice_;
};

/// The Scott condition for an arbitrary upset `inside` of L, over all 2^n
/// subsets. Throws BoundExceeded when n > bounds.scott.
FamilyVerdict<ElemSet> scottCondition(const FinLattice& l, ElemSet inside, const Bounds& bounds = {});
/// Same condition decided over ideals: every ideal whose join is inside
/// meets `inside`. Exact in any complete lattice.
bool scottConditionByIdeals(const FinLattice& l, ElemSet inside, const Bounds& bounds = {});

/// Literal Scott-openness: quantifies over all 2^n subsets.
/// Throws BoundExceeded when n > bounds.scott.
FamilyVerdict<ElemSet> scottVerdict(const FinLattice& l, const Filter& f, const Bounds& bounds = {});
bool isScottOpenFinite(const FinLattice& l, const Filter& f, const Bounds& bounds = {});

/// Scott-openness through ideals: F is Scott-open iff every ideal I with
/// ⋁I ∈ F meets F. Exact in any complete lattice; quantifies over the
/// ideals of L instead of all subsets, so it scales past bounds.scott.
bool isScottOpenByIdeals(const FinLattice& l, const Filter& f, const Bounds& bounds = {});

/// a ≤ ⋁S ⇒ a ≤ ⋁T for some finite T ⊆ S, checked over all subsets.
/// Throws BoundExceeded when n > bounds.scott.
bool isCompactElement(const FinLattice& l, int a, const Bounds& bounds = {});

/// Ideals: nonempty downsets closed under binary joins, ascending mask order.
std::vector<ElemSet> enumerateIdeals(const FinLattice& l, const Bounds& bounds = {});

struct IdealFrame {
  FinLattice ideals;
  /// Element sets of L making up each ideal, indexed like `ideals`.
  std::vector<ElemSet> idealSets;
  /// a ↦ index of ↓a.
  std::vector<int> principal;
  /// a ↦ ↓a is a lattice isomorphism onto Idl(L).
  bool isomorphic = false;
  /// Compact elements of Idl(L) are exactly the principal ideals. Only
  /// evaluated when Idl(L) is within bounds.scott.
  std::optional<bool> compactArePrincipal;
  /// The compact elements form a bounded sublattice.
  std::optional<bool> compactFormSublattice;
};

IdealFrame idealLattice(const FinLattice& l, const Bounds& bounds = {});

}  // namespace priestley
