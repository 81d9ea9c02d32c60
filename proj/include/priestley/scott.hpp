#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>

namespace priestley {

/// A frame seen through a collection of join families.
///
/// The checks below quantify over `family(0..familyCount()-1)`. A finite
/// lattice exposes every subset; a symbolic frame exposes its rule-tabled
/// families. `finiteWitness` looks for a finite subfamily whose join
/// satisfies the predicate and `memberWitness` for a single member that
/// does; both return nullopt when none exists.
template <class V>
concept JoinFamilyView = requires(const V& v, const typename V::Family& f, std::size_t i,
                                  const std::function<bool(const typename V::Element&)>& pred) {
  typename V::Element;
  typename V::Family;
  { v.familyCount() } -> std::convertible_to<std::size_t>;
  { v.family(i) } -> std::convertible_to<typename V::Family>;
  { v.join(f) } -> std::convertible_to<typename V::Element>;
  { v.finiteWitness(f, pred) } -> std::convertible_to<std::optional<typename V::Family>>;
  { v.memberWitness(f, pred) } -> std::convertible_to<std::optional<typename V::Element>>;
};

template <class Family>
struct FamilyVerdict {
  bool holds = true;
  /// A family whose join satisfies the predicate with no finite subfamily
  /// (resp. no member) that does.
  std::optional<Family> counterexample;
  std::size_t familiesChecked = 0;
  std::size_t familiesWithJoinInside = 0;
};

/// `inside` must describe an upset. Holds iff every family whose join is
/// inside has a finite subfamily whose join is inside.
template <JoinFamilyView V>
FamilyVerdict<typename V::Family> checkScottCondition(
    const V& view, const std::function<bool(const typename V::Element&)>& inside) {
  FamilyVerdict<typename V::Family> verdict;
  const std::size_t count = view.familyCount();
  for (std::size_t i = 0; i < count; ++i) {
    typename V::Family fam = view.family(i);
    ++verdict.familiesChecked;
    if (!inside(view.join(fam))) continue;
    ++verdict.familiesWithJoinInside;
    if (!view.finiteWitness(fam, inside)) {
      verdict.holds = false;
      verdict.counterexample = std::move(fam);
      return verdict;
    }
  }
  return verdict;
}

/// Holds iff every family whose join is inside has a member inside.
template <JoinFamilyView V>
FamilyVerdict<typename V::Family> checkCompletePrimeness(
    const V& view, const std::function<bool(const typename V::Element&)>& inside) {
  FamilyVerdict<typename V::Family> verdict;
  const std::size_t count = view.familyCount();
  for (std::size_t i = 0; i < count; ++i) {
    typename V::Family fam = view.family(i);
    ++verdict.familiesChecked;
    if (!inside(view.join(fam))) continue;
    ++verdict.familiesWithJoinInside;
    if (!view.memberWitness(fam, inside)) {
      verdict.holds = false;
      verdict.counterexample = std::move(fam);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace priestley
