#pragma once

#include <string>
#include <utility>
#include <vector>

#include "priestley/elemset.hpp"
#include "priestley/error.hpp"

namespace priestley {

enum class Direction { Up, Down };
enum class Extreme { Min, Max };

/// A finite partial order on {0..n-1}.
///
/// The order is stored twice, as the principal upset and the principal
/// downset of every element. Instances are immutable; the factories check
/// reflexivity, antisymmetry and transitivity.
class FinPoset {
 public:
  /// From a full order relation: `up[i]` is the set of j with i <= j.
  /// n = 0 is allowed here (empty duals need it).
  static FinPoset fromUpsets(std::vector<ElemSet> up, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool leq(int a, int b) const { return up_[a].contains(b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  ElemSet upOf(int a) const { return up_[a]; }
  ElemSet downOf(int a) const { return down_[a]; }
  ElemSet all() const { return ElemSet::full(size()); }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int indexOf(const std::string& label) const;

  /// Pairs (a, b) with a < b and nothing strictly between, sorted.
  std::vector<std::pair<int, int>> covers() const;
  bool isUpset(ElemSet s) const;
  bool isDownset(ElemSet s) const;
  /// The order with every pair reversed.
  FinPoset dual() const;
  /// Sub-order induced on `members`, reindexed in ascending order.
  FinPoset restrict(ElemSet members) const;

  bool operator==(const FinPoset& o) const { return up_ == o.up_; }

 private:
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  std::vector<std::string> labels_;
};

/// Reflexive-transitive closure of `covers` on {0..n-1}.
/// Throws CycleDetected, IndexOutOfRange, or InvalidArgument for n = 0.
FinPoset buildPoset(std::size_t n, const std::vector<std::pair<int, int>>& covers,
                    std::vector<std::string> labels = {});

/// ↑S or ↓S.
ElemSet closure(const FinPoset& p, ElemSet s, Direction dir);

/// Minimal (or maximal) members of S relative to the order restricted to S.
ElemSet extremes(const FinPoset& p, ElemSet s, Extreme which);

/// Every upset of P in ascending mask order.
std::vector<ElemSet> enumerateUpsets(const FinPoset& p, const Bounds& bounds = {});
/// Every downset of P in ascending mask order.
std::vector<ElemSet> enumerateDownsets(const FinPoset& p, const Bounds& bounds = {});

/// Default element labels: "0", "1", ...
std::vector<std::string> defaultLabels(std::size_t n);
/// "{a,b}" using the poset's labels.
std::string setLabel(const FinPoset& p, ElemSet s);

}  // namespace priestley
