#include "priestley/topspace.hpp"

#include <algorithm>

namespace priestley {

bool FiniteTopSpace::isOpen(ElemSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

ElemSet FiniteTopSpace::closureOf(ElemSet s) const {
  // Points every open neighbourhood of which meets s.
  ElemSet out;
  for (int x : all()) {
    bool adherent = std::all_of(opens_.begin(), opens_.end(),
                                [&](ElemSet u) { return !u.contains(x) || u.intersects(s); });
    if (adherent) out.insert(x);
  }
  return out;
}

ElemSet FiniteTopSpace::interiorOf(ElemSet s) const {
  ElemSet out;
  for (ElemSet u : opens_) {
    if (u.subsetOf(s)) out |= u;
  }
  return out;
}

std::vector<ElemSet> FiniteTopSpace::closedSets() const {
  std::vector<ElemSet> out;
  for (ElemSet u : opens_) out.push_back(all() - u);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteTopSpace buildSpace(std::size_t n, std::vector<ElemSet> opens) {
  if (n > kMaxElements) throw Error(ErrorKind::BoundExceeded, "space larger than 64 points");
  for (ElemSet u : opens) {
    if (!u.fitsIn(n)) throw Error(ErrorKind::IndexOutOfRange, "open set references a missing point", u.toVector());
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](ElemSet s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!has(ElemSet())) throw Error(ErrorKind::NotATopology, "the empty set is not open");
  if (!has(ElemSet::full(n))) throw Error(ErrorKind::NotATopology, "the whole space is not open");
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      std::vector<int> witness = opens[i].toVector();
      witness.push_back(-1);
      for (int x : opens[j]) witness.push_back(x);
      if (!has(opens[i] | opens[j])) {
        throw Error(ErrorKind::NotATopology,
                    "union of " + opens[i].toString() + " and " + opens[j].toString() + " is not open", witness);
      }
      if (!has(opens[i] & opens[j])) {
        throw Error(ErrorKind::NotATopology,
                    "intersection of " + opens[i].toString() + " and " + opens[j].toString() + " is not open",
                    witness);
      }
    }
  }
  FiniteTopSpace x;
  x.n_ = n;
  x.opens_ = std::move(opens);
  return x;
}

FiniteTopSpace alexandrov(const FinPoset& p, const Bounds& bounds) {
  return buildSpace(p.size(), enumerateUpsets(p, bounds));
}

FinLattice openFrame(const FiniteTopSpace& x) {
  const auto& opens = x.opens();
  requireWithin(opens.size(), kMaxElements, "openFrame");
  std::vector<ElemSet> up(opens.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (opens[i].subsetOf(opens[j])) up[i].insert(static_cast<int>(j));
    }
    labels.push_back(opens[i].toString());
  }
  FinLattice l = buildLattice(FinPoset::fromUpsets(std::move(up), std::move(labels)));
  requireDistributive(l);
  return l;
}

namespace {

// Opens containing each point.
std::vector<ElemSet> neighbourhoodTraces(const FiniteTopSpace& x) {
  std::vector<ElemSet> out(x.size());
  const auto& opens = x.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (int p : opens[i]) out[p].insert(static_cast<int>(i));
  }
  return out;
}

}  // namespace

bool isT0(const FiniteTopSpace& x) {
  std::vector<ElemSet> traces = neighbourhoodTraces(x);
  std::sort(traces.begin(), traces.end());
  return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

FinPoset specialization(const FiniteTopSpace& x) {
  const int n = static_cast<int>(x.size());
  // x ≤ y iff x ∈ cl{y} iff every open around x contains y.
  std::vector<ElemSet> traces = neighbourhoodTraces(x);
  std::vector<ElemSet> up(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (traces[a].subsetOf(traces[b])) up[a].insert(b);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (up[a].contains(b) && up[b].contains(a)) {
        throw Error(ErrorKind::NotT0, "points " + std::to_string(a) + " and " + std::to_string(b) +
                                          " are topologically indistinguishable", {a, b});
      }
    }
  }
  return FinPoset::fromUpsets(std::move(up));
}

std::optional<ElemSet> soberWitness(const FiniteTopSpace& x, const Bounds& bounds) {
  requireWithin(x.size(), bounds.enumeration, "isSober");
  std::vector<ElemSet> closed = x.closedSets();
  for (ElemSet c : closed) {
    if (c.empty()) continue;
    bool reducible = false;
    for (ElemSet c1 : closed) {
      if (c1 == c || !c1.subsetOf(c)) continue;
      for (ElemSet c2 : closed) {
        if (c2 == c || !c2.subsetOf(c)) continue;
        if ((c1 | c2) == c) {
          reducible = true;
          break;
        }
      }
      if (reducible) break;
    }
    if (reducible) continue;
    int generic = 0;
    for (int p : c) {
      if (x.closureOf(ElemSet::single(p)) == c) ++generic;
    }
    if (generic != 1) return c;
  }
  return std::nullopt;
}

bool isSober(const FiniteTopSpace& x, const Bounds& bounds) { return !soberWitness(x, bounds).has_value(); }

namespace {

bool compactIn(const FinLattice& frame, const std::vector<ElemSet>& opens, ElemSet k, const Bounds& bounds) {
  // The opens containing K form an upset of O(X); K is compact exactly when
  // that upset satisfies the Scott condition (joins in O(X) are unions).
  ElemSet containing;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (k.subsetOf(opens[i])) containing.insert(static_cast<int>(i));
  }
  if (frame.size() <= bounds.scott) return scottCondition(frame, containing, bounds).holds;
  Bounds wide = bounds;
  wide.enumeration = std::max(bounds.enumeration, frame.size());
  return scottConditionByIdeals(frame, containing, wide);
}

}  // namespace

bool isCompactSubset(const FiniteTopSpace& x, ElemSet k, const Bounds& bounds) {
  if (!k.fitsIn(x.size())) throw Error(ErrorKind::IndexOutOfRange, "set references a missing point");
  return compactIn(openFrame(x), x.opens(), k, bounds);
}

std::vector<ElemSet> compactSaturated(const FiniteTopSpace& x, const Bounds& bounds) {
  requireWithin(x.size(), bounds.enumeration, "compactSaturated");
  FinPoset spec = specialization(x);
  FinLattice frame = openFrame(x);

  std::vector<ElemSet> out;
  const std::uint64_t count = std::uint64_t{1} << x.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    ElemSet s(m);
    ElemSet hull = x.all();
    for (ElemSet u : x.opens()) {
      if (s.subsetOf(u)) hull &= u;
    }
    if (hull != s) continue;
    if (compactIn(frame, x.opens(), s, bounds)) out.push_back(s);
  }

  std::vector<ElemSet> upsets = enumerateUpsets(spec, bounds);
  if (out != upsets) {
    throw Error(ErrorKind::IsoFailure, "compact saturated sets differ from the specialization upsets");
  }
  return out;
}

HofmannMisloveReport hofmannMislove(const FiniteTopSpace& x, const Bounds& bounds) {
  if (auto witness = soberWitness(x, bounds)) {
    throw Error(ErrorKind::NotSober, "irreducible closed set " + witness->toString() + " has no unique generic point",
                witness->toVector());
  }
  HofmannMisloveReport out;
  FinLattice frame = openFrame(x);
  const auto& opens = x.opens();
  Bounds frameBounds = bounds;
  frameBounds.enumeration = std::max(bounds.enumeration, frame.size());

  std::vector<Filter> filters = enumerateFilters(frame, frameBounds);
  out.filters = filters.size();
  std::vector<Filter> open;
  for (const Filter& f : filters) {
    bool scott = frame.size() <= bounds.scott ? isScottOpenFinite(frame, f, bounds)
                                              : isScottOpenByIdeals(frame, f, frameBounds);
    if (scott) open.push_back(f);
  }
  out.scottOpenFilters = open.size();
  std::vector<ElemSet> ksat = compactSaturated(x, bounds);
  out.compactSaturated = ksat.size();

  auto toSet = [&](const Filter& f) {
    ElemSet k = x.all();
    for (int i : f.members) k &= opens[i];
    return k;
  };
  auto toFilter = [&](ElemSet k) {
    ElemSet members;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (k.subsetOf(opens[i])) members.insert(static_cast<int>(i));
    }
    return Filter{members};
  };

  out.mutualInverse = true;
  for (const Filter& f : open) {
    ElemSet k = toSet(f);
    out.pairs.emplace_back(f, k);
    if (toFilter(k) != f || !std::binary_search(ksat.begin(), ksat.end(), k)) out.mutualInverse = false;
  }
  for (ElemSet k : ksat) {
    Filter f = toFilter(k);
    if (toSet(f) != k || !std::binary_search(open.begin(), open.end(), f)) out.mutualInverse = false;
  }
  out.orderReversing = true;
  for (const auto& [f1, k1] : out.pairs) {
    for (const auto& [f2, k2] : out.pairs) {
      if (f1.members.subsetOf(f2.members) != k2.subsetOf(k1)) out.orderReversing = false;
    }
  }
  return out;
}

FramePoints framePointsFinite(const FinLattice& l, const Bounds& bounds) {
  requireDistributive(l);
  FramePoints out;
  for (const Filter& f : enumerateFilters(l, bounds)) {
    if (isCompletelyPrimeFinite(l, f)) out.points.push_back(f);
  }
  std::vector<ElemSet> opens;
  for (int a = 0; a < static_cast<int>(l.size()); ++a) {
    ElemSet z;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
      if (out.points[i].members.contains(a)) z.insert(static_cast<int>(i));
    }
    opens.push_back(z);
  }
  out.space = buildSpace(out.points.size(), std::move(opens));
  return out;
}

std::vector<int> pointsHomeomorphism(const FiniteTopSpace& x, const Bounds& bounds) {
  FinLattice frame = openFrame(x);
  Bounds frameBounds = bounds;
  frameBounds.enumeration = std::max(bounds.enumeration, frame.size());
  FramePoints pts = framePointsFinite(frame, frameBounds);
  const auto& opens = x.opens();

  std::vector<int> image(x.size(), -1);
  ElemSet hit;
  for (int p : x.all()) {
    ElemSet nbhd;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (opens[i].contains(p)) nbhd.insert(static_cast<int>(i));
    }
    auto it = std::find(pts.points.begin(), pts.points.end(), Filter{nbhd});
    if (it == pts.points.end()) {
      throw Error(ErrorKind::IsoFailure, "neighbourhood filter of point " + std::to_string(p) + " is not a point", {p});
    }
    image[p] = static_cast<int>(it - pts.points.begin());
    hit.insert(image[p]);
  }
  if (hit.size() != static_cast<int>(x.size()) || pts.points.size() != x.size()) {
    throw Error(ErrorKind::IsoFailure, "points of O(X) are not in bijection with X");
  }
  // Open U of X must map onto ζ(U).
  for (std::size_t i = 0; i < opens.size(); ++i) {
    ElemSet mapped;
    for (int p : opens[i]) mapped.insert(image[p]);
    ElemSet z;
    for (std::size_t j = 0; j < pts.points.size(); ++j) {
      if (pts.points[j].members.contains(static_cast<int>(i))) z.insert(static_cast<int>(j));
    }
    if (mapped != z) throw Error(ErrorKind::IsoFailure, "open " + opens[i].toString() + " is not carried to ζ(U)");
  }
  return image;
}

FiniteTopSpace spectralFromPriestley(const PriestleyDual& xd, const Bounds& bounds) {
  std::vector<ElemSet> opens;
  for (ElemSet u : enumerateUpsets(xd.order(), bounds)) {
    if (xd.isOpen(u)) opens.push_back(u);
  }
  FiniteTopSpace space = buildSpace(xd.size(), std::move(opens));
  std::vector<ElemSet> clup;
  for (const ClosedUpset& k : closedUpsets(xd, bounds)) clup.push_back(k.members);
  if (clup != compactSaturated(space, bounds)) {
    throw Error(ErrorKind::IsoFailure, "closed upsets differ from the compact saturated sets of the open-upset space");
  }
  return space;
}

}  // namespace priestley
