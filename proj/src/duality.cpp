#include "priestley/duality.hpp"

#include <algorithm>

#include "priestley/topspace.hpp"

namespace priestley {

bool PriestleyDual::isOpen(ElemSet s) const {
  for (ElemSet atom : atoms_) {
    if (atom.intersects(s) && !atom.subsetOf(s)) return false;
  }
  return true;
}

ElemSet PriestleyDual::closureOf(ElemSet s) const {
  ElemSet out;
  for (ElemSet atom : atoms_) {
    if (atom.intersects(s)) out |= atom;
  }
  return out;
}

ElemSet PriestleyDual::interiorOf(ElemSet s) const {
  ElemSet out;
  for (ElemSet atom : atoms_) {
    if (atom.subsetOf(s)) out |= atom;
  }
  return out;
}

std::vector<ElemSet> PriestleyDual::clopens(const Bounds& bounds) const {
  requireWithin(atoms_.size(), bounds.enumeration, "clopens");
  std::vector<ElemSet> out;
  const std::uint64_t count = std::uint64_t{1} << atoms_.size();
  out.reserve(count);
  for (std::uint64_t pick = 0; pick < count; ++pick) {
    ElemSet u;
    for (int i : ElemSet(pick)) u |= atoms_[i];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PriestleyDual dualSpace(const FinLattice& l, const Bounds& bounds) {
  requireWithin(l.size(), bounds.enumeration, "dualSpace");
  requireDistributive(l);

  PriestleyDual xd;
  xd.base_ = l;
  for (const Filter& f : enumerateFilters(l, bounds)) {
    if (isPrime(l, f)) xd.points_.push_back(f);
  }
  const std::size_t n = xd.points_.size();

  std::vector<ElemSet> up(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (xd.points_[i].members.subsetOf(xd.points_[j].members)) up[i].insert(static_cast<int>(j));
    }
    labels.push_back("up(" + l.label(l.meetOf(xd.points_[i].members)) + ")");
  }
  xd.order_ = FinPoset::fromUpsets(std::move(up), std::move(labels));

  xd.sigma_.assign(l.size(), ElemSet());
  for (std::size_t i = 0; i < n; ++i) {
    for (int a : xd.points_[i].members) xd.sigma_[a].insert(static_cast<int>(i));
  }

  // Atoms of the Boolean algebra generated by the σ(a): refine {X} by each σ(a).
  std::vector<ElemSet> atoms;
  if (n > 0) atoms.push_back(ElemSet::full(n));
  for (ElemSet s : xd.sigma_) {
    std::vector<ElemSet> refined;
    for (ElemSet atom : atoms) {
      if (!(atom & s).empty()) refined.push_back(atom & s);
      if (!(atom - s).empty()) refined.push_back(atom - s);
    }
    atoms = std::move(refined);
  }
  std::sort(atoms.begin(), atoms.end());
  xd.atoms_ = std::move(atoms);

  for (std::size_t i = 0; i < n; ++i) {
    if (xd.isClopen(xd.order_.downOf(static_cast<int>(i)))) xd.y_.insert(static_cast<int>(i));
  }
  return xd;
}

ClosedUpset makeClosedUpset(const PriestleyDual& xd, ElemSet s) {
  if (!s.fitsIn(xd.size())) throw Error(ErrorKind::IndexOutOfRange, "set references a missing point");
  if (!xd.order().isUpset(s) || !xd.isClosed(s)) {
    throw Error(ErrorKind::InvalidArgument, "not a closed upset: " + setLabel(xd.order(), s));
  }
  return ClosedUpset{s};
}

std::vector<ClosedUpset> closedUpsets(const PriestleyDual& xd, const Bounds& bounds) {
  std::vector<ClosedUpset> out;
  for (ElemSet u : enumerateUpsets(xd.order(), bounds)) {
    if (xd.isClosed(u)) out.push_back(ClosedUpset{u});
  }
  return out;
}

Reconstruction reconstruct(const PriestleyDual& xd) {
  Reconstruction out;
  Bounds wide;
  wide.enumeration = kMaxElements;
  for (ElemSet u : enumerateUpsets(xd.order(), wide)) {
    if (xd.isClopen(u)) out.clopenUpsets.push_back(u);
  }
  const std::size_t m = out.clopenUpsets.size();
  if (m > kMaxElements) throw Error(ErrorKind::BoundExceeded, "too many clopen upsets");
  std::vector<ElemSet> up(m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (out.clopenUpsets[i].subsetOf(out.clopenUpsets[j])) up[i].insert(static_cast<int>(j));
    }
    labels.push_back(setLabel(xd.order(), out.clopenUpsets[i]));
  }
  out.upsetLattice = buildLattice(FinPoset::fromUpsets(std::move(up), std::move(labels)));

  const FinLattice& d = xd.base();
  const int n = static_cast<int>(d.size());
  out.sigmaImage.assign(n, -1);
  ElemSet image;
  for (int a = 0; a < n; ++a) {
    auto it = std::find(out.clopenUpsets.begin(), out.clopenUpsets.end(), xd.sigma(a));
    if (it == out.clopenUpsets.end()) {
      throw Error(ErrorKind::IsoFailure, "σ(" + d.label(a) + ") is not a clopen upset", {a});
    }
    out.sigmaImage[a] = static_cast<int>(it - out.clopenUpsets.begin());
    image.insert(out.sigmaImage[a]);
  }
  if (image.size() != n || m != d.size()) {
    throw Error(ErrorKind::IsoFailure, "σ is not a bijection onto the clopen upsets");
  }
  const auto& img = out.sigmaImage;
  const FinLattice& u = out.upsetLattice;
  if (img[d.bottom()] != u.bottom() || img[d.top()] != u.top()) {
    throw Error(ErrorKind::IsoFailure, "σ does not preserve bounds");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (img[d.meet(a, b)] != u.meet(img[a], img[b]) || img[d.join(a, b)] != u.join(img[a], img[b])) {
        throw Error(ErrorKind::IsoFailure, "σ does not preserve meets or joins", {a, b});
      }
    }
  }
  return out;
}

bool isStoneEmbedding(const PriestleyDual& xd) {
  const FinLattice& d = xd.base();
  const int n = static_cast<int>(d.size());
  if (!xd.sigma(d.bottom()).empty() || xd.sigma(d.top()) != xd.all()) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (xd.sigma(d.meet(a, b)) != (xd.sigma(a) & xd.sigma(b))) return false;
      if (xd.sigma(d.join(a, b)) != (xd.sigma(a) | xd.sigma(b))) return false;
      if (d.leq(a, b) != xd.sigma(a).subsetOf(xd.sigma(b))) return false;
    }
  }
  return true;
}

ClosedUpset filterToK(const PriestleyDual& xd, const Filter& f) {
  ElemSet k = xd.all();
  for (int a : f.members) k &= xd.sigma(a);
  return ClosedUpset{k};
}

Filter kToFilter(const PriestleyDual& xd, const ClosedUpset& k) {
  ElemSet members;
  for (int a = 0; a < static_cast<int>(xd.base().size()); ++a) {
    if (k.members.subsetOf(xd.sigma(a))) members.insert(a);
  }
  return Filter{members};
}

FilterBijection filterBijection(const PriestleyDual& xd, const Bounds& bounds) {
  FilterBijection out;
  std::vector<Filter> filters = enumerateFilters(xd.base(), bounds);
  std::vector<ClosedUpset> ups = closedUpsets(xd, bounds);
  out.filters = filters.size();
  out.closedUpsets = ups.size();

  out.mutualInverse = true;
  std::vector<ClosedUpset> images;
  for (const Filter& f : filters) {
    ClosedUpset k = filterToK(xd, f);
    images.push_back(k);
    if (kToFilter(xd, k) != f || !std::binary_search(ups.begin(), ups.end(), k)) {
      out.mutualInverse = false;
      if (!out.witness) out.witness = f;
    }
  }
  for (const ClosedUpset& k : ups) {
    Filter f = kToFilter(xd, k);
    if (!isFilter(xd.base(), f.members) || filterToK(xd, f) != k) out.mutualInverse = false;
  }

  out.antitone = true;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    for (std::size_t j = 0; j < filters.size(); ++j) {
      bool filterLeq = filters[i].members.subsetOf(filters[j].members);
      bool upsetGeq = images[j].members.subsetOf(images[i].members);
      if (filterLeq != upsetGeq) {
        out.antitone = false;
        if (!out.witness) out.witness = filters[i];
      }
    }
  }
  return out;
}

ElemSet zeta(const PriestleyDual& xd, int a) { return xd.sigma(a) & xd.y(); }

bool isSUpset(const PriestleyDual& xd, const ClosedUpset& k) {
  return extremes(xd.order(), k.members, Extreme::Min).subsetOf(xd.y());
}

FilterConditions filterConditions(const PriestleyDual& xd, const Filter& f, const Bounds& bounds,
                                   ScottRoute route) {
  FilterConditions out;
  out.scottOpen = route == ScottRoute::Literal ? isScottOpenFinite(xd.base(), f, bounds)
                                               : isScottOpenByIdeals(xd.base(), f, bounds);
  ClosedUpset k = filterToK(xd, f);
  out.minInY = isSUpset(xd, k);

  out.closureCondition = true;
  for (ElemSet u : enumerateUpsets(xd.order(), bounds)) {
    if (!xd.isOpen(u)) continue;
    if (k.members.subsetOf(xd.closureOf(u)) && !k.members.subsetOf(u)) {
      out.closureCondition = false;
      break;
    }
  }
  return out;
}

namespace {

// KSat of Y with the topology {ζ(a)}, returned with point indices of X.
std::vector<ElemSet> compactSaturatedOfY(const PriestleyDual& xd, const Bounds& bounds) {
  std::vector<int> yPoints = xd.y().toVector();
  std::vector<int> local(xd.size(), -1);
  for (std::size_t i = 0; i < yPoints.size(); ++i) local[yPoints[i]] = static_cast<int>(i);
  auto toLocal = [&](ElemSet s) {
    ElemSet out;
    for (int x : s) out.insert(local[x]);
    return out;
  };
  std::vector<ElemSet> opens;
  for (int a = 0; a < static_cast<int>(xd.base().size()); ++a) opens.push_back(toLocal(zeta(xd, a)));
  FiniteTopSpace ySpace = buildSpace(yPoints.size(), std::move(opens));

  std::vector<ElemSet> out;
  for (ElemSet q : compactSaturated(ySpace, bounds)) {
    ElemSet global;
    for (int i : q) global.insert(yPoints[i]);
    out.push_back(global);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ScottOpenIso hmFiniteIso(const PriestleyDual& xd, const Bounds& bounds, ScottRoute route) {
  ScottOpenIso out;
  out.conditionsCoherent = true;
  std::vector<Filter> openFilters;
  for (const Filter& f : enumerateFilters(xd.base(), bounds)) {
    FilterConditions c = filterConditions(xd, f, bounds, route);
    out.conditionsCoherent = out.conditionsCoherent && c.coherent();
    if (c.scottOpen) openFilters.push_back(f);
  }
  out.scottOpenFilters = openFilters.size();

  std::vector<ElemSet> sUps;
  for (const ClosedUpset& k : closedUpsets(xd, bounds)) {
    if (isSUpset(xd, k)) sUps.push_back(k.members);
  }
  out.sUpsets = sUps.size();

  std::vector<ElemSet> ksat = compactSaturatedOfY(xd, bounds);
  out.compactSaturatedInY = ksat.size();

  auto f = [&](ElemSet k) { return k & xd.y(); };
  auto g = [&](ElemSet q) { return closure(xd.order(), q, Direction::Up); };

  out.gAfterF = true;
  for (ElemSet k : sUps) {
    if (g(f(k)) != k || !std::binary_search(ksat.begin(), ksat.end(), f(k))) out.gAfterF = false;
  }
  out.fAfterG = true;
  for (ElemSet q : ksat) {
    if (f(g(q)) != q || !std::binary_search(sUps.begin(), sUps.end(), g(q))) out.fAfterG = false;
  }

  for (const Filter& fl : openFilters) out.pairs.emplace_back(fl, f(filterToK(xd, fl).members));
  std::vector<ElemSet> images;
  for (const auto& [fl, q] : out.pairs) images.push_back(q);
  std::sort(images.begin(), images.end());
  out.orderIso = images == ksat;
  for (const auto& [f1, q1] : out.pairs) {
    for (const auto& [f2, q2] : out.pairs) {
      if (f2.members.subsetOf(f1.members) != q1.subsetOf(q2)) out.orderIso = false;
    }
  }
  return out;
}

bool PrimeSingletonReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const PrimeSingletonRow& r) { return r.singletonMatches && r.intersectionMatches; });
}

PrimeSingletonReport primeSingletonCheck(const PriestleyDual& xd, const Bounds& bounds, ScottRoute route) {
  PrimeSingletonReport out;
  const FinLattice& l = xd.base();
  for (const Filter& f : enumerateFilters(l, bounds)) {
    bool open = route == ScottRoute::Literal ? isScottOpenFinite(l, f, bounds) : isScottOpenByIdeals(l, f, bounds);
    if (!open) continue;
    PrimeSingletonRow row{f, extremes(xd.order(), filterToK(xd, f).members, Extreme::Min), false, false, false};
    row.completelyPrime = isCompletelyPrimeFinite(l, f);
    row.singletonMatches = row.completelyPrime == (row.minK.size() == 1);
    ElemSet meet = l.all();
    for (const Filter& x : xd.points()) {
      if (f.members.subsetOf(x.members)) meet &= x.members;
    }
    row.intersectionMatches = meet == f.members;
    out.rows.push_back(row);
  }
  return out;
}

StructuralReport structuralValidators(const PriestleyDual& xd, const Bounds& bounds) {
  StructuralReport out;
  const FinPoset& ord = xd.order();
  // Every union of atoms is open and closed, so this list is both the opens
  // and the closed sets.
  std::vector<ElemSet> clop = xd.clopens(bounds);
  std::vector<ElemSet> clopUps;
  for (ElemSet u : clop) {
    if (ord.isUpset(u)) clopUps.push_back(u);
  }

  const int n = static_cast<int>(xd.size());
  for (int x = 0; x < n && out.separation.ok; ++x) {
    for (int y = 0; y < n; ++y) {
      if (ord.leq(x, y)) continue;
      bool separated = std::any_of(clopUps.begin(), clopUps.end(),
                                   [&](ElemSet u) { return u.contains(x) && !u.contains(y); });
      if (!separated) {
        out.separation = {false, {x, y}};
        break;
      }
    }
  }
  for (ElemSet u : clop) {
    if (xd.isOpen(u) && xd.isClosed(u) && !xd.isClopen(closure(ord, u, Direction::Down))) {
      out.esakia = {false, u.toVector()};
      break;
    }
  }
  for (ElemSet u : clop) {
    if (xd.isOpen(u) && ord.isUpset(u) && !xd.isOpen(xd.closureOf(u))) {
      out.extremallyOrderDisconnected = {false, u.toVector()};
      break;
    }
  }
  for (ElemSet c : clop) {
    if (xd.isClosed(c) && !xd.isClosed(closure(ord, c, Direction::Down))) {
      out.downsetOfClosedIsClosed = {false, c.toVector()};
      break;
    }
  }
  return out;
}

bool spatialViaDensity(const PriestleyDual& xd, const Bounds& bounds) {
  const FinLattice& l = xd.base();
  bool dense = xd.closureOf(xd.y()) == xd.all();

  std::vector<Filter> completelyPrime;
  for (const Filter& f : enumerateFilters(l, bounds)) {
    if (isCompletelyPrimeFinite(l, f)) completelyPrime.push_back(f);
  }
  bool separated = true;
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n && separated; ++a) {
    for (int b = 0; b < n && separated; ++b) {
      if (l.leq(a, b)) continue;
      separated = std::any_of(completelyPrime.begin(), completelyPrime.end(), [&](const Filter& f) {
        return f.members.contains(a) && !f.members.contains(b);
      });
    }
  }
  if (dense != separated) {
    throw Error(ErrorKind::IsoFailure, "density of Y and spatiality disagree");
  }
  return dense;
}

bool sigmaJoinCheck(const PriestleyDual& xd, ElemSet s) {
  if (!s.fitsIn(xd.base().size())) throw Error(ErrorKind::IndexOutOfRange, "set references a missing element");
  ElemSet unionOfSigmas;
  for (int a : s) unionOfSigmas |= xd.sigma(a);
  return xd.sigma(xd.base().joinOf(s)) == xd.closureOf(unionOfSigmas);
}

bool sigmaJoinsAllSubsets(const PriestleyDual& xd, const Bounds& bounds) {
  requireWithin(xd.base().size(), bounds.scott, "sigmaJoinsAllSubsets");
  const std::uint64_t count = std::uint64_t{1} << xd.base().size();
  for (std::uint64_t s = 0; s < count; ++s) {
    if (!sigmaJoinCheck(xd, ElemSet(s))) return false;
  }
  return true;
}

bool compactIffSUpset(const PriestleyDual& xd, const Bounds& bounds, ScottRoute route) {
  const FinLattice& l = xd.base();
  for (int a = 0; a < static_cast<int>(l.size()); ++a) {
    bool compact = route == ScottRoute::Literal ? isCompactElement(l, a, bounds)
                                                : scottConditionByIdeals(l, l.poset().upOf(a), bounds);
    if (compact != isSUpset(xd, makeClosedUpset(xd, xd.sigma(a)))) return false;
  }
  return true;
}

}  // namespace priestley
