#include "priestley/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace priestley {

int FinLattice::joinOf(ElemSet s) const {
  int acc = bottom_;
  for (int x : s) acc = join(acc, x);
  return acc;
}

int FinLattice::meetOf(ElemSet s) const {
  int acc = top_;
  for (int x : s) acc = meet(acc, x);
  return acc;
}

namespace {

// The greatest element of `bounds` when it exists.
std::optional<int> greatestOf(const FinPoset& p, ElemSet bounds) {
  for (int g : bounds) {
    if (bounds.subsetOf(p.downOf(g))) return g;
  }
  return std::nullopt;
}

std::optional<int> leastOf(const FinPoset& p, ElemSet bounds) {
  for (int g : bounds) {
    if (bounds.subsetOf(p.upOf(g))) return g;
  }
  return std::nullopt;
}

}  // namespace

FinLattice buildLattice(FinPoset p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a lattice needs at least one element");
  FinLattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const int ia = static_cast<int>(a);
      const int ib = static_cast<int>(b);
      auto glb = greatestOf(p, p.downOf(ia) & p.downOf(ib));
      if (!glb) throw Error(ErrorKind::NotALattice, p.label(ia) + " and " + p.label(ib) + " have no meet", {ia, ib});
      auto lub = leastOf(p, p.upOf(ia) & p.upOf(ib));
      if (!lub) throw Error(ErrorKind::NotALattice, p.label(ia) + " and " + p.label(ib) + " have no join", {ia, ib});
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint8_t>(*glb);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint8_t>(*lub);
    }
  }
  l.bottom_ = *leastOf(p, p.all());
  l.top_ = *greatestOf(p, p.all());
  l.poset_ = std::move(p);
  return l;
}

std::optional<std::array<int, 3>> checkDistributive(const FinLattice& l) {
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return std::array{a, b, c};
      }
    }
  }
  return std::nullopt;
}

void requireDistributive(const FinLattice& l) {
  if (auto triple = checkDistributive(l)) {
    auto [a, b, c] = *triple;
    throw Error(ErrorKind::NotDistributive,
                "lattice is not distributive at (" + l.label(a) + ", " + l.label(b) + ", " + l.label(c) + ")",
                {a, b, c});
  }
}

FinLattice downsetLattice(const FinPoset& p, const Bounds& bounds) {
  std::vector<ElemSet> downs = enumerateDownsets(p, bounds);
  requireWithin(downs.size(), kMaxElements, "downsetLattice");
  std::vector<ElemSet> up(downs.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < downs.size(); ++i) {
    for (std::size_t j = 0; j < downs.size(); ++j) {
      if (downs[i].subsetOf(downs[j])) up[i].insert(static_cast<int>(j));
    }
    labels.push_back(setLabel(p, downs[i]));
  }
  return buildLattice(FinPoset::fromUpsets(std::move(up), std::move(labels)));
}

bool isFilter(const FinLattice& l, ElemSet s) {
  if (s.empty() || !s.fitsIn(l.size()) || !l.poset().isUpset(s)) return false;
  for (int a : s) {
    for (int b : s) {
      if (!s.contains(l.meet(a, b))) return false;
    }
  }
  return true;
}

Filter makeFilter(const FinLattice& l, ElemSet s) {
  if (!s.fitsIn(l.size())) throw Error(ErrorKind::IndexOutOfRange, "filter references a missing element");
  if (!isFilter(l, s)) throw Error(ErrorKind::InvalidArgument, "not a filter: " + setLabel(l.poset(), s));
  return Filter{s};
}

Filter principalFilter(const FinLattice& l, int a) { return Filter{l.poset().upOf(a)}; }
Filter improperFilter(const FinLattice& l) { return Filter{l.all()}; }
bool isProper(const FinLattice& l, const Filter& f) { return !f.members.contains(l.bottom()); }

Filter filterGenerated(const FinLattice& l, ElemSet s) {
  if (!s.fitsIn(l.size())) throw Error(ErrorKind::IndexOutOfRange, "set references a missing element");
  // Finitely many generators: the filter is the upset of their meet.
  return principalFilter(l, l.meetOf(s));
}

std::vector<Filter> enumerateFilters(const FinLattice& l, const Bounds& bounds) {
  requireWithin(l.size(), bounds.enumeration, "enumerateFilters");
  // Every filter is reached from {top} by adjoining generators one at a time.
  std::set<ElemSet> seen;
  std::deque<ElemSet> queue;
  ElemSet start = filterGenerated(l, ElemSet()).members;
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    ElemSet f = queue.front();
    queue.pop_front();
    for (int a : l.all() - f) {
      ElemSet g = filterGenerated(l, f | ElemSet::single(a)).members;
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  std::vector<Filter> out;
  out.reserve(seen.size());
  for (ElemSet s : seen) out.push_back(Filter{s});
  return out;
}

bool isPrime(const FinLattice& l, const Filter& f) {
  if (!isProper(l, f)) return false;
  for (int a : l.all() - f.members) {
    for (int b : l.all() - f.members) {
      if (f.members.contains(l.join(a, b))) return false;
    }
  }
  return true;
}

bool isCompletelyPrimeFinite(const FinLattice& l, const Filter& f) {
  // A family avoiding F lies inside L \ F, and F is an upset, so the join of
  // the whole complement decides every such family at once.
  return !f.members.contains(l.joinOf(l.all() - f.members));
}

std::optional<ElemSet> FiniteLatticeView::finiteWitness(const ElemSet& f,
                                                        const std::function<bool(const int&)>& inside) const {
  if (!inside(lattice_->joinOf(f))) return std::nullopt;
  ElemSet witness = f;
  for (int x : f) {
    ElemSet smaller = witness - ElemSet::single(x);
    if (inside(lattice_->joinOf(smaller))) witness = smaller;
  }
  return witness;
}

std::optional<int> FiniteLatticeView::memberWitness(const ElemSet& f,
                                                    const std::function<bool(const int&)>& inside) const {
  for (int x : f) {
    if (inside(x)) return x;
  }
  return std::nullopt;
}

FamilyVerdict<ElemSet> scottCondition(const FinLattice& l, ElemSet inside, const Bounds& bounds) {
  requireWithin(l.size(), bounds.scott, "exhaustive Scott check");
  FiniteLatticeView view(l);
  return checkScottCondition(view, [&](const int& x) { return inside.contains(x); });
}

FamilyVerdict<ElemSet> scottVerdict(const FinLattice& l, const Filter& f, const Bounds& bounds) {
  return scottCondition(l, f.members, bounds);
}

bool isScottOpenFinite(const FinLattice& l, const Filter& f, const Bounds& bounds) {
  return scottVerdict(l, f, bounds).holds;
}

std::vector<ElemSet> enumerateIdeals(const FinLattice& l, const Bounds& bounds) {
  std::vector<ElemSet> out;
  for (ElemSet d : enumerateDownsets(l.poset(), bounds)) {
    if (d.empty()) continue;
    bool closed = true;
    for (int a : d) {
      for (int b : d) {
        if (!d.contains(l.join(a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(d);
  }
  return out;
}

bool scottConditionByIdeals(const FinLattice& l, ElemSet inside, const Bounds& bounds) {
  for (ElemSet ideal : enumerateIdeals(l, bounds)) {
    if (inside.contains(l.joinOf(ideal)) && !ideal.intersects(inside)) return false;
  }
  return true;
}

bool isScottOpenByIdeals(const FinLattice& l, const Filter& f, const Bounds& bounds) {
  return scottConditionByIdeals(l, f.members, bounds);
}

bool isCompactElement(const FinLattice& l, int a, const Bounds& bounds) {
  return scottCondition(l, l.poset().upOf(a), bounds).holds;
}

IdealFrame idealLattice(const FinLattice& l, const Bounds& bounds) {
  requireWithin(l.size(), bounds.enumeration, "idealLattice");
  std::vector<ElemSet> ideals = enumerateIdeals(l, bounds);
  std::vector<ElemSet> up(ideals.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (ideals[i].subsetOf(ideals[j])) up[i].insert(static_cast<int>(j));
    }
    labels.push_back(setLabel(l.poset(), ideals[i]));
  }
  IdealFrame out{buildLattice(FinPoset::fromUpsets(std::move(up), std::move(labels))), ideals, {}, false, {}, {}};

  const int n = static_cast<int>(l.size());
  out.principal.assign(n, -1);
  ElemSet image;
  for (int a = 0; a < n; ++a) {
    auto it = std::find(ideals.begin(), ideals.end(), l.poset().downOf(a));
    if (it != ideals.end()) {
      out.principal[a] = static_cast<int>(it - ideals.begin());
      image.insert(out.principal[a]);
    }
  }
  bool iso = image.size() == n && ideals.size() == l.size();
  for (int a = 0; iso && a < n; ++a) {
    for (int b = 0; iso && b < n; ++b) {
      iso = l.leq(a, b) == out.ideals.leq(out.principal[a], out.principal[b]);
    }
  }
  out.isomorphic = iso;

  if (out.ideals.size() <= bounds.scott) {
    ElemSet compact;
    for (int i = 0; i < static_cast<int>(out.ideals.size()); ++i) {
      if (isCompactElement(out.ideals, i, bounds)) compact.insert(i);
    }
    out.compactArePrincipal = compact == image;
    bool sub = compact.contains(out.ideals.bottom()) && compact.contains(out.ideals.top());
    for (int a : compact) {
      for (int b : compact) {
        sub = sub && compact.contains(out.ideals.meet(a, b)) && compact.contains(out.ideals.join(a, b));
      }
    }
    out.compactFormSublattice = sub;
  }
  return out;
}

}  // namespace priestley
