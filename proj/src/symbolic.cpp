#include "priestley/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace priestley {

namespace {

NatSet unite(const NatSet& x, const NatSet& y) {
  NatSet out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

NatSet intersect(const NatSet& x, const NatSet& y) {
  NatSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool includes(const NatSet& big, const NatSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool disjoint(const NatSet& x, const NatSet& y) { return intersect(x, y).empty(); }

bool has(const NatSet& s, std::uint64_t n) { return std::binary_search(s.begin(), s.end(), n); }

std::uint64_t maxOf(const NatSet& s) { return s.empty() ? 0 : s.back(); }

[[noreturn]] void mismatch(const SymbolicFrame& fr, const std::string& what) {
  throw Error(ErrorKind::FixtureMismatch, what + " does not belong to the " + std::string(toString(fr.id())) +
                                              " fixture");
}

}  // namespace

std::string_view toString(FixtureId id) {
  return id == FixtureId::ChainOmegaPlusOne ? "ChainOmegaPlusOne" : "CofiniteNat";
}

NatSet canonical(NatSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string toString(const NatSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string ElementDesc::toString() const {
  switch (kind) {
    case Kind::Nat: return "Nat(" + std::to_string(k) + ")";
    case Kind::Top: return "Top";
    case Kind::Empty: return "Empty";
    case Kind::Missing: return "Missing(" + priestley::toString(missing) + ")";
  }
  return {};
}

FamilyDesc FamilyDesc::finite(std::vector<ElementDesc> members) {
  FamilyDesc f;
  f.kind = Kind::Finite;
  f.members = std::move(members);
  return f;
}

FamilyDesc FamilyDesc::natRun(std::uint64_t start, std::optional<std::uint64_t> cap) {
  FamilyDesc f;
  f.kind = Kind::NatRun;
  f.start = start;
  if (cap) f.cap = std::max(*cap, start);
  return f;
}

FamilyDesc FamilyDesc::holes(NatSet a, std::uint64_t start, std::uint64_t skip) {
  FamilyDesc f;
  f.kind = Kind::Holes;
  f.a = canonical(std::move(a));
  f.start = start;
  f.skip = skip;
  return f;
}

FamilyDesc FamilyDesc::shrinking(NatSet a, NatSet b) {
  FamilyDesc f;
  f.kind = Kind::Shrinking;
  // Order of removal is the input order of A, so A is kept as given.
  f.a = std::move(a);
  f.b = canonical(std::move(b));
  return f;
}

FamilyDesc FamilyDesc::allEmpty() {
  FamilyDesc f;
  f.kind = Kind::AllEmpty;
  return f;
}

std::string FamilyDesc::toString() const {
  switch (kind) {
    case Kind::Finite: {
      std::string out = "Finite[";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += members[i].toString();
      }
      return out + "]";
    }
    case Kind::NatRun:
      return "NatRun(start=" + std::to_string(start) + (cap ? ",cap=" + std::to_string(*cap) : std::string()) + ")";
    case Kind::Holes:
      return "Holes(A=" + priestley::toString(a) + ",start=" + std::to_string(start) + ",skip=" +
             std::to_string(skip) + ")";
    case Kind::Shrinking: {
      std::string seq = "[";
      for (std::size_t i = 0; i < a.size(); ++i) seq += (i ? "," : "") + std::to_string(a[i]);
      return "Shrinking(A=" + seq + "],B=" + priestley::toString(b) + ")";
    }
    case Kind::AllEmpty: return "AllEmpty";
  }
  return {};
}

std::string FilterDesc::toString() const {
  switch (kind) {
    case Kind::Principal: return "Principal(" + generator.toString() + ")";
    case Kind::ContainsAll: return "ContainsAll(" + priestley::toString(set) + ")";
    case Kind::AllNonzero: return "AllNonzero";
    case Kind::Improper: return "Improper";
  }
  return {};
}

std::string PointDesc::toString() const {
  switch (kind) {
    case Kind::P: return "P(" + std::to_string(n) + ")";
    case Kind::F: return "F(" + std::to_string(n) + ")";
    case Kind::Generic: return "Generic";
  }
  return {};
}

std::string SatSetDesc::toString() const {
  switch (kind) {
    case Kind::EmptySet: return "EmptySet";
    case Kind::PrefixPoints: return "PrefixPoints(" + std::to_string(m) + ")";
    case Kind::GenericOnly: return "GenericOnly";
    case Kind::FinitePlusGeneric: return "FinitePlusGeneric(" + priestley::toString(set) + ")";
    case Kind::CofinitePlusGeneric: return "CofinitePlusGeneric(" + priestley::toString(set) + ")";
  }
  return {};
}

void SymbolicFrame::require(const ElementDesc& a) const {
  using K = ElementDesc::Kind;
  bool chainKind = a.kind == K::Nat || a.kind == K::Top;
  if (chainKind != isChain()) mismatch(*this, a.toString());
  if (a.kind == K::Missing && a.missing != canonical(a.missing)) {
    throw Error(ErrorKind::InvalidArgument, a.toString() + " is not canonical");
  }
}

void SymbolicFrame::require(const FamilyDesc& f) const {
  using K = FamilyDesc::Kind;
  if (f.kind == K::Finite) {
    for (const ElementDesc& a : f.members) require(a);
    return;
  }
  if ((f.kind == K::NatRun) != isChain()) mismatch(*this, f.toString());
}

void SymbolicFrame::require(const FilterDesc& f) const {
  using K = FilterDesc::Kind;
  if (isChain() && (f.kind == K::ContainsAll || f.kind == K::AllNonzero)) mismatch(*this, f.toString());
  if (f.kind == K::Principal) require(f.generator);
}

void SymbolicFrame::require(const PointDesc& p) const {
  if ((p.kind == PointDesc::Kind::P) != isChain()) mismatch(*this, p.toString());
  if (p.kind == PointDesc::Kind::P && p.n == 0) throw Error(ErrorKind::InvalidArgument, "P(0) is not a point");
}

void SymbolicFrame::require(const SatSetDesc& q) const {
  using K = SatSetDesc::Kind;
  if (q.kind == K::EmptySet) return;
  if ((q.kind == K::PrefixPoints) != isChain()) mismatch(*this, q.toString());
}

// Elements.

bool elemLeq(const SymbolicFrame& fr, const ElementDesc& a, const ElementDesc& b) {
  fr.require(a);
  fr.require(b);
  using K = ElementDesc::Kind;
  if (fr.isChain()) {
    if (b.kind == K::Top) return true;
    if (a.kind == K::Top) return false;
    return a.k <= b.k;
  }
  if (a.kind == K::Empty) return true;
  if (b.kind == K::Empty) return false;
  return includes(a.missing, b.missing);
}

ElementDesc elemMeet(const SymbolicFrame& fr, const ElementDesc& a, const ElementDesc& b) {
  if (fr.isChain()) return elemLeq(fr, a, b) ? a : b;
  fr.require(a);
  fr.require(b);
  if (a.kind == ElementDesc::Kind::Empty || b.kind == ElementDesc::Kind::Empty) return ElementDesc::empty();
  return ElementDesc::cofinite(unite(a.missing, b.missing));
}

ElementDesc elemJoin(const SymbolicFrame& fr, const ElementDesc& a, const ElementDesc& b) {
  if (fr.isChain()) return elemLeq(fr, a, b) ? b : a;
  fr.require(a);
  fr.require(b);
  if (a.kind == ElementDesc::Kind::Empty) return b;
  if (b.kind == ElementDesc::Kind::Empty) return a;
  return ElementDesc::cofinite(intersect(a.missing, b.missing));
}

ElementDesc elemJoinFinite(const SymbolicFrame& fr, const std::vector<ElementDesc>& list) {
  ElementDesc out = fr.bottom();
  for (const ElementDesc& a : list) out = elemJoin(fr, out, a);
  return out;
}

std::uint64_t naturalsBound(const ElementDesc& a) {
  return a.kind == ElementDesc::Kind::Nat ? a.k : maxOf(a.missing);
}

// Families.

ElementDesc familyJoin(const SymbolicFrame& fr, const FamilyDesc& fam) {
  fr.require(fam);
  using K = FamilyDesc::Kind;
  switch (fam.kind) {
    case K::Finite: return elemJoinFinite(fr, fam.members);
    case K::NatRun: return fam.cap ? ElementDesc::nat(*fam.cap) : ElementDesc::top();
    case K::Holes: return ElementDesc::cofinite(fam.a);
    case K::Shrinking: return ElementDesc::cofinite(fam.b);
    case K::AllEmpty: return ElementDesc::empty();
  }
  throw Error(ErrorKind::UnknownRule, "unknown family rule");
}

ElementDesc familyTerm(const SymbolicFrame& fr, const FamilyDesc& fam, std::uint64_t k) {
  fr.require(fam);
  using K = FamilyDesc::Kind;
  switch (fam.kind) {
    case K::Finite:
      if (k >= fam.members.size()) throw Error(ErrorKind::InvalidArgument, "index past the end of a finite family");
      return fam.members[k];
    case K::NatRun: {
      std::uint64_t v = fam.start + k;
      return ElementDesc::nat(fam.cap ? std::min(v, *fam.cap) : v);
    }
    case K::Holes: {
      if (k < fam.skip) return ElementDesc::empty();
      NatSet m = fam.a;
      m.push_back(fam.start + k);
      return ElementDesc::cofinite(std::move(m));
    }
    case K::Shrinking: {
      auto from = fam.a.begin() + static_cast<std::ptrdiff_t>(std::min<std::uint64_t>(k, fam.a.size()));
      NatSet m(from, fam.a.end());
      m.insert(m.end(), fam.b.begin(), fam.b.end());
      return ElementDesc::cofinite(std::move(m));
    }
    case K::AllEmpty: return ElementDesc::empty();
  }
  throw Error(ErrorKind::UnknownRule, "unknown family rule");
}

ElementDesc prefixJoin(const SymbolicFrame& fr, const FamilyDesc& fam, std::uint64_t k) {
  using K = FamilyDesc::Kind;
  switch (fam.kind) {
    case K::Finite: {
      std::size_t end = std::min<std::size_t>(fam.members.size(), k + 1);
      return elemJoinFinite(fr, std::vector<ElementDesc>(fam.members.begin(), fam.members.begin() + end));
    }
    case K::Holes:
      // Two distinct holes already join to Missing(A).
      if (k > fam.skip) return familyJoin(fr, fam);
      return familyTerm(fr, fam, k);
    case K::NatRun:
    case K::Shrinking:
    case K::AllEmpty:
      // Increasing sequences.
      return familyTerm(fr, fam, k);
  }
  throw Error(ErrorKind::UnknownRule, "unknown family rule");
}

std::optional<std::uint64_t> convergenceIndex(const SymbolicFrame& fr, const FamilyDesc& fam) {
  using K = FamilyDesc::Kind;
  ElementDesc target = familyJoin(fr, fam);
  switch (fam.kind) {
    case K::Finite:
      for (std::uint64_t k = 0; k < fam.members.size(); ++k) {
        if (prefixJoin(fr, fam, k) == target) return k;
      }
      return std::nullopt;
    case K::NatRun:
      if (!fam.cap) return std::nullopt;
      return *fam.cap - fam.start;
    case K::Holes: return has(fam.a, fam.start + fam.skip) ? fam.skip : fam.skip + 1;
    case K::Shrinking:
      for (std::uint64_t k = 0;; ++k) {
        if (prefixJoin(fr, fam, k) == target) return k;
      }
    case K::AllEmpty: return 0;
  }
  throw Error(ErrorKind::UnknownRule, "unknown family rule");
}

FamilyDesc familyMeet(const SymbolicFrame& fr, const ElementDesc& a, const FamilyDesc& fam) {
  fr.require(a);
  fr.require(fam);
  using K = FamilyDesc::Kind;
  const bool zero = a.kind == ElementDesc::Kind::Empty;
  switch (fam.kind) {
    case K::Finite: {
      std::vector<ElementDesc> out;
      for (const ElementDesc& m : fam.members) out.push_back(elemMeet(fr, a, m));
      return FamilyDesc::finite(std::move(out));
    }
    case K::NatRun: {
      if (a.kind == ElementDesc::Kind::Top) return fam;
      if (a.k <= fam.start) return FamilyDesc::natRun(a.k, a.k);
      return FamilyDesc::natRun(fam.start, fam.cap ? std::min(*fam.cap, a.k) : a.k);
    }
    case K::Holes:
      if (zero) return FamilyDesc::allEmpty();
      return FamilyDesc::holes(unite(fam.a, a.missing), fam.start, fam.skip);
    case K::Shrinking:
      if (zero) return FamilyDesc::allEmpty();
      return FamilyDesc::shrinking(fam.a, unite(fam.b, a.missing));
    case K::AllEmpty: return fam;
  }
  throw Error(ErrorKind::UnknownRule, "unknown family rule");
}

std::uint64_t familyHorizon(const FamilyDesc& fam) {
  using K = FamilyDesc::Kind;
  switch (fam.kind) {
    case K::Finite: return fam.members.size();
    case K::NatRun: return fam.cap.value_or(fam.start);
    case K::Holes: return fam.skip + fam.start + maxOf(fam.a);
    case K::Shrinking: return fam.a.size();
    case K::AllEmpty: return 0;
  }
  return 0;
}

// Filters.

FilterDesc principal(const SymbolicFrame& fr, const ElementDesc& x) {
  fr.require(x);
  if (x == fr.bottom()) return improper(fr);
  FilterDesc f;
  f.kind = FilterDesc::Kind::Principal;
  f.generator = x;
  return f;
}

FilterDesc containsAll(const SymbolicFrame& fr, NatSet a) {
  if (fr.isChain()) mismatch(fr, "ContainsAll");
  if (a.empty()) return allNonzero(fr);
  FilterDesc f;
  f.kind = FilterDesc::Kind::ContainsAll;
  f.set = canonical(std::move(a));
  return f;
}

FilterDesc allNonzero(const SymbolicFrame& fr) {
  if (fr.isChain()) mismatch(fr, "AllNonzero");
  FilterDesc f;
  f.kind = FilterDesc::Kind::AllNonzero;
  return f;
}

FilterDesc improper(const SymbolicFrame&) { return FilterDesc{}; }

bool filterMember(const SymbolicFrame& fr, const FilterDesc& f, const ElementDesc& a) {
  fr.require(f);
  fr.require(a);
  using K = FilterDesc::Kind;
  switch (f.kind) {
    case K::Principal: return elemLeq(fr, f.generator, a);
    case K::ContainsAll: return a.kind == ElementDesc::Kind::Missing && disjoint(f.set, a.missing);
    case K::AllNonzero: return a.kind != ElementDesc::Kind::Empty;
    case K::Improper: return true;
  }
  return false;
}

bool filterSubset(const SymbolicFrame& fr, const FilterDesc& f, const FilterDesc& g) {
  fr.require(f);
  fr.require(g);
  using K = FilterDesc::Kind;
  if (g.kind == K::Improper) return true;
  if (f.kind == K::Improper) return false;
  if (f.kind == K::Principal) return filterMember(fr, g, f.generator);
  // f is ContainsAll or AllNonzero, both holding Missing(X) for arbitrarily large X.
  switch (g.kind) {
    case K::Principal: return false;
    case K::ContainsAll: return f.kind == K::ContainsAll && includes(f.set, g.set);
    case K::AllNonzero: return true;
    case K::Improper: return true;
  }
  return false;
}

std::uint64_t filterHorizon(const FilterDesc& f) {
  if (f.kind == FilterDesc::Kind::Principal) return naturalsBound(f.generator);
  return maxOf(f.set);
}

// Families used for quantification.

std::vector<FamilyDesc> builtInFamilies(const SymbolicFrame& fr, const Bounds&) {
  using E = ElementDesc;
  if (fr.isChain()) {
    return {
        FamilyDesc::natRun(0),
        FamilyDesc::natRun(1),
        FamilyDesc::natRun(5),
        FamilyDesc::natRun(0, 3),
        FamilyDesc::natRun(2, 7),
        FamilyDesc::finite({}),
        FamilyDesc::finite({E::nat(0)}),
        FamilyDesc::finite({E::top()}),
        FamilyDesc::finite({E::nat(1), E::nat(4)}),
        FamilyDesc::finite({E::nat(2), E::top()}),
    };
  }
  return {
      FamilyDesc::holes({}),
      FamilyDesc::holes({}, 1),
      FamilyDesc::holes({0}),
      FamilyDesc::holes({1, 2}, 0, 3),
      FamilyDesc::holes({0}, 5, 2),
      FamilyDesc::shrinking({0, 1, 2}, {}),
      FamilyDesc::shrinking({3, 4}, {1}),
      FamilyDesc::allEmpty(),
      FamilyDesc::finite({}),
      FamilyDesc::finite({E::empty()}),
      FamilyDesc::finite({E::cofinite({}), E::empty()}),
      FamilyDesc::finite({E::cofinite({0}), E::cofinite({1})}),
      FamilyDesc::finite({E::cofinite({0, 1}), E::cofinite({1, 2}), E::cofinite({0, 2})}),
  };
}

std::vector<FamilyDesc> familiesFor(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds) {
  fr.require(f);
  using E = ElementDesc;
  std::vector<FamilyDesc> out;
  if (fr.isChain()) {
    if (f.kind == FilterDesc::Kind::Principal && f.generator.kind == E::Kind::Nat) {
      std::uint64_t r = f.generator.k;
      out.push_back(FamilyDesc::natRun(r));
      out.push_back(FamilyDesc::natRun(0, r));
      out.push_back(FamilyDesc::natRun(r - 1, r + 1));
      out.push_back(FamilyDesc::finite({E::nat(r - 1), E::nat(r)}));
    }
  } else {
    NatSet named = f.kind == FilterDesc::Kind::Principal ? f.generator.missing : f.set;
    // Pairs of holes inside the named set cover the top without either member reaching F.
    for (std::size_t i = 0; i + 1 < named.size(); ++i) {
      out.push_back(FamilyDesc::finite({E::cofinite({named[i]}), E::cofinite({named[i + 1]})}));
    }
    std::uint64_t fresh = maxOf(named) + 1;
    out.push_back(FamilyDesc::finite({E::cofinite({fresh}), E::cofinite({fresh + 1})}));
    for (std::uint64_t r : named) {
      out.push_back(FamilyDesc::holes({r}));
      out.push_back(FamilyDesc::holes({}, r));
    }
    NatSet around = named;
    around.push_back(fresh);
    out.push_back(FamilyDesc::shrinking(around, {}));
  }
  for (FamilyDesc& fam : builtInFamilies(fr, bounds)) {
    if (std::find(out.begin(), out.end(), fam) == out.end()) out.push_back(std::move(fam));
  }
  return out;
}

std::vector<ElementDesc> sampleElements(const SymbolicFrame& fr, std::uint64_t limit) {
  std::vector<ElementDesc> out;
  if (fr.isChain()) {
    for (std::uint64_t k = 0; k <= limit; ++k) out.push_back(ElementDesc::nat(k));
    out.push_back(ElementDesc::top());
    return out;
  }
  out.push_back(ElementDesc::empty());
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    NatSet s;
    for (std::uint64_t i = 0; i < 4; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(ElementDesc::cofinite(s));
  }
  for (std::uint64_t n = 4; n <= limit; ++n) {
    out.push_back(ElementDesc::cofinite({n}));
    out.push_back(ElementDesc::cofinite({0, n}));
  }
  return out;
}

namespace {

// Sampled elements plus the elements adjacent to the naturals F names.
std::vector<ElementDesc> probeElements(const SymbolicFrame& fr, const FilterDesc& f) {
  std::vector<ElementDesc> out = sampleElements(fr, 6);
  std::uint64_t h = filterHorizon(f);
  if (fr.isChain()) {
    for (std::uint64_t k = h > 0 ? h - 1 : 0; k <= h + 1; ++k) out.push_back(ElementDesc::nat(k));
  } else {
    NatSet named = f.kind == FilterDesc::Kind::Principal ? f.generator.missing : f.set;
    for (std::uint64_t r : named) out.push_back(ElementDesc::cofinite({r}));
    out.push_back(ElementDesc::cofinite(named));
    out.push_back(ElementDesc::cofinite({h + 1}));
    out.push_back(ElementDesc::cofinite({h + 2}));
    NatSet wider = named;
    wider.push_back(h + 1);
    out.push_back(ElementDesc::cofinite(wider));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool tableScottOpen(const SymbolicFrame& fr, const FilterDesc& f) {
  return !(fr.isChain() && f.kind == FilterDesc::Kind::Principal && f.generator.kind == ElementDesc::Kind::Top);
}

}  // namespace

SymbolicView::SymbolicView(const SymbolicFrame& fr, std::vector<FamilyDesc> families, std::uint64_t filterHorizon,
                           std::uint64_t minimumScan)
    : frame_(fr), families_(std::move(families)), filterHorizon_(filterHorizon), minimumScan_(minimumScan) {
  for (const FamilyDesc& f : families_) frame_.require(f);
}

std::uint64_t SymbolicView::scanLimit(const Family& f) const {
  return std::max(minimumScan_, familyHorizon(f) + filterHorizon_ + 2);
}

std::optional<FamilyDesc> SymbolicView::finiteWitness(const Family& f,
                                                      const std::function<bool(const Element&)>& inside) const {
  if (inside(frame_.bottom())) return FamilyDesc::finite({});
  if (!f.isRule()) {
    if (inside(join(f))) return f;
    return std::nullopt;
  }
  const std::uint64_t limit = scanLimit(f);
  for (std::uint64_t k = 0; k <= limit; ++k) {
    if (!inside(prefixJoin(frame_, f, k))) continue;
    std::vector<ElementDesc> prefix;
    for (std::uint64_t i = 0; i <= k; ++i) prefix.push_back(familyTerm(frame_, f, i));
    return FamilyDesc::finite(std::move(prefix));
  }
  return std::nullopt;
}

std::optional<ElementDesc> SymbolicView::memberWitness(const Family& f,
                                                       const std::function<bool(const Element&)>& inside) const {
  if (!f.isRule()) {
    for (const ElementDesc& a : f.members) {
      if (inside(a)) return a;
    }
    return std::nullopt;
  }
  const std::uint64_t limit = scanLimit(f);
  for (std::uint64_t k = 0; k <= limit; ++k) {
    ElementDesc a = familyTerm(frame_, f, k);
    if (inside(a)) return a;
  }
  return std::nullopt;
}

FamilyVerdict<FamilyDesc> refuteScottOpen(const SymbolicFrame& fr, const FilterDesc& f, const FamilyDesc& fam,
                                          std::uint64_t minimumScan) {
  SymbolicView view(fr, {fam}, filterHorizon(f), minimumScan);
  return checkScottCondition(view, [&](const ElementDesc& a) { return filterMember(fr, f, a); });
}

FamilyVerdict<FamilyDesc> scottOpenByFamilies(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds,
                                              std::uint64_t minimumScan) {
  SymbolicView view(fr, familiesFor(fr, f, bounds), filterHorizon(f), minimumScan);
  return checkScottCondition(view, [&](const ElementDesc& a) { return filterMember(fr, f, a); });
}

ScottClassification classifyScottOpen(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds) {
  fr.require(f);
  ScottClassification out;
  if (tableScottOpen(fr, f)) {
    FamilyVerdict<FamilyDesc> verdict = scottOpenByFamilies(fr, f, bounds);
    if (!verdict.holds) {
      throw Error(ErrorKind::FixtureMismatch,
                  "rule table calls " + f.toString() + " Scott-open but " + verdict.counterexample->toString() +
                      " refutes it");
    }
    return out;
  }
  out.scottOpen = false;
  out.witness = FamilyDesc::natRun(0);
  if (refuteScottOpen(fr, f, *out.witness).holds) {
    throw Error(ErrorKind::FixtureMismatch, "stored witness does not refute " + f.toString());
  }
  return out;
}

ScottClassification isCompactElementSym(const SymbolicFrame& fr, const ElementDesc& a, const Bounds& bounds) {
  FilterDesc up = principal(fr, a);
  FamilyVerdict<FamilyDesc> verdict = scottOpenByFamilies(fr, up, bounds);
  if (verdict.holds != tableScottOpen(fr, up)) {
    throw Error(ErrorKind::FixtureMismatch, "compactness of " + a.toString() + " disagrees with the rule table");
  }
  ScottClassification out;
  out.scottOpen = verdict.holds;
  out.witness = verdict.counterexample;
  return out;
}

// Points.

FilterDesc pointFilter(const SymbolicFrame& fr, const PointDesc& p) {
  fr.require(p);
  switch (p.kind) {
    case PointDesc::Kind::P: return principal(fr, ElementDesc::nat(p.n));
    case PointDesc::Kind::F: return containsAll(fr, {p.n});
    case PointDesc::Kind::Generic: return allNonzero(fr);
  }
  return improper(fr);
}

bool pointMember(const SymbolicFrame& fr, const PointDesc& p, const ElementDesc& a) {
  return filterMember(fr, pointFilter(fr, p), a);
}

bool pointLeq(const SymbolicFrame& fr, const PointDesc& p, const PointDesc& q) {
  fr.require(p);
  fr.require(q);
  if (fr.isChain()) return q.n <= p.n;
  return p == q || q.kind == PointDesc::Kind::Generic;
}

PointSchema pointsOf(const SymbolicFrame& fr, const Bounds& bounds) {
  PointSchema out;
  if (fr.isChain()) {
    out.description = "P(m) = up(Nat(m)) for m >= 1";
    for (std::uint64_t m = 1; m <= bounds.sample; ++m) out.sample.push_back({PointDesc::Kind::P, m});
  } else {
    out.description = "F(n) = cofinite sets containing n, for n in N; Generic = nonzero elements";
    for (std::uint64_t n = 0; n <= bounds.sample; ++n) out.sample.push_back({PointDesc::Kind::F, n});
    out.sample.push_back({PointDesc::Kind::Generic, 0});
  }
  return out;
}

FamilyVerdict<FamilyDesc> completelyPrimeByFamilies(const SymbolicFrame& fr, const FilterDesc& f,
                                                    const Bounds& bounds) {
  SymbolicView view(fr, familiesFor(fr, f, bounds), filterHorizon(f));
  return checkCompletePrimeness(view, [&](const ElementDesc& a) { return filterMember(fr, f, a); });
}

std::optional<std::pair<ElementDesc, ElementDesc>> primeWitness(const SymbolicFrame& fr, const FilterDesc& f,
                                                                std::uint64_t limit) {
  if (filterMember(fr, f, fr.bottom())) return std::make_pair(fr.bottom(), fr.bottom());
  std::vector<ElementDesc> probe = probeElements(fr, f);
  for (ElementDesc& a : sampleElements(fr, limit)) probe.push_back(std::move(a));
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  std::vector<bool> in(probe.size());
  for (std::size_t i = 0; i < probe.size(); ++i) in[i] = filterMember(fr, f, probe[i]);
  for (std::size_t i = 0; i < probe.size(); ++i) {
    if (in[i]) continue;
    for (std::size_t j = i + 1; j < probe.size(); ++j) {
      if (!in[j] && filterMember(fr, f, elemJoin(fr, probe[i], probe[j]))) return std::make_pair(probe[i], probe[j]);
    }
  }
  return std::nullopt;
}

std::vector<FilterDesc> primeSpectrumSample(const SymbolicFrame& fr, std::uint64_t limit) {
  std::vector<FilterDesc> out;
  if (fr.isChain()) {
    // up(Top) is prime but not completely prime: Top is the join of the Nat(k).
    out.push_back(principal(fr, ElementDesc::top()));
    for (std::uint64_t m = 1; m <= limit; ++m) out.push_back(principal(fr, ElementDesc::nat(m)));
  } else {
    for (std::uint64_t n = 0; n <= limit; ++n) out.push_back(containsAll(fr, {n}));
    out.push_back(allNonzero(fr));
  }
  return out;
}

bool isPointFilter(const SymbolicFrame& fr, const FilterDesc& f) {
  fr.require(f);
  using K = FilterDesc::Kind;
  if (fr.isChain()) return f.kind == K::Principal && f.generator.kind == ElementDesc::Kind::Nat;
  return f.kind == K::AllNonzero || (f.kind == K::ContainsAll && f.set.size() == 1);
}

FrameCompactness frameCompactRoutes(const SymbolicFrame& fr, const Bounds& bounds) {
  FrameCompactness out;
  ScottClassification top = isCompactElementSym(fr, fr.top(), bounds);
  out.topCompact = top.scottOpen;
  out.witness = top.witness;
  std::vector<FilterDesc> spectrum = primeSpectrumSample(fr, std::min<std::uint64_t>(bounds.sample, 64));
  out.minimalPrimesArePoints = true;
  for (const FilterDesc& x : spectrum) {
    bool minimal = std::none_of(spectrum.begin(), spectrum.end(), [&](const FilterDesc& w) {
      return w != x && filterSubset(fr, w, x);
    });
    if (minimal && !isPointFilter(fr, x)) out.minimalPrimesArePoints = false;
  }
  return out;
}

bool frameCompact(const SymbolicFrame& fr, const Bounds& bounds) {
  FrameCompactness routes = frameCompactRoutes(fr, bounds);
  if (!routes.agree()) {
    throw Error(ErrorKind::FixtureMismatch, "compactness of top disagrees with the minimal primes");
  }
  return routes.topCompact;
}

// Compact saturated sets.

SatSetDesc emptySat() { return {}; }

SatSetDesc prefixPoints(std::uint64_t m) {
  if (m == 0) return emptySat();
  return {SatSetDesc::Kind::PrefixPoints, m, {}};
}

SatSetDesc genericOnly() { return {SatSetDesc::Kind::GenericOnly, 0, {}}; }

SatSetDesc finitePlusGeneric(NatSet s) {
  if (s.empty()) return genericOnly();
  return {SatSetDesc::Kind::FinitePlusGeneric, 0, canonical(std::move(s))};
}

SatSetDesc cofinitePlusGeneric(NatSet b) { return {SatSetDesc::Kind::CofinitePlusGeneric, 0, canonical(std::move(b))}; }

bool satContains(const SymbolicFrame& fr, const SatSetDesc& q, const PointDesc& p) {
  fr.require(q);
  fr.require(p);
  using K = SatSetDesc::Kind;
  const bool generic = p.kind == PointDesc::Kind::Generic;
  switch (q.kind) {
    case K::EmptySet: return false;
    case K::PrefixPoints: return p.n <= q.m;
    case K::GenericOnly: return generic;
    case K::FinitePlusGeneric: return generic || has(q.set, p.n);
    case K::CofinitePlusGeneric: return generic || !has(q.set, p.n);
  }
  return false;
}

bool satSubset(const SymbolicFrame& fr, const SatSetDesc& q, const SatSetDesc& r) {
  fr.require(q);
  fr.require(r);
  using K = SatSetDesc::Kind;
  if (q.kind == K::EmptySet) return true;
  if (r.kind == K::EmptySet) return false;
  if (fr.isChain()) return q.m <= r.m;
  // Both nonempty, hence both contain Generic.
  switch (q.kind) {
    case K::GenericOnly: return true;
    case K::FinitePlusGeneric:
      if (r.kind == K::FinitePlusGeneric) return includes(r.set, q.set);
      if (r.kind == K::CofinitePlusGeneric) return disjoint(q.set, r.set);
      return false;
    case K::CofinitePlusGeneric: return r.kind == K::CofinitePlusGeneric && includes(q.set, r.set);
    default: return false;
  }
}

std::vector<PointDesc> satPointsWithin(const SymbolicFrame& fr, const SatSetDesc& q, std::uint64_t limit) {
  std::vector<PointDesc> out;
  if (fr.isChain()) {
    for (std::uint64_t m = 1; m <= limit; ++m) {
      PointDesc p{PointDesc::Kind::P, m};
      if (satContains(fr, q, p)) out.push_back(p);
    }
    return out;
  }
  for (std::uint64_t n = 0; n <= limit; ++n) {
    PointDesc p{PointDesc::Kind::F, n};
    if (satContains(fr, q, p)) out.push_back(p);
  }
  PointDesc generic{PointDesc::Kind::Generic, 0};
  if (satContains(fr, q, generic)) out.push_back(generic);
  return out;
}

std::vector<PointDesc> satMinimal(const SymbolicFrame& fr, const SatSetDesc& q, std::uint64_t limit) {
  std::vector<PointDesc> pts = satPointsWithin(fr, q, limit);
  std::vector<PointDesc> out;
  for (const PointDesc& p : pts) {
    bool minimal = std::none_of(pts.begin(), pts.end(), [&](const PointDesc& o) {
      return o != p && pointLeq(fr, o, p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

std::uint64_t satHorizon(const SatSetDesc& q) { return std::max(q.m, maxOf(q.set)); }

bool zetaContains(const SymbolicFrame& fr, const SatSetDesc& q, const ElementDesc& a) {
  // Beyond every named natural the points behave alike, so a finite scan decides.
  std::uint64_t limit = std::max(satHorizon(q), naturalsBound(a)) + 2;
  for (const PointDesc& p : satPointsWithin(fr, q, limit)) {
    if (!pointMember(fr, p, a)) return false;
  }
  return true;
}

SatSetDesc hmMap(const SymbolicFrame& fr, const FilterDesc& f, const Bounds&) {
  fr.require(f);
  if (!tableScottOpen(fr, f)) throw Error(ErrorKind::NotScottOpen, f.toString() + " is not Scott-open");
  using K = FilterDesc::Kind;
  switch (f.kind) {
    case K::Improper: return emptySat();
    case K::Principal:
      if (fr.isChain()) return prefixPoints(f.generator.k);
      // up(Missing(B)) lies in F(n) exactly when n ∉ B.
      return cofinitePlusGeneric(f.generator.missing);
    case K::ContainsAll: return finitePlusGeneric(f.set);
    case K::AllNonzero: return genericOnly();
  }
  return emptySat();
}

FilterDesc hmInv(const SymbolicFrame& fr, const SatSetDesc& q) {
  fr.require(q);
  using K = SatSetDesc::Kind;
  switch (q.kind) {
    case K::EmptySet: return improper(fr);
    case K::PrefixPoints: return principal(fr, ElementDesc::nat(q.m));
    case K::GenericOnly: return allNonzero(fr);
    case K::FinitePlusGeneric: return containsAll(fr, q.set);
    case K::CofinitePlusGeneric: return principal(fr, ElementDesc::cofinite(q.set));
  }
  return improper(fr);
}

std::vector<FilterDesc> sampleScottOpenFilters(const SymbolicFrame& fr, std::uint64_t limit) {
  std::vector<FilterDesc> out{improper(fr)};
  if (fr.isChain()) {
    for (std::uint64_t m = 1; m <= limit; ++m) out.push_back(principal(fr, ElementDesc::nat(m)));
    return out;
  }
  out.push_back(allNonzero(fr));
  for (std::uint64_t n = 0; n <= limit; ++n) {
    out.push_back(containsAll(fr, {n}));
    out.push_back(containsAll(fr, {n, n + 1}));
    out.push_back(principal(fr, ElementDesc::cofinite({n})));
  }
  out.push_back(containsAll(fr, {0, 2, 5}));
  out.push_back(principal(fr, ElementDesc::cofinite({})));
  out.push_back(principal(fr, ElementDesc::cofinite({1, 3})));
  return out;
}

bool SymPrimeSingletonReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SymPrimeSingletonRow& r) { return r.singletonMatches && r.intersectionMatches; });
}

SymPrimeSingletonRow primeSingletonRow(const SymbolicFrame& fr, const FilterDesc& f, const Bounds& bounds) {
  SymPrimeSingletonRow row;
  row.filter = f;
  row.points = hmMap(fr, f, bounds);
  const std::uint64_t horizon = std::max(filterHorizon(f), satHorizon(row.points)) + 3;
  row.minimalCount = satMinimal(fr, row.points, horizon).size();
  row.completelyPrime = completelyPrimeByFamilies(fr, f, bounds).holds;
  row.singletonMatches = (row.minimalCount == 1) == row.completelyPrime;
  row.intersectionMatches = true;
  for (const ElementDesc& a : probeElements(fr, f)) {
    std::uint64_t limit = std::max(horizon, naturalsBound(a) + 2);
    bool inAll = true;
    for (const PointDesc& p : satPointsWithin(fr, row.points, limit)) {
      if (!pointMember(fr, p, a)) {
        inAll = false;
        break;
      }
    }
    if (inAll != filterMember(fr, f, a)) row.intersectionMatches = false;
  }
  return row;
}

SymPrimeSingletonReport primeSingletonSym(const SymbolicFrame& fr, const std::vector<FilterDesc>& filters, const Bounds& bounds) {
  SymPrimeSingletonReport out;
  for (const FilterDesc& f : filters) out.rows.push_back(primeSingletonRow(fr, f, bounds));
  return out;
}

}  // namespace priestley

namespace priestley {

namespace {

// Recursive-descent reader for the descriptor text forms.
class DescReader {
 public:
  explicit DescReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(0, reason + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skipSpace() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool peek(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expectWord(std::string_view w) {
    if (word() != w) fail("expected " + std::string(w));
  }

  std::string word() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skipSpace();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return v;
  }

  // "{1,2}" or "[1,2]" (the latter keeps order).
  NatSet numbers(char open, char close) {
    expect(open);
    NatSet out;
    if (!peek(close)) {
      out.push_back(number());
      while (peek(',')) {
        ++pos_;
        out.push_back(number());
      }
    }
    expect(close);
    return out;
  }

  void keyed(std::string_view key) {
    expectWord(key);
    expect('=');
  }

  ElementDesc element() {
    std::string name = word();
    if (name == "Top") return ElementDesc::top();
    if (name == "Empty") return ElementDesc::empty();
    expect('(');
    ElementDesc out;
    if (name == "Nat") {
      out = ElementDesc::nat(number());
    } else if (name == "Missing") {
      out = ElementDesc::cofinite(numbers('{', '}'));
    } else {
      fail("unknown element " + name);
    }
    expect(')');
    return out;
  }

  FamilyDesc family() {
    std::string name = word();
    if (name == "AllEmpty") return FamilyDesc::allEmpty();
    if (name == "Finite") {
      expect('[');
      std::vector<ElementDesc> members;
      if (!peek(']')) {
        members.push_back(element());
        while (peek(',')) {
          ++pos_;
          members.push_back(element());
        }
      }
      expect(']');
      return FamilyDesc::finite(std::move(members));
    }
    expect('(');
    FamilyDesc out;
    if (name == "NatRun") {
      keyed("start");
      std::uint64_t start = number();
      std::optional<std::uint64_t> cap;
      if (peek(',')) {
        ++pos_;
        keyed("cap");
        cap = number();
      }
      out = FamilyDesc::natRun(start, cap);
    } else if (name == "Holes") {
      keyed("A");
      NatSet a = numbers('{', '}');
      expect(',');
      keyed("start");
      std::uint64_t start = number();
      expect(',');
      keyed("skip");
      out = FamilyDesc::holes(std::move(a), start, number());
    } else if (name == "Shrinking") {
      keyed("A");
      NatSet a = numbers('[', ']');
      expect(',');
      keyed("B");
      out = FamilyDesc::shrinking(std::move(a), numbers('{', '}'));
    } else {
      throw Error(ErrorKind::UnknownRule, "unknown family rule " + name);
    }
    expect(')');
    return out;
  }

  FilterDesc filter() {
    std::string name = word();
    FilterDesc out;
    if (name == "Improper") return out;
    if (name == "AllNonzero") {
      out.kind = FilterDesc::Kind::AllNonzero;
      return out;
    }
    expect('(');
    if (name == "Principal") {
      out.kind = FilterDesc::Kind::Principal;
      out.generator = element();
    } else if (name == "ContainsAll") {
      out.kind = FilterDesc::Kind::ContainsAll;
      out.set = canonical(numbers('{', '}'));
    } else {
      fail("unknown filter " + name);
    }
    expect(')');
    // Same normal forms as the factories.
    const ElementDesc& g = out.generator;
    bool bottom = g == ElementDesc::nat(0) || g == ElementDesc::empty();
    if (out.kind == FilterDesc::Kind::Principal && bottom) return FilterDesc{};
    if (out.kind == FilterDesc::Kind::ContainsAll && out.set.empty()) out.kind = FilterDesc::Kind::AllNonzero;
    return out;
  }

  PointDesc point() {
    std::string name = word();
    if (name == "Generic") return {PointDesc::Kind::Generic, 0};
    expect('(');
    PointDesc out;
    if (name == "P") {
      out = {PointDesc::Kind::P, number()};
    } else if (name == "F") {
      out = {PointDesc::Kind::F, number()};
    } else {
      fail("unknown point " + name);
    }
    expect(')');
    return out;
  }

  SatSetDesc sat() {
    std::string name = word();
    if (name == "EmptySet") return emptySat();
    if (name == "GenericOnly") return genericOnly();
    expect('(');
    SatSetDesc out;
    if (name == "PrefixPoints") {
      out = prefixPoints(number());
    } else if (name == "FinitePlusGeneric") {
      out = finitePlusGeneric(numbers('{', '}'));
    } else if (name == "CofinitePlusGeneric") {
      out = cofinitePlusGeneric(numbers('{', '}'));
    } else {
      fail("unknown saturated set " + name);
    }
    expect(')');
    return out;
  }

  template <class T>
  T finish(T value) {
    skipSpace();
    if (pos_ != text_.size()) fail("trailing characters");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ElementDesc parseElementDesc(std::string_view text) {
  DescReader r(text);
  return r.finish(r.element());
}

FamilyDesc parseFamilyDesc(std::string_view text) {
  DescReader r(text);
  return r.finish(r.family());
}

FilterDesc parseFilterDesc(std::string_view text) {
  DescReader r(text);
  return r.finish(r.filter());
}

PointDesc parsePointDesc(std::string_view text) {
  DescReader r(text);
  return r.finish(r.point());
}

SatSetDesc parseSatSetDesc(std::string_view text) {
  DescReader r(text);
  return r.finish(r.sat());
}

}  // namespace priestley
