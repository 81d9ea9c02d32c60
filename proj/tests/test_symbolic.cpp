#include <doctest.h>

#include "symbolic_oracle.hpp"

using namespace priestley;
using E = ElementDesc;

namespace {

constexpr std::size_t kTrunc = 64;
constexpr std::uint64_t kTerms = 200;

bool throwsKind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

std::vector<E> chainSample() {
  std::vector<E> out;
  for (std::uint64_t k = 0; k <= 40; ++k) out.push_back(E::nat(k));
  out.push_back(E::top());
  return out;
}

std::vector<E> cofiniteSample() {
  std::vector<E> out{E::empty()};
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    NatSet s;
    for (std::uint64_t i = 0; i < 6; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(E::cofinite(s));
  }
  for (std::uint64_t n = 6; n < 30; ++n) out.push_back(E::cofinite({n}));
  return out;
}

std::vector<FilterDesc> chainFilters(const SymbolicFrame& fr) {
  std::vector<FilterDesc> out{improper(fr), principal(fr, E::top())};
  for (std::uint64_t m = 1; m <= 12; ++m) out.push_back(principal(fr, E::nat(m)));
  return out;
}

std::vector<FilterDesc> cofiniteFilters(const SymbolicFrame& fr) {
  return {improper(fr),
          allNonzero(fr),
          containsAll(fr, {0}),
          containsAll(fr, {3}),
          containsAll(fr, {1, 2}),
          containsAll(fr, {2, 7}),
          containsAll(fr, {0, 5}),
          principal(fr, E::cofinite({})),
          principal(fr, E::cofinite({1})),
          principal(fr, E::cofinite({1, 3}))};
}

bool oracleMember(const SymbolicFrame& fr, const FilterDesc& f, const E& a) {
  if (fr.isChain()) return oracle::chainFilterMember(f, oracle::chainValue(a));
  return oracle::cofiniteFilterMember(f, oracle::cofiniteValue(a, kTrunc));
}

bool oraclePointMember(const SymbolicFrame& fr, const PointDesc& p, const E& a) {
  if (fr.isChain()) return oracle::chainPointMember(p, oracle::chainValue(a));
  return oracle::cofinitePointMember(p, oracle::cofiniteValue(a, kTrunc));
}

bool sameJoin(const SymbolicFrame& fr, const FamilyDesc& fam) {
  E j = familyJoin(fr, fam);
  if (fr.isChain()) return oracle::chainValue(j) == oracle::chainJoinLimit(fr, fam, kTerms);
  return oracle::cofiniteValue(j, kTrunc) == oracle::cofiniteJoinLimit(fr, fam, kTrunc, kTerms);
}

std::vector<FamilyDesc> extraFamilies(const SymbolicFrame& fr) {
  if (fr.isChain()) return {FamilyDesc::natRun(3), FamilyDesc::natRun(4, 9), FamilyDesc::finite({E::nat(6)})};
  return {FamilyDesc::holes({0}, 0), FamilyDesc::holes({2, 4}, 1, 3), FamilyDesc::shrinking({5, 1, 9}, {2}),
          FamilyDesc::allEmpty(), FamilyDesc::finite({E::cofinite({1}), E::cofinite({2})})};
}

}  // namespace

TEST_CASE("descriptor text round trips") {
  std::vector<E> elems = {E::nat(0), E::nat(17), E::top(), E::empty(), E::cofinite({}), E::cofinite({4, 1})};
  for (const E& a : elems) CHECK(parseElementDesc(a.toString()) == a);
  std::vector<FamilyDesc> fams = {FamilyDesc::natRun(0), FamilyDesc::natRun(2, 7), FamilyDesc::holes({1, 2}, 0, 3),
                                  FamilyDesc::shrinking({3, 0, 2}, {5}), FamilyDesc::allEmpty(),
                                  FamilyDesc::finite({E::nat(1), E::top()}), FamilyDesc::finite({})};
  for (const FamilyDesc& f : fams) CHECK(parseFamilyDesc(f.toString()) == f);
  SymbolicFrame ch = SymbolicFrame::chain();
  SymbolicFrame co = SymbolicFrame::cofinite();
  for (const FilterDesc& f : chainFilters(ch)) CHECK(parseFilterDesc(f.toString()) == f);
  for (const FilterDesc& f : cofiniteFilters(co)) CHECK(parseFilterDesc(f.toString()) == f);
  for (const PointDesc& p : {PointDesc{PointDesc::Kind::P, 3}, PointDesc{PointDesc::Kind::F, 0}, PointDesc{}})
    CHECK(parsePointDesc(p.toString()) == p);
  for (const SatSetDesc& q : {emptySat(), prefixPoints(4), genericOnly(), finitePlusGeneric({2, 7}),
                              cofinitePlusGeneric({1})})
    CHECK(parseSatSetDesc(q.toString()) == q);
}

TEST_CASE("descriptor parse errors") {
  CHECK(throwsKind(ErrorKind::ParseError, [] { parseElementDesc("Nat("); }));
  CHECK(throwsKind(ErrorKind::ParseError, [] { parseElementDesc("Nat(3) x"); }));
  CHECK(throwsKind(ErrorKind::UnknownRule, [] { parseFamilyDesc("Zigzag(start=0)"); }));
  CHECK(parseFilterDesc("Principal(Nat(0))").kind == FilterDesc::Kind::Improper);
  CHECK(parseFilterDesc("ContainsAll({})").kind == FilterDesc::Kind::AllNonzero);
}

TEST_CASE("descriptors are checked against their fixture") {
  SymbolicFrame ch = SymbolicFrame::chain();
  CHECK(throwsKind(ErrorKind::FixtureMismatch, [&] { elemLeq(ch, E::empty(), E::top()); }));
  CHECK(throwsKind(ErrorKind::FixtureMismatch, [&] { familyJoin(ch, FamilyDesc::allEmpty()); }));
}

TEST_CASE("element order and lattice operations") {
  SymbolicFrame ch = SymbolicFrame::chain();
  SymbolicFrame co = SymbolicFrame::cofinite();
  CHECK(elemLeq(ch, E::nat(2), E::top()));
  CHECK(elemLeq(co, E::cofinite({1, 2}), E::cofinite({1})));
  CHECK_FALSE(elemLeq(co, E::cofinite({1}), E::cofinite({2})));
  CHECK(elemMeet(co, E::cofinite({1}), E::cofinite({2})) == E::cofinite({1, 2}));
  CHECK(elemJoinFinite(ch, {E::nat(3), E::nat(5)}) == E::nat(5));
  CHECK(elemJoinFinite(ch, {}) == E::nat(0));
  CHECK(elemJoinFinite(co, {}) == E::empty());
  for (const E& a : chainSample())
    for (const E& b : chainSample()) {
      CHECK(elemLeq(ch, a, b) == (oracle::chainValue(a) <= oracle::chainValue(b)));
      CHECK(oracle::chainValue(elemMeet(ch, a, b)) == std::min(oracle::chainValue(a), oracle::chainValue(b)));
    }
  std::vector<E> s = cofiniteSample();
  for (std::size_t i = 0; i < s.size(); i += 3)
    for (std::size_t j = 0; j < s.size(); j += 2) {
      auto a = oracle::cofiniteValue(s[i], kTrunc);
      auto b = oracle::cofiniteValue(s[j], kTrunc);
      CHECK(elemLeq(co, s[i], s[j]) == oracle::leq(a, b));
      CHECK(oracle::cofiniteValue(elemMeet(co, s[i], s[j]), kTrunc) == oracle::meet(a, b));
      CHECK(oracle::cofiniteValue(elemJoin(co, s[i], s[j]), kTrunc) == oracle::join(a, b));
    }
}

TEST_CASE("family joins are limits of their terms") {
  SymbolicFrame ch = SymbolicFrame::chain();
  SymbolicFrame co = SymbolicFrame::cofinite();
  CHECK(familyJoin(ch, FamilyDesc::natRun(0)) == E::top());
  std::vector<E> singles;
  for (std::uint64_t n = 0; n < 10; ++n) singles.push_back(E::cofinite({n}));
  CHECK(familyJoin(co, FamilyDesc::holes({})) == E::cofinite({}));
  for (const SymbolicFrame& fr : {ch, co}) {
    std::vector<FamilyDesc> fams = builtInFamilies(fr);
    for (const FamilyDesc& f : extraFamilies(fr)) fams.push_back(f);
    for (const FamilyDesc& fam : fams) {
      CAPTURE(fam.toString());
      CHECK(sameJoin(fr, fam));
      auto conv = convergenceIndex(fr, fam);
      if (conv) CHECK(prefixJoin(fr, fam, *conv) == familyJoin(fr, fam));
    }
  }
}

TEST_CASE("finite meets distribute over family joins") {
  for (const SymbolicFrame& fr : {SymbolicFrame::chain(), SymbolicFrame::cofinite()}) {
    std::vector<E> elems = fr.isChain() ? chainSample() : cofiniteSample();
    std::vector<FamilyDesc> fams = builtInFamilies(fr);
    for (const FamilyDesc& f : extraFamilies(fr)) fams.push_back(f);
    for (std::size_t i = 0; i < elems.size(); i += 4) {
      const E& a = elems[i];
      for (const FamilyDesc& fam : fams) {
        CAPTURE(a.toString());
        CAPTURE(fam.toString());
        E lhs = elemMeet(fr, a, familyJoin(fr, fam));
        FamilyDesc met = familyMeet(fr, a, fam);
        CHECK(familyJoin(fr, met) == lhs);
        if (fr.isChain()) {
          std::uint64_t rhs = 0;
          std::uint64_t av = oracle::chainValue(a);
          std::uint64_t jv = oracle::chainJoinLimit(fr, fam, kTerms);
          rhs = std::min(av, jv);
          CHECK(oracle::chainValue(lhs) == rhs);
        } else {
          oracle::Cofinite av = oracle::cofiniteValue(a, kTrunc);
          oracle::Cofinite acc{std::vector<bool>(kTrunc, false), false};
          for (std::uint64_t k = 0; k < oracle::termCount(fam, kTerms); ++k)
            acc = oracle::join(acc, oracle::meet(av, oracle::cofiniteValue(familyTerm(fr, fam, k), kTrunc)));
          CHECK(oracle::cofiniteValue(lhs, kTrunc) == acc);
        }
      }
    }
  }
}

TEST_CASE("filter membership and inclusion") {
  SymbolicFrame ch = SymbolicFrame::chain();
  SymbolicFrame co = SymbolicFrame::cofinite();
  CHECK_FALSE(filterMember(co, containsAll(co, {3}), E::cofinite({3})));
  CHECK(filterMember(ch, principal(ch, E::nat(2)), E::top()));
  CHECK_FALSE(filterMember(co, allNonzero(co), E::empty()));
  for (const SymbolicFrame& fr : {ch, co}) {
    std::vector<E> elems = fr.isChain() ? chainSample() : cofiniteSample();
    std::vector<FilterDesc> fs = fr.isChain() ? chainFilters(fr) : cofiniteFilters(fr);
    for (const FilterDesc& f : fs) {
      for (const E& a : elems) CHECK(filterMember(fr, f, a) == oracleMember(fr, f, a));
      for (const FilterDesc& g : fs) {
        bool sub = std::all_of(elems.begin(), elems.end(),
                               [&](const E& a) { return !oracleMember(fr, f, a) || oracleMember(fr, g, a); });
        CAPTURE(f.toString());
        CAPTURE(g.toString());
        CHECK(filterSubset(fr, f, g) == sub);
      }
    }
  }
}

TEST_CASE("Scott-openness on the chain") {
  SymbolicFrame ch = SymbolicFrame::chain();
  FilterDesc top = principal(ch, E::top());
  CHECK_FALSE(refuteScottOpen(ch, top, FamilyDesc::natRun(0)).holds);
  CHECK(refuteScottOpen(ch, principal(ch, E::nat(3)), FamilyDesc::natRun(0)).holds);
  ScottClassification c = classifyScottOpen(ch, top);
  CHECK_FALSE(c.scottOpen);
  REQUIRE(c.witness);
  // The witness joins into the filter and no finite prefix does.
  CHECK(oracle::chainFilterMember(top, oracle::chainJoinLimit(ch, *c.witness, kTerms)));
  for (std::uint64_t k = 0; k < 1000; ++k)
    CHECK_FALSE(oracle::chainFilterMember(top, oracle::chainValue(familyTerm(ch, *c.witness, k))));
  CHECK(classifyScottOpen(ch, principal(ch, E::nat(7))).scottOpen);
  CHECK_FALSE(isCompactElementSym(ch, E::top()).scottOpen);
  CHECK(isCompactElementSym(ch, E::nat(0)).scottOpen);
  CHECK(isCompactElementSym(ch, E::nat(9)).scottOpen);
}

TEST_CASE("Scott-openness on the cofinite frame") {
  SymbolicFrame co = SymbolicFrame::cofinite();
  for (const FilterDesc& f : cofiniteFilters(co)) {
    CAPTURE(f.toString());
    CHECK(classifyScottOpen(co, f).scottOpen);
    CHECK(scottOpenByFamilies(co, f).holds);
  }
  for (const FamilyDesc& fam : builtInFamilies(co)) CHECK(refuteScottOpen(co, allNonzero(co), fam).holds);
  CHECK(isCompactElementSym(co, E::cofinite({4})).scottOpen);
  CHECK(isCompactElementSym(co, E::cofinite({})).scottOpen);
}

TEST_CASE("points are completely prime and non-points are not prime") {
  for (const SymbolicFrame& fr : {SymbolicFrame::chain(), SymbolicFrame::cofinite()}) {
    Bounds b;
    b.sample = 30;
    std::vector<FamilyDesc> fams = builtInFamilies(fr);
    for (const FamilyDesc& f : extraFamilies(fr)) fams.push_back(f);
    for (const PointDesc& p : pointsOf(fr, b).sample) {
      CAPTURE(p.toString());
      CHECK(completelyPrimeByFamilies(fr, pointFilter(fr, p)).holds);
      CHECK_FALSE(primeWitness(fr, pointFilter(fr, p)));
      for (const FamilyDesc& fam : fams) {
        bool joinIn = oraclePointMember(fr, p, familyJoin(fr, fam));
        bool someTerm = false;
        for (std::uint64_t k = 0; k < oracle::termCount(fam, kTerms) && !someTerm; ++k)
          someTerm = oraclePointMember(fr, p, familyTerm(fr, fam, k));
        CHECK(joinIn == someTerm);
      }
    }
  }
  SymbolicFrame co = SymbolicFrame::cofinite();
  FilterDesc whole = principal(co, E::cofinite({}));
  auto w = primeWitness(co, whole);
  REQUIRE(w);
  CHECK(oracleMember(co, whole, elemJoin(co, w->first, w->second)));
  CHECK_FALSE(oracleMember(co, whole, w->first));
  CHECK_FALSE(oracleMember(co, whole, w->second));
  CHECK_FALSE(isPointFilter(co, whole));
  CHECK(isPointFilter(co, allNonzero(co)));
}

TEST_CASE("the spectrum order is inclusion of filters") {
  for (const SymbolicFrame& fr : {SymbolicFrame::chain(), SymbolicFrame::cofinite()}) {
    Bounds b;
    b.sample = 12;
    std::vector<PointDesc> pts = pointsOf(fr, b).sample;
    std::vector<E> elems = fr.isChain() ? chainSample() : cofiniteSample();
    for (const PointDesc& p : pts)
      for (const PointDesc& q : pts) {
        bool derived = std::all_of(elems.begin(), elems.end(), [&](const E& a) {
          return !oraclePointMember(fr, p, a) || oraclePointMember(fr, q, a);
        });
        CAPTURE(p.toString());
        CAPTURE(q.toString());
        CHECK(pointLeq(fr, p, q) == derived);
      }
  }
}

TEST_CASE("frame compactness by both routes") {
  FrameCompactness ch = frameCompactRoutes(SymbolicFrame::chain());
  CHECK(ch.agree());
  CHECK_FALSE(ch.topCompact);
  CHECK(ch.witness);
  CHECK_FALSE(frameCompact(SymbolicFrame::chain()));
  FrameCompactness co = frameCompactRoutes(SymbolicFrame::cofinite());
  CHECK(co.agree());
  CHECK(co.topCompact);
  CHECK(frameCompact(SymbolicFrame::cofinite()));
}

TEST_CASE("Scott-open filters and compact saturated sets of points") {
  SymbolicFrame ch = SymbolicFrame::chain();
  SymbolicFrame co = SymbolicFrame::cofinite();
  CHECK(hmMap(ch, principal(ch, E::nat(3))) == prefixPoints(3));
  CHECK(hmMap(ch, improper(ch)) == emptySat());
  CHECK(hmMap(co, allNonzero(co)) == genericOnly());
  CHECK(hmInv(co, genericOnly()) == allNonzero(co));
  CHECK(hmMap(co, containsAll(co, {2, 7})) == finitePlusGeneric({2, 7}));
  CHECK(throwsKind(ErrorKind::NotScottOpen, [&] { hmMap(ch, principal(ch, E::top())); }));
  for (const SymbolicFrame& fr : {ch, co}) {
    Bounds b;
    b.sample = 12;
    std::vector<PointDesc> pts = pointsOf(fr, b).sample;
    std::vector<E> elems = fr.isChain() ? chainSample() : cofiniteSample();
    std::vector<FilterDesc> fs = sampleScottOpenFilters(fr, 10);
    for (const FilterDesc& f : fs) {
      CAPTURE(f.toString());
      SatSetDesc q = hmMap(fr, f);
      CHECK(hmInv(fr, q) == f);
      CHECK(hmMap(fr, hmInv(fr, q)) == q);
      // The image holds exactly the points that contain F.
      for (const PointDesc& p : pts) {
        bool above = std::all_of(elems.begin(), elems.end(),
                                 [&](const E& a) { return !oracleMember(fr, f, a) || oraclePointMember(fr, p, a); });
        CHECK(satContains(fr, q, p) == above);
      }
      for (const FilterDesc& g : fs) CHECK(filterSubset(fr, f, g) == satSubset(fr, hmMap(fr, g), q));
    }
  }
}

TEST_CASE("completely prime filters have a single minimal point") {
  SymbolicFrame ch = SymbolicFrame::chain();
  SymbolicFrame co = SymbolicFrame::cofinite();
  SymPrimeSingletonRow gen = primeSingletonRow(co, allNonzero(co));
  CHECK(gen.minimalCount == 1);
  CHECK(gen.completelyPrime);
  SymPrimeSingletonRow pair = primeSingletonRow(co, containsAll(co, {1, 2}));
  CHECK(pair.minimalCount == 2);
  CHECK_FALSE(pair.completelyPrime);
  SymPrimeSingletonRow p4 = primeSingletonRow(ch, principal(ch, E::nat(4)));
  CHECK(p4.minimalCount == 1);
  CHECK(p4.completelyPrime);
  for (const SymbolicFrame& fr : {ch, co}) CHECK(primeSingletonSym(fr, sampleScottOpenFilters(fr, 10)).ok());
}
