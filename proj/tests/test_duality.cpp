#include <doctest.h>

#include "oracles.hpp"
#include "priestley/corpus.hpp"
#include "priestley/duality.hpp"

using namespace priestley;

namespace {

constexpr int kA = 1;
constexpr int kB = 2;
constexpr int kTop = 3;

int pointWith(const PriestleyDual& xd, ElemSet members) {
  for (int i = 0; i < static_cast<int>(xd.size()); ++i)
    if (xd.points()[i].members == members) return i;
  return -1;
}

}  // namespace

TEST_CASE("dual spaces of small lattices") {
  CHECK(dualSpace(chainLattice(2)).size() == 1);
  PriestleyDual d = dualSpace(diamondLattice());
  REQUIRE(d.size() == 2);
  CHECK(pointWith(d, ElemSet({kA, kTop})) >= 0);
  CHECK(pointWith(d, ElemSet({kB, kTop})) >= 0);
  CHECK_FALSE(d.order().leq(0, 1));
  CHECK_FALSE(d.order().leq(1, 0));
  PriestleyDual c = dualSpace(chainLattice(3));
  REQUIRE(c.size() == 2);
  CHECK((c.order().leq(0, 1) || c.order().leq(1, 0)));
  CHECK(dualSpace(chainLattice(1)).size() == 0);
}

TEST_CASE("dual of a downset lattice is the opposite poset") {
  Bounds wide;
  wide.enumeration = 64;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const FinPoset& p : allPosets(n)) {
      PriestleyDual xd = dualSpace(downsetLattice(p, wide), wide);
      CHECK(oracle::isomorphic(oracle::matrixOf(xd.order()), oracle::transpose(oracle::matrixOf(p))));
    }
  }
}

TEST_CASE("points, sigma and Y against brute force") {
  for (const NamedLattice& nl : latticeCorpus(4)) {
    if (nl.lattice.size() > 16) continue;
    PriestleyDual xd = dualSpace(nl.lattice);
    oracle::Matrix r = oracle::matrixOf(nl.lattice);
    std::vector<oracle::Mask> primes = oracle::primeFilters(r);
    REQUIRE(primes.size() == xd.size());
    for (std::size_t i = 0; i < primes.size(); ++i) CHECK(xd.points()[i].members.mask() == primes[i]);
    for (int a = 0; a < static_cast<int>(nl.lattice.size()); ++a) {
      oracle::Mask expected = 0;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (oracle::has(primes[i], a)) expected |= oracle::bit(static_cast<int>(i));
      CHECK(xd.sigma(a).mask() == expected);
    }
    // Finite Stone spaces are discrete, so every ↓x is clopen.
    CHECK(xd.y() == xd.all());
    CHECK(xd.clopens().size() == (std::size_t{1} << xd.size()));
  }
}

TEST_CASE("reconstruction round trip") {
  Reconstruction d = reconstruct(dualSpace(diamondLattice()));
  CHECK(d.clopenUpsets.size() == 4);
  CHECK(oracle::isomorphic(oracle::matrixOf(d.upsetLattice), oracle::matrixOf(diamondLattice())));
  Reconstruction c = reconstruct(dualSpace(chainLattice(3)));
  CHECK(oracle::isomorphic(oracle::matrixOf(c.upsetLattice), oracle::matrixOf(chainLattice(3))));
  Reconstruction one = reconstruct(dualSpace(chainLattice(1)));
  CHECK(one.clopenUpsets.size() == 1);
  for (const NamedLattice& nl : latticeCorpus(4)) {
    PriestleyDual xd = dualSpace(nl.lattice);
    Reconstruction rec = reconstruct(xd);
    CHECK(oracle::isomorphic(oracle::matrixOf(rec.upsetLattice), oracle::matrixOf(nl.lattice)));
    CHECK(isStoneEmbedding(xd));
  }
}

TEST_CASE("filters and closed upsets") {
  FinLattice dl = diamondLattice();
  PriestleyDual d = dualSpace(dl);
  int xa = pointWith(d, ElemSet({kA, kTop}));
  CHECK(filterToK(d, makeFilter(dl, ElemSet({kA, kTop}))).members == ElemSet{xa});
  CHECK(filterToK(d, makeFilter(dl, ElemSet{kTop})).members == d.all());
  CHECK(filterToK(d, improperFilter(dl)).members.empty());
  CHECK(kToFilter(d, makeClosedUpset(d, ElemSet{xa})).members == ElemSet({kA, kTop}));
  CHECK(kToFilter(d, makeClosedUpset(d, ElemSet{})).members == dl.all());
  CHECK(kToFilter(d, makeClosedUpset(d, d.all())).members == ElemSet{kTop});
}

TEST_CASE("the filter bijection against independent counts") {
  for (const NamedLattice& nl : latticeCorpus(4)) {
    if (nl.lattice.size() > 16) continue;
    PriestleyDual xd = dualSpace(nl.lattice);
    FilterBijection b = filterBijection(xd);
    CHECK(b.ok());
    oracle::Matrix r = oracle::matrixOf(nl.lattice);
    CHECK(b.filters == oracle::filters(r).size());
    CHECK(b.closedUpsets == oracle::upsets(oracle::matrixOf(xd.order())).size());
  }
}

TEST_CASE("zeta and S-upsets") {
  FinLattice dl = diamondLattice();
  PriestleyDual d = dualSpace(dl);
  int xa = pointWith(d, ElemSet({kA, kTop}));
  CHECK(zeta(d, kA) == ElemSet{xa});
  CHECK(zeta(d, 0).empty());
  CHECK(isSUpset(d, makeClosedUpset(d, ElemSet{xa})));
  CHECK(isSUpset(d, makeClosedUpset(d, ElemSet{})));
}

TEST_CASE("the three filter conditions coincide") {
  FinLattice dl = diamondLattice();
  PriestleyDual d = dualSpace(dl);
  FilterConditions top = filterConditions(d, makeFilter(dl, ElemSet{kTop}));
  CHECK((top.scottOpen && top.minInY && top.closureCondition));
  FilterConditions whole = filterConditions(d, improperFilter(dl));
  CHECK((whole.scottOpen && whole.minInY && whole.closureCondition));
  for (const NamedLattice& nl : latticeCorpus(4)) {
    if (nl.lattice.size() > 12) continue;
    PriestleyDual xd = dualSpace(nl.lattice);
    for (const Filter& f : enumerateFilters(nl.lattice)) {
      FilterConditions lit = filterConditions(xd, f);
      FilterConditions idl = filterConditions(xd, f, {}, ScottRoute::Ideals);
      CHECK(lit.coherent());
      CHECK(lit.scottOpen);
      CHECK(lit.scottOpen == idl.scottOpen);
    }
  }
}

TEST_CASE("Scott-open filters, S-upsets and compact saturated sets of Y") {
  ScottOpenIso d = hmFiniteIso(dualSpace(diamondLattice()));
  CHECK(d.ok());
  CHECK(d.scottOpenFilters == 4);
  CHECK(d.compactSaturatedInY == 4);
  ScottOpenIso c = hmFiniteIso(dualSpace(chainLattice(3)));
  CHECK(c.scottOpenFilters == 3);
  ScottOpenIso one = hmFiniteIso(dualSpace(chainLattice(1)));
  CHECK(one.scottOpenFilters == 1);
  CHECK(one.compactSaturatedInY == 1);
  for (const NamedLattice& nl : latticeCorpus(4)) {
    if (nl.lattice.size() > 12) continue;
    PriestleyDual xd = dualSpace(nl.lattice);
    ScottOpenIso iso = hmFiniteIso(xd);
    CHECK(iso.ok());
    CHECK(iso.compactSaturatedInY == oracle::upsets(oracle::matrixOf(xd.order())).size());
  }
}

TEST_CASE("completely prime filters are those with one minimal point") {
  FinLattice dl = diamondLattice();
  PrimeSingletonReport d = primeSingletonCheck(dualSpace(dl));
  CHECK(d.ok());
  for (const PrimeSingletonRow& row : d.rows) {
    if (row.filter.members == ElemSet{kTop}) {
      CHECK(row.minK.size() == 2);
      CHECK_FALSE(row.completelyPrime);
    }
    if (row.filter.members == ElemSet({kA, kTop})) {
      CHECK(row.minK.size() == 1);
      CHECK(row.completelyPrime);
    }
  }
  for (const NamedLattice& nl : latticeCorpus(4)) {
    if (nl.lattice.size() > 10) continue;
    PriestleyDual xd = dualSpace(nl.lattice);
    oracle::Matrix r = oracle::matrixOf(nl.lattice);
    PrimeSingletonReport cor = primeSingletonCheck(xd);
    CHECK(cor.ok());
    for (const PrimeSingletonRow& row : cor.rows)
      CHECK(row.completelyPrime == oracle::completelyPrime(r, row.filter.members.mask()));
  }
}

TEST_CASE("structural validators, spatiality and joins") {
  CHECK(structuralValidators(dualSpace(chainLattice(1))).ok());
  CHECK(spatialViaDensity(dualSpace(diamondLattice())));
  CHECK(spatialViaDensity(dualSpace(chainLattice(1))));
  CHECK(spatialViaDensity(dualSpace(chainLattice(3))));
  PriestleyDual d = dualSpace(diamondLattice());
  CHECK(sigmaJoinCheck(d, ElemSet{}));
  CHECK(sigmaJoinCheck(d, ElemSet({kA, kB})));
  CHECK((d.sigma(kA) | d.sigma(kB)) == d.sigma(kTop));
  for (const NamedLattice& nl : latticeCorpus(4)) {
    if (nl.lattice.size() > 12) continue;
    PriestleyDual xd = dualSpace(nl.lattice);
    CHECK(structuralValidators(xd).ok());
    CHECK(sigmaJoinsAllSubsets(xd));
    CHECK(compactIffSUpset(xd));
    CHECK(compactIffSUpset(xd, {}, ScottRoute::Ideals));
  }
}

TEST_CASE("non-distributive lattices have no dual") {
  bool threw = false;
  try {
    dualSpace(m3Lattice());
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::NotDistributive && e.witness().size() == 3;
  }
  CHECK(threw);
}
