#include <doctest.h>

#include "oracles.hpp"
#include "priestley/corpus.hpp"
#include "priestley/poset.hpp"

using namespace priestley;

namespace {

bool throwsKind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

FinPoset vPoset() { return buildPoset(3, {{0, 1}, {0, 2}}); }

}  // namespace

TEST_CASE("buildPoset takes the reflexive-transitive closure") {
  FinPoset one = buildPoset(1, {});
  CHECK(one.size() == 1);
  CHECK(one.leq(0, 0));

  FinPoset chain = buildPoset(3, {{0, 1}, {1, 2}});
  CHECK(chain.leq(0, 2));
  CHECK_FALSE(chain.leq(2, 0));
  CHECK(oracle::matrixOf(chain) == oracle::closureOfCovers(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("buildPoset rejects cycles and bad indices") {
  CHECK(throwsKind(ErrorKind::CycleDetected, [] { buildPoset(3, {{0, 1}, {1, 2}, {2, 0}}); }));
  CHECK(throwsKind(ErrorKind::IndexOutOfRange, [] { buildPoset(2, {{0, 2}}); }));
  CHECK(throwsKind(ErrorKind::CycleDetected, [] { buildPoset(2, {{0, 1}, {1, 0}}); }));
}

TEST_CASE("covers are the transitive reduction") {
  FinPoset chain = buildPoset(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("closure in both directions") {
  FinPoset two = chainPoset(2);
  CHECK(closure(two, ElemSet{0}, Direction::Up) == ElemSet({0, 1}));
  CHECK(closure(two, ElemSet{}, Direction::Up).empty());
  CHECK(closure(two, ElemSet{}, Direction::Down).empty());
  CHECK(closure(vPoset(), ElemSet{1}, Direction::Down) == ElemSet({0, 1}));
}

TEST_CASE("closure agrees with a relation scan on every small poset") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const FinPoset& p : allPosets(n)) {
      oracle::Matrix r = oracle::matrixOf(p);
      for (std::uint64_t s = 0; s < (1U << n); ++s) {
        ElemSet up = closure(p, ElemSet(s), Direction::Up);
        ElemSet down = closure(p, ElemSet(s), Direction::Down);
        CHECK(up.mask() == oracle::upClosure(r, s));
        CHECK(down.mask() == oracle::downClosure(r, s));
        CHECK(closure(p, up, Direction::Up) == up);
      }
    }
  }
}

TEST_CASE("extremes") {
  FinPoset two = chainPoset(2);
  CHECK(extremes(two, ElemSet({0, 1}), Extreme::Min) == ElemSet{0});
  CHECK(extremes(two, ElemSet({0, 1}), Extreme::Max) == ElemSet{1});
  CHECK(extremes(antichainPoset(2), ElemSet({0, 1}), Extreme::Min) == ElemSet({0, 1}));
  CHECK(extremes(vPoset(), ElemSet({1, 2}), Extreme::Min) == ElemSet({1, 2}));
}

TEST_CASE("upsets match the brute-force enumeration") {
  CHECK(enumerateUpsets(buildPoset(1, {})) == std::vector<ElemSet>{ElemSet{}, ElemSet{0}});
  CHECK(enumerateUpsets(chainPoset(2)) == std::vector<ElemSet>{ElemSet{}, ElemSet{1}, ElemSet({0, 1})});
  CHECK(enumerateUpsets(antichainPoset(2)).size() == 4);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const FinPoset& p : allPosets(n)) {
      oracle::Matrix r = oracle::matrixOf(p);
      std::vector<ElemSet> ups = enumerateUpsets(p);
      std::vector<oracle::Mask> expected = oracle::upsets(r);
      REQUIRE(ups.size() == expected.size());
      for (std::size_t i = 0; i < ups.size(); ++i) CHECK(ups[i].mask() == expected[i]);
      // Upsets correspond to antichains through their minimal elements.
      CHECK(ups.size() == oracle::antichainCount(r));
      CHECK(enumerateDownsets(p).size() == ups.size());
    }
  }
}

TEST_CASE("enumeration respects its bound") {
  Bounds tight;
  tight.enumeration = 3;
  CHECK(throwsKind(ErrorKind::BoundExceeded, [&] { enumerateUpsets(chainPoset(4), tight); }));
}

TEST_CASE("poset representatives are complete and pairwise non-isomorphic") {
  const std::size_t unlabeled[] = {0, 1, 2, 5, 16, 63};
  const std::size_t labeled[] = {0, 1, 3, 19, 219, 4231};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<FinPoset> reps = allPosets(n);
    CHECK(reps.size() == unlabeled[n]);
    // Orbit-stabilizer: the labeled count is Σ n!/|Aut(P)|.
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    std::size_t total = 0;
    for (const FinPoset& p : reps) total += factorial / oracle::automorphisms(oracle::matrixOf(p));
    CHECK(total == labeled[n]);
    if (n <= 4) {
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
          CHECK_FALSE(oracle::isomorphic(oracle::matrixOf(reps[i]), oracle::matrixOf(reps[j])));
    }
  }
}

TEST_CASE("dual and restrict") {
  FinPoset v = vPoset();
  CHECK(oracle::matrixOf(v.dual()) == oracle::transpose(oracle::matrixOf(v)));
  FinPoset sub = v.restrict(ElemSet({1, 2}));
  CHECK(sub.size() == 2);
  CHECK_FALSE(sub.leq(0, 1));
  CHECK(setLabel(v, ElemSet({0, 2})) == "{0,2}");
}
