#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "priestley/cli.hpp"
#include "priestley/symbolic.hpp"

namespace priestley {

namespace {

struct FixtureCheck {
  std::string name;
  std::function<CheckResult(const SymbolicFrame&, const Bounds&, std::uint64_t)> run;
};

CheckResult named(const std::string& name) {
  CheckResult r;
  r.name = name;
  return r;
}

void fail(CheckResult& r, Json witness) {
  if (r.passed) r.witness = std::move(witness);
  r.passed = false;
}

CheckResult frameLaws(const SymbolicFrame& fr, const Bounds&, std::uint64_t) {
  CheckResult r = named("frame-laws");
  std::vector<ElementDesc> elems = sampleElements(fr, 8);
  std::size_t triples = 0;
  for (const ElementDesc& a : elems) {
    if (!elemLeq(fr, a, a)) fail(r, {{"law", "reflexive"}, {"a", a.toString()}});
    for (const ElementDesc& b : elems) {
      ElementDesc m = elemMeet(fr, a, b);
      ElementDesc j = elemJoin(fr, a, b);
      if (a != b && elemLeq(fr, a, b) && elemLeq(fr, b, a)) {
        fail(r, {{"law", "antisymmetric"}, {"a", a.toString()}, {"b", b.toString()}});
      }
      if (!elemLeq(fr, m, a) || !elemLeq(fr, m, b) || !elemLeq(fr, a, j) || !elemLeq(fr, b, j)) {
        fail(r, {{"law", "bounds"}, {"a", a.toString()}, {"b", b.toString()}});
      }
      for (const ElementDesc& c : elems) {
        ++triples;
        if (elemLeq(fr, a, b) && elemLeq(fr, b, c) && !elemLeq(fr, a, c)) {
          fail(r, {{"law", "transitive"}, {"a", a.toString()}, {"b", b.toString()}, {"c", c.toString()}});
        }
        if (elemLeq(fr, c, a) && elemLeq(fr, c, b) && !elemLeq(fr, c, m)) {
          fail(r, {{"law", "meet is greatest"}, {"a", a.toString()}, {"b", b.toString()}, {"c", c.toString()}});
        }
        if (elemLeq(fr, a, c) && elemLeq(fr, b, c) && !elemLeq(fr, j, c)) {
          fail(r, {{"law", "join is least"}, {"a", a.toString()}, {"b", b.toString()}, {"c", c.toString()}});
        }
      }
    }
  }
  std::size_t families = 0;
  for (const FamilyDesc& fam : builtInFamilies(fr)) {
    ++families;
    ElementDesc total = familyJoin(fr, fam);
    for (const ElementDesc& a : elems) {
      if (familyJoin(fr, familyMeet(fr, a, fam)) != elemMeet(fr, a, total)) {
        fail(r, {{"law", "frame distributivity"}, {"a", a.toString()}, {"family", fam.toString()}});
      }
    }
    std::optional<std::uint64_t> conv = convergenceIndex(fr, fam);
    std::uint64_t steps = fam.isRule() ? 64 : fam.members.size();
    for (std::uint64_t k = 0; k < steps; ++k) {
      ElementDesc p = prefixJoin(fr, fam, k);
      if (!elemLeq(fr, p, total) || (conv && k >= *conv && p != total) || (conv && k < *conv && p == total)) {
        fail(r, {{"law", "prefix joins"}, {"family", fam.toString()}, {"k", k}});
      }
    }
  }
  r.details = {{"elements", elems.size()}, {"triples", triples}, {"families", families}};
  return r;
}

CheckResult spectrumOrder(const SymbolicFrame& fr, const Bounds&, std::uint64_t) {
  CheckResult r = named("spectrum-order");
  Bounds small;
  small.sample = 12;
  std::vector<PointDesc> pts = pointsOf(fr, small).sample;
  std::vector<ElementDesc> elems = sampleElements(fr, 14);
  for (const PointDesc& p : pts) {
    for (const PointDesc& q : pts) {
      // p ≤ q iff every ζ(a) holding p holds q.
      bool derived = std::all_of(elems.begin(), elems.end(), [&](const ElementDesc& a) {
        return !pointMember(fr, p, a) || pointMember(fr, q, a);
      });
      if (derived != pointLeq(fr, p, q)) fail(r, {{"p", p.toString()}, {"q", q.toString()}, {"derived", derived}});
    }
  }
  r.details = {{"points", pts.size()},
               {"order", fr.isChain() ? "P(j) <= P(k) iff k <= j" : "F(n) incomparable, all below Generic"}};
  return r;
}

CheckResult scottClassification(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("scott-classification");
  std::size_t open = 0;
  for (const FilterDesc& f : sampleScottOpenFilters(fr, fr.isChain() ? bounds.sample : 40)) {
    ScottClassification c = classifyScottOpen(fr, f, bounds);
    if (!c.scottOpen) fail(r, {{"filter", f.toString()}});
    ++open;
  }
  Json refuted = Json::array();
  if (fr.isChain()) {
    FilterDesc topFilter = principal(fr, ElementDesc::top());
    ScottClassification c = classifyScottOpen(fr, topFilter, bounds);
    FamilyVerdict<FamilyDesc> literal = scottOpenByFamilies(fr, topFilter, bounds);
    if (c.scottOpen || literal.holds || !c.witness) {
      fail(r, {{"filter", topFilter.toString()}, {"expected", "not Scott-open"}});
    } else {
      refuted.push_back({{"filter", topFilter.toString()},
                         {"witness", c.witness->toString()},
                         {"join", familyJoin(fr, *c.witness).toString()}});
    }
  }
  r.details = {{"scottOpen", open}, {"refuted", refuted}};
  return r;
}

CheckResult compactElements(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("compact-elements");
  std::size_t compact = 0;
  Json nonCompact = Json::array();
  for (const ElementDesc& a : sampleElements(fr, fr.isChain() ? 200 : 40)) {
    ScottClassification c = isCompactElementSym(fr, a, bounds);
    bool expected = !(fr.isChain() && a.kind == ElementDesc::Kind::Top);
    if (c.scottOpen != expected) fail(r, {{"element", a.toString()}, {"compact", c.scottOpen}});
    if (c.scottOpen) {
      ++compact;
    } else {
      nonCompact.push_back({{"element", a.toString()}, {"witness", c.witness ? c.witness->toString() : ""}});
    }
  }
  r.details = {{"compact", compact}, {"notCompact", nonCompact}};
  return r;
}

CheckResult pointsCompletelyPrime(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("points-completely-prime");
  PointSchema schema = pointsOf(fr, bounds);
  std::size_t i = 0;
  for (const PointDesc& p : schema.sample) {
    FilterDesc f = pointFilter(fr, p);
    FamilyVerdict<FamilyDesc> v = completelyPrimeByFamilies(fr, f, bounds);
    if (!v.holds) fail(r, {{"point", p.toString()}, {"family", v.counterexample->toString()}});
    // The pair rule is quadratic; sample it on the first points only.
    if (i++ < 40 && primeWitness(fr, f)) fail(r, {{"point", p.toString()}, {"reason", "not prime"}});
  }
  r.details = {{"schema", schema.description}, {"checked", schema.sample.size()}};
  return r;
}

CheckResult nonPointsRejected(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("non-points-rejected");
  Json rejected = Json::array();
  std::vector<FilterDesc> candidates;
  if (fr.isChain()) {
    candidates = {principal(fr, ElementDesc::top()), improper(fr)};
  } else {
    candidates = {principal(fr, ElementDesc::cofinite({})), principal(fr, ElementDesc::cofinite({3})),
                  containsAll(fr, {1, 2}), containsAll(fr, {0, 5, 9}), improper(fr)};
  }
  for (const FilterDesc& f : candidates) {
    FamilyVerdict<FamilyDesc> cp = completelyPrimeByFamilies(fr, f, bounds);
    auto pair = primeWitness(fr, f);
    if (cp.holds || isPointFilter(fr, f)) {
      fail(r, {{"filter", f.toString()}, {"reason", "passes as a point"}});
      continue;
    }
    Json entry = {{"filter", f.toString()}, {"family", cp.counterexample->toString()}};
    if (pair) entry["pair"] = {pair->first.toString(), pair->second.toString()};
    rejected.push_back(std::move(entry));
  }
  // A prime that is not completely prime: the chain's up(Top).
  for (const FilterDesc& f : primeSpectrumSample(fr, 16)) {
    if (primeWitness(fr, f)) fail(r, {{"filter", f.toString()}, {"reason", "spectrum member is not prime"}});
  }
  r.details = {{"rejected", rejected}};
  return r;
}

CheckResult frameCompactCheck(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("frame-compact");
  FrameCompactness routes = frameCompactRoutes(fr, bounds);
  r.passed = routes.agree();
  r.details = {{"topCompact", routes.topCompact}, {"minimalPrimesArePoints", routes.minimalPrimesArePoints}};
  if (routes.witness) r.details["witness"] = routes.witness->toString();
  if (!r.passed) r.witness = r.details;
  return r;
}

std::vector<SatSetDesc> sampleSatSets(const SymbolicFrame& fr, std::uint64_t limit) {
  std::vector<SatSetDesc> out{emptySat()};
  if (fr.isChain()) {
    for (std::uint64_t m = 1; m <= limit; ++m) out.push_back(prefixPoints(m));
    return out;
  }
  out.push_back(genericOnly());
  for (std::uint64_t n = 0; n <= limit; ++n) {
    out.push_back(finitePlusGeneric({n}));
    out.push_back(finitePlusGeneric({n, n + 2}));
    out.push_back(cofinitePlusGeneric({n}));
  }
  out.push_back(cofinitePlusGeneric({}));
  return out;
}

CheckResult hmRoundTrip(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("hm-round-trip");
  std::vector<FilterDesc> filters = sampleScottOpenFilters(fr, fr.isChain() ? bounds.sample : 60);
  for (const FilterDesc& f : filters) {
    if (hmInv(fr, hmMap(fr, f, bounds)) != f) fail(r, {{"filter", f.toString()}});
  }
  std::vector<SatSetDesc> sats = sampleSatSets(fr, 60);
  for (const SatSetDesc& q : sats) {
    FilterDesc f = hmInv(fr, q);
    if (hmMap(fr, f, bounds) != q) fail(r, {{"set", q.toString()}});
    // hmInv(Q) is {a : Q ⊆ ζ(a)}.
    for (const ElementDesc& a : sampleElements(fr, 8)) {
      if (filterMember(fr, f, a) != zetaContains(fr, q, a)) {
        fail(r, {{"set", q.toString()}, {"element", a.toString()}});
      }
    }
  }
  bool threw = false;
  if (fr.isChain()) {
    try {
      hmMap(fr, principal(fr, ElementDesc::top()), bounds);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::NotScottOpen;
    }
    if (!threw) fail(r, {{"filter", "Principal(Top)"}, {"reason", "mapped despite not being Scott-open"}});
  }
  r.details = {{"filters", filters.size()}, {"saturatedSets", sats.size()}};
  return r;
}

CheckResult hmOrder(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("hm-order");
  std::vector<FilterDesc> filters = sampleScottOpenFilters(fr, 12);
  std::size_t pairs = 0;
  for (const FilterDesc& f : filters) {
    for (const FilterDesc& g : filters) {
      ++pairs;
      if (filterSubset(fr, f, g) != satSubset(fr, hmMap(fr, g, bounds), hmMap(fr, f, bounds))) {
        fail(r, {{"f", f.toString()}, {"g", g.toString()}});
      }
    }
  }
  r.details = {{"pairs", pairs}};
  return r;
}

CheckResult completelyPrimeSingletons(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t) {
  CheckResult r = named("completely-prime-singletons");
  SymPrimeSingletonReport cor = primeSingletonSym(fr, sampleScottOpenFilters(fr, 40), bounds);
  std::size_t prime = 0;
  for (const SymPrimeSingletonRow& row : cor.rows) {
    if (row.completelyPrime) ++prime;
    if (!row.singletonMatches || !row.intersectionMatches) {
      fail(r, {{"filter", row.filter.toString()}, {"minimal", row.minimalCount},
               {"completelyPrime", row.completelyPrime}});
    }
  }
  r.details = {{"filters", cor.rows.size()}, {"completelyPrime", prime}};
  return r;
}

CheckResult seededSamples(const SymbolicFrame& fr, const Bounds& bounds, std::uint64_t seed) {
  CheckResult r = named("seeded-samples");
  std::mt19937_64 rng(seed);
  std::vector<FilterDesc> filters;
  for (int i = 0; i < 64; ++i) {
    if (fr.isChain()) {
      std::uniform_int_distribution<std::uint64_t> pick(1, std::max<std::uint64_t>(bounds.sample, 1));
      filters.push_back(principal(fr, ElementDesc::nat(pick(rng))));
    } else {
      std::uniform_int_distribution<std::uint64_t> size(1, 5), value(0, 40);
      NatSet a;
      for (std::uint64_t k = size(rng); k > 0; --k) a.push_back(value(rng));
      filters.push_back(containsAll(fr, a));
    }
  }
  for (const FilterDesc& f : filters) {
    if (!classifyScottOpen(fr, f, bounds).scottOpen) fail(r, {{"filter", f.toString()}, {"reason", "not Scott-open"}});
    if (hmInv(fr, hmMap(fr, f, bounds)) != f) fail(r, {{"filter", f.toString()}, {"reason", "round trip"}});
    SymPrimeSingletonRow row = primeSingletonRow(fr, f, bounds);
    if (!row.singletonMatches || !row.intersectionMatches) fail(r, {{"filter", f.toString()}, {"reason", "points"}});
  }
  r.details = {{"seed", seed}, {"filters", filters.size()}};
  return r;
}

const std::vector<FixtureCheck>& fixtureChecks() {
  static const std::vector<FixtureCheck> checks{
      {"frame-laws", frameLaws},
      {"spectrum-order", spectrumOrder},
      {"scott-classification", scottClassification},
      {"compact-elements", compactElements},
      {"points-completely-prime", pointsCompletelyPrime},
      {"non-points-rejected", nonPointsRejected},
      {"frame-compact", frameCompactCheck},
      {"hm-round-trip", hmRoundTrip},
      {"hm-order", hmOrder},
      {"completely-prime-singletons", completelyPrimeSingletons},
      {"seeded-samples", seededSamples},
  };
  return checks;
}

std::string prefixOf(const SymbolicFrame& fr) { return fr.isChain() ? "chain." : "cofinite."; }

}  // namespace

std::vector<std::string> fixtureCheckNames() {
  std::vector<std::string> out;
  for (const SymbolicFrame& fr : {SymbolicFrame::chain(), SymbolicFrame::cofinite()}) {
    for (const FixtureCheck& c : fixtureChecks()) out.push_back(prefixOf(fr) + c.name);
  }
  return out;
}

CheckReport runFixtures(const Bounds& bounds, std::uint64_t seed, const std::optional<std::string>& only) {
  auto start = std::chrono::steady_clock::now();
  if (only) {
    std::vector<std::string> names = fixtureCheckNames();
    if (std::find(names.begin(), names.end(), *only) == names.end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown fixture check \"" + *only + "\"");
    }
  }
  CheckReport report;
  report.suite = "fixtures";
  report.input = {{"fixtures", {"ChainOmegaPlusOne", "CofiniteNat"}}, {"sample", bounds.sample}, {"seed", seed}};
  for (const SymbolicFrame& fr : {SymbolicFrame::chain(), SymbolicFrame::cofinite()}) {
    for (const FixtureCheck& c : fixtureChecks()) {
      std::string name = prefixOf(fr) + c.name;
      if (only && *only != name) continue;
      CheckResult res;
      try {
        res = c.run(fr, bounds, seed);
      } catch (const Error& e) {
        res.passed = false;
        res.witness = {{"error", std::string(toString(e.kind()))}, {"message", e.what()}};
      }
      res.name = name;
      report.checks.push_back(std::move(res));
    }
    if (!only) {
      report.counts[std::string(toString(fr.id()))] = {{"frameCompact", frameCompact(fr, bounds)}};
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace priestley
