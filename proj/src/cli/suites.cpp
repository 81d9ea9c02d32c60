#include <algorithm>
#include <chrono>
#include <functional>

#include "priestley/cli.hpp"

namespace priestley {

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json CheckReport::toJson(bool withTimings) const {
  Json out;
  out["schemaVersion"] = kSchemaVersion;
  out["suite"] = suite;
  out["status"] = passed() ? "pass" : "fail";
  out["input"] = input;
  out["counts"] = counts;
  std::size_t failed = 0;
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["details"] = c.details;
    if (!c.passed) {
      ++failed;
      j["witness"] = c.witness;
      if (!rerun.empty()) {
        std::string cmd = rerun;
        auto pos = cmd.find("{check}");
        if (pos != std::string::npos) cmd.replace(pos, 7, c.name);
        j["rerun"] = cmd;
      }
    }
    list.push_back(std::move(j));
  }
  out["summary"] = {{"checks", checks.size()}, {"passed", checks.size() - failed}, {"failed", failed}};
  out["checks"] = std::move(list);
  if (withTimings) out["seconds"] = seconds;
  return out;
}

Suite parseSuite(std::string_view name) {
  if (name == "dual") return Suite::Dual;
  if (name == "hm") return Suite::Hm;
  if (name == "all") return Suite::All;
  throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + std::string(name) + "\" (expected dual, hm or all)");
}

std::string_view toString(Suite suite) {
  switch (suite) {
    case Suite::Dual: return "dual";
    case Suite::Hm: return "hm";
    case Suite::All: return "all";
  }
  return "";
}

namespace {

Json labelsOf(const FinPoset& p, ElemSet s) {
  Json out = Json::array();
  for (int i : s) out.push_back(p.label(i));
  return out;
}

Json indices(ElemSet s) { return s.toVector(); }

struct Context {
  const InputDocument& doc;
  std::optional<FinLattice> lattice;
  std::optional<PriestleyDual> dual;
  ScottRoute route = ScottRoute::Literal;

  const FinLattice& l() const { return *lattice; }
  const PriestleyDual& xd() const { return *dual; }
  const Bounds& bounds() const { return doc.bounds; }
};

using CheckFn = std::function<CheckResult(Context&)>;

struct CheckSpec {
  std::string name;
  Suite suite;
  CheckFn run;
};

CheckResult result(const std::string& name, bool passed) {
  CheckResult r;
  r.name = name;
  r.passed = passed;
  return r;
}

std::vector<CheckSpec> latticeChecks() {
  std::vector<CheckSpec> out;
  out.push_back({"priestley-round-trip", Suite::Dual, [](Context& c) {
                   CheckResult r = result("priestley-round-trip", true);
                   try {
                     Reconstruction rec = reconstruct(c.xd());
                     r.details["clopenUpsets"] = rec.clopenUpsets.size();
                   } catch (const Error& e) {
                     r.passed = false;
                     r.witness = {{"error", std::string(toString(e.kind()))}, {"message", e.what()},
                                  {"elements", e.witness()}};
                   }
                   return r;
                 }});
  out.push_back({"stone-embedding", Suite::Dual, [](Context& c) {
                   CheckResult r = result("stone-embedding", isStoneEmbedding(c.xd()));
                   if (!r.passed) r.witness = {{"reason", "sigma is not an injective lattice homomorphism"}};
                   return r;
                 }});
  out.push_back({"filter-bijection", Suite::Dual, [](Context& c) {
                   FilterBijection fb = filterBijection(c.xd(), c.bounds());
                   CheckResult r = result("filter-bijection", fb.ok());
                   r.details = {{"filters", fb.filters}, {"closedUpsets", fb.closedUpsets},
                                {"mutualInverse", fb.mutualInverse}, {"antitone", fb.antitone}};
                   if (!r.passed && fb.witness) r.witness = {{"filter", labelsOf(c.l().poset(), fb.witness->members)}};
                   return r;
                 }});
  out.push_back({"structural-validators", Suite::Dual, [](Context& c) {
                   StructuralReport s = structuralValidators(c.xd(), c.bounds());
                   CheckResult r = result("structural-validators", s.ok());
                   r.details = {{"separation", s.separation.ok},
                                {"esakia", s.esakia.ok},
                                {"extremallyOrderDisconnected", s.extremallyOrderDisconnected.ok},
                                {"downsetOfClosedIsClosed", s.downsetOfClosedIsClosed.ok}};
                   if (!r.passed) {
                     for (const auto* v : {&s.separation, &s.esakia, &s.extremallyOrderDisconnected,
                                           &s.downsetOfClosedIsClosed}) {
                       if (!v->ok) {
                         r.witness = {{"points", v->witness}};
                         break;
                       }
                     }
                   }
                   return r;
                 }});
  out.push_back({"cornish", Suite::Dual, [](Context& c) {
                   CheckResult r = result("cornish", true);
                   try {
                     FiniteTopSpace s = spectralFromPriestley(c.xd(), c.bounds());
                     r.details = {{"openUpsets", s.opens().size()},
                                  {"closedUpsets", closedUpsets(c.xd(), c.bounds()).size()}};
                   } catch (const Error& e) {
                     r.passed = false;
                     r.witness = {{"error", std::string(toString(e.kind()))}, {"message", e.what()}};
                   }
                   return r;
                 }});
  out.push_back({"filter-conditions", Suite::Hm, [](Context& c) {
                   CheckResult r = result("filter-conditions", true);
                   std::size_t open = 0;
                   std::vector<Filter> filters = enumerateFilters(c.l(), c.bounds());
                   for (const Filter& f : filters) {
                     FilterConditions fc = filterConditions(c.xd(), f, c.bounds(), c.route);
                     if (fc.scottOpen) ++open;
                     if (!fc.coherent() && r.passed) {
                       r.passed = false;
                       r.witness = {{"filter", labelsOf(c.l().poset(), f.members)},
                                    {"scottOpen", fc.scottOpen},
                                    {"minInY", fc.minInY},
                                    {"closureCondition", fc.closureCondition}};
                     }
                   }
                   r.details = {{"filters", filters.size()}, {"scottOpen", open}};
                   return r;
                 }});
  out.push_back({"scott-open-filters-vs-ksat", Suite::Hm, [](Context& c) {
                   ScottOpenIso iso = hmFiniteIso(c.xd(), c.bounds(), c.route);
                   CheckResult r = result("scott-open-filters-vs-ksat", iso.ok());
                   r.details = {{"scottOpenFilters", iso.scottOpenFilters},
                                {"sUpsets", iso.sUpsets},
                                {"compactSaturatedInY", iso.compactSaturatedInY},
                                {"gAfterF", iso.gAfterF},
                                {"fAfterG", iso.fAfterG},
                                {"orderIso", iso.orderIso}};
                   if (!r.passed) r.witness = {{"conditionsCoherent", iso.conditionsCoherent}};
                   return r;
                 }});
  out.push_back({"completely-prime-filters", Suite::Hm, [](Context& c) {
                   PrimeSingletonReport cor = primeSingletonCheck(c.xd(), c.bounds(), c.route);
                   CheckResult r = result("completely-prime-filters", cor.ok());
                   std::size_t prime = 0;
                   for (const PrimeSingletonRow& row : cor.rows) {
                     if (row.completelyPrime) ++prime;
                     if ((!row.singletonMatches || !row.intersectionMatches) && r.witness.is_null()) {
                       r.witness = {{"filter", labelsOf(c.l().poset(), row.filter.members)},
                                    {"minK", indices(row.minK)},
                                    {"completelyPrime", row.completelyPrime}};
                     }
                   }
                   r.details = {{"scottOpenFilters", cor.rows.size()}, {"completelyPrime", prime}};
                   return r;
                 }});
  out.push_back({"compact-elements", Suite::Hm, [](Context& c) {
                   CheckResult r = result("compact-elements", compactIffSUpset(c.xd(), c.bounds(), c.route));
                   std::size_t compact = 0;
                   for (int a = 0; a < static_cast<int>(c.l().size()); ++a) {
                     if (isSUpset(c.xd(), makeClosedUpset(c.xd(), c.xd().sigma(a)))) ++compact;
                   }
                   r.details = {{"compactElements", compact}};
                   if (!r.passed) r.witness = {{"reason", "compactness and S-upset images disagree"}};
                   return r;
                 }});
  out.push_back({"sigma-joins", Suite::Hm, [](Context& c) {
                   CheckResult r = result("sigma-joins", true);
                   if (c.l().size() <= c.bounds().scott) {
                     r.passed = sigmaJoinsAllSubsets(c.xd(), c.bounds());
                     r.details = {{"subsets", std::uint64_t{1} << c.l().size()}};
                   } else {
                     // σ preserves binary joins and a finite union of clopens is closed, so
                     // pairs decide every subset by induction.
                     std::size_t n = c.l().size();
                     for (int a = 0; a < static_cast<int>(n) && r.passed; ++a) {
                       for (int b = 0; b < static_cast<int>(n); ++b) {
                         ElemSet s = ElemSet::single(a) | ElemSet::single(b);
                         if (!sigmaJoinCheck(c.xd(), s)) {
                           r.passed = false;
                           r.witness = {{"subset", indices(s)}};
                           break;
                         }
                       }
                     }
                     r.details = {{"subsets", "pairs"}};
                   }
                   return r;
                 }});
  out.push_back({"spatiality", Suite::Hm, [](Context& c) {
                   CheckResult r = result("spatiality", true);
                   try {
                     r.passed = spatialViaDensity(c.xd(), c.bounds());
                     r.details = {{"yDense", r.passed}, {"points", c.xd().y().size()}};
                     if (!r.passed) r.witness = {{"y", indices(c.xd().y())}};
                   } catch (const Error& e) {
                     r.passed = false;
                     r.witness = {{"error", std::string(toString(e.kind()))}, {"message", e.what()}};
                   }
                   return r;
                 }});
  out.push_back({"ideal-frame", Suite::Hm, [](Context& c) {
                   IdealFrame idl = idealLattice(c.l(), c.bounds());
                   bool ok = idl.isomorphic && idl.compactArePrincipal.value_or(true) &&
                             idl.compactFormSublattice.value_or(true);
                   CheckResult r = result("ideal-frame", ok);
                   r.details = {{"ideals", idl.idealSets.size()}, {"isomorphic", idl.isomorphic}};
                   if (idl.compactArePrincipal) r.details["compactArePrincipal"] = *idl.compactArePrincipal;
                   if (!ok) r.witness = {{"reason", "Idl(L) is not isomorphic to L"}};
                   return r;
                 }});
  return out;
}

std::vector<CheckSpec> spaceChecks() {
  std::vector<CheckSpec> out;
  out.push_back({"sober", Suite::Hm, [](Context& c) {
                   auto w = soberWitness(*c.doc.space, c.bounds());
                   CheckResult r = result("sober", !w);
                   r.details = {{"t0", isT0(*c.doc.space)}};
                   if (w) {
                     r.witness = {{"error", "NotSober"}, {"irreducibleClosedSet", indices(*w)}};
                   }
                   return r;
                 }});
  out.push_back({"saturated-upsets", Suite::Hm, [](Context& c) {
                   CheckResult r = result("saturated-upsets", true);
                   try {
                     r.details = {{"compactSaturated", compactSaturated(*c.doc.space, c.bounds()).size()}};
                   } catch (const Error& e) {
                     r.passed = false;
                     r.witness = {{"error", std::string(toString(e.kind()))}, {"points", e.witness()}};
                   }
                   return r;
                 }});
  out.push_back({"hofmann-mislove", Suite::Hm, [](Context& c) {
                   HofmannMisloveReport hm = hofmannMislove(*c.doc.space, c.bounds());
                   CheckResult r = result("hofmann-mislove", hm.ok());
                   r.details = {{"filters", hm.filters},
                                {"scottOpenFilters", hm.scottOpenFilters},
                                {"compactSaturated", hm.compactSaturated},
                                {"mutualInverse", hm.mutualInverse},
                                {"orderReversing", hm.orderReversing}};
                   if (!r.passed) r.witness = {{"reason", "the maps are not mutually inverse order-reversals"}};
                   return r;
                 }});
  out.push_back({"points-homeomorphism", Suite::Hm, [](Context& c) {
                   CheckResult r = result("points-homeomorphism", true);
                   try {
                     r.details = {{"image", pointsHomeomorphism(*c.doc.space, c.bounds())}};
                   } catch (const Error& e) {
                     r.passed = false;
                     r.witness = {{"error", std::string(toString(e.kind()))}, {"points", e.witness()}};
                   }
                   return r;
                 }});
  return out;
}

bool inSuite(Suite check, Suite requested) { return requested == Suite::All || check == requested; }

}  // namespace

std::vector<std::string> checkNames(const InputDocument& doc, Suite suite) {
  std::vector<std::string> out{"distributive"};
  auto add = [&](const std::vector<CheckSpec>& specs) {
    for (const CheckSpec& s : specs) {
      if (inSuite(s.suite, suite)) out.push_back(s.name);
    }
  };
  if (doc.kind == InputDocument::Kind::Space) add(spaceChecks());
  if (doc.kind != InputDocument::Kind::Space || suite != Suite::Hm) add(latticeChecks());
  return out;
}

CheckReport runCheckSuite(const InputDocument& doc, Suite suite, const std::optional<std::string>& only) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> names = checkNames(doc, suite);
  if (only && std::find(names.begin(), names.end(), *only) == names.end()) {
    throw Error(ErrorKind::InvalidArgument, "check \"" + *only + "\" is not part of suite " +
                                                std::string(toString(suite)));
  }
  auto wanted = [&](const std::string& name) { return !only || *only == name; };

  CheckReport report;
  report.suite = std::string(toString(suite));
  report.input["kind"] = std::string(toString(doc.kind));

  Context ctx{doc, std::nullopt, std::nullopt};
  ctx.lattice = latticeOf(doc);
  const FinLattice& l = *ctx.lattice;
  report.input["elements"] = l.size();
  if (doc.kind == InputDocument::Kind::Space) report.input["points"] = doc.space->size();

  auto finish = [&]() {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  // A space's open frame is distributive by construction.
  auto triple = checkDistributive(l);
  if (wanted("distributive")) {
    CheckResult r = result("distributive", !triple);
    if (triple) {
      auto [a, b, c] = *triple;
      r.witness = {{"error", "NotDistributive"},
                   {"triple", {l.label(a), l.label(b), l.label(c)}},
                   {"indices", {a, b, c}}};
    }
    report.checks.push_back(std::move(r));
  }
  if (triple) return finish();

  if (doc.kind == InputDocument::Kind::Space) {
    const FiniteTopSpace& x = *doc.space;
    report.input["opens"] = x.opens().size();
    if (suite != Suite::Dual) {
      std::vector<CheckSpec> specs = spaceChecks();
      bool sober = !soberWitness(x, doc.bounds);
      for (const CheckSpec& s : specs) {
        // Past a failed sobriety check the remaining checks have no meaning.
        if (!sober && s.name != "sober") continue;
        if (wanted(s.name)) report.checks.push_back(s.run(ctx));
      }
      if (!sober) return finish();
      report.counts["compactSaturated"] = compactSaturated(x, doc.bounds).size();
    }
  }

  ctx.dual = dualSpace(l, doc.bounds);
  ctx.route = l.size() <= doc.bounds.scott ? ScottRoute::Literal : ScottRoute::Ideals;
  std::vector<Filter> filters = enumerateFilters(l, doc.bounds);
  std::size_t prime = 0;
  for (const Filter& f : filters) prime += isPrime(l, f) ? 1 : 0;
  report.counts["elements"] = l.size();
  report.counts["filters"] = filters.size();
  report.counts["primeFilters"] = prime;
  report.counts["points"] = ctx.xd().y().size();
  report.counts["closedUpsets"] = closedUpsets(ctx.xd(), doc.bounds).size();
  report.counts["scottRoute"] = ctx.route == ScottRoute::Literal ? "subfamilies" : "ideals";

  if (doc.kind == InputDocument::Kind::Space && suite == Suite::Hm) return finish();
  for (const CheckSpec& s : latticeChecks()) {
    if (inSuite(s.suite, suite) && wanted(s.name)) report.checks.push_back(s.run(ctx));
  }
  return finish();
}

}  // namespace priestley
