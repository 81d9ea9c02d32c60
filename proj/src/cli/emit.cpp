#include <algorithm>
#include <functional>
#include <sstream>

#include "priestley/cli.hpp"

namespace priestley {

Format parseFormat(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  throw Error(ErrorKind::InvalidArgument, "unknown format \"" + std::string(name) + "\" (expected json or dot)");
}

Target parseTarget(std::string_view name) {
  if (name == "lattice") return Target::Lattice;
  if (name == "dual") return Target::Dual;
  if (name == "space") return Target::Space;
  if (name == "ksat") return Target::KSat;
  if (name == "report") return Target::Report;
  throw Error(ErrorKind::UnsupportedTarget, "unknown target \"" + std::string(name) +
                                                "\" (expected lattice, dual, space, ksat or report)");
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json coversJson(const FinPoset& p) {
  Json out = Json::array();
  for (auto [a, b] : p.covers()) out.push_back({a, b});
  return out;
}

// Sets ordered by inclusion, labelled by their members.
FinPoset inclusionPoset(const std::vector<ElemSet>& sets, const std::function<std::string(ElemSet)>& label) {
  std::vector<ElemSet> up(sets.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[i].subsetOf(sets[j])) up[i].insert(static_cast<int>(j));
    }
    labels.push_back(label(sets[i]));
  }
  return FinPoset::fromUpsets(std::move(up), std::move(labels));
}

Json latticeJson(const FinLattice& l) {
  Json out;
  out["elements"] = l.poset().labels();
  out["covers"] = coversJson(l.poset());
  out["bottom"] = l.bottom();
  out["top"] = l.top();
  return out;
}

// KSat of the input: of Y for lattice inputs, of X for space inputs.
std::vector<ElemSet> ksatOf(const InputDocument& doc, std::vector<std::string>& labels) {
  if (doc.kind == InputDocument::Kind::Space) {
    labels = defaultLabels(doc.space->size());
    return compactSaturated(*doc.space, doc.bounds);
  }
  PriestleyDual xd = dualSpace(latticeOf(doc), doc.bounds);
  for (const Filter& f : xd.points()) labels.push_back(setLabel(xd.base().poset(), f.members));
  ScottOpenIso iso = hmFiniteIso(xd, doc.bounds,
                                 xd.base().size() <= doc.bounds.scott ? ScottRoute::Literal : ScottRoute::Ideals);
  std::vector<ElemSet> out;
  for (const auto& [f, q] : iso.pairs) out.push_back(q);
  std::sort(out.begin(), out.end());
  return out;
}

std::string setOfLabels(ElemSet s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += labels[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string hasseDot(const FinPoset& p, const std::string& graphName) {
  std::ostringstream os;
  os << "digraph " << graphName << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < static_cast<int>(p.size()); ++i) os << "  n" << i << " [label=" << quoted(p.label(i)) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json dualToJson(const PriestleyDual& xd) {
  const FinPoset& base = xd.base().poset();
  Json out;
  Json points = Json::array();
  for (int i = 0; i < static_cast<int>(xd.size()); ++i) {
    Json filter = Json::array();
    for (int a : xd.points()[i].members) filter.push_back(base.label(a));
    points.push_back({{"label", xd.order().label(i)}, {"filter", filter}, {"inY", xd.y().contains(i)}});
  }
  out["points"] = std::move(points);
  out["covers"] = coversJson(xd.order());
  Json sigma = Json::object();
  for (int a = 0; a < static_cast<int>(xd.base().size()); ++a) sigma[base.label(a)] = xd.sigma(a).toVector();
  out["sigma"] = std::move(sigma);
  out["y"] = xd.y().toVector();
  Json atoms = Json::array();
  for (ElemSet s : xd.atoms()) atoms.push_back(s.toVector());
  out["atoms"] = std::move(atoms);
  return out;
}

Json spaceToJson(const FiniteTopSpace& x, const Bounds& bounds) {
  Json out;
  out["points"] = x.size();
  Json opens = Json::array();
  for (ElemSet u : x.opens()) opens.push_back(u.toVector());
  out["opens"] = std::move(opens);
  out["t0"] = isT0(x);
  if (!isT0(x)) return out;
  out["specializationCovers"] = coversJson(specialization(x));
  auto witness = soberWitness(x, bounds);
  out["sober"] = !witness;
  if (witness) {
    out["notSoberWitness"] = witness->toVector();
    return out;
  }
  Json ksat = Json::array();
  for (ElemSet k : compactSaturated(x, bounds)) ksat.push_back(k.toVector());
  out["compactSaturated"] = std::move(ksat);
  return out;
}

std::string emit(const InputDocument& doc, Format format, Target target, Suite suite) {
  Json out;
  out["schemaVersion"] = kSchemaVersion;
  switch (target) {
    case Target::Report: {
      if (format == Format::Dot) throw Error(ErrorKind::UnsupportedTarget, "the report has no DOT form");
      return runCheckSuite(doc, suite).toJson().dump(2) + "\n";
    }
    case Target::Lattice: {
      FinLattice l = latticeOf(doc);
      if (format == Format::Dot) return hasseDot(l.poset(), "lattice");
      out["lattice"] = latticeJson(l);
      break;
    }
    case Target::Dual: {
      PriestleyDual xd = dualSpace(latticeOf(doc), doc.bounds);
      if (format == Format::Dot) return hasseDot(xd.order(), "dual");
      out["dual"] = dualToJson(xd);
      break;
    }
    case Target::Space: {
      // Lattice inputs show their space of points.
      std::optional<FiniteTopSpace> space = doc.space;
      if (!space) space = framePointsFinite(latticeOf(doc), doc.bounds).space;
      if (format == Format::Dot) return hasseDot(specialization(*space), "space");
      out["space"] = spaceToJson(*space, doc.bounds);
      break;
    }
    case Target::KSat: {
      std::vector<std::string> labels;
      std::vector<ElemSet> sets = ksatOf(doc, labels);
      FinPoset order = inclusionPoset(sets, [&](ElemSet s) { return setOfLabels(s, labels); });
      if (format == Format::Dot) return hasseDot(order, "ksat");
      Json list = Json::array();
      for (ElemSet s : sets) list.push_back(s.toVector());
      out["ksat"] = {{"pointLabels", labels}, {"sets", list}, {"covers", coversJson(order)}};
      break;
    }
  }
  return out.dump(2) + "\n";
}

}  // namespace priestley
