#include <algorithm>
#include <map>
#include <set>

#include "priestley/cli.hpp"

namespace priestley {

namespace {

std::size_t lineAt(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// Line of the first occurrence of a JSON token, 0 when absent.
std::size_t lineOf(std::string_view text, const std::string& token) {
  std::size_t pos = text.find(token);
  return pos == std::string_view::npos ? 0 : lineAt(text, pos);
}

std::size_t lineOfKey(std::string_view text, const std::string& key) { return lineOf(text, "\"" + key + "\""); }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& key, const std::string& reason) const {
    throw ParseError(key.empty() ? 0 : lineOfKey(text_, key), reason);
  }

  void onlyKeys(const Json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) const {
    if (!obj.is_object()) fail(where, "\"" + where + "\" must be an object");
    for (const auto& [key, value] : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(key, "unknown field \"" + key + "\" in " + where);
      }
    }
  }

  const Json& required(const Json& obj, const std::string& key, const std::string& where) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, where + " is missing \"" + key + "\"");
    return *it;
  }

  std::vector<std::string> labels(const Json& arr, const std::string& key) const {
    if (!arr.is_array()) fail(key, "\"" + key + "\" must be an array of strings");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const Json& v : arr) {
      if (!v.is_string()) fail(key, "\"" + key + "\" must be an array of strings");
      std::string s = v.get<std::string>();
      if (!seen.insert(s).second) fail(key, "duplicate element \"" + s + "\"");
      out.push_back(std::move(s));
    }
    return out;
  }

  int resolve(const Json& ref, const std::vector<std::string>& names, const std::string& key) const {
    if (ref.is_string()) {
      auto it = std::find(names.begin(), names.end(), ref.get<std::string>());
      if (it == names.end()) {
        throw ParseError(lineOf(text_, ref.dump()), "unknown element " + ref.dump() + " in \"" + key + "\"");
      }
      return static_cast<int>(it - names.begin());
    }
    if (ref.is_number_unsigned() || (ref.is_number_integer() && ref.get<long long>() >= 0)) {
      auto i = ref.get<std::uint64_t>();
      if (i >= names.size()) throw ParseError(lineOfKey(text_, key), "index " + ref.dump() + " out of range in \"" + key + "\"");
      return static_cast<int>(i);
    }
    fail(key, "element references in \"" + key + "\" must be names or indices");
  }

  std::vector<std::pair<int, int>> pairs(const Json& arr, const std::vector<std::string>& names,
                                         const std::string& key) const {
    if (!arr.is_array()) fail(key, "\"" + key + "\" must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const Json& p : arr) {
      if (!p.is_array() || p.size() != 2) fail(key, "\"" + key + "\" entries must be [lower, upper] pairs");
      out.emplace_back(resolve(p[0], names, key), resolve(p[1], names, key));
    }
    return out;
  }

  std::size_t count(const Json& v, const std::string& key) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      fail(key, "\"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
  }

 private:
  std::string_view text_;
};

}  // namespace

std::string_view toString(InputDocument::Kind kind) {
  switch (kind) {
    case InputDocument::Kind::Poset: return "poset";
    case InputDocument::Kind::Lattice: return "lattice";
    case InputDocument::Kind::Space: return "space";
  }
  return "";
}

InputDocument parseInput(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(lineAt(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  Reader r(text);
  r.onlyKeys(root, "document", {"poset", "lattice", "space", "options"});
  int kinds = static_cast<int>(root.contains("poset")) + static_cast<int>(root.contains("lattice")) +
              static_cast<int>(root.contains("space"));
  if (kinds != 1) r.fail("", "exactly one of \"poset\", \"lattice\", \"space\" is required");

  InputDocument doc;
  if (root.contains("options")) {
    const Json& opts = root["options"];
    r.onlyKeys(opts, "options", {"bounds", "seed"});
    if (opts.contains("bounds")) {
      const Json& b = opts["bounds"];
      r.onlyKeys(b, "bounds", {"enumeration", "scott", "sample"});
      if (b.contains("enumeration")) doc.bounds.enumeration = r.count(b["enumeration"], "enumeration");
      if (b.contains("scott")) doc.bounds.scott = r.count(b["scott"], "scott");
      if (b.contains("sample")) doc.bounds.sample = r.count(b["sample"], "sample");
    }
    if (opts.contains("seed")) doc.seed = r.count(opts["seed"], "seed");
  }

  if (root.contains("poset")) {
    const Json& p = root["poset"];
    r.onlyKeys(p, "poset", {"elements", "covers"});
    std::vector<std::string> names = r.labels(r.required(p, "elements", "poset"), "elements");
    if (names.empty()) r.fail("elements", "a poset needs at least one element");
    auto covers = p.contains("covers") ? r.pairs(p["covers"], names, "covers") : std::vector<std::pair<int, int>>{};
    requireWithin(names.size(), doc.bounds.enumeration, "poset input");
    doc.kind = InputDocument::Kind::Poset;
    doc.poset = buildPoset(names.size(), covers, names);
  } else if (root.contains("lattice")) {
    const Json& l = root["lattice"];
    r.onlyKeys(l, "lattice", {"elements", "order"});
    std::vector<std::string> names = r.labels(r.required(l, "elements", "lattice"), "elements");
    if (names.empty()) r.fail("elements", "a lattice needs at least one element");
    auto order = l.contains("order") ? r.pairs(l["order"], names, "order") : std::vector<std::pair<int, int>>{};
    // Reflexive pairs are harmless in an order listing.
    std::erase_if(order, [](const auto& e) { return e.first == e.second; });
    requireWithin(names.size(), doc.bounds.enumeration, "lattice input");
    doc.kind = InputDocument::Kind::Lattice;
    doc.lattice = buildLattice(buildPoset(names.size(), order, names));
  } else {
    const Json& s = root["space"];
    r.onlyKeys(s, "space", {"points", "opens"});
    const Json& pts = r.required(s, "points", "space");
    std::vector<std::string> names;
    if (pts.is_array()) {
      names = r.labels(pts, "points");
    } else {
      names = defaultLabels(r.count(pts, "points"));
    }
    requireWithin(names.size(), doc.bounds.enumeration, "space input");
    const Json& opens = r.required(s, "opens", "space");
    if (!opens.is_array()) r.fail("opens", "\"opens\" must be an array of point lists");
    std::vector<ElemSet> sets;
    for (const Json& u : opens) {
      if (!u.is_array()) r.fail("opens", "\"opens\" must be an array of point lists");
      ElemSet set;
      for (const Json& ref : u) set.insert(r.resolve(ref, names, "opens"));
      sets.push_back(set);
    }
    doc.kind = InputDocument::Kind::Space;
    doc.space = buildSpace(names.size(), std::move(sets));
  }
  return doc;
}

FinLattice latticeOf(const InputDocument& doc) {
  switch (doc.kind) {
    case InputDocument::Kind::Poset: return downsetLattice(*doc.poset, doc.bounds);
    case InputDocument::Kind::Lattice: return *doc.lattice;
    case InputDocument::Kind::Space: return openFrame(*doc.space);
  }
  throw Error(ErrorKind::InvalidArgument, "empty document");
}

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDistributive:
    case ErrorKind::NotSober:
    case ErrorKind::IsoFailure:
    case ErrorKind::FixtureMismatch:
    case ErrorKind::NotScottOpen:
      return 1;
    default:
      return 2;
  }
}

}  // namespace priestley
