#include "priestley/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace priestley {

FinPoset FinPoset::fromUpsets(std::vector<ElemSet> up, std::vector<std::string> labels) {
  const std::size_t n = up.size();
  if (n > kMaxElements) throw Error(ErrorKind::BoundExceeded, "poset larger than 64 elements");
  if (labels.empty()) labels = defaultLabels(n);
  if (labels.size() != n) throw Error(ErrorKind::InvalidArgument, "label count does not match element count");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(ErrorKind::InvalidArgument, "duplicate label '" + *dup + "'");
  }

  FinPoset p;
  p.down_.assign(n, ElemSet());
  for (std::size_t a = 0; a < n; ++a) {
    if (!up[a].fitsIn(n)) throw Error(ErrorKind::IndexOutOfRange, "order relation references a missing element");
    if (!up[a].contains(static_cast<int>(a))) {
      throw Error(ErrorKind::InvalidArgument, "order is not reflexive", {static_cast<int>(a)});
    }
    for (int b : up[a]) p.down_[b].insert(static_cast<int>(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (int b : up[a]) {
      if (b != static_cast<int>(a) && up[b].contains(static_cast<int>(a))) {
        throw Error(ErrorKind::CycleDetected, "order is not antisymmetric", {static_cast<int>(a), b});
      }
      if (!up[b].subsetOf(up[a])) {
        throw Error(ErrorKind::InvalidArgument, "order is not transitive", {static_cast<int>(a), b});
      }
    }
  }
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  return p;
}

int FinPoset::indexOf(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a) {
    ElemSet strictlyAbove = up_[a] - ElemSet::single(a);
    for (int b : strictlyAbove) {
      // b covers a when nothing in (a, b) exists.
      ElemSet between = strictlyAbove & (down_[b] - ElemSet::single(b));
      if (between.empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

bool FinPoset::isUpset(ElemSet s) const { return closure(*this, s, Direction::Up) == s; }
bool FinPoset::isDownset(ElemSet s) const { return closure(*this, s, Direction::Down) == s; }

FinPoset FinPoset::dual() const {
  FinPoset d;
  d.up_ = down_;
  d.down_ = up_;
  d.labels_ = labels_;
  return d;
}

FinPoset FinPoset::restrict(ElemSet members) const {
  std::vector<int> index(size(), -1);
  std::vector<int> order = members.toVector();
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  std::vector<ElemSet> up(order.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int b : up_[order[i]] & members) up[i].insert(index[b]);
    labels.push_back(labels_[order[i]]);
  }
  return fromUpsets(std::move(up), std::move(labels));
}

FinPoset buildPoset(std::size_t n, const std::vector<std::pair<int, int>>& covers,
                    std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty poset");
  if (n > kMaxElements) throw Error(ErrorKind::BoundExceeded, "poset larger than 64 elements");
  std::vector<ElemSet> succ(n);
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "cover references a missing element", {a, b});
    }
    if (a == b) throw Error(ErrorKind::CycleDetected, "cover relation has a self-loop", {a, b});
    succ[a].insert(b);
  }

  // Depth-first closure; a grey node reached again closes a cycle.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<ElemSet> up(n);
  auto visit = [&](auto&& self, int v) -> void {
    mark[v] = Mark::Grey;
    ElemSet reach = ElemSet::single(v);
    for (int w : succ[v]) {
      if (mark[w] == Mark::Grey) throw Error(ErrorKind::CycleDetected, "cover relation has a cycle", {v, w});
      if (mark[w] == Mark::White) self(self, w);
      reach |= up[w];
    }
    up[v] = reach;
    mark[v] = Mark::Black;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (mark[v] == Mark::White) visit(visit, static_cast<int>(v));
  }
  return FinPoset::fromUpsets(std::move(up), std::move(labels));
}

ElemSet closure(const FinPoset& p, ElemSet s, Direction dir) {
  if (!s.fitsIn(p.size())) throw Error(ErrorKind::IndexOutOfRange, "set references a missing element");
  ElemSet out;
  for (int x : s) out |= dir == Direction::Up ? p.upOf(x) : p.downOf(x);
  return out;
}

ElemSet extremes(const FinPoset& p, ElemSet s, Extreme which) {
  ElemSet out;
  for (int x : s) {
    ElemSet strict = (which == Extreme::Min ? p.downOf(x) : p.upOf(x)) - ElemSet::single(x);
    if (!strict.intersects(s)) out.insert(x);
  }
  return out;
}

namespace {

// Elements are decided in an order where everything above x precedes x, so
// x may join the upset exactly when its strict upset is already inside.
void upsetDfs(const FinPoset& p, const std::vector<int>& order, std::size_t k, ElemSet current,
              std::vector<ElemSet>& out) {
  if (k == order.size()) {
    out.push_back(current);
    return;
  }
  int x = order[k];
  upsetDfs(p, order, k + 1, current, out);
  if ((p.upOf(x) - ElemSet::single(x)).subsetOf(current)) {
    upsetDfs(p, order, k + 1, current | ElemSet::single(x), out);
  }
}

}  // namespace

std::vector<ElemSet> enumerateUpsets(const FinPoset& p, const Bounds& bounds) {
  requireWithin(p.size(), bounds.enumeration, "enumerateUpsets");
  std::vector<int> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  // a < b implies |↑b| < |↑a|, so this puts every element after those above it.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.upOf(a).size() < p.upOf(b).size(); });
  std::vector<ElemSet> out;
  upsetDfs(p, order, 0, ElemSet(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> enumerateDownsets(const FinPoset& p, const Bounds& bounds) {
  return enumerateUpsets(p.dual(), bounds);
}

std::vector<std::string> defaultLabels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string setLabel(const FinPoset& p, ElemSet s) {
  std::string out = "{";
  bool firstMember = true;
  for (int i : s) {
    if (!firstMember) out += ',';
    out += p.label(i);
    firstMember = false;
  }
  return out + "}";
}

}  // namespace priestley
