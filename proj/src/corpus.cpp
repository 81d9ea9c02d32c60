#include "priestley/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace priestley {

FinPoset chainPoset(std::size_t n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < static_cast<int>(n); ++i) covers.emplace_back(i, i + 1);
  return buildPoset(n, covers);
}

FinPoset antichainPoset(std::size_t n) { return buildPoset(n, {}); }

FinLattice chainLattice(std::size_t n) { return buildLattice(chainPoset(n)); }

FinLattice booleanLattice(std::size_t k) { return downsetLattice(antichainPoset(k)); }

FinLattice diamondLattice() {
  return buildLattice(buildPoset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"}));
}

FinLattice m3Lattice() {
  return buildLattice(
      buildPoset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"}));
}

FinLattice n5Lattice() {
  return buildLattice(buildPoset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "a", "b", "c", "1"}));
}

namespace {

using Code = std::vector<std::uint64_t>;

// Strict-order matrix rows under a relabeling; the least over all
// relabelings is a complete invariant.
Code canonicalCode(const std::vector<ElemSet>& up, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code best;
  do {
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<int>(i);
    Code code(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int j : up[perm[i]]) code[i] |= std::uint64_t{1} << inv[j];
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FinPoset> allPosets(std::size_t n) {
  if (n == 0 || n > 6) throw Error(ErrorKind::BoundExceeded, "allPosets supports 1..6 elements");
  // Every poset has a linear extension, so it suffices to enumerate strict
  // orders contained in i < j.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    for (int j = i + 1; j < static_cast<int>(n); ++j) pairs.emplace_back(i, j);
  }
  std::map<Code, FinPoset> classes;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<ElemSet> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i].insert(static_cast<int>(i));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (m >> p & 1) up[pairs[p].first].insert(pairs[p].second);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (int j : up[i]) {
        if (!up[j].subsetOf(up[i])) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    Code code = canonicalCode(up, n);
    if (classes.count(code)) continue;
    std::vector<ElemSet> canonicalUp(n);
    for (std::size_t i = 0; i < n; ++i) canonicalUp[i] = ElemSet(code[i]);
    classes.emplace(std::move(code), FinPoset::fromUpsets(std::move(canonicalUp)));
  }
  std::vector<FinPoset> out;
  for (auto& [code, p] : classes) out.push_back(std::move(p));
  return out;
}

std::vector<FiniteTopSpace> allTopologies(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::BoundExceeded, "allTopologies supports at most 4 points");
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const ElemSet all = ElemSet::full(n);
  // Candidate opens other than ∅ and X.
  std::vector<ElemSet> middle;
  for (std::uint64_t s = 1; s + 1 < subsets; ++s) middle.emplace_back(s);
  std::vector<FiniteTopSpace> out;
  const std::uint64_t count = std::uint64_t{1} << middle.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<ElemSet> opens{ElemSet(), all};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if (m >> i & 1) opens.push_back(middle[i]);
    }
    auto present = [&](ElemSet s) { return std::find(opens.begin(), opens.end(), s) != opens.end(); };
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        if (!present(opens[i] | opens[j]) || !present(opens[i] & opens[j])) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(buildSpace(n, std::move(opens)));
  }
  return out;
}

std::vector<NamedLattice> latticeCorpus(std::size_t maxPoset) {
  Bounds wide;
  wide.enumeration = 64;
  std::vector<NamedLattice> out;
  for (std::size_t n = 1; n <= maxPoset; ++n) {
    std::vector<FinPoset> posets = allPosets(n);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      out.push_back({"downsets(poset" + std::to_string(n) + "#" + std::to_string(i) + ")",
                     downsetLattice(posets[i], wide)});
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"chain" + std::to_string(n), chainLattice(n)});
  for (std::size_t k = 1; k <= 4; ++k) {
    out.push_back({"boolean" + std::to_string(std::size_t{1} << k), booleanLattice(k)});
  }
  out.push_back({"diamond", diamondLattice()});
  return out;
}

}  // namespace priestley
