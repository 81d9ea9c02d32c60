#pragma once

#include <string>
#include <vector>

#include "priestley/lattice.hpp"
#include "priestley/topspace.hpp"

namespace priestley {

FinPoset chainPoset(std::size_t n);
FinPoset antichainPoset(std::size_t n);

/// Chain with n elements, n ≥ 1.
FinLattice chainLattice(std::size_t n);
/// The Boolean lattice with 2^k elements.
FinLattice booleanLattice(std::size_t k);
/// 2×2: bottom, two atoms, top.
FinLattice diamondLattice();
/// Non-distributive: three atoms between bottom and top.
FinLattice m3Lattice();
/// Non-distributive pentagon.
FinLattice n5Lattice();

/// One representative per isomorphism class of posets with n elements,
/// in canonical order. Counts for n = 1..5 are 1, 2, 5, 16, 63.
std::vector<FinPoset> allPosets(std::size_t n);

/// Every topology on {0..n-1} (labeled), n ≤ 4.
std::vector<FiniteTopSpace> allTopologies(std::size_t n);

struct NamedLattice {
  std::string name;
  FinLattice lattice;
};

/// Downset lattices of all posets with 1..maxPoset elements, chains with
/// 1..8 elements, Boolean lattices with 2..16 elements and the diamond.
std::vector<NamedLattice> latticeCorpus(std::size_t maxPoset = 5);

}  // namespace priestley
