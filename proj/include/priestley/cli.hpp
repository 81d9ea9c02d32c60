#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "priestley/topspace.hpp"

namespace priestley {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exactly one of poset, lattice, space. A poset stands for its lattice of
/// downsets.
struct InputDocument {
  enum class Kind { Poset, Lattice, Space };
  Kind kind = Kind::Lattice;
  std::optional<FinPoset> poset;
  std::optional<FinLattice> lattice;
  std::optional<FiniteTopSpace> space;
  Bounds bounds;
  std::uint64_t seed = 0;
};

std::string_view toString(InputDocument::Kind kind);

/// Strict: unknown fields are rejected. Throws ParseError with the line of
/// the offending token, or the library error raised while building the
/// structure (CycleDetected, NotALattice, NotATopology, ...).
InputDocument parseInput(std::string_view text);

/// The lattice the checks run on: Down(P), the given lattice, or O(X).
FinLattice latticeOf(const InputDocument& doc);

struct CheckResult {
  std::string name;
  bool passed = true;
  Json details = Json::object();
  /// Present on failure.
  Json witness;
};

struct CheckReport {
  std::string suite;
  Json input = Json::object();
  Json counts = Json::object();
  std::vector<CheckResult> checks;
  /// Command that re-runs one check; "{check}" is replaced by its name.
  std::string rerun;
  bool passed() const;
  Json toJson(bool withTimings = false) const;
  double seconds = 0;
};

enum class Suite { Dual, Hm, All };

Suite parseSuite(std::string_view name);
std::string_view toString(Suite suite);

/// Names of the checks a suite runs for this kind of input.
std::vector<std::string> checkNames(const InputDocument& doc, Suite suite);

/// Runs the suite, or only `only` when given (InvalidArgument if it is not
/// part of the suite). NotDistributive and NotSober become failed checks
/// with witnesses.
CheckReport runCheckSuite(const InputDocument& doc, Suite suite, const std::optional<std::string>& only = {});

/// The symbolic-fixture invariant suite. `seed` drives the extra randomized
/// samples.
CheckReport runFixtures(const Bounds& bounds = {}, std::uint64_t seed = 0,
                        const std::optional<std::string>& only = {});
std::vector<std::string> fixtureCheckNames();

enum class Format { Json, Dot };
enum class Target { Lattice, Dual, Space, KSat, Report };

Format parseFormat(std::string_view name);
Target parseTarget(std::string_view name);

/// Deterministic text. DOT targets are Hasse diagrams drawn bottom to top.
/// Report has no DOT form (UnsupportedTarget).
std::string emit(const InputDocument& doc, Format format, Target target, Suite suite = Suite::All);

/// Hasse diagram of a poset as DOT.
std::string hasseDot(const FinPoset& p, const std::string& graphName);

Json dualToJson(const PriestleyDual& xd);
Json spaceToJson(const FiniteTopSpace& x, const Bounds& bounds);

/// 0 pass, 1 check failure, 2 input or usage error.
int exitCodeFor(ErrorKind kind);

}  // namespace priestley
