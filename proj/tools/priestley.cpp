#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "priestley/cli.hpp"

namespace {

std::string readInput(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw priestley::Error(priestley::ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace priestley;
  CLI::App app{"Priestley duality and Scott-open filter checks for finite lattices and spaces"};
  app.require_subcommand(1);

  std::string inputPath;
  std::string suiteName = "all";
  std::string formatName = "json";
  std::string targetName = "report";
  std::optional<std::string> only;
  std::optional<std::size_t> maxSize;
  std::optional<std::uint64_t> seed;
  bool timings = false;

  auto addCommon = [&](CLI::App* sub, bool withInput) {
    if (withInput) sub->add_option("input", inputPath, "Input JSON file (stdin when omitted or -)");
    sub->add_option("--max-size", maxSize, "Largest input accepted by enumerations (sampling horizon for fixtures)");
    sub->add_option("--seed", seed, "Seed for randomized samples");
    sub->add_option("--format", formatName, "json or dot");
  };

  CLI::App* check = app.add_subcommand("check", "Run a check suite on a poset, lattice or space");
  addCommon(check, true);
  check->add_option("--suite", suiteName, "dual, hm or all");
  check->add_option("--check", only, "Run a single named check");
  check->add_flag("--timings", timings, "Include wall-clock time in the report");

  CLI::App* dual = app.add_subcommand("dual", "Emit the Priestley dual");
  addCommon(dual, true);

  CLI::App* space = app.add_subcommand("space", "Emit the space (its points, for lattice inputs)");
  addCommon(space, true);

  CLI::App* fixtures = app.add_subcommand("fixtures", "Run the symbolic frame fixture suite");
  addCommon(fixtures, false);
  fixtures->add_option("--check", only, "Run a single named check");
  fixtures->add_flag("--timings", timings, "Include wall-clock time in the report");

  CLI::App* emitCmd = app.add_subcommand("emit", "Emit an artifact");
  addCommon(emitCmd, true);
  emitCmd->add_option("--target", targetName, "lattice, dual, space, ksat or report");
  emitCmd->add_option("--suite", suiteName, "Suite for the report target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Format format = parseFormat(formatName);
    Suite suite = parseSuite(suiteName);

    if (fixtures->parsed()) {
      if (format != Format::Json) throw Error(ErrorKind::UnsupportedTarget, "fixtures report only as json");
      Bounds bounds;
      if (maxSize) bounds.sample = *maxSize;
      CheckReport report = runFixtures(bounds, seed.value_or(0), only);
      report.rerun = "priestley fixtures --check {check}";
      std::cout << report.toJson(timings).dump(2) << "\n";
      return report.passed() ? 0 : 1;
    }

    InputDocument doc = parseInput(readInput(inputPath));
    if (maxSize) doc.bounds.enumeration = *maxSize;
    if (seed) doc.seed = *seed;

    if (check->parsed()) {
      if (format != Format::Json) throw Error(ErrorKind::UnsupportedTarget, "check reports only as json");
      CheckReport report = runCheckSuite(doc, suite, only);
      report.rerun = "priestley check --suite " + suiteName + " --check {check} " +
                     (inputPath.empty() ? std::string("-") : inputPath);
      std::cout << report.toJson(timings).dump(2) << "\n";
      return report.passed() ? 0 : 1;
    }
    if (dual->parsed()) {
      std::cout << emit(doc, format, Target::Dual);
      return 0;
    }
    if (space->parsed()) {
      std::cout << emit(doc, format, Target::Space);
      return 0;
    }
    std::cout << emit(doc, format, parseTarget(targetName), suite);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << toString(e.kind()) << ": " << e.what() << "\n";
    if (!e.witness().empty()) {
      std::cerr << "witness:";
      for (int w : e.witness()) std::cerr << " " << w;
      std::cerr << "\n";
    }
    return exitCodeFor(e.kind());
  }
}
