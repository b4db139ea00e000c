// crclab: construct the codes C^(m) and C^[m], verify them, export coset graphs.
//
// Exit status: 0 when every assertion held, 1 when one failed, 2 on usage
// errors, invalid parameters or exceeded enumeration guards.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "crclab/code.hpp"
#include "crclab/constructions.hpp"
#include "crclab/errors.hpp"
#include "crclab/graph.hpp"
#include "crclab/report.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Target {
  std::string family;
  std::size_t m = 0;
};

void add_target(CLI::App* cmd, Target& target) {
  cmd->add_option("family", target.family, "Cm or Cm-union")->required();
  cmd->add_option("m", target.m, "number of points")->required();
}

// Writes to `path`, or to stdout when the path is empty.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  write(out);
  if (!out) {
    throw std::runtime_error("write to " + path + " failed");
  }
}

int run_construct(const Target& target, std::string path) {
  const auto family = crclab::parse_family(target.family);
  const auto code = crclab::build_family(family, target.m);
  if (path.empty()) {
    path = std::string(crclab::family_name(family)) + "-" + std::to_string(target.m) + ".code";
  }
  emit(path, [&](std::ostream& out) { crclab::write_code(out, code); });
  nlohmann::ordered_json params{{"family", crclab::family_name(family)},
                                {"m", target.m},
                                {"n", code.length()},
                                {"k", code.dimension()},
                                {"redundancy", code.redundancy()},
                                {"file", path}};
  std::cout << params.dump() << '\n';
  return 0;
}

int run_verify(const Target& target, crclab::VerifyOptions options, const std::string& path) {
  const auto family = crclab::parse_family(target.family);
  if (!options.any_check()) {
    const auto keep = options;
    options = crclab::VerifyOptions::all();
    options.timing = keep.timing;
    options.limits = keep.limits;
  }
  const auto outcome = crclab::run_verify(family, target.m, options);
  emit(path, [&](std::ostream& out) { out << outcome.report.dump(2) << '\n'; });
  return outcome.passed ? 0 : kExitFailed;
}

int run_graph(const Target& target, const std::string& format, const std::string& path,
              const crclab::Limits& limits) {
  const auto family = crclab::parse_family(target.family);
  const auto code = crclab::build_family(family, target.m);
  const auto table = crclab::build_coset_table(code, limits.table_redundancy);
  const auto built = crclab::build_coset_graph(code, table, limits.graph_redundancy);
  for (const auto& warning : built.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
  emit(path, [&](std::ostream& out) {
    if (format == "dot") {
      crclab::write_dot(out, built.graph, code.redundancy());
    } else {
      crclab::write_edge_list(out, built.graph);
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely regular codes from pairs of points: construction and verification"};
  app.require_subcommand(1);

  Target target;
  std::string out_path;
  bool unsafe_large = false;
  bool all = false;
  crclab::VerifyOptions options;
  std::string format = "edges";

  auto* construct = app.add_subcommand("construct", "write G and H of the code and print its parameters");
  add_target(construct, target);
  construct->add_option("--out", out_path, "code file (default <family>-<m>.code)");

  auto* verify = app.add_subcommand("verify", "run checks and print a JSON report");
  add_target(verify, target);
  verify->add_flag("--all", all, "every check (the default when none is selected)");
  verify->add_flag("--cr", options.cr, "complete regularity and intersection array");
  verify->add_flag("--ct", options.ct, "orbits of the coordinate action on cosets");
  verify->add_flag("--graph", options.graph, "coset graph suite");
  verify->add_flag("--spectra", options.spectra, "eigenvalues from both oracles and the formula audit");
  verify->add_flag("--lemma32", options.lemma32, "weight(s) + weight(s + syndrome(1)) = rho");
  verify->add_flag("--inverse-array", options.inverse_array, "profile of C + 1 against the inverse array");
  verify->add_flag("--timing", options.timing, "add wall-clock timings to the report");
  verify->add_option("--out", out_path, "report file (default stdout)");
  verify->add_flag("--unsafe-large", unsafe_large, "lift the enumeration guards");

  auto* graph = app.add_subcommand("graph", "export the coset graph");
  add_target(graph, target);
  graph->add_option("--format", format, "edges or dot")->check(CLI::IsMember({"edges", "dot"}));
  graph->add_option("--out", out_path, "output file (default stdout)");
  graph->add_flag("--unsafe-large", unsafe_large, "lift the enumeration guards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  const crclab::Limits limits = unsafe_large ? crclab::Limits::relaxed() : crclab::Limits{};
  try {
    if (construct->parsed()) {
      return run_construct(target, out_path);
    }
    if (verify->parsed()) {
      if (all) {
        const bool timing = options.timing;
        options = crclab::VerifyOptions::all();
        options.timing = timing;
      }
      options.limits = limits;
      return run_verify(target, options, out_path);
    }
    return run_graph(target, format, out_path, limits);
  } catch (const crclab::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --unsafe-large to override)\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
