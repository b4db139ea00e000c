// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 when
// the failing criteria are exactly those named with --known-failure.

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crclab/code.hpp"
#include "crclab/constructions.hpp"
#include "crclab/graph.hpp"
#include "crclab/regularity.hpp"
#include "crclab/report.hpp"
#include "crclab/spectrum.hpp"
#include "crclab/transitivity.hpp"

using namespace crclab;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      failures_.push_back(what);
    }
  }
  [[nodiscard]] bool passed() const { return failures_.empty(); }
  [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string tag(const char* family, std::size_t m) { return std::string(family) + "(" + std::to_string(m) + ")"; }

bool array_invariants(const IntersectionArray& arr, int d) {
  bool ok = arr.b_at(0) == arr.valency && (d != 3 || arr.c_at(1) == 1);
  for (int l = 0; l <= arr.rho(); ++l) {
    ok = ok && arr.a_at(l) >= 0;
  }
  return ok;
}

void parameters(Criterion& c) {
  for (std::size_t m = 3; m <= 12; ++m) {
    const auto code = build_cm(m);
    const auto table = build_coset_table(code);
    const std::size_t n = m * (m - 1) / 2;
    c.check(code.length() == n && code.dimension() == n - m + 1 && minimum_distance_upto(code, 4) == 3 &&
                table.covering_radius() == static_cast<int>(m / 2),
            tag("Cm", m));
  }
}

void arrays(Criterion& c) {
  for (std::size_t m = 3; m <= 12; ++m) {
    const auto report = intersection_profile(build_coset_table(build_cm(m)));
    c.check(report.is_completely_regular && report.array && *report.array == closed_form_cm(m).array &&
                array_invariants(*report.array, 3),
            tag("Cm", m));
  }
}

void antipodality(Criterion& c) {
  for (std::size_t m = 3; m <= 12; ++m) {
    const auto code = build_cm(m);
    const auto table = build_coset_table(code);
    const auto cover = is_nonantipodal_with_coset_cover(code, table);
    const bool single = cover.covering_cosets == 1;
    const bool ok = single == (m % 2 == 0) &&
                    (!single || *cover.witness == code.syndrome_word(BitVector::ones(code.length())));
    c.check(ok, tag("Cm", m));
  }
}

void union_code(Criterion& c) {
  for (std::size_t m : {6, 8, 10, 12}) {
    const auto code = build_cm_union(m);
    const auto table = build_coset_table(code);
    const std::size_t n = m * (m - 1) / 2;
    c.check(code.length() == n && code.dimension() == n - m + 2 && minimum_distance_upto(code, 4) == 3 &&
                table.covering_radius() == static_cast<int>(m / 4),
            tag("Cm-union", m) + " parameters");
    const auto report = intersection_profile(table);
    const auto base = closed_form_cm(m).array;
    const bool cr = report.is_completely_regular && report.array.has_value();
    c.check(cr && *report.array == closed_form_cm_union(m).array && *report.array == union_array(base) &&
                array_invariants(*report.array, 3),
            tag("Cm-union", m) + " array");
    if (base.rho() % 2 == 1) {
      // The printed odd-rho rule must be caught by the checker.
      c.check(cr && union_array(base, UnionRule::as_printed) != *report.array,
              tag("Cm-union", m) + " printed odd-rho rule not detected");
    }
  }
}

void transitivity(Criterion& c) {
  auto run = [&](const LinearCode& code, std::size_t m, const std::string& name) {
    const auto r = completely_transitive_check(code, build_coset_table(code), induced_symmetric_generators(m));
    c.check(r.completely_transitive && r.orbits == static_cast<std::size_t>(r.rho) + 1 &&
                r.orbits_match_weight_classes,
            name);
  };
  for (std::size_t m = 3; m <= 12; ++m) {
    run(build_cm(m), m, tag("Cm", m));
  }
  for (std::size_t m : {6, 8, 10, 12}) {
    run(build_cm_union(m), m, tag("Cm-union", m));
  }
}

void inverse_and_duality(Criterion& c) {
  for (std::size_t m : {6, 8, 10, 12}) {
    const auto code = build_cm(m);
    const auto table = build_coset_table(code);
    c.check(verify_inverse_array(code, table).holds, tag("Cm", m) + " inverse array");
    c.check(check_translate_duality(code, table).holds, tag("Cm", m) + " translate duality");
  }
}

void extension(Criterion& c) {
  for (std::size_t m : {6, 8}) {
    const auto report = intersection_profile(build_coset_table(extend_with_parity(build_cm_union(m))));
    c.check(!report.is_completely_regular && report.violation_count > 0,
            tag("Cm-union", m) + " extended: measured completely regular" +
                (report.array ? " with array " + report.array->to_string() : ""));
  }
}

void dual_census(Criterion& c) {
  for (std::size_t m = 4; m <= 10; ++m) {
    const auto census = dual_low_weight_census(build_cm(m), m - 1);
    auto rows = build_hm(m).row_vectors();
    std::sort(rows.begin(), rows.end());
    c.check(census.count == m && census.codewords == rows, tag("Cm", m));
  }
}

struct GraphCase {
  std::string name;
  LinearCode code;
  std::size_t m;
  bool joined;
};

std::vector<GraphCase> graph_cases() {
  std::vector<GraphCase> out;
  for (std::size_t m = 4; m <= 10; ++m) {
    out.push_back({tag("Cm", m), build_cm(m), m, false});
  }
  for (std::size_t m : {6, 8, 10}) {
    out.push_back({tag("Cm-union", m), build_cm_union(m), m, true});
  }
  return out;
}

void graphs(Criterion& c) {
  for (const auto& gc : graph_cases()) {
    const auto table = build_coset_table(gc.code);
    const auto g = build_coset_graph(gc.code, table).graph;
    const auto m = gc.m;
    c.check(g.vertex_count() == (std::size_t{1} << (gc.joined ? m - 2 : m - 1)), gc.name + " vertex count");
    const auto code_array = intersection_profile(table).array;
    const auto drg = distance_regular_check(g);
    c.check(drg.distance_regular && drg.array && code_array && *drg.array == *code_array, gc.name + " DRG array");
    const auto gens = coset_graph_automorphisms(table, induced_symmetric_generators(m));
    c.check(distance_transitive_check(g, gens).distance_transitive, gc.name + " DT");

    const auto dist = all_pairs_distances(g);
    const auto prim = primitivity_check(dist);
    const auto anti = antipodality_check(dist);
    if (!gc.joined) {
      if (m % 2 == 0) {
        c.check(!prim.primitive, gc.name + " imprimitive");
        c.check(anti.antipodal && anti.class_size == 2, gc.name + " antipodal pairs");
      } else {
        // Odd m: the halved m-cube is primitive and not antipodal.
        c.check(prim.primitive && !anti.antipodal, gc.name + " odd-m primitive");
      }
      const auto labelled = g.with_labels(raw_syndrome_labels(table, build_hm(m)));
      c.check(halved_cube_isomorphism_check(m, labelled), gc.name + " halved cube");
      if (m % 2 == 0 && m >= 6) {
        const auto joined = build_cm_union(m);
        const auto joined_table = build_coset_table(joined);
        const auto joined_graph = build_coset_graph(joined, joined_table).graph;
        c.check(fold_matches_union_graph(table, fold(g), joined, joined_graph), gc.name + " fold");
      }
    } else if (m == 6) {
      c.check(anti.antipodal && anti.classes.size() == 1, gc.name + " single antipodal class");
    } else {
      c.check(prim.primitive, gc.name + " primitive");
    }
  }
}

void spectra(Criterion& c) {
  for (const auto& gc : graph_cases()) {
    const auto chars = character_spectrum(gc.code);
    const auto arr = intersection_profile(build_coset_table(gc.code)).array;
    c.check(arr && same_eigenvalue_set(chars, array_spectrum(*arr)), gc.name + " oracle agreement");
    c.check(chars.total_multiplicity() == (std::uint64_t{1} << gc.code.redundancy()) && chars.weighted_sum() == 0,
            gc.name + " multiplicities");
  }
  // Printed formula: reported, not asserted beyond the known outcome of the audit.
  for (std::size_t m : {6, 8, 10}) {
    const auto audit = audit_eigenvalue_formula(m, character_spectrum(build_cm_union(m)));
    std::ostringstream line;
    line << "  audit Cm-union(" << m << "): " << (audit.agrees ? "agree" : "mismatch") << " formula {";
    for (std::size_t i = 0; i < audit.formula.size(); ++i) {
      line << (i ? ", " : "") << audit.formula[i];
    }
    line << "} oracle {";
    for (std::size_t i = 0; i < audit.oracle.size(); ++i) {
      line << (i ? ", " : "") << audit.oracle[i];
    }
    line << "}";
    std::cout << line.str() << '\n';
  }
  const auto o8 = character_spectrum(build_cm_union(8)).integer_values();
  const auto o10 = character_spectrum(build_cm_union(10)).integer_values();
  c.check(o8 == std::set<long long>{28, 4, -4}, "Cm-union(8) oracle values");
  c.check(o10 == std::set<long long>{45, 13, -3}, "Cm-union(10) oracle values");
}

std::string full_suite_reports() {
  std::string all;
  for (std::size_t m = 3; m <= 12; ++m) {
    all += run_verify(Family::cm, m, VerifyOptions::all()).report.dump();
  }
  for (std::size_t m : {6, 8, 10, 12}) {
    all += run_verify(Family::cm_union, m, VerifyOptions::all()).report.dump();
  }
  return all;
}

void determinism(Criterion& c) {
  const auto first = full_suite_reports();
  const auto second = full_suite_reports();
  c.check(!first.empty() && first == second, "full-suite reports differ between runs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<std::size_t> known;
  app.add_option("--known-failure", known, "criterion expected to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"parameters of C^(m), m = 3..12", parameters},
      {"intersection arrays of C^(m), m = 3..12", arrays},
      {"covering set of C^(m) is C + 1 exactly for even m", antipodality},
      {"C^[m] parameters and arrays, m = 6, 8, 10, 12", union_code},
      {"coset orbits equal rho + 1", transitivity},
      {"inverse array and translate duality, even m = 6..12", inverse_and_duality},
      {"parity extension of C^[6], C^[8] is not completely regular", extension},
      {"dual codewords of weight m - 1 are the rows of H_m, m = 4..10", dual_census},
      {"coset graph suite", graphs},
      {"spectra: oracle agreement and multiplicities", spectra},
      {"deterministic reports", determinism},
  };
  std::vector<std::size_t> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << '\n';
    for (const auto& f : c.failures()) {
      std::cout << "  failed: " << f << '\n';
    }
    if (!c.passed()) {
      failed.push_back(i + 1);
    }
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria passed\n";
  std::sort(known.begin(), known.end());
  if (failed != known) {
    std::cout << "failing criteria differ from the known failures\n";
    return 1;
  }
  return 0;
}
