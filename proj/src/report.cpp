#include "crclab/report.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crclab/constructions.hpp"
#include "crclab/regularity.hpp"
#include "crclab/transitivity.hpp"

namespace crclab {

using nlohmann::ordered_json;

namespace {

class AssertionLog {
 public:
  void expect(std::string name, bool ok) { entries_.emplace_back(std::move(name), ok); }

  [[nodiscard]] bool passed() const {
    for (const auto& [name, ok] : entries_) {
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] ordered_json to_json() const {
    ordered_json out = ordered_json::object();
    out["total"] = entries_.size();
    ordered_json failed = ordered_json::array();
    ordered_json all = ordered_json::array();
    for (const auto& [name, ok] : entries_) {
      all.push_back({{"name", name}, {"passed", ok}});
      if (!ok) {
        failed.push_back(name);
      }
    }
    out["failed"] = std::move(failed);
    out["checks"] = std::move(all);
    return out;
  }

 private:
  std::vector<std::pair<std::string, bool>> entries_;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}

  template <class Fn>
  auto time(const char* label, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    if (enabled_) {
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      timings_[label] = elapsed.count();
    }
    return result;
  }

  [[nodiscard]] const ordered_json& timings() const { return timings_; }

 private:
  bool enabled_;
  ordered_json timings_ = ordered_json::object();
};

ordered_json array_entries(const IntersectionArray& arr) {
  return {{"b", arr.b}, {"c", arr.c}};
}

ordered_json violations_json(const RegularityReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& v : report.violations) {
    out.push_back({{"syndrome", v.syndrome},
                   {"level", v.level},
                   {"c", v.c},
                   {"b", v.b},
                   {"expected_c", v.expected_c},
                   {"expected_b", v.expected_b}});
  }
  return out;
}

}  // namespace

std::string_view family_name(Family family) { return family == Family::cm ? "Cm" : "Cm-union"; }

Family parse_family(std::string_view name) {
  if (name == "Cm") {
    return Family::cm;
  }
  if (name == "Cm-union") {
    return Family::cm_union;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected Cm or Cm-union)");
}

LinearCode build_family(Family family, std::size_t m) {
  return family == Family::cm ? build_cm(m) : build_cm_union(m);
}

Limits Limits::relaxed() {
  return {kSyndromeBits, kSyndromeBits, std::size_t{1} << 15};
}

VerifyOptions VerifyOptions::all() {
  VerifyOptions o;
  o.cr = o.ct = o.graph = o.spectra = o.lemma32 = o.inverse_array = true;
  return o;
}

ordered_json to_json(const IntersectionArray& arr) {
  ordered_json out = array_entries(arr);
  out["valency"] = arr.valency;
  return out;
}

ordered_json to_json(const SpectrumReport& spectrum) {
  ordered_json out;
  out["source"] = spectrum.source;
  ordered_json eigs = ordered_json::array();
  for (const auto& e : spectrum.eigenvalues) {
    eigs.push_back({e.value, e.multiplicity ? ordered_json(*e.multiplicity) : ordered_json(nullptr)});
  }
  out["eigs"] = std::move(eigs);
  if (!spectrum.irrational.empty()) {
    ordered_json roots = ordered_json::array();
    for (const auto& r : spectrum.irrational) {
      roots.push_back({r.lower, r.upper});
    }
    out["irrational"] = std::move(roots);
  }
  return out;
}

VerifyOutcome run_verify(Family family, std::size_t m, const VerifyOptions& options) {
  const LinearCode code = build_family(family, m);
  const Limits& limits = options.limits;
  const bool base_family = family == Family::cm;
  AssertionLog checks;
  ordered_json audits = ordered_json::array();
  Stopwatch clock(options.timing);

  ordered_json r;
  r["family"] = family_name(family);
  r["m"] = m;

  const CosetTable table =
      clock.time("coset_table", [&] { return build_coset_table(code, limits.table_redundancy); });
  const ClosedFormSpec closed = base_family ? closed_form_cm(m) : closed_form_cm_union(m);
  const auto d = minimum_distance_upto(code, 4);

  {
    ordered_json measured{{"n", code.length()},
                          {"k", code.dimension()},
                          {"d", d ? ordered_json(*d) : ordered_json(">4")},
                          {"rho", table.covering_radius()}};
    ordered_json expected{{"n", closed.n}, {"k", closed.k}, {"d", closed.d}, {"rho", closed.rho}};
    const bool agrees = code.length() == closed.n && code.dimension() == closed.k && d == closed.d &&
                        table.covering_radius() == closed.rho;
    r["parameters"] = {{"measured", measured}, {"closed_form", expected}, {"agrees", agrees}};
    checks.expect("parameters", agrees);
  }
  r["coset_weight_distribution"] = table.distribution().counts;

  const auto cover = is_nonantipodal_with_coset_cover(code, table);
  const bool cover_is_ones = cover.nonantipodal && cover.witness_is_all_ones;
  {
    ordered_json cs{{"covering_cosets", cover.covering_cosets},
                    {"nonantipodal", cover.nonantipodal},
                    {"cover_is_all_ones_translate", cover_is_ones}};
    if (base_family) {
      const bool expect_nonantipodal = m % 2 == 0;
      const bool ok = cover.nonantipodal == expect_nonantipodal && (!expect_nonantipodal || cover_is_ones);
      cs["expected_nonantipodal"] = expect_nonantipodal;
      cs["agrees"] = ok;
      checks.expect("antipodality", ok);
    }
    r["covering_set"] = std::move(cs);
  }

  ordered_json sections = ordered_json::object();
  const bool need_profile = options.cr || options.graph || options.spectra;
  std::optional<RegularityReport> profile;
  if (need_profile) {
    profile = clock.time("intersection_profile", [&] { return intersection_profile(table); });
  }

  if (options.cr) {
    ordered_json cr;
    cr["cr"] = profile->is_completely_regular;
    cr["rho"] = profile->rho;
    cr["b"] = profile->array ? ordered_json(profile->array->b) : ordered_json::array();
    cr["c"] = profile->array ? ordered_json(profile->array->c) : ordered_json::array();
    cr["violation_count"] = profile->violation_count;
    cr["violations"] = violations_json(*profile);
    cr["closed_form"] = array_entries(closed.array);
    const bool closed_ok = profile->array && *profile->array == closed.array;
    cr["agrees_closed_form"] = closed_ok;
    checks.expect("cr.completely_regular", profile->is_completely_regular);
    checks.expect("cr.closed_form_array", closed_ok);
    if (!base_family) {
      const auto base_closed = closed_form_cm(m);
      const auto predicted = union_array(base_closed.array, UnionRule::corrected);
      const bool union_ok = profile->array && *profile->array == predicted;
      cr["union_array"] = array_entries(predicted);
      cr["agrees_union_array"] = union_ok;
      checks.expect("cr.union_array", union_ok);
      if (base_closed.rho % 2 == 1) {
        const auto printed = union_array(base_closed.array, UnionRule::as_printed);
        const bool printed_agrees = profile->array && *profile->array == printed;
        audits.push_back({{"name", "union_array_odd_rho_printed_rule"},
                          {"status", printed_agrees ? "agree" : "mismatch"},
                          {"printed", array_entries(printed)}});
      }
    }
    sections["cr"] = std::move(cr);
  }

  if (options.ct) {
    const auto gens = induced_symmetric_generators(m);
    const auto ct = clock.time("coset_orbits", [&] { return completely_transitive_check(code, table, gens); });
    sections["ct"] = {{"orbits", ct.orbits},
                      {"rho_plus_1", ct.rho + 1},
                      {"ct", ct.completely_transitive},
                      {"orbit_sizes", ct.orbit_sizes}};
    checks.expect("ct", ct.completely_transitive);
  }

  if (options.inverse_array) {
    if (cover_is_ones) {
      const auto inv = verify_inverse_array(code, table);
      ordered_json section{{"holds", inv.holds}, {"expected", array_entries(inv.expected)}};
      section["measured"] = inv.translate.array ? array_entries(*inv.translate.array) : ordered_json(nullptr);
      sections["inverse_array"] = std::move(section);
      checks.expect("inverse_array", inv.holds);
    } else {
      sections["inverse_array"] = {{"skipped", "covering set is not C + 1"}};
    }
  }

  if (options.lemma32) {
    if (cover_is_ones) {
      const auto dual = check_translate_duality(code, table);
      sections["lemma32"] = {{"holds", dual.holds}, {"checked", dual.checked}, {"failures", dual.failures}};
      checks.expect("lemma32", dual.holds);
    } else {
      sections["lemma32"] = {{"skipped", "covering set is not C + 1"}};
    }
  }

  if (options.graph) {
    const auto built = build_coset_graph(code, table, limits.graph_redundancy);
    const Graph& g = built.graph;
    ordered_json gj;
    const std::size_t expected_vertices = std::size_t{1} << (base_family ? m - 1 : m - 2);
    bool regular = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      regular = regular && g.degree(v) == code.length();
    }
    gj["vertices"] = g.vertex_count();
    gj["expected_vertices"] = expected_vertices;
    gj["edges"] = g.edge_count();
    gj["valency"] = g.vertex_count() ? g.degree(0) : 0;
    gj["warnings"] = built.warnings;
    checks.expect("graph.vertices", g.vertex_count() == expected_vertices);
    checks.expect("graph.valency", regular);

    const auto dist = clock.time("distances", [&] { return all_pairs_distances(g, limits.pair_vertices); });
    const auto drg = clock.time("drg", [&] { return distance_regular_check(g, limits.pair_vertices); });
    const int expected_diameter = base_family ? static_cast<int>(m / 2) : static_cast<int>(m / 4);
    const bool array_matches = drg.array && profile->array && *drg.array == *profile->array;
    gj["drg"] = {{"distance_regular", drg.distance_regular},
                 {"diameter", drg.diameter},
                 {"array", drg.array ? to_json(*drg.array) : ordered_json(nullptr)},
                 {"equals_code_array", array_matches}};
    checks.expect("graph.drg", drg.distance_regular);
    checks.expect("graph.drg_array_equals_code_array", array_matches);
    checks.expect("graph.diameter", drg.diameter == expected_diameter);

    const auto gens = coset_graph_automorphisms(table, induced_symmetric_generators(m));
    const auto dt = clock.time("dt", [&] { return distance_transitive_check(g, gens, limits.pair_vertices); });
    gj["dt"] = {{"distance_transitive", dt.distance_transitive},
                {"orbits_per_distance", dt.orbits_per_distance}};
    checks.expect("graph.dt", dt.distance_transitive);

    const auto prim = primitivity_check(dist);
    const auto anti = antipodality_check(dist);
    gj["primitivity"] = {{"primitive", prim.primitive}, {"connected_by_distance", prim.connected}};
    gj["antipodality"] = {{"antipodal", anti.antipodal},
                          {"class_size", anti.class_size},
                          {"classes", anti.classes.size()}};

    if (base_family) {
      const Graph labelled = g.with_labels(raw_syndrome_labels(table, build_hm(m)));
      const bool halved = halved_cube_isomorphism_check(m, labelled);
      gj["halved_cube"] = halved;
      checks.expect("graph.halved_cube", halved);
      if (m % 2 == 0 && m >= 4) {
        checks.expect("graph.imprimitive", !prim.primitive);
        checks.expect("graph.antipodal_pairs", anti.antipodal && anti.class_size == 2);
      }
      if (m % 2 == 0 && m >= 6) {
        const LinearCode joined = build_cm_union(m);
        const CosetTable joined_table = build_coset_table(joined, limits.table_redundancy);
        const auto joined_graph = build_coset_graph(joined, joined_table, limits.graph_redundancy);
        const Graph folded = fold(g, limits.pair_vertices);
        const bool iso = fold_matches_union_graph(table, folded, joined, joined_graph.graph);
        gj["fold"] = {{"folded_vertices", folded.vertex_count()}, {"isomorphic_to_union_graph", iso}};
        checks.expect("graph.fold", iso);
      }
    } else {
      checks.expect("graph.primitive", prim.primitive);
      if (drg.diameter >= 2) {
        checks.expect("graph.not_antipodal", !anti.antipodal);
      }
    }
    sections["graph"] = std::move(gj);
  }

  if (options.spectra) {
    const auto chars = clock.time("character_spectrum",
                                  [&] { return character_spectrum(code, limits.graph_redundancy); });
    ordered_json sj;
    sj["character"] = to_json(chars);
    const std::uint64_t vertices = std::uint64_t{1} << code.redundancy();
    checks.expect("spectra.multiplicity_sum", chars.total_multiplicity() == vertices);
    checks.expect("spectra.trace_zero", chars.weighted_sum() == 0);
    if (profile->array) {
      const auto from_array = array_spectrum(*profile->array);
      const bool agree = same_eigenvalue_set(chars, from_array);
      sj["intersection_matrix"] = to_json(from_array);
      sj["oracles_agree"] = agree;
      checks.expect("spectra.oracles_agree", agree);
    } else {
      sj["intersection_matrix"] = nullptr;
      sj["oracles_agree"] = false;
      checks.expect("spectra.oracles_agree", false);
    }
    if (!base_family) {
      const auto audit = audit_eigenvalue_formula(m, chars);
      sj["printed_formula"] = audit.formula;
      audits.push_back({{"name", "eigenvalue_formula"},
                        {"status", audit.agrees ? "agree" : "mismatch"},
                        {"formula", audit.formula},
                        {"oracle", audit.oracle},
                        {"formula_only", audit.formula_only},
                        {"oracle_only", audit.oracle_only}});
    }
    sections["spectra"] = std::move(sj);
  }

  r["checks"] = std::move(sections);
  r["audits"] = std::move(audits);
  r["assertions"] = checks.to_json();
  r["status"] = checks.passed() ? "pass" : "fail";
  if (options.timing) {
    r["timing_ms"] = clock.timings();
  }
  return {std::move(r), checks.passed()};
}

}  // namespace crclab
