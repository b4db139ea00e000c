#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "json.hpp"

#include "crclab/code.hpp"
#include "crclab/graph.hpp"
#include "crclab/intersection_array.hpp"
#include "crclab/spectrum.hpp"

namespace crclab {

enum class Family { cm, cm_union };

std::string_view family_name(Family family);
/// "Cm" or "Cm-union"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

/// Throws std::invalid_argument for an m the family does not admit.
LinearCode build_family(Family family, std::size_t m);

/// Enumeration limits. `relaxed()` lifts every limit up to the hard
/// ceilings of the data types.
struct Limits {
  std::size_t table_redundancy = kMaxTableRedundancy;
  std::size_t graph_redundancy = kMaxGraphRedundancy;
  std::size_t pair_vertices = kMaxPairVertices;

  static Limits relaxed();
};

struct VerifyOptions {
  bool cr = false;
  bool ct = false;
  bool graph = false;
  bool spectra = false;
  bool lemma32 = false;
  bool inverse_array = false;
  /// Adds a "timing_ms" object; reports are then no longer reproducible.
  bool timing = false;
  Limits limits;

  static VerifyOptions all();
  [[nodiscard]] bool any_check() const {
    return cr || ct || graph || spectra || lemma32 || inverse_array;
  }
};

struct VerifyOutcome {
  nlohmann::ordered_json report;
  /// Every non-audit assertion held.
  bool passed = false;
};

/// Parameter checks always run; the other sections follow `options`.
/// Throws GuardExceeded when a requested check exceeds its limit.
VerifyOutcome run_verify(Family family, std::size_t m, const VerifyOptions& options);

nlohmann::ordered_json to_json(const IntersectionArray& arr);
nlohmann::ordered_json to_json(const SpectrumReport& spectrum);

}  // namespace crclab
