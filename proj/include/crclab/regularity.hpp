#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/intersection_array.hpp"

namespace crclab {

inline constexpr std::size_t kMaxReportedViolations = 100;

/// A syndrome whose neighbour counts disagree with the counts of the first
/// (smallest) syndrome at the same level.
struct ProfileViolation {
  Syndrome syndrome = 0;
  int level = 0;
  int c = 0;
  int b = 0;
  int expected_c = 0;
  int expected_b = 0;
};

/// Outcome of the complete-regularity check. Counts are taken per coset:
/// a vector's neighbours x + e_j have syndromes s + h_j, so for a linear
/// code the counts depend on the syndrome only and checking every syndrome
/// is exhaustive.
struct RegularityReport {
  bool is_completely_regular = false;
  int rho = 0;
  std::optional<IntersectionArray> array;
  std::size_t violation_count = 0;
  /// At most kMaxReportedViolations entries, in syndrome order.
  std::vector<ProfileViolation> violations;
};

RegularityReport intersection_profile(const CosetTable& table);
/// Profile of the partition by distance to the translate C + t.
RegularityReport intersection_profile(const TranslateView& view);

namespace serial {

RegularityReport intersection_profile(const CosetTable& table);
RegularityReport intersection_profile(const TranslateView& view);

}  // namespace serial

/// b^r_i = c_{rho-i}, c^r_i = b_{rho-i}.
IntersectionArray inverse_array(const IntersectionArray& arr);

struct InverseArrayReport {
  bool holds = false;
  IntersectionArray expected;
  RegularityReport translate;
};

/// Measures the profile of C(rho) = C + 1 and compares it with the inverse
/// of the code's own array. Throws std::invalid_argument unless the code is
/// completely regular and its covering set is C + 1.
InverseArrayReport verify_inverse_array(const LinearCode& code, const CosetTable& table);

/// Rule for the level floor(rho/2) when rho is odd.
enum class UnionRule {
  /// c^a = c, b^a = 0 (the only reading with b_{rho_a} = 0).
  corrected,
  /// c^a = 0, b^a = b, as typeset in the original derivation; kept so that
  /// the mismatch against measured arrays can be demonstrated.
  as_printed,
};

/// Array of C u (C + 1) predicted from the array of a non-antipodal
/// completely regular code C. Throws std::invalid_argument when the array
/// is not self-inverse (the union is then not completely regular).
IntersectionArray union_array(const IntersectionArray& arr, UnionRule rule = UnionRule::corrected);

struct TranslateDualityReport {
  bool holds = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<Syndrome> first_failure;
};

/// Checks weight(s) + weight(s + syndrome(1)) = rho for every syndrome, i.e.
/// a coset of weight w is a translate of C(rho) of weight rho - w. Throws
/// std::invalid_argument unless the covering set is C + 1.
TranslateDualityReport check_translate_duality(const LinearCode& code, const CosetTable& table);

}  // namespace crclab
