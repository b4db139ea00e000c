#include "crclab/regularity.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "crclab/parallel.hpp"

namespace crclab {

namespace {

struct LevelCounts {
  int c = 0;
  int b = 0;
};

LevelCounts count_at(std::span<const std::uint8_t> weights, Syndrome shift,
                     std::span<const Syndrome> columns, Syndrome s) {
  const int level = weights[s ^ shift];
  LevelCounts counts;
  for (auto h : columns) {
    const int w = weights[s ^ h ^ shift];
    counts.c += static_cast<int>(w == level - 1);
    counts.b += static_cast<int>(w == level + 1);
  }
  return counts;
}

/// Folds per-syndrome counts, in syndrome order, into a report.
class ProfileMerger {
 public:
  ProfileMerger(int rho, int valency) : rho_(rho), valency_(valency), reference_(rho + 1) {}

  void add(Syndrome s, int level, LevelCounts counts) {
    auto& ref = reference_[level];
    if (!ref) {
      ref = counts;
      return;
    }
    if (ref->c == counts.c && ref->b == counts.b) {
      return;
    }
    ++report_.violation_count;
    if (report_.violations.size() < kMaxReportedViolations) {
      report_.violations.push_back({s, level, counts.c, counts.b, ref->c, ref->b});
    }
  }

  RegularityReport finish() && {
    report_.rho = rho_;
    report_.is_completely_regular = report_.violation_count == 0;
    if (report_.is_completely_regular) {
      IntersectionArray arr;
      arr.valency = valency_;
      for (int l = 0; l < rho_; ++l) {
        arr.b.push_back(reference_[l] ? reference_[l]->b : 0);
      }
      for (int l = 1; l <= rho_; ++l) {
        arr.c.push_back(reference_[l] ? reference_[l]->c : 0);
      }
      report_.array = std::move(arr);
    }
    return std::move(report_);
  }

 private:
  int rho_;
  int valency_;
  std::vector<std::optional<LevelCounts>> reference_;
  RegularityReport report_;
};

RegularityReport profile_parallel(const CosetTable& table, Syndrome shift) {
  const auto weights = table.weights();
  const auto columns = table.columns();
  const auto size = static_cast<std::int64_t>(table.size());
  std::vector<LevelCounts> counts(table.size());

#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::int64_t s = 0; s < size; ++s) {
    counts[s] = count_at(weights, shift, columns, static_cast<Syndrome>(s));
  }

  ProfileMerger merger(table.covering_radius(), static_cast<int>(table.length()));
  for (std::int64_t s = 0; s < size; ++s) {
    const auto syn = static_cast<Syndrome>(s);
    merger.add(syn, weights[syn ^ shift], counts[s]);
  }
  return std::move(merger).finish();
}

RegularityReport profile_serial(const CosetTable& table, Syndrome shift) {
  const auto weights = table.weights();
  const auto columns = table.columns();
  ProfileMerger merger(table.covering_radius(), static_cast<int>(table.length()));
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto syn = static_cast<Syndrome>(s);
    merger.add(syn, weights[syn ^ shift], count_at(weights, shift, columns, syn));
  }
  return std::move(merger).finish();
}

void require_cover_is_all_ones(const LinearCode& code, const CosetTable& table) {
  const auto cover = is_nonantipodal_with_coset_cover(code, table);
  if (!cover.nonantipodal || !cover.witness_is_all_ones) {
    throw std::invalid_argument("covering set C(rho) is not the translate C + 1");
  }
}

}  // namespace

RegularityReport intersection_profile(const CosetTable& table) {
  return profile_parallel(table, 0);
}

RegularityReport intersection_profile(const TranslateView& view) {
  return profile_parallel(view.table(), view.shift());
}

namespace serial {

RegularityReport intersection_profile(const CosetTable& table) { return profile_serial(table, 0); }

RegularityReport intersection_profile(const TranslateView& view) {
  return profile_serial(view.table(), view.shift());
}

}  // namespace serial

IntersectionArray inverse_array(const IntersectionArray& arr) {
  const int rho = arr.rho();
  IntersectionArray inv;
  inv.valency = arr.valency;
  for (int i = 0; i < rho; ++i) {
    inv.b.push_back(arr.c_at(rho - i));
  }
  for (int i = 1; i <= rho; ++i) {
    inv.c.push_back(arr.b_at(rho - i));
  }
  return inv;
}

InverseArrayReport verify_inverse_array(const LinearCode& code, const CosetTable& table) {
  require_cover_is_all_ones(code, table);
  const auto own = intersection_profile(table);
  if (!own.array) {
    throw std::invalid_argument("code is not completely regular; inverse array undefined");
  }
  InverseArrayReport report;
  report.expected = inverse_array(*own.array);
  report.translate =
      intersection_profile(coset_distance_profile_of_translate(code, table, BitVector::ones(code.length())));
  report.holds = report.translate.array && *report.translate.array == report.expected;
  return report;
}

IntersectionArray union_array(const IntersectionArray& arr, UnionRule rule) {
  const int rho = arr.rho();
  if (rho < 1 || !arr.valid()) {
    throw std::invalid_argument("union_array needs a valid array with rho >= 1");
  }
  // Both halves of the union must see the same counts: the covering set's
  // inverse array has to coincide with the code's own array.
  for (int s = 0; s <= rho; ++s) {
    if (arr.c_at(s) != arr.b_at(rho - s) || arr.b_at(s) != arr.c_at(rho - s)) {
      throw std::invalid_argument("union not completely regular: array " + arr.to_string() +
                                  " is not self-inverse at level " + std::to_string(s));
    }
  }
  const int rho_a = rho / 2;
  IntersectionArray out;
  out.valency = arr.valency;
  for (int s = 0; s < rho_a; ++s) {
    out.b.push_back(arr.b_at(s));
  }
  for (int s = 1; s < rho_a; ++s) {
    out.c.push_back(arr.c_at(s));
  }
  if (rho_a >= 1) {
    const int s = rho_a;
    if (rho % 2 == 0) {
      out.c.push_back(arr.c_at(s) + arr.b_at(s));
    } else if (rule == UnionRule::corrected) {
      out.c.push_back(arr.c_at(s));
    } else {
      // c^a_s = 0 and b^a_s = b_s: the last level then carries a b entry.
      out.c.push_back(0);
      out.b.push_back(arr.b_at(s));
    }
  }
  return out;
}

TranslateDualityReport check_translate_duality(const LinearCode& code, const CosetTable& table) {
  require_cover_is_all_ones(code, table);
  const Syndrome ones = code.syndrome_word(BitVector::ones(code.length()));
  const int rho = table.covering_radius();
  TranslateDualityReport report;
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto syn = static_cast<Syndrome>(s);
    ++report.checked;
    if (table.weight(syn) + table.weight(syn ^ ones) != rho) {
      ++report.failures;
      if (!report.first_failure) {
        report.first_failure = syn;
      }
    }
  }
  report.holds = report.failures == 0;
  return report;
}

}  // namespace crclab
