#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "crclab/code.hpp"
#include "crclab/constructions.hpp"
#include "crclab/errors.hpp"
#include "support.hpp"

namespace crclab {
namespace {

LinearCode repetition3() { return LinearCode::from_parity_check(build_hm(3)); }

TEST(LinearCode, RepetitionCodeFromH3) {
  const auto code = repetition3();
  EXPECT_EQ(code.length(), 3U);
  EXPECT_EQ(code.dimension(), 1U);
  std::set<std::string> words;
  for (const auto& w : testing::all_codewords(code)) {
    words.insert(w.to_string());
  }
  EXPECT_EQ(words, (std::set<std::string>{"000", "111"}));
}

TEST(LinearCode, ParametersOfCm) {
  EXPECT_EQ(build_cm(6).length(), 15U);
  EXPECT_EQ(build_cm(6).dimension(), 10U);
  EXPECT_EQ(build_cm(8).length(), 28U);
  EXPECT_EQ(build_cm(8).dimension(), 21U);
}

TEST(LinearCode, GeneratorAndParityCheckAreConsistent) {
  for (std::size_t m = 3; m <= 9; ++m) {
    const auto code = build_cm(m);
    EXPECT_EQ(rank(code.generator()), code.dimension());
    EXPECT_EQ(rank(code.parity_check()), code.redundancy());
    EXPECT_EQ(code.dimension() + code.redundancy(), code.length());
    for (const auto& row : code.generator().row_vectors()) {
      EXPECT_TRUE(code.contains(row));
    }
  }
}

TEST(LinearCode, FromGeneratorMatchesFromParityCheck) {
  const auto a = build_cm(6);
  const auto b = LinearCode::from_generator(a.generator());
  EXPECT_TRUE(same_code(a, b));
  EXPECT_EQ(b.redundancy(), a.redundancy());
}

TEST(LinearCode, FromMatricesValidates) {
  const auto code = repetition3();
  EXPECT_NO_THROW(LinearCode::from_matrices(code.generator(), code.parity_check()));
  EXPECT_THROW(LinearCode::from_matrices(BitMatrix::identity(3), code.parity_check()), std::invalid_argument);
  EXPECT_THROW(LinearCode::from_matrices(code.generator(), build_hm(3)), std::invalid_argument);
}

TEST(LinearCode, SyndromeWordPacksRows) {
  const auto code = build_cm(5);
  const auto x = BitVector::unit(10, 4);
  EXPECT_EQ(code.syndrome_word(x), code.column_syndromes()[4]);
  EXPECT_EQ(BitVector::from_word(code.syndrome_word(x), code.redundancy()), code.syndrome(x));
}

TEST(LinearCode, CodeFileRoundTrip) {
  const auto code = build_cm_union(8);
  std::stringstream ss;
  write_code(ss, code);
  const auto back = read_code(ss);
  EXPECT_EQ(back.generator(), code.generator());
  EXPECT_EQ(back.parity_check(), code.parity_check());
  std::stringstream header(ss.str());
  std::size_t n = 0;
  std::size_t k = 0;
  header >> n >> k;
  EXPECT_EQ(n, 28U);
  EXPECT_EQ(k, 22U);
}

TEST(CosetTable, DistributionOfC4) {
  const auto table = build_coset_table(build_cm(4));
  EXPECT_EQ(table.size(), 8U);
  EXPECT_EQ(table.distribution().counts, (std::vector<std::uint64_t>{1, 6, 1}));
}

TEST(CosetTable, DistributionOfRepetitionCode) {
  EXPECT_EQ(build_coset_table(repetition3()).distribution().counts, (std::vector<std::uint64_t>{1, 3}));
}

TEST(CosetTable, LeadersHaveTheirSyndromeAndWeight) {
  for (std::size_t m : {4, 5, 6, 7, 8}) {
    const auto code = build_cm(m);
    const auto table = build_coset_table(code);
    EXPECT_EQ(table.size(), std::size_t{1} << code.redundancy());
    EXPECT_EQ(table.weight(0), 0);
    EXPECT_TRUE(table.leader(0).is_zero());
    for (Syndrome s = 0; s < table.size(); ++s) {
      const auto leader = table.leader(s);
      EXPECT_EQ(code.syndrome_word(leader), s);
      EXPECT_EQ(static_cast<int>(leader.weight()), table.weight(s));
    }
  }
}

TEST(CosetTable, WeightsMatchBruteForceDistances) {
  for (const auto& code : {build_cm(4), build_cm(5), build_cm_union(6), repetition3()}) {
    const auto table = build_coset_table(code);
    const auto dist = testing::brute_distances(code);
    for (std::uint32_t x = 0; x < dist.size(); ++x) {
      const auto v = BitVector::from_word(x, code.length());
      ASSERT_EQ(table.weight(code.syndrome_word(v)), dist[x]);
    }
  }
}

TEST(CosetTable, CoveringRadius) {
  EXPECT_EQ(covering_radius(build_coset_table(build_cm(6))), 3);
  EXPECT_EQ(covering_radius(build_coset_table(build_cm(8))), 4);
  EXPECT_EQ(covering_radius(build_coset_table(build_cm_union(8))), 2);
  EXPECT_EQ(build_coset_table(build_cm(6)).distribution().counts.size(), 4U);
}

TEST(CosetTable, GuardRejectsLargeRedundancy) {
  const auto code = build_cm(8);
  EXPECT_THROW(build_coset_table(code, 6), GuardExceeded);
  try {
    build_coset_table(code, 6);
  } catch (const GuardExceeded& e) {
    EXPECT_EQ(e.requested(), 7U);
    EXPECT_EQ(e.limit(), 6U);
  }
}

TEST(MinimumDistance, Examples) {
  for (std::size_t m = 3; m <= 9; ++m) {
    EXPECT_EQ(minimum_distance_upto(build_cm(m), 4), 3) << m;
  }
  EXPECT_EQ(minimum_distance_upto(repetition3(), 4), 3);
  const auto duplicated = LinearCode::from_parity_check(
      BitMatrix::from_rows({BitVector::from_string("110"), BitVector::from_string("001")}));
  EXPECT_EQ(minimum_distance_upto(duplicated, 4), 2);
  EXPECT_EQ(minimum_distance_upto(LinearCode::from_parity_check(BitMatrix::identity(4)), 4), std::nullopt);
}

TEST(CoveringSet, NonantipodalForEvenM) {
  const auto c6 = build_cm(6);
  const auto r6 = is_nonantipodal_with_coset_cover(c6, build_coset_table(c6));
  EXPECT_TRUE(r6.nonantipodal);
  ASSERT_TRUE(r6.witness.has_value());
  EXPECT_EQ(*r6.witness, c6.syndrome_word(BitVector::ones(15)));
  EXPECT_TRUE(r6.witness_is_all_ones);

  const auto c5 = build_cm(5);
  const auto r5 = is_nonantipodal_with_coset_cover(c5, build_coset_table(c5));
  EXPECT_FALSE(r5.nonantipodal);
  EXPECT_GT(r5.covering_cosets, 1U);

  const auto c8 = build_cm(8);
  EXPECT_TRUE(is_nonantipodal_with_coset_cover(c8, build_coset_table(c8)).nonantipodal);
}

TEST(UnionWithCoveringSet, Examples) {
  const auto c6 = build_cm(6);
  const auto u6 = union_with_covering_set(c6, build_coset_table(c6));
  EXPECT_EQ(u6.length(), 15U);
  EXPECT_EQ(u6.dimension(), 11U);
  EXPECT_EQ(covering_radius(build_coset_table(u6)), 1);

  const auto c8 = build_cm(8);
  const auto u8 = union_with_covering_set(c8, build_coset_table(c8));
  EXPECT_EQ(u8.dimension(), 22U);
  EXPECT_TRUE(u8.contains(BitVector::ones(28)));

  const auto c5 = build_cm(5);
  EXPECT_THROW(union_with_covering_set(c5, build_coset_table(c5)), std::invalid_argument);
}

TEST(ExtendWithParity, Examples) {
  const auto rep = extend_with_parity(repetition3());
  EXPECT_EQ(rep.length(), 4U);
  std::set<std::string> words;
  for (const auto& w : testing::all_codewords(rep)) {
    words.insert(w.to_string());
  }
  EXPECT_EQ(words, (std::set<std::string>{"0000", "1111"}));

  const auto e6 = extend_with_parity(build_cm_union(6));
  EXPECT_EQ(e6.length(), 16U);
  EXPECT_EQ(e6.dimension(), 11U);
  EXPECT_EQ(minimum_distance_upto(e6, 4), 4);
  const auto e8 = extend_with_parity(build_cm_union(8));
  EXPECT_EQ(e8.length(), 29U);
  EXPECT_EQ(e8.dimension(), 22U);
}

TEST(TranslateView, ZeroShiftIsIdentity) {
  const auto code = build_cm(6);
  const auto table = build_coset_table(code);
  const auto view = coset_distance_profile_of_translate(code, table, BitVector(15));
  const auto in_code = coset_distance_profile_of_translate(code, table, code.generator().row(2));
  for (Syndrome s = 0; s < table.size(); ++s) {
    EXPECT_EQ(view.weight(s), table.weight(s));
    EXPECT_EQ(in_code.weight(s), table.weight(s));
  }
}

TEST(TranslateView, AllOnesShiftSwapsExtremes) {
  const auto code = build_cm(6);
  const auto table = build_coset_table(code);
  const auto view = coset_distance_profile_of_translate(code, table, BitVector::ones(15));
  const auto ones = code.syndrome_word(BitVector::ones(15));
  EXPECT_EQ(view.weight(ones), 0);
  EXPECT_EQ(table.weight(ones), 3);
  EXPECT_EQ(view.weight(0), 3);
}

}  // namespace
}  // namespace crclab
