#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "crclab/constructions.hpp"
#include "crclab/gf2.hpp"
#include "support.hpp"

namespace crclab {
namespace {

BitMatrix rows_of(std::initializer_list<const char*> rows) {
  std::vector<BitVector> out;
  for (const char* r : rows) {
    out.push_back(BitVector::from_string(r));
  }
  return BitMatrix::from_rows(std::move(out));
}

TEST(BitVector, WeightAndXor) {
  auto v = BitVector::from_string("1011001");
  EXPECT_EQ(v.size(), 7U);
  EXPECT_EQ(v.weight(), 4U);
  EXPECT_TRUE((v ^ v).is_zero());
  EXPECT_EQ(v.to_string(), "1011001");
  EXPECT_EQ(BitVector::ones(5).weight(), 5U);
  EXPECT_EQ(BitVector::unit(5, 3).to_string(), "00010");
  EXPECT_EQ(BitVector(0).weight(), 0U);
}

TEST(BitVector, SpansWordBoundaries) {
  BitVector v(130);
  v.set(0, true);
  v.set(63, true);
  v.set(64, true);
  v.set(129, true);
  EXPECT_EQ(v.weight(), 4U);
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{0, 63, 64, 129}));
  v.flip(64);
  EXPECT_FALSE(v.get(64));
  EXPECT_EQ(BitVector::ones(130).weight(), 130U);
  EXPECT_TRUE(BitVector::ones(130).dot(BitVector::unit(130, 100)));
}

TEST(BitVector, WordPackingRoundTrip) {
  const auto v = BitVector::from_word(0b1101, 6);
  EXPECT_EQ(v.to_string(), "101100");
  EXPECT_EQ(v.to_word(), 0b1101U);
}

TEST(BitVector, OrderingIsLengthThenLexicographic) {
  EXPECT_LT(BitVector::from_string("111"), BitVector::from_string("0000"));
  EXPECT_LT(BitVector::from_string("011"), BitVector::from_string("100"));
  EXPECT_EQ(BitVector::from_string("010") <=> BitVector::from_string("010"), std::strong_ordering::equal);
}

TEST(BitVector, DotProduct) {
  EXPECT_FALSE(BitVector::from_string("110").dot(BitVector::from_string("111")));
  EXPECT_TRUE(BitVector::from_string("100").dot(BitVector::from_string("111")));
}

TEST(BitMatrix, RowsAndColumnsAgreeWithEntries) {
  const auto m = rows_of({"1100", "0111", "1010"});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      EXPECT_EQ(m.row(i).get(j), m.get(i, j));
      EXPECT_EQ(m.column(j).get(i), m.get(i, j));
      EXPECT_EQ(m.transpose().get(j, i), m.get(i, j));
    }
  }
}

TEST(BitMatrix, FromRowsRejectsRaggedRows) {
  EXPECT_THROW(BitMatrix::from_rows({BitVector(3), BitVector(4)}), std::invalid_argument);
  EXPECT_EQ(BitMatrix::from_rows({}, 5).cols(), 5U);
}

TEST(Rref, EchelonExample) {
  const auto r = rref(rows_of({"110", "011"}));
  EXPECT_EQ(r.rank, 2U);
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced, rows_of({"101", "011"}));
}

TEST(Rref, H3HasRankTwo) { EXPECT_EQ(rank(build_hm(3)), 2U); }

TEST(Rref, ZeroMatrix) {
  const auto r = rref(BitMatrix(2, 2));
  EXPECT_EQ(r.rank, 0U);
  EXPECT_TRUE(r.pivot_columns.empty());
}

TEST(Nullspace, H3IsRepetitionCode) {
  const auto basis = nullspace(build_hm(3));
  ASSERT_EQ(basis.size(), 1U);
  EXPECT_EQ(basis[0].to_string(), "111");
}

TEST(Nullspace, IdentityIsTrivial) { EXPECT_TRUE(nullspace(BitMatrix::identity(3)).empty()); }

TEST(Nullspace, H4HasThreeBasisVectors) {
  const auto h = build_hm(4);
  const auto basis = nullspace(h);
  ASSERT_EQ(basis.size(), 3U);
  for (const auto& v : basis) {
    EXPECT_TRUE(mat_vec(h, v).is_zero());
  }
}

TEST(MatVec, Examples) {
  const auto h3 = build_hm(3);
  EXPECT_EQ(mat_vec(h3, BitVector::from_string("111")).to_string(), "000");
  EXPECT_EQ(mat_vec(h3, BitVector::from_string("100")).to_string(), "110");
  EXPECT_EQ(mat_vec(build_hm(4), BitVector::ones(6)).to_string(), "1111");
  EXPECT_THROW(mat_vec(h3, BitVector(4)), std::invalid_argument);
}

TEST(Gf2Properties, RandomMatrices) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 14;
    const auto m = testing::random_matrix(rng, rows, cols);
    const auto r = rank(m);
    EXPECT_LE(r, std::min(rows, cols));
    EXPECT_EQ(std::size_t{1} << r, testing::column_space_size(m));
    EXPECT_EQ(rank(m.transpose()), r);

    const auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + r, cols);
    for (const auto& v : basis) {
      EXPECT_TRUE(mat_vec(m, v).is_zero());
    }
    if (!basis.empty()) {
      EXPECT_EQ(rank(BitMatrix::from_rows(basis)), basis.size());
    }

    const auto picked = independent_rows(m);
    EXPECT_EQ(picked.size(), r);
    const auto sub = m.select_rows(picked);
    EXPECT_EQ(rank(sub), r);
    auto stacked = sub;
    for (const auto& row : m.row_vectors()) {
      stacked.append_row(row);
    }
    EXPECT_EQ(rank(stacked), r);
  }
}

TEST(Gf2Properties, MatVecIsLinear) {
  std::mt19937_64 rng(7);
  const auto m = testing::random_matrix(rng, 9, 70);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testing::random_matrix(rng, 1, 70).row(0);
    const auto y = testing::random_matrix(rng, 1, 70).row(0);
    EXPECT_EQ(mat_vec(m, x ^ y), mat_vec(m, x) ^ mat_vec(m, y));
  }
}

TEST(MatrixText, RoundTrip) {
  std::mt19937_64 rng(3);
  const auto m = testing::random_matrix(rng, 5, 9);
  EXPECT_EQ(matrix_from_text(to_text(m)), m);
  std::stringstream ss;
  write_matrix(ss, BitMatrix(0, 4));
  EXPECT_EQ(read_matrix(ss).cols(), 4U);
}

TEST(MatrixText, RejectsMalformedInput) {
  EXPECT_THROW(matrix_from_text("2 3\n101\n"), std::invalid_argument);
  EXPECT_THROW(matrix_from_text("1 3\n1x1\n"), std::invalid_argument);
}

}  // namespace
}  // namespace crclab
