#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/gf2.hpp"
#include "crclab/intersection_array.hpp"

namespace crclab::testing {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// Size of the column space of m found by closing {0} under the columns.
std::size_t column_space_size(const BitMatrix& m);

/// Every codeword, by enumerating the row span of G. Requires k <= 20.
std::vector<BitVector> all_codewords(const LinearCode& code);

/// d(x, C) for every x in F_2^n (x packed as bit i = coordinate i), by
/// multi-source BFS on the n-cube. Requires n <= 20.
std::vector<std::uint8_t> brute_distances(const LinearCode& code);

/// Definition-level complete regularity over all 2^n vectors; nullopt when
/// the counts are not uniform within a level.
std::optional<IntersectionArray> brute_intersection_array(const LinearCode& code);

/// Multiset of values as value -> count.
using Spectrum = std::map<long long, std::uint64_t>;

}  // namespace crclab::testing
