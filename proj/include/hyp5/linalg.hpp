#pragma once

#include <cstdint>
#include <vector>

#include "hyp5/lorentz.hpp"

namespace hyp5 {

// Rank over Q of a set of integer 6-vectors.
int rank_of(const std::vector<Vec6>& vs);

// Determinant of an n x n integer matrix (n <= 6) given row-major.
std::int64_t small_det(const std::vector<std::int64_t>& m, int n);

// Greedily picks rank(vs) linearly independent members, in order.
std::vector<int> independent_subset(const std::vector<Vec6>& vs);

// Sorted coordinate indices, one per basis vector, on which the basis
// restricts to an invertible square matrix.
std::vector<int> pivot_coordinates(const std::vector<Vec6>& basis);

}  // namespace hyp5
