#pragma once

#include <array>

#include "hyp5/lorentz.hpp"

namespace hyp5 {

// Generators of the order-1920 symmetry group of P5 (reflections of the
// simplex fundamental domain through its interior vertex).
const std::array<Mat6, 5>& sigma5_generators();

// Lifts of the two generators of the free order-16 deck group on manifold
// 2B7JB47JG81.
const Mat6& quotient_alpha();
const Mat6& quotient_beta();

// Side-pairing of {P5, rho P5}: side i paired to side j by `matrix`
// (sides numbered 1..32, the second copy occupying 17..32).
struct NPairing {
    int i;
    int j;
    Mat6 matrix;
};
const std::array<NPairing, 16>& n_pairings();

}  // namespace hyp5
