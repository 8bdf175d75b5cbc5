#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyp5/lorentz.hpp"
#include "hyp5/pairing.hpp"

namespace hyp5 {

// The 3840 symmetries of Q5 with their side permutations.
struct SymmetryAction {
    std::vector<Mat6> elements;
    std::vector<std::array<int, 72>> side_perm;  // side i -> side of sigma s_i
    std::vector<std::array<int, 5>> coord_perm;  // underlying permutation of coordinates

    static const SymmetryAction& get();
};

// Conjugates all 72 pairing matrices by sym and re-reads the twists.
// Throws std::logic_error if the result is not of the form r k.
PairingCode act_symmetry(const Mat6& sym, const PairingCode& code);

// Same action through the coordinate permutation alone (signs act trivially).
PairingCode act_permutation(const std::array<int, 5>& perm, const PairingCode& code);

// The order-1920 symmetry group of P5 and the induced action on codes.
struct CornerAction {
    std::vector<Mat6> elements;                      // elements[0] = I
    std::vector<std::array<int, 16>> inv_side_perm;  // side i -> side of A^{-1} s_i
    std::array<int, 16> to_origin{};                 // for each P5 actual vertex v, an element with A v = e6

    static const CornerAction& get();
};

// Code of A Gamma A^{-1} renormalised so coordinate reflections map to the
// standard basis. Throws std::logic_error if the renormalisation is singular.
PairingCode act_corner(int element, const PairingCode& code);

// Twist of the reflection in each P5 side. Side order: five coordinate sides, the ten
// three-perpendicular sides from pair {4,5} down to {1,2}, then the far side.
std::array<std::uint32_t, 16> phi_on_p5_sides(const PairingCode& code);

// Reduces x by reflections in the sides of P5 until x(P5) = P5. residual = R x is then a
// symmetry of P5, and phi is the image of R under the twist homomorphism.
struct P5Descent {
    Mat6 residual;
    std::uint32_t phi = 0;
};
P5Descent descend_to_p5(const PairingCode& code, const Mat6& x);

// Homomorphism of the P5 reflection group to F_2^5 whose kernel is the
// manifold group, evaluated on a matrix by descent into P5.
std::uint32_t phi_by_descent(const PairingCode& code, const Mat6& x);

// Reassembles Q5 around P5 actual vertex `vertex` (1..16). `vertex` 1 is
// the identity. Development route: matrices and descent.
PairingCode inside_out(const PairingCode& code, int vertex);
// Same operation through the side permutation formula.
PairingCode inside_out_fast(const PairingCode& code, int vertex);

struct ManifoldClass {
    PairingCode canonical;
    int orbit_size = 0;  // under the order-1920 action (equivalently 61440 / S)
    int symmetry_order = 0;
    std::vector<PairingCode> members;
};

ManifoldClass canonicalize(const PairingCode& code, bool keep_members = false);
int symmetry_order(const PairingCode& code);

// Orbit count of a sorted packed code list under the coordinate permutations.
struct OrbitCount {
    std::uint64_t orbits = 0;
    std::uint64_t total = 0;  // sum of orbit sizes
};
OrbitCount count_symmetry_classes(const std::vector<std::uint64_t>& sorted_codes);

struct ClassRecord {
    PairingCode canonical;
    int orbit_size = 0;
    int symmetry_order = 0;
    int cusps = 0;
};

// Isometry classes of a sorted packed code list, ordered by canonical code.
// Throws std::logic_error if an orbit leaves the list.
std::vector<ClassRecord> isometry_classes(const std::vector<std::uint64_t>& sorted_codes,
                                          const std::function<void(std::size_t, std::size_t)>& progress = {});

// Number of ideal vertex cycles, from the twist orbits.
int cusp_count_fast(const PairingCode& code);

}  // namespace hyp5
