#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyp5/lorentz.hpp"
#include "hyp5/polytope.hpp"

namespace hyp5 {

// Eleven twists k1 k5 k9 ... k37 k41; digit g governs sides 4g+1..4g+4
// (g < 10) or the 32 small sides (g = 10).
struct PairingCode {
    std::array<std::uint8_t, 11> digits{};

    K5Element twist(int group) const { return {digits[group]}; }
    // 55-bit packing whose numeric order is the lexicographic code order.
    std::uint64_t pack() const;
    static PairingCode unpack(std::uint64_t v);
    friend auto operator<=>(const PairingCode&, const PairingCode&) = default;
};

// Throws std::invalid_argument on a bad length or character.
PairingCode parse_code(std::string_view text);
std::string emit_code(const PairingCode& c);

// Digit position (0..10) governing a Q5 side (0-based index).
int group_of_side(int side);
// Coordinate pair {a,b} (0-based) of large-side group g < 10.
std::array<int, 2> group_pair(int g);
int group_of_pair(int a, int b);

struct SidePairing {
    PairingCode code;
    std::array<int, 72> partner{};
    std::array<K5Element, 72> twist{};
    std::array<Mat6, 72> map{};  // g_i = r_i k_i maps side partner(i) onto side i
};

SidePairing expand(const PairingCode& code);

bool is_orientation_preserving(const PairingCode& code);

struct CycleDecomposition {
    std::vector<int> class_of;                        // per face of the lattice
    std::array<std::vector<std::vector<int>>, 5> classes;  // by dimension

    // Sizes of ideal-vertex classes, ascending.
    std::vector<int> ideal_vertex_cycle_sizes(const FaceLattice& L) const;
};

// Equivalence closure of F ~ g_i^{-1} F over faces F of side i, computed
// directly from the matrices.
CycleDecomposition face_cycles(const SidePairing& p, const FaceLattice& L);

struct PropernessReport {
    bool sizes_ok = false;        // every compact-type class has 2^(5-k) faces of one type
    bool tallies_ok = false;      // class counts per face type
    bool ridge_identity = false;  // each ridge cycle transformation is I
    bool proper() const { return sizes_ok && tallies_ok; }
};

PropernessReport properness(const SidePairing& p, const FaceLattice& L, const CycleDecomposition& c);
bool is_proper(const SidePairing& p, const FaceLattice& L);

// Throws std::domain_error for an improper pairing.
int euler_characteristic(const SidePairing& p, const FaceLattice& L);

// One of {2x5,16x5} or {1,1,2,2,2,2,8,8,16,16,16,16}; throws std::logic_error otherwise.
std::vector<int> vertex_cycle_structure(const SidePairing& p, const FaceLattice& L);

struct RidgeCycle {
    std::vector<int> sides;  // s_1 .. s_m, each step applies g_s^{-1}
    Mat6 transformation;     // g_{s_m}^{-1} ... g_{s_1}^{-1}
};
std::vector<RidgeCycle> ridge_cycles(const SidePairing& p, const FaceLattice& L);

// Shared Q5 lattice, built once.
const FaceLattice& q5_lattice();

}  // namespace hyp5
