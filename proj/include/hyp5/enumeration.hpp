#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyp5/pairing.hpp"
#include "hyp5/polytope.hpp"

namespace hyp5 {

// Cycle-size condition for one K5-orbit of faces. With groups(F) the digit
// positions of the sides through F and Stab(F) the subgroup of K5 fixing F,
// the cycle of F is its orbit under the span V of the twists of groups(F),
// of size 2^(rank of V modulo Stab(F)). Properness demands 2^(5 - dim F).
struct CycleCondition {
    std::uint16_t groups = 0;               // bitmask over digit positions 0..10
    std::vector<std::uint32_t> stabilizer;  // basis
    int target = 0;                         // required rank modulo the stabilizer
    int dim = 0;
    FaceType type = FaceType::Cell;
    int example_face = -1;
};

// Deduplicated conditions over all non-ideal faces of the lattice.
std::vector<CycleCondition> cycle_conditions(const FaceLattice& L);

struct FaceOrbitData {
    std::uint16_t groups = 0;
    std::vector<std::uint32_t> stabilizer;
};
// Per face of L (cached): digit positions through it and its K5 stabilizer.
const std::vector<FaceOrbitData>& face_orbit_data(const FaceLattice& L);

// Cycle size of each face (ideal vertices included) from the twist orbits.
std::vector<int> twist_orbit_cycle_sizes(const PairingCode& code, const FaceLattice& L);

bool satisfies_cycle_conditions(const PairingCode& code, const std::vector<CycleCondition>& conds);

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
};

struct EnumerationOptions {
    int jobs = 1;
    bool orientable_prefilter = true;
    std::string out_path;         // code log, one code per line; empty for none
    std::string checkpoint_path;  // empty disables checkpointing
    bool keep_codes = true;
    // Restrict to codes starting with this digit string (testing).
    std::string prefix;
    // Stop after this many subtrees (simulated interruption); 0 = no limit.
    int max_subtrees = 0;
    std::function<void(int done, int total, std::uint64_t count)> progress;
};

struct EnumerationResult {
    std::vector<std::uint64_t> codes;  // packed, ascending
    std::uint64_t count = 0;
    EnumerationStats stats;
    bool complete = false;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Emits every proper orientation-preserving code in lexicographic order.
EnumerationResult enumerate_proper_orientable(const EnumerationOptions& opts = {});

// Reads a code log written by the enumerator.
std::vector<std::uint64_t> read_code_log(const std::string& path);

struct GroupingReport {
    std::uint64_t nodes = 0;
    std::uint64_t proper_found = 0;
    std::uint64_t grouping_violations = 0;
    bool complete = false;
};

// Search over per-side twists without the grouping constraint, within a node
// budget. Only the involution constraint k_{j(i)} = k_i is imposed.
GroupingReport verify_grouping_necessity(std::uint64_t node_budget);

}  // namespace hyp5
