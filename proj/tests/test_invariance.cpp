#include <algorithm>
#include <random>

#include "doctest.h"
#include "hyp5/classification.hpp"
#include "hyp5/cusps.hpp"
#include "hyp5/enumeration.hpp"
#include "hyp5/homology.hpp"

using namespace hyp5;

namespace {

// Invariants read off the given code itself, with no canonicalization.
struct Signature {
    std::array<AbelianGroup, 6> homology;
    int cusps = 0;
    int symmetries = 0;
    std::string link_types;

    bool operator==(const Signature&) const = default;
};

Signature signature(const PairingCode& c) {
    Signature s;
    s.homology = homology(c).groups;
    s.cusps = cusp_count(c);
    s.symmetries = symmetry_order(c);
    s.link_types = link_type_string(c);
    return s;
}

std::vector<PairingCode> sample_codes(std::size_t n, std::uint32_t seed) {
    EnumerationOptions o;
    o.prefix = "2B";
    const auto all = enumerate_proper_orientable(o).codes;
    std::mt19937 rng(seed);
    std::vector<PairingCode> out;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t i = 0; i < n; ++i) out.push_back(PairingCode::unpack(all[pick(rng)]));
    return out;
}

}  // namespace

TEST_CASE("invariants are unchanged by symmetries of Q5 and by inside-out moves") {
    const auto& sa = SymmetryAction::get();
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> sym(0, sa.elements.size() - 1);
    std::uniform_int_distribution<int> vertex(2, 16);
    for (const auto& c : sample_codes(12, 7)) {
        CAPTURE(emit_code(c));
        const auto base = signature(c);
        CHECK(base.homology[0] == AbelianGroup{1, {}});
        CHECK(base.homology[4].rank == base.cusps - 1);

        const auto s = act_symmetry(sa.elements[sym(rng)], c);
        CHECK(signature(s) == base);

        const int v = vertex(rng);
        const auto io = inside_out(c, v);
        CHECK(io == inside_out_fast(c, v));
        CHECK(signature(io) == base);
        CHECK(canonicalize(io).canonical == canonicalize(c).canonical);
    }
}
