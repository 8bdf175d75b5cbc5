#include "doctest.h"
#include "hyp5/pairing.hpp"

using namespace hyp5;

TEST_CASE("code parsing") {
    auto c = parse_code("24B8DPGPDB1");
    CHECK(c.digits == std::array<std::uint8_t, 11>{2, 4, 11, 8, 13, 25, 16, 25, 13, 11, 1});
    CHECK(emit_code(c) == "24B8DPGPDB1");
    CHECK(emit_code(parse_code("00000000000")) == "00000000000");
    CHECK_THROWS_AS(parse_code("2549A81IKGW"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("2549A81IKG"), std::invalid_argument);
    CHECK(PairingCode::unpack(c.pack()) == c);
    CHECK(parse_code("10000000000").pack() > parse_code("0VVVVVVVVVV").pack());
}

TEST_CASE("expansion invariants") {
    for (const char* s : {"24B8DPGPDB1", "2549A81IKGV", "00000000000", "2B7JB47JG81"}) {
        auto p = expand(parse_code(s));
        for (int i = 0; i < 72; ++i) {
            const int j = p.partner[i];
            CHECK(p.partner[j] == i);
            CHECK(p.twist[j] == p.twist[i]);
            CHECK(mul(p.map[j], p.map[i]) == identity6());
            CHECK(is_lorentzian(p.map[i]));
            CHECK(is_positive(p.map[i]));
            CHECK(is_congruence_two(p.map[i]));
            CHECK(p.twist[i] == p.twist[(i / 4) * 4]);
        }
    }
    auto id = expand(parse_code("00000000000"));
    for (int i = 0; i < 72; ++i) CHECK(id.partner[i] == i);
}

TEST_CASE("orientation") {
    CHECK(is_orientation_preserving(parse_code("24B8DPGPDB1")));
    CHECK_FALSE(is_orientation_preserving(parse_code("2549A81IKGV")));
    CHECK_FALSE(is_orientation_preserving(parse_code("00000000000")));
    for (const char* s : {"24B8DPGPDB1", "2549A81IKGV", "17BQM4BQLPV", "1B40000000V"}) {
        auto c = parse_code(s);
        bool odd = true;
        for (auto d : c.digits) odd = odd && (__builtin_popcount(d) & 1);
        CHECK(is_orientation_preserving(c) == odd);
    }
}

TEST_CASE("face cycles and properness") {
    const auto& L = q5_lattice();
    auto p = expand(parse_code("24B8DPGPDB1"));
    auto c = face_cycles(p, L);
    for (int d = 0; d <= 4; ++d) {
        std::size_t total = 0;
        for (const auto& cls : c.classes[d]) total += cls.size();
        CHECK(total == L.by_dim[d].size());
    }
    auto rep = properness(p, L, c);
    CHECK(rep.sizes_ok);
    CHECK(rep.tallies_ok);
    CHECK(rep.ridge_identity);
    CHECK(euler_characteristic(p, L) == 0);
    CHECK(vertex_cycle_structure(p, L) == std::vector<int>{1, 1, 2, 2, 2, 2, 8, 8, 16, 16, 16, 16});

    auto n = expand(parse_code("2549A81IKGV"));
    CHECK(is_proper(n, L));
    CHECK(euler_characteristic(n, L) == 0);

    auto z = expand(parse_code("00000000000"));
    CHECK_FALSE(is_proper(z, L));
    CHECK_THROWS_AS(euler_characteristic(z, L), std::domain_error);

    auto m27 = expand(parse_code("2B7JB47JG81"));
    CHECK(vertex_cycle_structure(m27, L) == std::vector<int>{2, 2, 2, 2, 2, 16, 16, 16, 16, 16});
}
