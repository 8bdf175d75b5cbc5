#include "doctest.h"
#include "hyp5/classification.hpp"
#include "hyp5/reference_data.hpp"
#include "hyp5/special.hpp"

using namespace hyp5;

namespace {

void require_pass(const Report& r) {
    for (const auto& l : r.lines) {
        CAPTURE(l.name);
        CAPTURE(l.detail);
        CHECK(l.pass);
    }
}

}  // namespace

TEST_CASE("P5 subdivision reproduces the manifold") {
    for (const char* code : {"2B7JB47JG81", "24B8DPGPDB1"}) {
        CAPTURE(code);
        const auto c = parse_code(code);
        const auto pc = p5_subdivision(c);
        CHECK(pc.gluings.size() == 32 * 16 / 2);
        const auto gc = pc.glue();
        CHECK(gc.chain.boundary_squares_to_zero());
        const auto h = homology(gc.chain);
        const auto ref = homology(c);
        for (int k = 0; k <= 5; ++k) CHECK(h[k] == ref[k]);
        CHECK(gc.cusps == cusp_count(c));
    }
}

TEST_CASE("coset representatives") {
    const auto c = parse_code("2B7JB47JG81");
    const auto p = expand(c);
    for (int s = 0; s < 72; s += 7) CHECK(coset_representative(c, p.map[s]) == identity6());
    const Mat6 k = k5_matrix({5});
    CHECK(coset_representative(c, k) == k);
    CHECK(coset_representative(c, mul(p.map[3], k)) == k);
}

TEST_CASE("isometry group of manifold 27") {
    const auto c = parse_code("2B7JB47JG81");
    const auto g = isometry_group(c, {quotient_alpha(), quotient_beta()});
    CHECK(g.size() == 16);
    for (const auto& x : g) {
        if (x == identity6()) continue;
        for (const auto& im : piece_images(c, x)) CHECK(im.map != identity6());
    }
    const auto q = quotient_by_group(c, g);
    CHECK(q.free);
    CHECK(q.chain.boundary_squares_to_zero());
    CHECK(q.chain.euler_characteristic() == 0);
    CHECK(q.chain.cells[5] == 2);
}

TEST_CASE("N side pairs") {
    CHECK(n_side_normal(18) == Vec6{0, 1, 0, 0, 0, 0});
    CHECK(n_side_normal(32) == Vec6{1, -1, 1, 1, 1, 2});
    const auto sp = n_side_pair_of(identity6());
    CHECK(sp.from == 2);
    CHECK(sp.to == 18);
    const auto n = n_complex();
    CHECK(n.gluings.size() == 16);
    CHECK(n.glue().cusps == 2);
}

TEST_CASE("zeta(3)") { CHECK(zeta3() == doctest::Approx(1.2020569031595942).epsilon(1e-12)); }

TEST_CASE("special verifications") {
    for (const auto& r : verify_special()) {
        CAPTURE(r.title);
        require_pass(r);
    }
}
