#include "doctest.h"
#include "hyp5/cusps.hpp"
#include "hyp5/flat.hpp"

using namespace hyp5;

namespace {

Affine4 translation(int i, std::int64_t len) {
    Affine4 t{identity4(), {0, 0, 0, 0}};
    t.shift[i] = len;
    return t;
}

Mat4 diag(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    Mat4 m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    m[3][3] = d;
    return m;
}

// Holonomy {1, A, B, AB} with A = diag(-1,-1,1,1), B = diag(1,-1,-1,1) over 4Z^4.
FlatGroup diagonal_pair(const Vec4& a, const Vec4& b) {
    std::vector<Affine4> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(translation(i, 4));
    gens.push_back({diag(-1, -1, 1, 1), a});
    gens.push_back({diag(1, -1, -1, 1), b});
    return generate_flat_group(gens);
}

}  // namespace

TEST_CASE("affine composition") {
    const Affine4 f{diag(-1, 1, 1, 1), {1, 0, 0, 0}};
    const Affine4 g = compose(f, f);
    CHECK(g.linear == identity4());
    CHECK(g.shift == Vec4{0, 0, 0, 0});
}

TEST_CASE("torus") {
    std::vector<Affine4> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(translation(i, 1));
    const auto g = generate_flat_group(gens);
    CHECK(g.holonomy.size() == 1);
    CHECK(g.torsion_free());
    CHECK(g.orientable());
    CHECK(g.abelianization() == AbelianGroup{4, {}});
    CHECK(g.index_two_characters().size() == 15);
    for (auto chi : g.index_two_characters()) CHECK(g.index_two_kernel(chi).abelianization() == AbelianGroup{4, {}});
    const auto inv = link_invariants(g);
    CHECK(inv.torus.to_string() == "O3_1 x S1");
    CHECK(link_letter(inv) == 'A');
}

TEST_CASE("half-turn bundle") {
    std::vector<Affine4> gens{translation(1, 1), translation(2, 1), translation(3, 1)};
    gens.push_back({diag(1, -1, -1, 1), {1, 0, 0, 0}});
    const auto g = generate_flat_group(gens);
    CHECK(g.torsion_free());
    CHECK(g.orientable());
    CHECK(g.shape().name() == "Z2");
    CHECK(g.abelianization().to_string() == "Z^2+Z/2^2");
    const auto inv = link_invariants(g);
    CHECK(inv.torus.to_string() == "O3_2 x S1");
    CHECK(link_letter(inv) == 'B');
}

TEST_CASE("Klein bottle times torus") {
    std::vector<Affine4> gens{translation(1, 1), translation(2, 1), translation(3, 1)};
    gens.push_back({diag(1, -1, 1, 1), {1, 0, 0, 0}});
    const auto g = generate_flat_group(gens);
    CHECK(g.torsion_free());
    CHECK_FALSE(g.orientable());
    CHECK(g.abelianization().to_string() == "Z^3+Z/2");
}

TEST_CASE("torsion and degenerate generators") {
    std::vector<Affine4> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(translation(i, 1));
    gens.push_back({diag(-1, -1, 1, 1), {0, 0, 0, 0}});
    CHECK_FALSE(generate_flat_group(gens).torsion_free());
    CHECK_THROWS_AS(generate_flat_group({translation(0, 1), translation(1, 1), translation(2, 1)}), std::domain_error);
    Mat4 shear = identity4();
    shear[0][1] = 1;
    gens.push_back({shear, {0, 0, 0, 0}});
    CHECK_THROWS_AS(generate_flat_group(gens), std::domain_error);
}

TEST_CASE("F and G are separated by index-two subgroups") {
    const auto f = link_invariants(diagonal_pair({0, 1, 0, 1}, {1, 0, 0, 0}));
    const auto g = link_invariants(diagonal_pair({0, 1, 2, 1}, {1, 0, 0, 0}));
    for (const auto* inv : {&f, &g}) {
        CHECK(inv->h1.to_string() == "Z+Z/2+Z/4");
        CHECK(inv->holonomy.name() == "Z2^2");
        CHECK(inv->torus.to_string() == "O3_2 x| S1");
        CHECK(link_candidates(*inv) == "FG");
        CHECK(inv->index_two_h1.size() == 7);
    }
    CHECK(f.index_two_h1 != g.index_two_h1);
    CHECK(link_letter(f) == 'F');
    CHECK(link_letter(g) == 'G');
}
