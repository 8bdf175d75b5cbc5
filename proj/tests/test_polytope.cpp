#include <algorithm>

#include "doctest.h"
#include "hyp5/polytope.hpp"

using namespace hyp5;

namespace {
const FaceLattice& q5() {
    static const FaceLattice L = face_lattice(build_q5());
    return L;
}
const FaceLattice& p5() {
    static const FaceLattice L = face_lattice(build_p5());
    return L;
}
}  // namespace

TEST_CASE("Q5 data") {
    auto q = build_q5();
    CHECK(q.sides.size() == 72);
    CHECK(q.actual_vertices.size() == 160);
    CHECK(q.ideal_vertices.size() == 90);
    CHECK(lorentz_inner({2, 1, 1, 1, 1, 3}, {2, 1, 1, 1, 1, 3}) == -1);
    CHECK(q.sides[0].normal == Vec6{1, 1, 0, 0, 0, 1});
    CHECK(q.sides[1].normal == Vec6{-1, 1, 0, 0, 0, 1});
    CHECK(q.sides[36].normal == Vec6{0, 0, 0, 1, 1, 1});
    CHECK(q.sides[40].normal == Vec6{1, 1, 1, 1, 1, 2});
    CHECK(q.sides[43].normal == Vec6{-1, -1, 1, 1, 1, 2});
    // e6 is interior.
    for (const auto& s : q.sides) CHECK(lorentz_inner({0, 0, 0, 0, 0, 1}, s.normal) < 0);
}

TEST_CASE("Q5 face lattice") {
    const auto& L = q5();
    CHECK(L.f_vector() == std::array<long, 5>{250, 1120, 1360, 560, 72});
    CHECK(L.euler_sum() == 1);
    auto t = L.typed_counts();
    CHECK(t[FaceType::ActualVertex] == 160);
    CHECK(t[FaceType::LargeIdealVertex] == 10);
    CHECK(t[FaceType::SmallIdealVertex] == 80);
    CHECK(t[FaceType::RayEdge] == 800);
    CHECK(t[FaceType::LineEdge] == 320);
    CHECK(t[FaceType::Triangle] == 960);
    CHECK(t[FaceType::Rhombus] == 320);
    CHECK(t[FaceType::IdealSquare] == 80);
    CHECK(t[FaceType::SmallRidge] == 320);
    CHECK(t[FaceType::LargeRidge] == 240);
    CHECK(t[FaceType::SmallSide] == 32);
    CHECK(t[FaceType::LargeSide] == 40);
    CHECK(t.count(FaceType::OtherPolygon) == 0);
}

TEST_CASE("Q5 incidences") {
    const auto& L = q5();
    const auto& P = L.polytope;
    auto count_kind = [&](const std::vector<int>& sides, SideKind k) {
        return std::count_if(sides.begin(), sides.end(), [&](int s) { return P.sides[s].kind == k; });
    };
    auto e1 = L.incident_sides({1, 0, 0, 0, 0, 1});
    CHECK(count_kind(e1, SideKind::Large) == 8);
    CHECK(count_kind(e1, SideKind::Small) == 0);
    auto u = L.incident_sides({0, 1, 1, 1, 1, 2});
    CHECK(count_kind(u, SideKind::Large) == 6);
    CHECK(count_kind(u, SideKind::Small) == 2);
    for (int v : L.by_dim[0])
        if (!L.ideal[v]) CHECK(L.faces[v].sides.size() == 5);
    CHECK_THROWS(L.incident_sides({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("Q5 right angles and small sides") {
    const auto& L = q5();
    const auto& P = L.polytope;
    for (int r : L.by_dim[3]) {
        const auto& s = L.faces[r].sides;
        REQUIRE(s.size() == 2);
        CHECK(lorentz_inner(P.sides[s[0]].normal, P.sides[s[1]].normal) == 0);
        int small = 0;
        for (int x : s) small += P.sides[x].kind == SideKind::Small;
        CHECK(small <= 1);
        if (L.faces[r].type == FaceType::SmallRidge) CHECK(small == 1);
    }
    for (const auto& f : L.faces) {
        int small = 0;
        for (int x : f.sides) small += P.sides[x].kind == SideKind::Small;
        CHECK(small <= (f.type == FaceType::SmallIdealVertex ? 2 : 1));
    }
    for (int f : L.by_dim[2])
        if (L.faces[f].type == FaceType::IdealSquare) {
            int large_ridges = 0;
            for (int c : L.faces[f].cofacets) large_ridges += L.faces[c].type == FaceType::LargeRidge;
            CHECK(large_ridges == 3);
        }
}

TEST_CASE("P5 structure") {
    const auto& L = p5();
    const auto& P = L.polytope;
    CHECK(P.sides.size() == 16);
    CHECK(P.actual_vertices.size() == 16);
    CHECK(P.ideal_vertices.size() == 10);
    CHECK(P.sides[15].normal == Vec6{1, 1, 1, 1, 1, 2});
    CHECK(P.actual_vertices[0] == Vec6{0, 0, 0, 0, 0, 1});
    CHECK(P.actual_vertices[1] == Vec6{0, 0, 1, 1, 1, 2});
    CHECK(P.actual_vertices[15] == Vec6{2, 1, 1, 1, 1, 3});
    CHECK(L.incident_sides({0, 0, 0, 0, 0, 1}).size() == 5);
    for (int v = 0; v < 16; ++v) CHECK(L.faces[v].sides.size() == 5);
    CHECK(L.euler_sum() == 1);
}

TEST_CASE("Q5 symmetry group") {
    auto g = q5_symmetry_group();
    CHECK(g.size() == 3840);
    auto q = build_q5();
    for (const auto& a : g) {
        std::vector<int> seen(72, 0);
        for (const auto& s : q.sides) {
            int j = side_with_normal(q, apply_to(a, s.normal));
            REQUIRE(j >= 0);
            ++seen[j];
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}
