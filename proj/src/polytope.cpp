#include "hyp5/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyp5/linalg.hpp"

namespace hyp5 {

namespace {

constexpr int kPairs[10][2] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                               {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};

Vec6 unit(int i) {
    Vec6 v{};
    v[i] = 1;
    return v;
}

// All vectors obtained from `base` by permuting and sign-changing the first
// five coordinates, deduplicated and sorted.
std::vector<Vec6> signed_permutations(Vec6 base) {
    std::set<Vec6> out;
    std::array<int, 5> perm = {0, 1, 2, 3, 4};
    do {
        for (int s = 0; s < 32; ++s) {
            Vec6 v{};
            v[5] = base[5];
            for (int i = 0; i < 5; ++i) v[perm[i]] = (s >> i & 1) ? -base[i] : base[i];
            out.insert(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {out.begin(), out.end()};
}

std::vector<Vec6> permutations_only(Vec6 base) {
    std::set<Vec6> out;
    std::array<int, 5> perm = {0, 1, 2, 3, 4};
    do {
        Vec6 v{};
        v[5] = base[5];
        for (int i = 0; i < 5; ++i) v[perm[i]] = base[i];
        out.insert(v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {out.begin(), out.end()};
}

}  // namespace

Polytope build_q5() {
    Polytope q;
    q.name = "Q5";
    int idx = 1;
    for (const auto& pr : kPairs)
        for (int s = 0; s < 4; ++s) {
            Vec6 n{};
            n[pr[0]] = (s & 1) ? -1 : 1;
            n[pr[1]] = (s & 2) ? -1 : 1;
            n[5] = 1;
            q.sides.push_back({idx++, n, SideKind::Large});
        }
    for (int s = 0; s < 32; ++s) {
        Vec6 n{};
        for (int i = 0; i < 5; ++i) n[i] = (s >> i & 1) ? -1 : 1;
        n[5] = 2;
        q.sides.push_back({idx++, n, SideKind::Small});
    }
    q.actual_vertices = signed_permutations({2, 1, 1, 1, 1, 3});
    for (int i = 0; i < 5; ++i)
        for (int sgn : {1, -1}) {
            Vec6 v{};
            v[i] = sgn;
            v[5] = 1;
            q.ideal_vertices.push_back(v);
        }
    for (const auto& v : signed_permutations({0, 1, 1, 1, 1, 2})) q.ideal_vertices.push_back(v);
    return q;
}

Polytope build_p5() {
    Polytope p;
    p.name = "P5";
    int idx = 1;
    for (int a = 0; a < 5; ++a) {
        Vec6 n{};
        n[a] = -1;
        p.sides.push_back({idx++, n, SideKind::Coordinate});
    }
    // Listed from {4,5} down to {1,2}.
    for (int g = 9; g >= 0; --g) {
        Vec6 n = unit(kPairs[g][0]);
        n[kPairs[g][1]] = 1;
        n[5] = 1;
        p.sides.push_back({idx++, n, SideKind::ThreePerp});
    }
    p.sides.push_back({idx++, {1, 1, 1, 1, 1, 2}, SideKind::Far});

    p.actual_vertices.push_back(unit(5));
    for (const auto& v : permutations_only({0, 0, 1, 1, 1, 2})) p.actual_vertices.push_back(v);
    for (const auto& v : permutations_only({2, 1, 1, 1, 1, 3})) p.actual_vertices.push_back(v);
    for (int i = 0; i < 5; ++i) {
        Vec6 v = unit(i);
        v[5] = 1;
        p.ideal_vertices.push_back(v);
    }
    for (int i = 0; i < 5; ++i) {
        Vec6 v{1, 1, 1, 1, 1, 2};
        v[i] = 0;
        p.ideal_vertices.push_back(v);
    }
    return p;
}

const char* to_string(FaceType t) {
    switch (t) {
        case FaceType::ActualVertex: return "actual-vertex";
        case FaceType::LargeIdealVertex: return "large-ideal-vertex";
        case FaceType::SmallIdealVertex: return "small-ideal-vertex";
        case FaceType::RayEdge: return "ray-edge";
        case FaceType::LineEdge: return "line-edge";
        case FaceType::Triangle: return "triangle";
        case FaceType::Rhombus: return "rhombus";
        case FaceType::IdealSquare: return "ideal-square";
        case FaceType::OtherPolygon: return "polygon";
        case FaceType::SmallRidge: return "small-ridge";
        case FaceType::LargeRidge: return "large-ridge";
        case FaceType::SmallSide: return "small-side";
        case FaceType::LargeSide: return "large-side";
        case FaceType::Cell: return "cell";
    }
    return "?";
}

int FaceLattice::vertex_id(const Vec6& v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw std::out_of_range("unknown vertex " + hyp5::to_string(v));
    return static_cast<int>(it - vertices.begin());
}

int FaceLattice::find(const std::vector<int>& sorted_vertices) const {
    auto it = index_of.find(sorted_vertices);
    return it == index_of.end() ? -1 : it->second;
}

std::array<long, 5> FaceLattice::f_vector() const {
    std::array<long, 5> f{};
    for (int d = 0; d < 5; ++d) f[d] = static_cast<long>(by_dim[d].size());
    return f;
}

long FaceLattice::euler_sum() const {
    auto f = f_vector();
    return f[0] - f[1] + f[2] - f[3] + f[4] - 1;
}

std::map<FaceType, long> FaceLattice::typed_counts() const {
    std::map<FaceType, long> m;
    for (const auto& f : faces)
        if (f.dim < 5) ++m[f.type];
    return m;
}

std::vector<int> FaceLattice::incident_sides(const Vec6& vertex) const {
    return faces[by_dim[0][vertex_id(vertex)]].sides;
}

std::vector<int> FaceLattice::faces_of_side(int side, int dim) const {
    std::vector<int> out;
    for (int f : by_dim[dim])
        if (std::binary_search(faces[f].sides.begin(), faces[f].sides.end(), side)) out.push_back(f);
    return out;
}

int side_with_normal(const Polytope& p, const Vec6& n) {
    for (std::size_t i = 0; i < p.sides.size(); ++i)
        if (p.sides[i].normal == n) return static_cast<int>(i);
    return -1;
}

FaceLattice face_lattice(const Polytope& p) {
    FaceLattice L;
    L.polytope = p;
    for (const auto& v : p.actual_vertices) {
        if (lorentz_inner(v, v) != -1 || v[5] <= 0) throw std::logic_error("bad actual vertex " + to_string(v));
        L.vertices.push_back(v);
        L.ideal.push_back(false);
    }
    for (const auto& v : p.ideal_vertices) {
        if (lorentz_inner(v, v) != 0 || v[5] <= 0) throw std::logic_error("bad ideal vertex " + to_string(v));
        L.vertices.push_back(v);
        L.ideal.push_back(true);
    }
    const int nv = static_cast<int>(L.vertices.size());
    const int ns = static_cast<int>(p.sides.size());

    std::vector<std::vector<int>> side_verts(ns);
    for (int s = 0; s < ns; ++s) {
        if (lorentz_inner(p.sides[s].normal, p.sides[s].normal) != 1) throw std::logic_error("non-unit side normal");
        for (int v = 0; v < nv; ++v) {
            auto ip = lorentz_inner(L.vertices[v], p.sides[s].normal);
            if (ip > 0) throw std::logic_error("vertex outside half-space");
            if (ip == 0) side_verts[s].push_back(v);
        }
    }

    auto rank_of_set = [&](const std::vector<int>& vs) {
        std::vector<Vec6> vecs;
        for (int v : vs) vecs.push_back(L.vertices[v]);
        return rank_of(vecs);
    };
    auto sides_containing = [&](const std::vector<int>& vs) {
        std::vector<int> out;
        for (int s = 0; s < ns; ++s)
            if (std::includes(side_verts[s].begin(), side_verts[s].end(), vs.begin(), vs.end())) out.push_back(s);
        return out;
    };
    auto add_face = [&](int dim, std::vector<int> vs) {
        auto it = L.index_of.find(vs);
        if (it != L.index_of.end()) return it->second;
        Face f;
        f.dim = dim;
        f.sides = sides_containing(vs);
        f.vertices = vs;
        int id = static_cast<int>(L.faces.size());
        L.faces.push_back(std::move(f));
        L.index_of.emplace(std::move(vs), id);
        L.by_dim[dim].push_back(id);
        return id;
    };

    std::vector<int> all(nv);
    for (int v = 0; v < nv; ++v) all[v] = v;
    if (rank_of_set(all) != 6) throw std::logic_error("polytope is not full-dimensional");

    // Vertices get ids equal to their vertex index.
    for (int v = 0; v < nv; ++v) add_face(0, {v});
    L.top = add_face(5, all);
    for (int s = 0; s < ns; ++s) {
        if (rank_of_set(side_verts[s]) != 5) throw std::logic_error("side is not a facet");
        int id = add_face(4, side_verts[s]);
        L.faces[L.top].facets.push_back(id);
    }
    for (int d = 4; d >= 1; --d) {
        for (std::size_t k = 0; k < L.by_dim[d].size(); ++k) {
            const int fid = L.by_dim[d][k];
            std::set<int> facets;
            for (int s = 0; s < ns; ++s) {
                const auto& fs = L.faces[fid].sides;
                if (std::binary_search(fs.begin(), fs.end(), s)) continue;
                std::vector<int> inter;
                const auto& fv = L.faces[fid].vertices;
                std::set_intersection(fv.begin(), fv.end(), side_verts[s].begin(), side_verts[s].end(),
                                      std::back_inserter(inter));
                if (inter.empty() || rank_of_set(inter) != d) continue;
                facets.insert(d - 1 == 0 ? inter[0] : add_face(d - 1, inter));
                if (d - 1 == 0 && inter.size() != 1) throw std::logic_error("degenerate vertex facet");
            }
            L.faces[fid].facets.assign(facets.begin(), facets.end());
        }
    }
    for (int f = 0; f < static_cast<int>(L.faces.size()); ++f)
        for (int g : L.faces[f].facets) L.faces[g].cofacets.push_back(f);

    // Type tags.
    auto in_small = [&](const Face& f) {
        for (int s : f.sides)
            if (p.sides[s].kind == SideKind::Small || p.sides[s].kind == SideKind::Far) return true;
        return false;
    };
    for (auto& f : L.faces) {
        int n_ideal = 0;
        for (int v : f.vertices) n_ideal += L.ideal[v];
        const int n_all = static_cast<int>(f.vertices.size());
        switch (f.dim) {
            case 0:
                f.type = !L.ideal[f.vertices[0]] ? FaceType::ActualVertex
                         : in_small(f)           ? FaceType::SmallIdealVertex
                                                 : FaceType::LargeIdealVertex;
                break;
            case 1: f.type = n_ideal == 2 ? FaceType::LineEdge : FaceType::RayEdge; break;
            case 2:
                f.type = n_all == 3                   ? FaceType::Triangle
                         : n_all == 4 && n_ideal == 4 ? FaceType::IdealSquare
                         : n_all == 4                 ? FaceType::Rhombus
                                                      : FaceType::OtherPolygon;
                break;
            case 3: f.type = in_small(f) ? FaceType::SmallRidge : FaceType::LargeRidge; break;
            case 4: f.type = in_small(f) ? FaceType::SmallSide : FaceType::LargeSide; break;
            default: f.type = FaceType::Cell;
        }
    }
    return L;
}

std::vector<Mat6> q5_symmetry_group() {
    std::vector<Mat6> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(k5_matrix({std::uint8_t(1u << i)}));
    for (int i = 0; i < 4; ++i) {
        Mat6 t = identity6();
        t[i][i] = t[i + 1][i + 1] = 0;
        t[i][i + 1] = t[i + 1][i] = 1;
        gens.push_back(t);
    }
    return generate_group(gens, 3840);
}

}  // namespace hyp5
