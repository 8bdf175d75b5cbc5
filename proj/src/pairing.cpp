#include "hyp5/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hyp5 {

namespace {

constexpr int kPairs[10][2] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                               {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};

struct Vec6Hash {
    std::size_t operator()(const Vec6& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
        return h;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Image of a face under a matrix, or -1 if it is not a face.
int image_face(const FaceLattice& L, const std::unordered_map<Vec6, int, Vec6Hash>& vid, const Mat6& g, int f) {
    std::vector<int> vs;
    for (int v : L.faces[f].vertices) {
        auto it = vid.find(apply_to(g, L.vertices[v]));
        if (it == vid.end()) return -1;
        vs.push_back(it->second);
    }
    std::sort(vs.begin(), vs.end());
    return L.find(vs);
}

const std::unordered_map<Vec6, int, Vec6Hash>& vertex_index(const FaceLattice& L) {
    static std::map<const FaceLattice*, std::unordered_map<Vec6, int, Vec6Hash>> cache;
    auto& m = cache[&L];
    if (m.empty())
        for (int v = 0; v < static_cast<int>(L.vertices.size()); ++v) m.emplace(L.vertices[v], v);
    return m;
}

}  // namespace

std::uint64_t PairingCode::pack() const {
    std::uint64_t v = 0;
    for (auto d : digits) v = v << 5 | d;
    return v;
}

PairingCode PairingCode::unpack(std::uint64_t v) {
    PairingCode c;
    for (int i = 10; i >= 0; --i) {
        c.digits[i] = v & 31;
        v >>= 5;
    }
    return c;
}

PairingCode parse_code(std::string_view text) {
    if (text.size() != 11) throw std::invalid_argument("pairing code must have 11 digits: '" + std::string(text) + "'");
    PairingCode c;
    for (int i = 0; i < 11; ++i) c.digits[i] = k5_decode(text[i]).mask;
    return c;
}

std::string emit_code(const PairingCode& c) {
    std::string s(11, '0');
    for (int i = 0; i < 11; ++i) s[i] = k5_encode({c.digits[i]});
    return s;
}

int group_of_side(int side) { return side < 40 ? side / 4 : 10; }

std::array<int, 2> group_pair(int g) { return {kPairs[g][0], kPairs[g][1]}; }

int group_of_pair(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int g = 0; g < 10; ++g)
        if (kPairs[g][0] == a && kPairs[g][1] == b) return g;
    throw std::invalid_argument("group_of_pair: not a coordinate pair");
}

const FaceLattice& q5_lattice() {
    static const FaceLattice L = face_lattice(build_q5());
    return L;
}

SidePairing expand(const PairingCode& code) {
    const auto& q = q5_lattice().polytope;
    SidePairing p;
    p.code = code;
    for (int i = 0; i < 72; ++i) {
        K5Element k = code.twist(group_of_side(i));
        p.twist[i] = k;
        int j = side_with_normal(q, k5_apply(k, q.sides[i].normal));
        if (j < 0) throw std::logic_error("twist does not permute the side normals");
        p.partner[i] = j;
        p.map[i] = mul(reflection_matrix(q.sides[i].normal), k5_matrix(k));
    }
    return p;
}

bool is_orientation_preserving(const PairingCode& code) {
    const auto p = expand(code);
    return std::all_of(p.map.begin(), p.map.end(), [](const Mat6& g) { return det(g) == 1; });
}

std::vector<int> CycleDecomposition::ideal_vertex_cycle_sizes(const FaceLattice& L) const {
    std::vector<int> out;
    for (const auto& cls : classes[0])
        if (L.ideal[L.faces[cls[0]].vertices[0]]) out.push_back(static_cast<int>(cls.size()));
    std::sort(out.begin(), out.end());
    return out;
}

CycleDecomposition face_cycles(const SidePairing& p, const FaceLattice& L) {
    const auto& vid = vertex_index(L);
    const int nf = static_cast<int>(L.faces.size());
    UnionFind uf(nf);
    for (int i = 0; i < 72; ++i) {
        const Mat6 ginv = lorentz_inverse(p.map[i]);
        for (int d = 0; d <= 4; ++d)
            for (int f : L.faces_of_side(i, d)) {
                int h = image_face(L, vid, ginv, f);
                if (h < 0) throw std::logic_error("pairing map does not send a face to a face");
                uf.unite(f, h);
            }
    }
    CycleDecomposition c;
    c.class_of.assign(nf, -1);
    std::array<std::map<int, int>, 5> slot;
    for (int d = 0; d <= 4; ++d)
        for (int f : L.by_dim[d]) {
            int r = uf.find(f);
            auto [it, fresh] = slot[d].emplace(r, static_cast<int>(c.classes[d].size()));
            if (fresh) c.classes[d].emplace_back();
            c.classes[d][it->second].push_back(f);
            c.class_of[f] = it->second;
        }
    return c;
}

std::vector<RidgeCycle> ridge_cycles(const SidePairing& p, const FaceLattice& L) {
    const auto& vid = vertex_index(L);
    std::vector<RidgeCycle> out;
    std::vector<bool> done(L.faces.size(), false);
    for (int r0 : L.by_dim[3]) {
        if (done[r0]) continue;
        RidgeCycle rc;
        rc.transformation = identity6();
        int r = r0;
        int s = L.faces[r0].sides[0];
        const int s0 = s;
        for (int guard = 0; guard < 64; ++guard) {
            done[r] = true;
            const Mat6 ginv = lorentz_inverse(p.map[s]);
            rc.sides.push_back(s);
            rc.transformation = mul(ginv, rc.transformation);
            r = image_face(L, vid, ginv, r);
            if (r < 0) throw std::logic_error("ridge cycle left the lattice");
            const auto& rs = L.faces[r].sides;
            const int arrived = p.partner[s];
            s = rs[0] == arrived ? rs[1] : rs[0];
            if (r == r0 && s == s0) break;
        }
        out.push_back(std::move(rc));
    }
    return out;
}

PropernessReport properness(const SidePairing& p, const FaceLattice& L, const CycleDecomposition& c) {
    PropernessReport rep;
    rep.sizes_ok = true;
    std::map<FaceType, int> tally;
    for (int d = 0; d <= 4; ++d)
        for (const auto& cls : c.classes[d]) {
            const FaceType t = L.faces[cls[0]].type;
            if (t == FaceType::LargeIdealVertex || t == FaceType::SmallIdealVertex) continue;
            ++tally[t];
            if (cls.size() != (1u << (5 - d))) rep.sizes_ok = false;
            for (int f : cls)
                if (L.faces[f].type != t) rep.sizes_ok = false;
        }
    const std::map<FaceType, int> want = {
        {FaceType::ActualVertex, 5}, {FaceType::RayEdge, 50},     {FaceType::LineEdge, 20},
        {FaceType::Triangle, 120},   {FaceType::Rhombus, 40},     {FaceType::IdealSquare, 10},
        {FaceType::SmallRidge, 80},  {FaceType::LargeRidge, 60},  {FaceType::SmallSide, 16},
        {FaceType::LargeSide, 20}};
    rep.tallies_ok = tally == want;
    rep.ridge_identity = true;
    for (const auto& rc : ridge_cycles(p, L))
        if (rc.transformation != identity6()) rep.ridge_identity = false;
    return rep;
}

bool is_proper(const SidePairing& p, const FaceLattice& L) {
    return properness(p, L, face_cycles(p, L)).proper();
}

int euler_characteristic(const SidePairing& p, const FaceLattice& L) {
    const auto c = face_cycles(p, L);
    if (!properness(p, L, c).proper()) throw std::domain_error("euler_characteristic: improper pairing");
    int chi = -1;  // the single 5-cell
    for (int d = 0; d <= 4; ++d) {
        int n = 0;
        for (const auto& cls : c.classes[d])
            if (d > 0 || !L.ideal[L.faces[cls[0]].vertices[0]]) ++n;
        chi += (d % 2 == 0) ? n : -n;
    }
    return chi;
}

std::vector<int> vertex_cycle_structure(const SidePairing& p, const FaceLattice& L) {
    auto sizes = face_cycles(p, L).ideal_vertex_cycle_sizes(L);
    const std::vector<int> ten = {2, 2, 2, 2, 2, 16, 16, 16, 16, 16};
    const std::vector<int> twelve = {1, 1, 2, 2, 2, 2, 8, 8, 16, 16, 16, 16};
    if (sizes != ten && sizes != twelve) throw std::logic_error("unexpected ideal vertex cycle structure");
    return sizes;
}

}  // namespace hyp5
