#include "hyp5/classification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyp5/enumeration.hpp"
#include "hyp5/f2.hpp"
#include "hyp5/reference_data.hpp"

namespace hyp5 {

namespace {

std::uint8_t permute_mask(std::uint8_t m, const std::array<int, 5>& perm) {
    std::uint8_t out = 0;
    for (int a = 0; a < 5; ++a)
        if (m >> a & 1) out |= std::uint8_t(1u << perm[a]);
    return out;
}

int p5_side_group(int i) { return i < 5 ? -1 : i < 15 ? 14 - i : 10; }

const std::vector<std::array<int, 5>>& all_permutations() {
    static const std::vector<std::array<int, 5>> perms = [] {
        std::vector<std::array<int, 5>> v;
        std::array<int, 5> p = {0, 1, 2, 3, 4};
        do v.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return perms;
}

std::size_t index_of(const std::vector<std::uint64_t>& sorted, std::uint64_t v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) throw std::logic_error("orbit leaves the code list: " + emit_code(PairingCode::unpack(v)));
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

const SymmetryAction& SymmetryAction::get() {
    static const SymmetryAction s = [] {
        SymmetryAction a;
        a.elements = q5_symmetry_group();
        std::sort(a.elements.begin(), a.elements.end());
        const auto& q = q5_lattice().polytope;
        for (const auto& m : a.elements) {
            std::array<int, 72> sp{};
            for (int i = 0; i < 72; ++i) sp[i] = side_with_normal(q, apply_to(m, q.sides[i].normal));
            a.side_perm.push_back(sp);
            std::array<int, 5> cp{};
            for (int c = 0; c < 5; ++c)
                for (int r = 0; r < 5; ++r)
                    if (m[r][c] != 0) cp[c] = r;
            a.coord_perm.push_back(cp);
        }
        return a;
    }();
    return s;
}

std::array<std::uint32_t, 16> phi_on_p5_sides(const PairingCode& code) {
    std::array<std::uint32_t, 16> phi{};
    for (int i = 0; i < 16; ++i) phi[i] = i < 5 ? (1u << i) : code.digits[p5_side_group(i)];
    return phi;
}

PairingCode act_symmetry(const Mat6& sym, const PairingCode& code) {
    const auto& q = q5_lattice().polytope;
    const auto p = expand(code);
    const Mat6 inv = lorentz_inverse(sym);
    PairingCode out;
    std::array<int, 11> seen{};
    seen.fill(-1);
    for (int i = 0; i < 72; ++i) {
        const int j = side_with_normal(q, apply_to(sym, q.sides[i].normal));
        if (j < 0) throw std::logic_error("act_symmetry: not a symmetry of Q5");
        const Mat6 h = mul(mul(sym, p.map[i]), inv);
        const auto k = k5_from_matrix(mul(reflection_matrix(q.sides[j].normal), h));
        if (!k) throw std::logic_error("act_symmetry: conjugate is not of the form r k");
        const int g = group_of_side(j);
        if (seen[g] >= 0 && seen[g] != k->mask) throw std::logic_error("act_symmetry: grouping broken");
        seen[g] = k->mask;
        out.digits[g] = k->mask;
    }
    return out;
}

PairingCode act_permutation(const std::array<int, 5>& perm, const PairingCode& code) {
    PairingCode out;
    for (int g = 0; g < 10; ++g) {
        const auto pr = group_pair(g);
        out.digits[group_of_pair(perm[pr[0]], perm[pr[1]])] = permute_mask(code.digits[g], perm);
    }
    out.digits[10] = permute_mask(code.digits[10], perm);
    return out;
}

const CornerAction& CornerAction::get() {
    static const CornerAction c = [] {
        CornerAction a;
        std::vector<Mat6> gens(sigma5_generators().begin(), sigma5_generators().end());
        a.elements = generate_group(gens, 1920);
        const auto p5 = build_p5();
        for (const auto& m : a.elements) {
            const Mat6 inv = lorentz_inverse(m);
            std::array<int, 16> sp{};
            for (int i = 0; i < 16; ++i) {
                sp[i] = side_with_normal(p5, apply_to(inv, p5.sides[i].normal));
                if (sp[i] < 0) throw std::logic_error("Sigma5 element does not preserve P5");
            }
            a.inv_side_perm.push_back(sp);
        }
        const Vec6 origin{0, 0, 0, 0, 0, 1};
        for (int v = 0; v < 16; ++v) {
            a.to_origin[v] = -1;
            for (int e = 0; e < static_cast<int>(a.elements.size()); ++e)
                if (apply_to(a.elements[e], p5.actual_vertices[v]) == origin) {
                    a.to_origin[v] = e;
                    break;
                }
            if (a.to_origin[v] < 0) throw std::logic_error("no symmetry moves a corner to the origin");
        }
        return a;
    }();
    return c;
}

PairingCode act_corner(int element, const PairingCode& code) {
    const auto& ca = CornerAction::get();
    const auto phi = phi_on_p5_sides(code);
    const auto& sp = ca.inv_side_perm[element];
    std::vector<std::uint32_t> cols(5);
    for (int a = 0; a < 5; ++a) cols[a] = phi[sp[a]];
    const auto minv = f2::inverse(cols, 5);
    if (minv.empty()) throw std::logic_error("act_corner: corner is not free");
    PairingCode out;
    for (int i = 5; i < 16; ++i) out.digits[p5_side_group(i)] = static_cast<std::uint8_t>(f2::apply_cols(minv, phi[sp[i]]));
    return out;
}

P5Descent descend_to_p5(const PairingCode& code, const Mat6& x0) {
    static const Polytope p5 = build_p5();
    static const std::array<Mat6, 16> refl = [] {
        std::array<Mat6, 16> r{};
        for (int i = 0; i < 16; ++i) r[i] = reflection_matrix(p5.sides[i].normal);
        return r;
    }();
    const auto phi = phi_on_p5_sides(code);
    P5Descent d{x0, 0};
    Vec6 y = apply_to(x0, {1, 1, 1, 1, 1, 6});
    for (int guard = 0; guard < 100000; ++guard) {
        int s = -1;
        for (int i = 0; i < 16 && s < 0; ++i)
            if (lorentz_inner(p5.sides[i].normal, y) > 0) s = i;
        if (s < 0) return d;
        d.residual = mul(refl[s], d.residual);
        y = apply_to(refl[s], y);
        d.phi ^= phi[s];
    }
    throw std::logic_error("descend_to_p5: no convergence");
}

std::uint32_t phi_by_descent(const PairingCode& code, const Mat6& x) {
    const auto d = descend_to_p5(code, x);
    if (d.residual != identity6()) throw std::invalid_argument("phi_by_descent: matrix is not in the P5 reflection group");
    return d.phi;
}

PairingCode inside_out(const PairingCode& code, int vertex) {
    if (vertex < 1 || vertex > 16) throw std::out_of_range("inside_out: vertex must be 1..16");
    const auto& ca = CornerAction::get();
    const Mat6& a = ca.elements[ca.to_origin[vertex - 1]];
    const Mat6 ainv = lorentz_inverse(a);
    auto phi_new = [&](const Mat6& x) { return phi_by_descent(code, mul(mul(ainv, x), a)); };
    std::vector<std::uint32_t> cols(5);
    for (int i = 0; i < 5; ++i) cols[i] = phi_new(k5_matrix({std::uint8_t(1u << i)}));
    const auto minv = f2::inverse(cols, 5);
    if (minv.empty()) throw std::logic_error("inside_out: development does not close up");
    const auto& q = q5_lattice().polytope;
    PairingCode out;
    std::array<int, 11> seen{};
    seen.fill(-1);
    for (int s = 0; s < 72; ++s) {
        const std::uint32_t k = f2::apply_cols(minv, phi_new(reflection_matrix(q.sides[s].normal)));
        const int g = group_of_side(s);
        if (seen[g] >= 0 && seen[g] != static_cast<int>(k)) throw std::logic_error("inside_out: grouping broken");
        seen[g] = static_cast<int>(k);
        out.digits[g] = static_cast<std::uint8_t>(k);
    }
    return out;
}

PairingCode inside_out_fast(const PairingCode& code, int vertex) {
    if (vertex < 1 || vertex > 16) throw std::out_of_range("inside_out: vertex must be 1..16");
    return act_corner(CornerAction::get().to_origin[vertex - 1], code);
}

ManifoldClass canonicalize(const PairingCode& code, bool keep_members) {
    const auto& ca = CornerAction::get();
    std::set<PairingCode> orbit;
    for (int e = 0; e < static_cast<int>(ca.elements.size()); ++e) orbit.insert(act_corner(e, code));
    ManifoldClass mc;
    mc.canonical = *orbit.begin();
    mc.orbit_size = static_cast<int>(orbit.size());
    mc.symmetry_order = 32 * 1920 / mc.orbit_size;
    if (keep_members) mc.members.assign(orbit.begin(), orbit.end());
    return mc;
}

int symmetry_order(const PairingCode& code) { return canonicalize(code).symmetry_order; }

OrbitCount count_symmetry_classes(const std::vector<std::uint64_t>& sorted) {
    const auto& perms = all_permutations();
    std::vector<bool> seen(sorted.size(), false);
    OrbitCount oc;
    std::vector<std::size_t> orbit;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (seen[i]) continue;
        ++oc.orbits;
        const auto c = PairingCode::unpack(sorted[i]);
        orbit.clear();
        for (const auto& p : perms) {
            const std::size_t j = index_of(sorted, act_permutation(p, c).pack());
            if (!seen[j]) {
                seen[j] = true;
                orbit.push_back(j);
            }
        }
        oc.total += orbit.size();
    }
    return oc;
}

int cusp_count_fast(const PairingCode& code) {
    const auto& L = q5_lattice();
    const auto& data = face_orbit_data(L);
    int sixteenths = 0;
    for (int v : L.by_dim[0]) {
        if (!L.ideal[L.faces[v].vertices[0]]) continue;
        f2::Basis b;
        for (auto x : data[v].stabilizer) b.insert(x);
        const int s0 = b.rank;
        for (int p = 0; p < 11; ++p)
            if (data[v].groups >> p & 1) b.insert(code.digits[p]);
        sixteenths += 16 >> (b.rank - s0);
    }
    return sixteenths / 16;
}

std::vector<ClassRecord> isometry_classes(const std::vector<std::uint64_t>& sorted,
                                          const std::function<void(std::size_t, std::size_t)>& progress) {
    const auto& ca = CornerAction::get();
    std::vector<bool> seen(sorted.size(), false);
    std::vector<ClassRecord> out;
    std::vector<std::size_t> orbit;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (seen[i]) continue;
        const auto c = PairingCode::unpack(sorted[i]);
        orbit.clear();
        for (int e = 0; e < static_cast<int>(ca.elements.size()); ++e) {
            const std::size_t j = index_of(sorted, act_corner(e, c).pack());
            if (!seen[j]) {
                seen[j] = true;
                orbit.push_back(j);
            }
        }
        ClassRecord r;
        // The first unseen index in ascending order is the orbit minimum.
        r.canonical = c;
        r.orbit_size = static_cast<int>(orbit.size());
        r.symmetry_order = 32 * 1920 / r.orbit_size;
        r.cusps = cusp_count_fast(c);
        out.push_back(r);
        if (progress) progress(i, sorted.size());
    }
    return out;
}

}  // namespace hyp5
