#include "hyp5/cusps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hyp5/f2.hpp"

namespace hyp5 {

namespace {

}  // namespace

FlatGroup stabilizer_kernel(const std::array<std::uint8_t, 8>& axes) {
    std::vector<std::uint32_t> gamma(4);
    for (int j = 0; j < 4; ++j) gamma[j] = axes[2 * j] ^ axes[2 * j + 1];
    std::vector<Affine4> gens;
    for (int j = 0; j < 4; ++j) {
        Affine4 t{identity4(), {0, 0, 0, 0}};
        t.shift[j] = 4;
        gens.push_back(t);
    }
    for (std::uint32_t n : f2::kernel(gamma)) {
        Affine4 t{identity4(), {0, 0, 0, 0}};
        for (int j = 0; j < 4; ++j) t.shift[j] = 2 * (n >> j & 1);
        gens.push_back(t);
    }
    for (int flips = 1; flips < 16; ++flips) {
        std::uint32_t target = 0;
        for (int j = 0; j < 4; ++j)
            if (flips >> j & 1) target ^= axes[2 * j];
        const std::int64_t n = f2::solve(gamma, target);
        if (n < 0) continue;
        Affine4 g{identity4(), {0, 0, 0, 0}};
        for (int j = 0; j < 4; ++j) {
            if (flips >> j & 1) g.linear[j][j] = -1;
            g.shift[j] = 2 * (n >> j & 1);
        }
        gens.push_back(g);
    }
    return generate_flat_group(gens);
}

namespace {

// Axes of the ten P5 ideal vertices: e_i + e6 (i = 0..4), then the all-ones vector with
// a zero at i and last coordinate 2.
std::array<std::array<std::uint8_t, 8>, 10> vertex_axes(const PairingCode& code) {
    std::array<std::array<std::uint8_t, 8>, 10> out{};
    for (int i = 0; i < 5; ++i) {
        int axis = 0;
        for (int j = 0; j < 5; ++j) {
            if (j == i) continue;
            out[i][2 * axis] = static_cast<std::uint8_t>(1u << j);
            out[i][2 * axis + 1] = code.digits[group_of_pair(std::min(i, j), std::max(i, j))];
            ++axis;
        }
        std::vector<int> rest;
        for (int j = 0; j < 5; ++j)
            if (j != i) rest.push_back(j);
        auto& s = out[5 + i];
        s[0] = static_cast<std::uint8_t>(1u << i);
        s[1] = code.digits[10];
        const int a = rest[0];
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> other;
            for (int m = 1; m <= 3; ++m)
                if (m != k) other.push_back(rest[m]);
            s[2 * k] = code.digits[group_of_pair(a, rest[k])];
            s[2 * k + 1] = code.digits[group_of_pair(other[0], other[1])];
        }
    }
    return out;
}

int axes_rank(const std::array<std::uint8_t, 8>& axes) {
    f2::Basis b;
    for (auto x : axes) b.insert(x);
    return b.rank;
}

std::uint64_t axes_key(const std::array<std::uint8_t, 8>& axes) {
    std::uint64_t k = 0;
    for (auto x : axes) k = k << 5 | x;
    return k;
}

}  // namespace

CuspSize cusp_size_class(int cycle_order) {
    switch (cycle_order) {
        case 1:
        case 8: return CuspSize::Large;
        case 2:
        case 16: return CuspSize::Small;
        default: throw std::invalid_argument("cusp cycle order must be 1, 2, 8 or 16");
    }
}

std::vector<Cusp> cusps_by_stabilizers(const PairingCode& code) {
    std::vector<Cusp> out;
    const auto axes = vertex_axes(code);
    for (int v = 0; v < 10; ++v) {
        const int copies = 1 << (5 - axes_rank(axes[v]));
        Cusp c;
        c.cycle_order = (v < 5 ? 2 : 16) / copies;
        c.group = stabilizer_kernel(axes[v]);
        for (int k = 0; k < copies; ++k) out.push_back(c);
    }
    return out;
}

int cusp_count(const PairingCode& code) {
    int n = 0;
    for (const auto& a : vertex_axes(code)) n += 1 << (5 - axes_rank(a));
    return n;
}

HorosphereChart::HorosphereChart(const Vec6& base) : base_(base) {
    IntMatrix row(1, 6);
    for (int i = 0; i < 6; ++i) row(0, i) = i < 5 ? base[i] : -base[i];
    const IntMatrix k = integer_kernel(row);  // 6 x 5, basis of base^perp
    const auto c = solve_integer(k, std::vector<std::int64_t>(base.begin(), base.end()));
    if (!c) throw std::invalid_argument("chart base is not lightlike and integral");
    IntMatrix cm(5, 1);
    for (int i = 0; i < 5; ++i) cm(i, 0) = (*c)[i];
    const auto fc = smith_form(cm);
    if (fc.D(0, 0) != 1) throw std::invalid_argument("chart base is not primitive");
    // Left inverse of k: y = V_k [I 0] U_k x.
    const auto fk = smith_form(k);
    IntMatrix u5(5, 6);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 6; ++j) u5(i, j) = fk.U(i, j);
    const IntMatrix left = fk.V * u5;
    IntMatrix p(4, 5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) p(i, j) = fc.U(i + 1, j);
    const IntMatrix coords = p * left;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) coords_[i][j] = coords(i, j);
    for (int j = 0; j < 4; ++j) {
        std::vector<std::int64_t> e(5, 0);
        e[j + 1] = 1;
        const auto z = solve_integer(fc.U, e);
        IntMatrix zc(5, 1);
        for (int i = 0; i < 5; ++i) zc(i, 0) = (*z)[i];
        const IntMatrix b = k * zc;
        for (int i = 0; i < 6; ++i) basis_[j][i] = b(i, 0);
    }
}

Affine4 HorosphereChart::affine(const Mat6& g) const {
    if (apply_to(g, base_) != base_) throw std::invalid_argument("element does not fix the cusp point");
    auto chart = [&](const Vec6& x) {
        Vec4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) r[i] += coords_[i][j] * x[j];
        return r;
    };
    Affine4 a;
    for (int j = 0; j < 4; ++j) {
        const Vec4 col = chart(apply_to(g, basis_[j]));
        for (int i = 0; i < 4; ++i) a.linear[i][j] = col[i];
    }
    Vec6 w = apply_to(g, Vec6{0, 0, 0, 0, 0, 1});
    w[5] -= 1;
    a.shift = chart(w);
    return a;
}

std::vector<Cusp> cusps_by_development(const std::vector<const TruncatedPolytope*>& pieces,
                                       const std::vector<Gluing>& gluings) {
    struct Step {
        int from_piece, from_side, to_piece;
        Mat6 map;
    };
    std::vector<Step> steps;
    for (const auto& g : gluings) {
        steps.push_back({g.from_piece, g.from_side, g.to_piece, g.map});
        steps.push_back({g.to_piece, g.to_side, g.from_piece, lorentz_inverse(g.map)});
    }
    std::map<std::pair<int, int>, Mat6> placed;  // node -> developing matrix
    std::vector<Cusp> out;
    for (int p0 = 0; p0 < static_cast<int>(pieces.size()); ++p0) {
        const auto& L0 = pieces[p0]->lattice();
        for (int u0 = 0; u0 < static_cast<int>(L0.vertices.size()); ++u0) {
            if (!L0.ideal[u0] || placed.count({p0, u0})) continue;
            const Vec6 v = pieces[p0]->vertex(u0);
            const HorosphereChart chart(v);
            Cusp cusp;
            std::vector<Affine4> loops;
            std::vector<std::pair<int, int>> queue{{p0, u0}};
            placed[{p0, u0}] = identity6();
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const auto [pa, ua] = queue[qi];
                const Mat6 ta = placed.at({pa, ua});
                const auto& La = pieces[pa]->lattice();
                const auto& sides = La.faces[La.face_of_vertex(ua)].sides;
                for (const auto& st : steps) {
                    if (st.from_piece != pa || !std::binary_search(sides.begin(), sides.end(), st.from_side)) continue;
                    const int ub = pieces[st.to_piece]->vertex_id(apply_to(st.map, pieces[pa]->vertex(ua)));
                    if (ub < 0) throw std::logic_error("gluing does not carry an ideal vertex to a vertex");
                    const Mat6 tb = mul(ta, lorentz_inverse(st.map));
                    auto it = placed.find({st.to_piece, ub});
                    if (it == placed.end()) {
                        placed[{st.to_piece, ub}] = tb;
                        queue.emplace_back(st.to_piece, ub);
                    } else {
                        const Mat6 loop = mul(tb, lorentz_inverse(it->second));
                        if (loop != identity6()) loops.push_back(chart.affine(loop));
                    }
                }
            }
            cusp.vertices = queue;
            cusp.cycle_order = static_cast<int>(queue.size());
            cusp.group = generate_flat_group(loops);
            out.push_back(std::move(cusp));
        }
    }
    return out;
}

std::vector<Cusp> cusps_by_development(const SidePairing& p) {
    std::vector<Gluing> gl;
    for (int i = 0; i < 72; ++i)
        if (i <= p.partner[i]) gl.push_back({0, p.partner[i], 0, i, p.map[i]});
    return cusps_by_development({&truncated_q5()}, gl);
}

LinkInvariants stabilizer_link_invariants(const std::array<std::uint8_t, 8>& axes) {
    static std::mutex mu;
    static std::map<std::uint64_t, LinkInvariants> cache;
    const auto key = axes_key(axes);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    LinkInvariants inv = link_invariants(stabilizer_kernel(axes));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(inv)).first->second;
}

namespace {

std::string multiset_key(const LinkInvariants& inv) {
    std::string s;
    for (const auto& g : inv.index_two_h1) s += g.to_string() + " ";
    return s;
}

const std::string& f_key() {
    static const std::string k = "Z+Z/2+Z/4 Z+Z/2+Z/4 Z+Z/2+Z/4 Z+Z/2+Z/4 Z^2+Z/2^2 Z^2+Z/2^2 Z^2+Z/2^2 ";
    return k;
}

const std::string& j_key() {
    static const std::string k = "Z+Z/2^3 Z+Z/2^3 Z+Z/2^3 Z+Z/4^2 Z^2+Z/2 Z^2+Z/2 Z^2+Z/2 ";
    return k;
}

}  // namespace

char link_letter(const LinkInvariants& inv) {
    const std::string c = link_candidates(inv);
    if (c.empty()) return '?';
    if (c == "FG") return multiset_key(inv) == f_key() ? 'F' : 'G';
    if (c == "IJ") return multiset_key(inv) == j_key() ? 'J' : 'I';
    return c[0];
}

CalibrationReport link_type_calibration() {
    std::map<std::string, std::map<std::string, int>> seen;
    CalibrationReport r;
    auto consider = [&](const FlatGroup& g) {
        if (!g.orientable() || !g.torsion_free()) return;
        ++r.reference_groups;
        const auto t = g.abelianization().triple();
        if (!t || g.shape().name() != "Z2^2") return;
        if (*t != std::array<int, 3>{1, 1, 1} && *t != std::array<int, 3>{1, 2, 0}) return;
        const auto inv = link_invariants(g);
        const std::string c = link_candidates(inv);
        if (c == "FG" || c == "IJ") ++seen[c][multiset_key(inv)];
    };
    // Diagonal holonomy {I, A, B, AB} on the lattice 4Z^4 with all shifts mod 4; the
    // shift coordinates moved by conjugating with a translation are reduced mod 2.
    Mat4 A = identity4(), B = identity4();
    A[0][0] = A[1][1] = -1;
    B[1][1] = B[2][2] = -1;
    for (std::uint32_t s = 0; s < (1u << 16); ++s) {
        Vec4 a{}, b{};
        for (int i = 0; i < 4; ++i) {
            a[i] = s >> (2 * i) & 3;
            b[i] = s >> (8 + 2 * i) & 3;
        }
        if (a[0] > 1 || a[1] > 1 || b[2] > 1) continue;
        std::vector<Affine4> gens;
        for (int i = 0; i < 4; ++i) {
            Affine4 t{identity4(), {0, 0, 0, 0}};
            t.shift[i] = 4;
            gens.push_back(t);
        }
        gens.push_back({A, a});
        gens.push_back({B, b});
        consider(generate_flat_group(gens));
    }
    // Cube colourings with alpha_j = e_j; the automorphisms e_4 -> e_4 + v are factored
    // out by requiring the first beta_j with bit 4 set to have no other bits.
    for (std::uint32_t bb = 0; bb < (1u << 20); ++bb) {
        std::array<std::uint8_t, 8> ax{};
        for (int j = 0; j < 4; ++j) {
            ax[2 * j] = static_cast<std::uint8_t>(1u << j);
            ax[2 * j + 1] = static_cast<std::uint8_t>(bb >> (5 * j) & 31);
        }
        int first = -1;
        for (int j = 0; j < 4 && first < 0; ++j)
            if (ax[2 * j + 1] & 16) first = j;
        if (first >= 0 && (ax[2 * first + 1] & 15) != 0) continue;
        try {
            consider(stabilizer_kernel(ax));
        } catch (const std::domain_error&) {
        }
    }
    r.fg_separated = seen["FG"].size() == 2 && seen["FG"].count(f_key());
    r.ij_separated = seen["IJ"].size() == 2 && seen["IJ"].count(j_key());
    for (const auto& [c, m] : seen)
        for (const auto& [k, n] : m) r.lines.push_back(c + " " + std::to_string(n) + " groups: " + k);
    return r;
}

std::string link_type_string(const PairingCode& code) {
    const auto axes = vertex_axes(code);
    std::string small, large;
    for (int v = 0; v < 10; ++v) {
        const int copies = 1 << (5 - axes_rank(axes[v]));
        const char letter = link_letter(stabilizer_link_invariants(axes[v]));
        const int order = (v < 5 ? 2 : 16) / copies;
        (cusp_size_class(order) == CuspSize::Large ? large : small).append(copies, letter);
    }
    std::sort(small.begin(), small.end());
    std::sort(large.begin(), large.end());
    if (small.size() + large.size() == 12) return small + large;
    std::string all = small + large;
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace hyp5
