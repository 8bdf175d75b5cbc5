#include "hyp5/flat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hyp5/linalg.hpp"

namespace hyp5 {

namespace {

Vec4 add(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec4 sub(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec4 column(const Mat4& m, int c) { return {m[0][c], m[1][c], m[2][c], m[3][c]}; }

Mat4 minus_identity(const Mat4& m) {
    Mat4 r = m;
    for (int i = 0; i < 4; ++i) --r[i][i];
    return r;
}

std::int64_t det4(const Mat4& m) {
    std::vector<std::int64_t> v;
    for (auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return small_det(v, 4);
}

Mat4 adjugate(const Mat4& m) {
    Mat4 adj{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<std::int64_t> minor;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    if (r != i && c != j) minor.push_back(m[r][c]);
            adj[j][i] = ((i + j) % 2 ? -1 : 1) * small_det(minor, 3);
        }
    return adj;
}

// Row-style Hermite reduction; returns the nonzero rows spanning the same lattice.
std::vector<Vec4> lattice_rows(std::vector<Vec4> rows) {
    std::size_t pivot = 0;
    for (int c = 0; c < 4 && pivot < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || std::abs(rows[r][c]) < std::abs(rows[best][c]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[pivot], rows[best]);
            bool clean = true;
            for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                const std::int64_t q = rows[r][c] / rows[pivot][c];
                for (int k = 0; k < 4; ++k) rows[r][k] -= q * rows[pivot][k];
                if (rows[r][c] != 0) clean = false;
            }
            if (clean) {
                ++pivot;
                break;
            }
        }
    }
    rows.resize(pivot);
    return rows;
}

int element_order(const Mat4& m) {
    Mat4 p = m;
    for (int k = 1; k <= 64; ++k) {
        if (p == identity4()) return k;
        p = mul(p, m);
    }
    throw std::domain_error("holonomy element of infinite order");
}

HolonomyShape shape_of(const std::vector<Mat4>& elems) {
    HolonomyShape s;
    s.order = static_cast<int>(elems.size());
    for (auto& a : elems) {
        s.element_orders.push_back(element_order(a));
        for (auto& b : elems)
            if (mul(a, b) != mul(b, a)) s.abelian = false;
    }
    std::sort(s.element_orders.begin(), s.element_orders.end());
    return s;
}

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (a[i][k])
                for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Vec4 apply_to(const Mat4& a, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i] += a[i][k] * v[k];
    return r;
}

Affine4 compose(const Affine4& f, const Affine4& g) { return {mul(f.linear, g.linear), add(apply_to(f.linear, g.shift), f.shift)}; }

std::string HolonomyShape::name() const {
    if (order == 1) return "1";
    const int top = element_orders.back();
    if (!abelian) return (order == 8 && std::count(element_orders.begin(), element_orders.end(), 4) == 2) ? "D8" : "nonabelian" + std::to_string(order);
    if (top == order) return "Z" + std::to_string(order);
    if (top == 2) {
        int r = 0;
        while ((1 << r) < order) ++r;
        return "Z2^" + std::to_string(r);
    }
    return "abelian" + std::to_string(order);
}

std::optional<Vec4> FlatGroup::lattice_coords(const Vec4& v) const {
    const std::int64_t d = det4(lattice);
    const Vec4 x = apply_to(adjugate(lattice), v);
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        if (x[i] % d != 0) return std::nullopt;
        r[i] = x[i] / d;
    }
    return r;
}

int FlatGroup::index_of(const Mat4& m) const {
    for (int i = 0; i < static_cast<int>(holonomy.size()); ++i)
        if (holonomy[i] == m) return i;
    return -1;
}

HolonomyShape FlatGroup::shape() const { return shape_of(holonomy); }

bool FlatGroup::orientable() const {
    return std::all_of(holonomy.begin(), holonomy.end(), [](const Mat4& m) { return det4(m) == 1; });
}

bool FlatGroup::torsion_free() const {
    // (h, lift_h + l) has finite order iff N_h (lift_h + l) = 0, N_h = 1 + h + ... + h^(m-1).
    for (std::size_t h = 1; h < holonomy.size(); ++h) {
        const int m = element_order(holonomy[h]);
        Mat4 n{}, p = identity4();
        for (int k = 0; k < m; ++k) {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) n[i][j] += p[i][j];
            p = mul(p, holonomy[h]);
        }
        const Mat4 nb = mul(n, lattice);
        IntMatrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = nb[i][j];
        const Vec4 rhs = apply_to(n, lift[h]);
        if (solve_integer(a, {-rhs[0], -rhs[1], -rhs[2], -rhs[3]})) return false;
    }
    return true;
}

IntMatrix FlatGroup::relation_matrix() const {
    const int n = static_cast<int>(holonomy.size());
    const int cols = 4 + n;
    std::vector<std::vector<std::int64_t>> rows;
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < 4; ++k) {
            // s_h t_k s_h^-1 = h(t_k)
            const auto c = lattice_coords(apply_to(holonomy[h], column(lattice, k)));
            if (!c) throw std::logic_error("holonomy does not preserve the lattice");
            std::vector<std::int64_t> r(cols, 0);
            for (int i = 0; i < 4; ++i) r[i] = (*c)[i];
            r[k] -= 1;
            rows.push_back(r);
        }
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            // s_h s_g = t^c s_hg with c = lift_h + h lift_g - lift_hg
            const int hg = product[h][g];
            const auto c = lattice_coords(sub(add(lift[h], apply_to(holonomy[h], lift[g])), lift[hg]));
            if (!c) throw std::logic_error("cocycle leaves the lattice");
            std::vector<std::int64_t> r(cols, 0);
            r[4 + h] += 1;
            r[4 + g] += 1;
            r[4 + hg] -= 1;
            for (int i = 0; i < 4; ++i) r[i] -= (*c)[i];
            rows.push_back(r);
        }
    return to_matrix(rows, cols);
}

AbelianGroup FlatGroup::abelianization() const { return cokernel(relation_matrix()); }

std::vector<std::uint32_t> FlatGroup::index_two_characters() const {
    const IntMatrix r = relation_matrix();
    std::vector<std::uint32_t> rows;
    for (int i = 0; i < r.rows; ++i) {
        std::uint32_t m = 0;
        for (int j = 0; j < r.cols; ++j)
            if (r(i, j) % 2 != 0) m |= 1u << j;
        if (m) rows.push_back(m);
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 1; x < (1u << r.cols); ++x)
        if (std::all_of(rows.begin(), rows.end(), [&](std::uint32_t m) { return __builtin_parity(m & x) == 0; }))
            out.push_back(x);
    return out;
}

FlatGroup FlatGroup::index_two_kernel(std::uint32_t chi) const {
    FlatGroup k;
    const std::uint32_t on_lattice = chi & 0xF;
    if (on_lattice) {
        const int k0 = __builtin_ctz(on_lattice);
        std::vector<Vec4> gens;
        for (int i = 0; i < 4; ++i) {
            const Vec4 t = column(lattice, i);
            if (i == k0)
                gens.push_back(add(t, t));
            else
                gens.push_back(on_lattice >> i & 1 ? add(t, column(lattice, k0)) : t);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) k.lattice[i][j] = gens[j][i];
        k.holonomy = holonomy;
        k.product = product;
        for (std::size_t h = 0; h < holonomy.size(); ++h)
            k.lift.push_back(chi >> (4 + h) & 1 ? add(lift[h], column(lattice, k0)) : lift[h]);
    } else {
        std::vector<int> keep, index(holonomy.size(), -1);
        for (std::size_t h = 0; h < holonomy.size(); ++h)
            if (!(chi >> (4 + h) & 1)) {
                index[h] = static_cast<int>(keep.size());
                keep.push_back(static_cast<int>(h));
            }
        k.lattice = lattice;
        for (int h : keep) {
            k.holonomy.push_back(holonomy[h]);
            k.lift.push_back(lift[h]);
        }
        for (int h : keep) {
            k.product.emplace_back();
            for (int g : keep) {
                const int hg = index[product[h][g]];
                if (hg < 0) throw std::logic_error("character is not a homomorphism");
                k.product.back().push_back(hg);
            }
        }
    }
    return k;
}

FlatGroup generate_flat_group(const std::vector<Affine4>& generators, int max_holonomy) {
    FlatGroup g;
    std::map<Mat4, int> index;
    g.holonomy.push_back(identity4());
    g.lift.push_back({0, 0, 0, 0});
    index[identity4()] = 0;
    std::vector<Vec4> translations;
    for (std::size_t h = 0; h < g.holonomy.size(); ++h)
        for (const auto& gen : generators) {
            const Mat4 a = mul(g.holonomy[h], gen.linear);
            const Vec4 t = add(apply_to(g.holonomy[h], gen.shift), g.lift[h]);
            auto it = index.find(a);
            if (it == index.end()) {
                if (static_cast<int>(g.holonomy.size()) >= max_holonomy) throw std::domain_error("holonomy too large");
                index[a] = static_cast<int>(g.holonomy.size());
                g.holonomy.push_back(a);
                g.lift.push_back(t);
            } else {
                translations.push_back(sub(t, g.lift[it->second]));
            }
        }
    const auto rows = lattice_rows(translations);
    if (rows.size() != 4) throw std::domain_error("translation subgroup does not have rank 4");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.lattice[i][j] = rows[j][i];
    const int n = static_cast<int>(g.holonomy.size());
    g.product.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.product[a][b] = index.at(mul(g.holonomy[a], g.holonomy[b]));
    return g;
}

std::string MappingTorus::to_string() const {
    if (!determined) return "undetermined";
    return "O3_" + std::to_string(base) + (product ? " x S1" : " x| S1");
}

MappingTorus mapping_torus_type(const FlatGroup& g, int height) {
    MappingTorus best;
    if (!g.orientable()) return best;
    const int n = static_cast<int>(g.holonomy.size());
    const IntMatrix hom = integer_kernel(g.relation_matrix());
    const int b1 = hom.cols;
    if (b1 == 0) return best;
    int best_fibre = -1;

    std::vector<int> coef(b1, -height);
    for (;;) {
        // Advance through [-height, height]^b1, keeping vectors whose first nonzero entry is positive.
        int lead = 0;
        while (lead < b1 && coef[lead] == 0) ++lead;
        if (lead < b1 && coef[lead] > 0) {
            std::vector<std::int64_t> psi(4 + n, 0);
            for (int i = 0; i < 4 + n; ++i)
                for (int j = 0; j < b1; ++j) psi[i] += coef[j] * hom(i, j);
            std::int64_t gall = 0, glat = 0;
            for (int i = 0; i < 4 + n; ++i) gall = std::gcd(gall, psi[i]);
            for (auto& x : psi) x /= gall;
            for (int i = 0; i < 4; ++i) glat = std::gcd(glat, psi[i]);

            std::vector<int> fibre;
            for (int h = 0; h < n; ++h)
                if (psi[4 + h] % glat == 0) fibre.push_back(h);
            IntMatrix psi_t(1, 4);
            for (int i = 0; i < 4; ++i) psi_t(0, i) = psi[i];
            const IntMatrix kx = integer_kernel(psi_t);
            std::vector<Vec4> fibre_lattice;
            for (int j = 0; j < kx.cols; ++j)
                fibre_lattice.push_back(apply_to(g.lattice, Vec4{kx(0, j), kx(1, j), kx(2, j), kx(3, j)}));
            // Translation parts of elements of the fibre over each fibre holonomy element.
            std::vector<Vec4> beta;
            for (int h : fibre) {
                const auto x = solve_integer(psi_t, {-psi[4 + h]});
                beta.push_back(add(g.lift[h], apply_to(g.lattice, Vec4{(*x)[0], (*x)[1], (*x)[2], (*x)[3]})));
            }

            bool product = false;
            for (int h = 0; h < n && !product; ++h) {
                const Mat4& a = g.holonomy[h];
                bool ok = true;
                for (auto& l : fibre_lattice) ok = ok && apply_to(a, l) == l;
                for (int f : fibre) ok = ok && mul(a, g.holonomy[f]) == mul(g.holonomy[f], a);
                if (!ok) continue;
                // z = (a, lift_h + B x), psi(z) = 1, z commuting with every fibre element.
                std::vector<std::vector<std::int64_t>> rows;
                std::vector<std::int64_t> rhs;
                rows.push_back({psi[0], psi[1], psi[2], psi[3]});
                rhs.push_back(1 - psi[4 + h]);
                for (std::size_t i = 0; i < fibre.size(); ++i) {
                    const Mat4 bm = minus_identity(g.holonomy[fibre[i]]);
                    const Mat4 lhs = mul(bm, g.lattice);
                    const Vec4 r = sub(apply_to(minus_identity(a), beta[i]), apply_to(bm, g.lift[h]));
                    for (int k = 0; k < 4; ++k) {
                        rows.push_back({lhs[k][0], lhs[k][1], lhs[k][2], lhs[k][3]});
                        rhs.push_back(r[k]);
                    }
                }
                product = solve_integer(to_matrix(rows, 4), rhs).has_value();
            }

            const int size = static_cast<int>(fibre.size());
            if (size > best_fibre || (size == best_fibre && product && !best.product)) {
                std::vector<Mat4> fh;
                for (int h : fibre) fh.push_back(g.holonomy[h]);
                const auto s = shape_of(fh);
                const std::string nm = s.name();
                int base = 0;
                if (nm == "1") base = 1;
                else if (nm == "Z2") base = 2;
                else if (nm == "Z3") base = 3;
                else if (nm == "Z4") base = 4;
                else if (nm == "Z6") base = 5;
                else if (nm == "Z2^2") base = 6;
                best_fibre = size;
                best = {base != 0, base, product};
            }
        }
        int i = b1 - 1;
        while (i >= 0 && coef[i] == height) coef[i--] = -height;
        if (i < 0) break;
        ++coef[i];
    }
    return best;
}

LinkInvariants link_invariants(const FlatGroup& g) {
    LinkInvariants inv;
    inv.h1 = g.abelianization();
    inv.holonomy = g.shape();
    inv.orientable = g.orientable();
    inv.torus = mapping_torus_type(g);
    for (auto chi : g.index_two_characters()) inv.index_two_h1.push_back(g.index_two_kernel(chi).abelianization());
    std::sort(inv.index_two_h1.begin(), inv.index_two_h1.end());
    return inv;
}

std::string link_candidates(const LinkInvariants& inv) {
    if (!inv.orientable || !inv.torus.determined) return "";
    const auto t = inv.h1.triple();
    if (!t) return "";
    const auto [a, b, c] = *t;
    const std::string hol = inv.holonomy.name();
    const int base = inv.torus.base;
    const bool prod = inv.torus.product;
    auto is = [&](int ra, int rb, int rc, int j, bool p) { return a == ra && b == rb && c == rc && base == j && prod == p; };
    if (hol == "1") return is(4, 0, 0, 1, true) ? "A" : "";
    if (hol == "Z2") {
        if (is(2, 2, 0, 2, true)) return "B";
        if (is(2, 1, 0, 2, false)) return "C";
        return "";
    }
    if (hol == "Z2^2") {
        if (is(1, 0, 2, 6, true)) return "D";
        if (is(1, 3, 0, 2, false)) return "E";
        if (is(1, 1, 1, 2, false)) return "FG";
        if (is(1, 1, 1, 6, false)) return "H";
        if (is(1, 2, 0, 6, false)) return "IJ";
        if (is(1, 2, 0, 2, false)) return "K";
        if (is(1, 0, 1, 2, false)) return "L";
        return "";
    }
    if (hol == "D8" && is(1, 0, 1, 6, false)) return "P";
    return "";
}

}  // namespace hyp5
