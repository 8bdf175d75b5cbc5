#include "hyp5/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyp5/classification.hpp"
#include "hyp5/reference_data.hpp"

namespace hyp5 {

namespace {

const char* const kNonorientableCode = "2549A81IKGV";
const char* const kQuotientBase = "2B7JB47JG81";

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string homology_text(const Homology& h) {
    std::vector<std::string> parts;
    for (int k = 1; k <= 4; ++k) parts.push_back("H" + std::to_string(k) + "=" + h[k].to_string());
    return join(parts);
}

Mat6 rho() {
    Mat6 r = identity6();
    r[1][1] = -1;
    return r;
}

Vec6 negate(Vec6 v) {
    for (auto& x : v) x = -x;
    return v;
}

bool in_gamma5(const Mat6& m) { return is_lorentzian(m) && is_positive(m); }

}  // namespace

void Report::check(std::string name, bool pass, std::string detail) {
    lines.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::string Report::to_string() const {
    std::ostringstream os;
    os << title << "\n";
    for (const auto& l : lines) {
        os << (l.pass ? "  PASS " : "  FAIL ") << l.name;
        if (!l.detail.empty()) os << ": " << l.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<const TruncatedPolytope*> PieceComplex::pointers() const {
    std::vector<const TruncatedPolytope*> out;
    for (const auto& p : pieces) out.push_back(p.get());
    return out;
}

GluedComplex PieceComplex::glue() const { return hyp5::glue(pointers(), gluings); }

const FaceLattice& p5_lattice() {
    static const FaceLattice L = face_lattice(build_p5());
    return L;
}

PieceComplex p5_subdivision(const PairingCode& code) {
    const auto& L = p5_lattice();
    const auto phi = phi_on_p5_sides(code);
    PieceComplex pc;
    for (int m = 0; m < 32; ++m)
        pc.pieces.push_back(std::make_unique<TruncatedPolytope>(L, k5_matrix({static_cast<std::uint8_t>(m)})));
    for (int m = 0; m < 32; ++m)
        for (int l = 0; l < 16; ++l) {
            const int q = m ^ static_cast<int>(phi[l]);
            if (q < m) continue;
            if (q == m) throw std::logic_error("p5_subdivision: side with trivial twist");
            const Mat6 r = reflection_matrix(L.polytope.sides[l].normal);
            const Mat6 g = mul(mul(k5_matrix({static_cast<std::uint8_t>(q)}), r), k5_matrix({static_cast<std::uint8_t>(m)}));
            pc.gluings.push_back({m, l, q, l, g});
        }
    return pc;
}

std::vector<PieceImage> piece_images(const PairingCode& code, const Mat6& g) {
    std::vector<PieceImage> out;
    for (int m = 0; m < 32; ++m) {
        const Mat6 km = k5_matrix({static_cast<std::uint8_t>(m)});
        const auto d = descend_to_p5(code, mul(g, km));
        const int q = static_cast<int>(d.phi);
        out.push_back({q, mul(mul(k5_matrix({static_cast<std::uint8_t>(q)}), d.residual), km)});
    }
    return out;
}

QuotientResult quotient_by_group(const PairingCode& code, const std::vector<Mat6>& group) {
    const auto pc = p5_subdivision(code);
    const auto gc = pc.glue();
    const auto& L = p5_lattice();
    const int n = static_cast<int>(group.size());
    // act[e][dim][cell] = (image cell, sign)
    std::vector<std::array<std::vector<std::pair<int, int>>, 6>> act(n);
    std::vector<TruncatedPolytope::CellMap> maps;
    for (int e = 0; e < n; ++e) {
        for (int k = 0; k <= 5; ++k) act[e][k].assign(gc.chain.cells[k], {-1, 0});
        const auto images = piece_images(code, group[e]);
        for (int p = 0; p < 32; ++p) {
            const auto& src = *pc.pieces[p];
            const int q = images[p].piece;
            maps.clear();
            for (int f = 0; f < static_cast<int>(L.faces.size()); ++f) src.cell_images(f, images[p].map, *pc.pieces[q], maps);
            for (const auto& cm : maps) {
                const int a = gc.offset[p] + cm.cell, b = gc.offset[q] + cm.image;
                const int dim = src.cells()[cm.cell].dim;
                const std::pair<int, int> img{gc.class_of[b], gc.parity[a] * cm.sign * gc.parity[b]};
                auto& slot = act[e][dim][gc.class_of[a]];
                if (slot.first >= 0 && slot != img) throw std::logic_error("quotient_by_group: action is not well defined");
                slot = img;
            }
        }
    }
    QuotientResult r;
    for (int e = 0; e < n; ++e) {
        if (group[e] == identity6()) continue;
        for (int k = 0; k <= 5; ++k)
            for (int c = 0; c < gc.chain.cells[k]; ++c) r.fixed_cells += act[e][k][c].first == c;
    }
    r.free = r.fixed_cells == 0;
    if (!r.free) return r;
    std::array<std::vector<int>, 6> orbit, sign, rep;
    for (int k = 0; k <= 5; ++k) {
        orbit[k].assign(gc.chain.cells[k], -1);
        sign[k].assign(gc.chain.cells[k], 0);
        for (int c = 0; c < gc.chain.cells[k]; ++c) {
            if (orbit[k][c] >= 0) continue;
            const int o = static_cast<int>(rep[k].size());
            rep[k].push_back(c);
            for (int e = 0; e < n; ++e) {
                const auto [img, s] = act[e][k][c];
                orbit[k][img] = o;
                sign[k][img] = s;
            }
        }
        r.chain.cells[k] = static_cast<int>(rep[k].size());
    }
    for (int k = 1; k <= 5; ++k) {
        r.chain.boundary[k] = SparseIntMatrix(r.chain.cells[k - 1], r.chain.cells[k]);
        std::vector<int> rep_of(gc.chain.cells[k], -1);
        for (int o = 0; o < r.chain.cells[k]; ++o) rep_of[rep[k][o]] = o;
        for (const auto& en : gc.chain.boundary[k].entries) {
            const int o = rep_of[en.col];
            if (o < 0) continue;
            r.chain.boundary[k].add(orbit[k - 1][en.row], o, en.value * sign[k - 1][en.row]);
        }
    }
    return r;
}

Mat6 coset_representative(const PairingCode& code, const Mat6& x) {
    const auto d = descend_to_p5(code, x);
    return mul(k5_matrix({static_cast<std::uint8_t>(d.phi)}), d.residual);
}

std::vector<Mat6> isometry_group(const PairingCode& code, const std::vector<Mat6>& lifts, std::size_t bound) {
    std::vector<Mat6> gens;
    for (const auto& g : lifts) gens.push_back(coset_representative(code, g));
    std::vector<Mat6> out{identity6()};
    std::set<Mat6> seen{identity6()};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            const Mat6 y = coset_representative(code, mul(out[i], g));
            if (seen.insert(y).second) {
                if (out.size() >= bound) throw std::domain_error("isometry_group: bound exceeded");
                out.push_back(y);
            }
        }
    return out;
}

Vec6 n_side_normal(int t) {
    const auto& sides = p5_lattice().polytope.sides;
    const Vec6& s = sides[(t - 1) % 16].normal;
    return t <= 16 ? s : apply_to(rho(), s);
}

NSidePair n_side_pair_of(const Mat6& m) {
    static const TruncatedPolytope pieces[2] = {TruncatedPolytope(p5_lattice()), TruncatedPolytope(p5_lattice(), rho())};
    const auto& L = p5_lattice();
    auto facet_vertices = [&](int t) {
        const auto& tp = pieces[(t - 1) / 16];
        const int f = L.faces_of_side((t - 1) % 16, 4).at(0);
        std::vector<Vec6> vs;
        for (int v : L.faces[f].vertices) vs.push_back(tp.vertex(v));
        std::sort(vs.begin(), vs.end());
        return vs;
    };
    NSidePair found;
    for (int b = 1; b <= 32; ++b) {
        const Vec6 image = apply_to(m, n_side_normal(b));
        for (int a = 1; a <= 32; ++a) {
            if (image != negate(n_side_normal(a))) continue;
            auto vs = facet_vertices(b);
            for (auto& v : vs) v = apply_to(m, v);
            std::sort(vs.begin(), vs.end());
            if (vs != facet_vertices(a)) continue;
            if (found.from < 0)
                found = {b, a};
            else if (found.from != a || found.to != b)
                return {};
        }
    }
    return found;
}

PieceComplex n_complex() {
    PieceComplex pc;
    pc.pieces.push_back(std::make_unique<TruncatedPolytope>(p5_lattice()));
    pc.pieces.push_back(std::make_unique<TruncatedPolytope>(p5_lattice(), rho()));
    for (const auto& np : n_pairings()) {
        const auto sp = n_side_pair_of(np.matrix);
        if (sp.from < 0) throw std::logic_error("n_complex: matrix realises no side pair");
        pc.gluings.push_back({(sp.from - 1) / 16, (sp.from - 1) % 16, (sp.to - 1) / 16, (sp.to - 1) % 16, np.matrix});
    }
    return pc;
}

double zeta3() {
    // Tail after N terms lies between 1/(2 (N+1)^2) and 1/(2 N^2).
    const int N = 200000;
    double s = 0;
    for (int k = N; k >= 1; --k) {
        const double x = k;
        s += 1.0 / (x * x * x);
    }
    const double lo = 1.0 / (2.0 * (N + 1.0) * (N + 1.0)), hi = 1.0 / (2.0 * N * static_cast<double>(N));
    return s + (lo + hi) / 2;
}

Report verify_nonorientable_example() {
    Report r;
    r.title = std::string("nonorientable manifold ") + kNonorientableCode;
    const auto code = parse_code(kNonorientableCode);
    const auto p = expand(code);
    r.check("proper", is_proper(p, q5_lattice()));
    r.check("not orientation preserving", !is_orientation_preserving(code));
    const auto h = homology(code);
    r.check("homology",
            h[1].to_string() == "Z^5+Z/2^6" && h[2].to_string() == "Z^10+Z/2+Z/4^9" &&
                h[3].to_string() == "Z^6+Z/2^9" && h[4].to_string() == "0",
            homology_text(h));
    r.check("presentation H1", h1_via_presentation(p) == h[1], h1_via_presentation(p).to_string());
    const auto cusps = cusps_by_stabilizers(code);
    int nonorientable = 0, z3 = 0, z2 = 0;
    std::vector<std::string> h1s;
    for (const auto& c : cusps) {
        nonorientable += !c.group.orientable();
        const auto a = c.group.abelianization().to_string();
        z3 += a == "Z^3+Z/2";
        z2 += a == "Z^2+Z/2";
        h1s.push_back(a);
    }
    r.check("ten nonorientable cusps", cusps.size() == 10 && nonorientable == 10,
            std::to_string(cusps.size()) + " cusps, " + std::to_string(nonorientable) + " nonorientable");
    r.check("link homology", z3 == 5 && z2 == 5, join(h1s));
    const int s = symmetry_order(code);
    r.check("at least 160 symmetries", s >= 160, "S = " + std::to_string(s));
    return r;
}

Report verify_quotient_group() {
    Report r;
    r.title = std::string("order-16 symmetry group of ") + kQuotientBase;
    const auto code = parse_code(kQuotientBase);
    const Mat6& a = quotient_alpha();
    const Mat6& b = quotient_beta();
    r.check("alpha, beta integral positive Lorentzian", in_gamma5(a) && in_gamma5(b));
    r.check("det alpha = det beta = 1", det(a) == 1 && det(b) == 1);
    // Relations hold for the isometries of M, i.e. modulo the manifold group.
    auto rep = [&](const Mat6& x) { return coset_representative(code, x); };
    auto power = [](const Mat6& x, int n) {
        Mat6 y = identity6();
        for (int i = 0; i < n; ++i) y = mul(y, x);
        return y;
    };
    const Mat6 id = identity6();
    r.check("alpha^8 = 1, alpha^4 != 1", rep(power(a, 8)) == id && rep(power(a, 4)) != id);
    r.check("beta^2 = 1, beta != 1", rep(mul(b, b)) == id && rep(b) != id);
    r.check("beta alpha beta = alpha^3", rep(mul(mul(b, a), b)) == rep(power(a, 3)));
    const auto p = expand(code);
    bool normal = true;
    for (const Mat6* x : {&a, &b}) {
        const Mat6 xi = lorentz_inverse(*x);
        for (int s = 0; s < 72; ++s) {
            try {
                normal = normal && phi_by_descent(code, mul(mul(*x, p.map[s]), xi)) == 0;
            } catch (const std::invalid_argument&) {
                normal = false;
            }
        }
    }
    r.check("normalizes the manifold group", normal);
    const auto group = isometry_group(code, {a, b});
    r.check("group order 16", group.size() == 16, std::to_string(group.size()));
    bool orientation = true;
    for (const auto& g : group) orientation = orientation && det(g) == 1;
    r.check("orientation preserving", orientation);
    int fixed_pieces = 0;
    for (const auto& g : group) {
        if (g == identity6()) continue;
        const auto im = piece_images(code, g);
        for (int m = 0; m < 32; ++m) fixed_pieces += im[m].piece == m;
    }
    r.check("free on the 32 P5 pieces", fixed_pieces == 0, std::to_string(fixed_pieces) + " fixed");
    const auto q = quotient_by_group(code, group);
    r.check("free on cells", q.free, std::to_string(q.fixed_cells) + " fixed (element, cell) pairs");
    return r;
}

Report verify_n_side_pairing() {
    Report r;
    r.title = "side-pairing of P5 u rho(P5)";
    bool rho_ok = true;
    for (int t = 1; t <= 16; ++t) rho_ok = rho_ok && n_side_normal(t + 16) == apply_to(rho(), n_side_normal(t));
    r.check("sides 17..32 are rho of sides 1..16", rho_ok);
    r.check("side 18 is side 2 reversed", n_side_normal(18) == negate(n_side_normal(2)));
    int integral = 0;
    for (const auto& np : n_pairings()) integral += in_gamma5(np.matrix);
    r.check("all matrices integral positive Lorentzian", integral == 16, std::to_string(integral) + "/16");

    // Literal reading: the m-th matrix carries side j (or side i) onto the other one.
    int j_to_i = 0, i_to_j = 0;
    for (const auto& np : n_pairings()) {
        const auto sp = n_side_pair_of(np.matrix);
        j_to_i += sp.from == np.j && sp.to == np.i;
        i_to_j += sp.from == np.i && sp.to == np.j;
    }
    std::vector<std::string> realised;
    std::vector<int> used(33, 0);
    bool every = true;
    for (const auto& np : n_pairings()) {
        const auto sp = n_side_pair_of(np.matrix);
        every = every && sp.from > 0;
        if (sp.from > 0) ++used[sp.from], ++used[sp.to];
        realised.push_back(std::to_string(sp.from) + "->" + std::to_string(sp.to));
    }
    r.check("each matrix carries one side onto another, normal reversed", every, join(realised, " "));
    r.check("the realised pairs match all 32 sides", every && std::count(used.begin() + 1, used.end(), 1) == 32);
    r.check("listed (i,j) labels read literally", true,
            std::to_string(i_to_j) + "/16 carry i onto j, " + std::to_string(j_to_i) + "/16 carry j onto i");
    // Relabeling of the listed pairs onto the realised ones.
    std::map<int, int> label;
    bool consistent = every;
    auto bind = [&](int listed, int actual) {
        for (int shift : {0, 16}) {
            const int l = (listed - 1) % 16 + 1 + shift, a = (actual - 1) % 16 + 1 + shift;
            if ((listed > 16) != (actual > 16)) consistent = false;
            auto [it, fresh] = label.emplace(l, a);
            if (!fresh && it->second != a) consistent = false;
        }
    };
    for (const auto& np : n_pairings()) {
        const auto sp = n_side_pair_of(np.matrix);
        if (sp.from < 0) continue;
        bind(np.i, sp.from);
        bind(np.j, sp.to);
    }
    std::vector<std::string> moved;
    std::set<int> targets;
    for (auto [l, a] : label) {
        targets.insert(a);
        if (l != a && l <= 16) moved.push_back(std::to_string(l) + "->" + std::to_string(a));
    }
    consistent = consistent && label.size() == 32 && targets.size() == 32;
    r.check("listed pairs are the realised pairs after one relabeling of sides, both copies alike", consistent,
            moved.empty() ? "identity" : join(moved, " "));
    r.check("pair (2,18) is the identity", n_pairings()[1].i == 2 && n_pairings()[1].j == 18 &&
                                               n_pairings()[1].matrix == identity6());
    return r;
}

Report verify_n_invariants() {
    Report r;
    r.title = "two-cusped quotient N";
    const auto pc = n_complex();
    const auto gc = pc.glue();
    r.check("boundary squares to zero", gc.chain.boundary_squares_to_zero());
    r.check("Euler characteristic 0", gc.chain.euler_characteristic() == 0);
    const auto h = homology(gc.chain);
    r.check("homology",
            h[0].to_string() == "Z" && h[1].to_string() == "Z+Z/4" && h[2].to_string() == "Z/4^2" &&
                h[3].to_string() == "Z" && h[4].to_string() == "Z" && h[5].to_string() == "0",
            homology_text(h));

    const auto group = isometry_group(parse_code(kQuotientBase), {quotient_alpha(), quotient_beta()});
    const auto q = quotient_by_group(parse_code(kQuotientBase), group);
    bool same = q.free;
    if (q.free) {
        const auto hq = homology(q.chain);
        for (int k = 0; k <= 5; ++k) same = same && hq[k] == h[k];
        r.check("quotient of manifold 27 by the group has the same homology", same, homology_text(hq));
    } else {
        r.check("quotient of manifold 27 by the group has the same homology", false, "action not free");
    }

    const auto cusps = cusps_by_development(pc.pointers(), pc.gluings);
    r.check("two cusps", cusps.size() == 2 && gc.cusps == 2, std::to_string(cusps.size()));
    std::map<char, int> order;
    std::vector<std::string> desc;
    for (const auto& c : cusps) {
        const auto inv = link_invariants(c.group);
        const std::string cand = link_candidates(inv);
        const char letter = cand.empty() ? '?' : link_letter(inv);
        order[letter] = c.cycle_order;
        desc.push_back(std::string(1, letter) + ": H1=" + inv.h1.to_string() + " holonomy " + inv.holonomy.name() + " " +
                       inv.torus.to_string());
        if (letter == 'P')
            r.check("P link", inv.h1.to_string() == "Z+Z/4" && inv.holonomy.name() == "D8" &&
                                  inv.orientable && inv.torus.to_string() == "O3_6 x| S1",
                    desc.back());
    }
    r.check("link types D and P", order.count('D') && order.count('P'), join(desc, "; "));

    // Covering degrees, counted in P5 vertex incidences.
    const auto m = p5_subdivision(parse_code(kQuotientBase));
    const auto mc = cusps_by_development(m.pointers(), m.gluings);
    int a_total = 0, d_total = 0, a_count = 0, d_count = 0;
    for (const auto& c : mc) {
        const char letter = link_letter(link_invariants(c.group));
        if (letter == 'A') a_total += c.cycle_order, ++a_count;
        if (letter == 'D') d_total += c.cycle_order, ++d_count;
    }
    const bool cover = a_count == 2 && d_count == 8 && order.count('D') && order.count('P') &&
                       a_total == 16 * order['D'] && d_total == 16 * order['P'];
    r.check("D covered by the two A cusps, P by the eight D cusps", cover,
            std::to_string(a_count) + " A cusps, " + std::to_string(d_count) + " D cusps upstairs");
    return r;
}

Report volume_ledger() {
    Report r;
    r.title = "volume ledger (units of zeta(3))";
    const Rational delta(7, 15360);
    const Rational p5 = Rational(1920) * delta;
    const Rational q5 = Rational(32) * p5;
    const Rational n = q5 / Rational(16);
    auto txt = [](const Rational& x) {
        return std::to_string(x.numerator()) + (x.denominator() == 1 ? "" : "/" + std::to_string(x.denominator()));
    };
    r.check("vol P5 = 7/8", p5 == Rational(7, 8), txt(p5));
    r.check("vol Q5 = 28", q5 == Rational(28), txt(q5));
    r.check("vol N = 7/4 = 2 vol P5", n == Rational(7, 4) && n == Rational(2) * p5, txt(n));
    const Rational census_index = q5 / delta, n_index = n / delta;
    r.check("census index 61440", census_index == Rational(61440), txt(census_index));
    r.check("index of N 3840 = 2^5 5!", n_index == Rational(3840) && n_index == Rational(32 * 120), txt(n_index));
    const double z = zeta3();
    const double half = boost::rational_cast<double>(n / Rational(2)) * z;
    std::ostringstream os;
    os.precision(12);
    os << "zeta(3) = " << z << ", vol(N)/2 = " << half;
    r.check("vol(N)/2 = 1.0518... > 0.3922", std::fabs(half - 1.0518) < 1e-3 && half > 0.3922, os.str());
    return r;
}

std::vector<Report> verify_special() {
    return {verify_nonorientable_example(), verify_quotient_group(), verify_n_side_pairing(), verify_n_invariants(),
            volume_ledger()};
}

}  // namespace hyp5
