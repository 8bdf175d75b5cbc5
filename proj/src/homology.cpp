#include "hyp5/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hyp5/linalg.hpp"

namespace hyp5 {

namespace {

int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }

std::int64_t det_on(const std::vector<Vec6>& vs, const std::vector<int>& coords) {
    const int n = static_cast<int>(vs.size());
    std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = vs[i][coords[j]];
    return small_det(m, n);
}

class ParityUnionFind {
   public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    // Returns (root, s) with x = s * root.
    std::pair<int, int> find(int x) {
        int s = 1, r = x;
        while (parent_[r] != r) s *= parity_[r], r = parent_[r];
        // Path compression.
        int y = x, sy = s;
        while (parent_[y] != y) {
            const int next = parent_[y];
            const int snext = sy * parity_[y];
            parent_[y] = r;
            parity_[y] = sy;
            y = next;
            sy = snext;
        }
        return {r, s};
    }

    // Records a = s * b.
    void unite(int a, int b, int s) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        // ra = sa * a = sa * s * b = sa * s * sb * rb
        const int rel = sa * s * sb;
        if (ra == rb) {
            if (rel != 1) throw std::logic_error("gluing identifies a cell with its own reverse");
            return;
        }
        if (ra < rb) std::swap(ra, rb);  // the smaller id stays the root
        parent_[ra] = rb;
        parity_[ra] = rel;
    }

   private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

struct Assembler {
    std::vector<const TruncatedPolytope*> pieces;
    std::vector<int> offset;
    int total = 0;

    explicit Assembler(std::vector<const TruncatedPolytope*> ps) : pieces(std::move(ps)) {
        for (auto* p : pieces) {
            offset.push_back(total);
            total += static_cast<int>(p->cells().size());
        }
    }

    GluedComplex finish(ParityUnionFind& uf) const {
        GluedComplex g;
        g.offset = offset;
        g.class_of.assign(total, -1);
        g.parity.assign(total, 1);
        std::vector<int> root_index(total, -1);
        std::vector<std::pair<int, int>> reps;  // (piece, local cell) of each root
        for (int p = 0; p < static_cast<int>(pieces.size()); ++p)
            for (int c = 0; c < static_cast<int>(pieces[p]->cells().size()); ++c) {
                const int id = offset[p] + c;
                auto [r, s] = uf.find(id);
                if (root_index[r] < 0) {
                    const int d = pieces[p]->cells()[c].dim;
                    root_index[r] = g.chain.cells[d]++;
                }
                g.class_of[id] = root_index[r];
                g.parity[id] = s;
                if (r == id) reps.emplace_back(p, c);
            }
        for (int k = 1; k <= 5; ++k) g.chain.boundary[k] = SparseIntMatrix(g.chain.cells[k - 1], g.chain.cells[k]);
        for (auto [p, c] : reps) {
            const auto& cell = pieces[p]->cells()[c];
            if (cell.dim == 0) continue;
            const int col = g.class_of[offset[p] + c];
            for (auto [b, inc] : cell.boundary) {
                const int id = offset[p] + b;
                g.chain.boundary[cell.dim].add(g.class_of[id], col, inc * g.parity[id]);
            }
        }

        // Cusps: classes of ideal vertices, joined through identified link cells.
        std::vector<int> voff;
        int nv = 0;
        for (auto* p : pieces) {
            voff.push_back(nv);
            nv += static_cast<int>(p->lattice().vertices.size());
        }
        std::vector<int> vparent(nv);
        std::iota(vparent.begin(), vparent.end(), 0);
        auto vfind = [&](int x) {
            while (vparent[x] != x) x = vparent[x] = vparent[vparent[x]];
            return x;
        };
        std::vector<int> first_vertex(total, -1);
        for (int p = 0; p < static_cast<int>(pieces.size()); ++p)
            for (int c = 0; c < static_cast<int>(pieces[p]->cells().size()); ++c) {
                const int u = pieces[p]->cells()[c].ideal_vertex;
                if (u < 0) continue;
                const int root = uf.find(offset[p] + c).first;
                const int v = voff[p] + u;
                if (first_vertex[root] < 0)
                    first_vertex[root] = v;
                else
                    vparent[vfind(v)] = vfind(first_vertex[root]);
            }
        for (int p = 0; p < static_cast<int>(pieces.size()); ++p) {
            const auto& L = pieces[p]->lattice();
            for (int v = 0; v < static_cast<int>(L.vertices.size()); ++v)
                if (L.ideal[v] && vfind(voff[p] + v) == voff[p] + v) ++g.cusps;
        }
        return g;
    }
};

struct Q5Tables {
    TruncatedPolytope tp{q5_lattice()};
    std::array<std::vector<int>, 32> image;
    std::array<std::vector<signed char>, 32> sign;
    std::array<std::vector<int>, 72> side_cells;

    Q5Tables() {
        const auto& L = q5_lattice();
        const int n = static_cast<int>(tp.cells().size());
        std::vector<TruncatedPolytope::CellMap> maps;
        for (int k = 0; k < 32; ++k) {
            image[k].assign(n, -1);
            sign[k].assign(n, 0);
            const Mat6 m = k5_matrix({static_cast<std::uint8_t>(k)});
            maps.clear();
            for (int f = 0; f < static_cast<int>(L.faces.size()); ++f)
                if (f != L.top) tp.cell_images(f, m, tp, maps);
            for (auto& cm : maps) {
                image[k][cm.cell] = cm.image;
                sign[k][cm.cell] = static_cast<signed char>(cm.sign);
            }
        }
        for (int c = 0; c < n; ++c) {
            const auto& cell = tp.cells()[c];
            if (cell.face == L.top) continue;
            for (int s : L.faces[cell.face].sides) side_cells[s].push_back(c);
        }
    }
};

const Q5Tables& q5_tables() {
    static const Q5Tables t;
    return t;
}

}  // namespace

int ChainComplex::euler_characteristic() const {
    int chi = 0;
    for (int k = 0; k <= 5; ++k) chi += (k % 2 ? -1 : 1) * cells[k];
    return chi;
}

bool ChainComplex::boundary_squares_to_zero() const {
    for (int k = 2; k <= 5; ++k) {
        const IntMatrix prod = boundary[k - 1].dense() * boundary[k].dense();
        if (std::any_of(prod.a.begin(), prod.a.end(), [](std::int64_t x) { return x != 0; })) return false;
    }
    return true;
}

Homology homology(const ChainComplex& c) {
    std::array<SmithSummary, 7> s{};
    for (int k = 1; k <= 5; ++k) s[k] = smith_summary(c.boundary[k]);
    Homology h;
    for (int k = 0; k <= 5; ++k) {
        h.groups[k].rank = c.cells[k] - s[k].rank - s[k + 1].rank;
        h.groups[k].torsion = s[k + 1].torsion;
    }
    return h;
}

TruncatedPolytope::TruncatedPolytope(const FaceLattice& L, const Mat6& placement) : L_(&L), placement_(placement) {
    for (int v = 0; v < static_cast<int>(L.vertices.size()); ++v) {
        placed_.push_back(apply_to(placement, L.vertices[v]));
        vertex_index_[placed_.back()] = v;
    }
    const int nf = static_cast<int>(L.faces.size());
    basis_.resize(nf);
    pivots_.resize(nf);
    basis_sign_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        std::vector<Vec6> vs;
        for (int v : L.faces[f].vertices) vs.push_back(placed_[v]);
        for (int i : independent_subset(vs)) basis_[f].push_back(vs[i]);
        if (static_cast<int>(basis_[f].size()) != L.faces[f].dim + 1)
            throw std::logic_error("face cone has the wrong dimension");
        pivots_[f] = pivot_coordinates(basis_[f]);
        basis_sign_[f] = sign_of(det_on(basis_[f], pivots_[f]));
    }

    face_cell_.assign(nf, -1);
    link_cells_.resize(nf);
    for (int d = 0; d <= 5; ++d)
        for (int f : L.by_dim[d]) {
            const Face& F = L.faces[f];
            if (d == 0 && L.ideal[F.vertices[0]]) continue;
            face_cell_[f] = static_cast<int>(cells_.size());
            cells_.push_back({d, f, -1, {}});
            if (d == 0) continue;
            for (int u : F.vertices)
                if (L.ideal[u]) {
                    link_cells_[f].emplace_back(u, static_cast<int>(cells_.size()));
                    cells_.push_back({d - 1, f, u, {}});
                }
        }

    // [F^t : L(u,F)] is +1 for dim F >= 2 and the geometric [F : u] for edges.
    auto cap = [&](int f, int u) { return L.faces[f].dim >= 2 ? 1 : incidence(f, L.face_of_vertex(u)); };
    for (auto& cell : cells_) {
        const Face& F = L.faces[cell.face];
        if (cell.ideal_vertex < 0) {
            for (int g : F.facets) {
                const Face& G = L.faces[g];
                if (G.dim == 0 && L.ideal[G.vertices[0]])
                    cell.boundary.emplace_back(link_cell(G.vertices[0], cell.face), incidence(cell.face, g));
                else
                    cell.boundary.emplace_back(face_cell_[g], incidence(cell.face, g));
            }
            if (F.dim >= 2)
                for (auto [u, c] : link_cells_[cell.face]) cell.boundary.emplace_back(c, 1);
        } else if (F.dim >= 2) {
            const int u = cell.ideal_vertex;
            for (int g : F.facets) {
                const Face& G = L.faces[g];
                if (G.dim == 0 || !std::binary_search(G.vertices.begin(), G.vertices.end(), u)) continue;
                cell.boundary.emplace_back(link_cell(u, g), -incidence(cell.face, g) * cap(g, u) * cap(cell.face, u));
            }
        }
    }
}

int TruncatedPolytope::link_cell(int vertex, int face) const {
    for (auto [u, c] : link_cells_[face])
        if (u == vertex) return c;
    return -1;
}

int TruncatedPolytope::vertex_id(const Vec6& placed) const {
    auto it = vertex_index_.find(placed);
    return it == vertex_index_.end() ? -1 : it->second;
}

int TruncatedPolytope::orientation(int face, const std::vector<Vec6>& vectors) const {
    const int s = sign_of(det_on(vectors, pivots_[face]));
    if (s == 0) throw std::logic_error("vectors do not span the face");
    return s * basis_sign_[face];
}

int TruncatedPolytope::incidence(int face, int facet) const {
    const auto& fv = L_->faces[face].vertices;
    const auto& gv = L_->faces[facet].vertices;
    for (int v : fv)
        if (!std::binary_search(gv.begin(), gv.end(), v)) {
            std::vector<Vec6> vs{placed_[v]};
            for (auto& x : vs[0]) x = -x;
            vs.insert(vs.end(), basis_[facet].begin(), basis_[facet].end());
            return orientation(face, vs);
        }
    throw std::logic_error("incidence: not a proper facet");
}

std::pair<int, int> TruncatedPolytope::face_image(int face, const Mat6& g, const TruncatedPolytope& target) const {
    std::vector<int> ids;
    for (int v : L_->faces[face].vertices) {
        const int w = target.vertex_id(apply_to(g, placed_[v]));
        if (w < 0) throw std::logic_error("gluing map does not carry vertices to vertices");
        ids.push_back(w);
    }
    std::sort(ids.begin(), ids.end());
    const int img = target.lattice().find(ids);
    if (img < 0) throw std::logic_error("gluing map does not carry a face to a face");
    std::vector<Vec6> vs;
    for (const auto& b : basis_[face]) vs.push_back(apply_to(g, b));
    return {img, target.orientation(img, vs)};
}

void TruncatedPolytope::cell_images(int face, const Mat6& g, const TruncatedPolytope& target,
                                    std::vector<CellMap>& out) const {
    const Face& F = L_->faces[face];
    if (F.dim == 0 && L_->ideal[F.vertices[0]]) return;
    auto [img, s] = face_image(face, g, target);
    out.push_back({face_cell_[face], target.face_cell(img), s});
    for (auto [u, c] : link_cells_[face]) {
        const int gu = target.vertex_id(apply_to(g, placed_[u]));
        out.push_back({c, target.link_cell(gu, img), F.dim >= 2 ? s : 1});
    }
}

GluedComplex glue(const std::vector<const TruncatedPolytope*>& pieces, const std::vector<Gluing>& gluings) {
    Assembler as(pieces);
    ParityUnionFind uf(as.total);
    std::vector<TruncatedPolytope::CellMap> maps;
    for (const auto& gl : gluings) {
        const auto& src = *pieces[gl.from_piece];
        const auto& dst = *pieces[gl.to_piece];
        const auto& L = src.lattice();
        for (int f = 0; f < static_cast<int>(L.faces.size()); ++f) {
            const auto& sides = L.faces[f].sides;
            if (f == L.top || !std::binary_search(sides.begin(), sides.end(), gl.from_side)) continue;
            maps.clear();
            src.cell_images(f, gl.map, dst, maps);
            for (auto& cm : maps) {
                if (cm.image < 0) throw std::logic_error("gluing map loses a link cell");
                uf.unite(as.offset[gl.from_piece] + cm.cell, as.offset[gl.to_piece] + cm.image, cm.sign);
            }
        }
    }
    return as.finish(uf);
}

const TruncatedPolytope& truncated_q5() { return q5_tables().tp; }

GluedComplex truncated_complex(const PairingCode& code) {
    const auto& t = q5_tables();
    Assembler as({&t.tp});
    ParityUnionFind uf(as.total);
    for (int s = 0; s < 72; ++s) {
        const int k = code.digits[group_of_side(s)];
        for (int c : t.side_cells[s]) uf.unite(c, t.image[k][c], t.sign[k][c]);
    }
    return as.finish(uf);
}

GluedComplex truncated_complex_by_matrices(const SidePairing& p) {
    const auto& tp = truncated_q5();
    std::vector<Gluing> gl;
    for (int i = 0; i < 72; ++i) gl.push_back({0, p.partner[i], 0, i, p.map[i]});
    return glue({&tp}, gl);
}

Homology homology(const PairingCode& code) { return homology(truncated_complex(code).chain); }

AbelianGroup h1_via_presentation(const SidePairing& p) {
    std::vector<int> gen(72, -1);
    int n = 0;
    for (int i = 0; i < 72; ++i)
        if (gen[i] < 0) gen[i] = gen[p.partner[i]] = n++;
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 0; i < 72; ++i)
        if (p.partner[i] == i) {
            rows.emplace_back(n, 0);
            rows.back()[gen[i]] = 2;
        }
    for (const auto& rc : ridge_cycles(p, q5_lattice())) {
        rows.emplace_back(n, 0);
        for (int s : rc.sides) rows.back()[gen[s]] += s <= p.partner[s] ? -1 : 1;
    }
    IntMatrix r(static_cast<int>(rows.size()), n);
    for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = rows[i][j];
    return cokernel(r);
}

}  // namespace hyp5
