#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hyp5/pairing.hpp"
#include "hyp5/polytope.hpp"
#include "hyp5/smith.hpp"

namespace hyp5 {

struct ChainComplex {
    std::array<int, 6> cells{};
    std::array<SparseIntMatrix, 6> boundary;  // boundary[k] : C_k -> C_{k-1}, k >= 1

    int euler_characteristic() const;
    bool boundary_squares_to_zero() const;
};

struct Homology {
    std::array<AbelianGroup, 6> groups;
    const AbelianGroup& operator[](int k) const { return groups[k]; }
};

Homology homology(const ChainComplex& c);

// A polytope with every ideal vertex u cut off by a horospherical link.
// Cells: F^t for every face F of dimension >= 1 and every actual vertex, and
// L(u,F) of dimension dim F - 1 for each ideal vertex u of F (dim F >= 1).
class TruncatedPolytope {
   public:
    struct Cell {
        int dim;
        int face;
        int ideal_vertex;  // u for L(u,F), -1 for F^t
        std::vector<std::pair<int, int>> boundary;  // (cell, incidence)
    };

    explicit TruncatedPolytope(const FaceLattice& L, const Mat6& placement = identity6());

    const FaceLattice& lattice() const { return *L_; }
    const Mat6& placement() const { return placement_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int face_cell(int face) const { return face_cell_[face]; }
    int link_cell(int vertex, int face) const;
    const Vec6& vertex(int id) const { return placed_[id]; }
    int vertex_id(const Vec6& placed) const;  // -1 if not a vertex

    // Sign of the orientation of `vectors` (a basis of the face's cone) against the face's own.
    int orientation(int face, const std::vector<Vec6>& vectors) const;
    const std::vector<Vec6>& basis(int face) const { return basis_[face]; }
    // [F : G] for a facet G of F.
    int incidence(int face, int facet) const;

    // Face of `target` that g carries `face` onto, with the orientation sign.
    std::pair<int, int> face_image(int face, const Mat6& g, const TruncatedPolytope& target) const;

    struct CellMap {
        int cell, image, sign;
    };
    // Images of every cell carried by `face` (F^t and its link cells).
    void cell_images(int face, const Mat6& g, const TruncatedPolytope& target, std::vector<CellMap>& out) const;

   private:
    const FaceLattice* L_;
    Mat6 placement_;
    std::vector<Vec6> placed_;
    std::map<Vec6, int> vertex_index_;
    std::vector<std::vector<Vec6>> basis_;
    std::vector<std::vector<int>> pivots_;
    std::vector<int> basis_sign_;
    std::vector<int> face_cell_;
    std::vector<std::vector<std::pair<int, int>>> link_cells_;  // per face: (u, cell)
    std::vector<Cell> cells_;
};

struct Piece {
    const TruncatedPolytope* polytope;
};

// `map` carries side `from_side` of piece `from_piece` onto side `to_side` of `to_piece`.
struct Gluing {
    int from_piece, from_side, to_piece, to_side;
    Mat6 map;
};

// Quotient of disjoint truncated pieces by face identifications.
struct GluedComplex {
    ChainComplex chain;
    int cusps = 0;
    std::vector<int> offset;    // first global cell id of each piece
    std::vector<int> class_of;  // global cell -> quotient cell (indexed within its dimension)
    std::vector<int> parity;    // global cell = parity * quotient cell
};

// Throws std::logic_error when a cell would be identified with its own reverse
// or a glued face does not land on a face.
GluedComplex glue(const std::vector<const TruncatedPolytope*>& pieces, const std::vector<Gluing>& gluings);

// Truncated quotient of Q5 by the pairing, through K5 lookup tables.
GluedComplex truncated_complex(const PairingCode& code);
// Same quotient with every identification computed from the pairing matrices.
GluedComplex truncated_complex_by_matrices(const SidePairing& p);

const TruncatedPolytope& truncated_q5();

// H0..H5 of the (cusp-truncated) manifold.
Homology homology(const PairingCode& code);

// Abelianized Poincare presentation: one generator per side pair, ridge cycle relators.
AbelianGroup h1_via_presentation(const SidePairing& p);

}  // namespace hyp5
