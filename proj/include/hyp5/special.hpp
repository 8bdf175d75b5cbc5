#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hyp5/cusps.hpp"
#include "hyp5/homology.hpp"

namespace hyp5 {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckLine> lines;

    void check(std::string name, bool pass, std::string detail = {});
    bool pass() const;
    std::string to_string() const;
};

// Pieces with stable addresses plus their face identifications.
struct PieceComplex {
    std::vector<std::unique_ptr<TruncatedPolytope>> pieces;
    std::vector<Gluing> gluings;

    std::vector<const TruncatedPolytope*> pointers() const;
    GluedComplex glue() const;
};

const FaceLattice& p5_lattice();

// The manifold of a code cut into its 32 P5 pieces k P5 (piece index = K5 mask of k).
// Side l of piece m is glued to side l of piece m ^ phi(r_l) by k_q r_l k_m.
PieceComplex p5_subdivision(const PairingCode& code);

// Images of the pieces of p5_subdivision(code) under a symmetry g of the manifold:
// g k_m P5 is carried back to k_q P5 by the manifold group; `map` is the composite.
struct PieceImage {
    int piece;
    Mat6 map;
};
std::vector<PieceImage> piece_images(const PairingCode& code, const Mat6& g);

// Cellular action of a finite symmetry group on the truncated complex of the code's
// P5 subdivision, and the orbit complex when the action is free.
struct QuotientResult {
    bool free = false;
    int fixed_cells = 0;  // (element, cell) pairs with g c = +-c, g != 1
    ChainComplex chain;
};
QuotientResult quotient_by_group(const PairingCode& code, const std::vector<Mat6>& group);

// Representative k sigma (k in K5, sigma a symmetry of P5) of the coset of the manifold
// group containing x. Two lifts give the same isometry of the manifold iff the
// representatives agree.
Mat6 coset_representative(const PairingCode& code, const Mat6& x);

// The isometries of the manifold generated by the given lifts, as coset representatives.
// Throws std::domain_error past `bound` elements.
std::vector<Mat6> isometry_group(const PairingCode& code, const std::vector<Mat6>& lifts, std::size_t bound = 1024);

// Sides of {P5, rho(P5)} numbered 1..32 in reference order; rho(side t) = side t + 16.
Vec6 n_side_normal(int t);

// The side pair realised by a matrix: it carries side `from` onto side `to` (vertex sets
// included) with the normal reversed. -1 entries when no pair is realised.
struct NSidePair {
    int from = -1, to = -1;
};
NSidePair n_side_pair_of(const Mat6& m);

// N = P5 u rho(P5) with the identifications realised by the sixteen reference matrices.
PieceComplex n_complex();

using Rational = boost::rational<std::int64_t>;

// Sum of 1/n^3 with the tail bounded by an integral; absolute error below 1e-12.
double zeta3();

Report verify_nonorientable_example();
Report verify_quotient_group();
Report verify_n_side_pairing();
Report verify_n_invariants();
Report volume_ledger();
std::vector<Report> verify_special();

}  // namespace hyp5
