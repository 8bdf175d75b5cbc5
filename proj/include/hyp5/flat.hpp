#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp5/smith.hpp"

namespace hyp5 {

using Vec4 = std::array<std::int64_t, 4>;
using Mat4 = std::array<Vec4, 4>;  // row-major

Mat4 identity4();
Mat4 mul(const Mat4& a, const Mat4& b);
Vec4 apply_to(const Mat4& a, const Vec4& v);

// x -> linear * x + shift
struct Affine4 {
    Mat4 linear;
    Vec4 shift;
};
Affine4 compose(const Affine4& f, const Affine4& g);  // f after g

struct HolonomyShape {
    int order = 1;
    bool abelian = true;
    std::vector<int> element_orders;  // sorted
    std::string name() const;         // "1", "Z2", "Z2^2", "Z4", "D8", ...
};

// A crystallographic group on Z^4 coordinates: holonomy elements with one chosen
// lift each, and the translation lattice.
struct FlatGroup {
    std::vector<Mat4> holonomy;  // holonomy[0] is the identity
    std::vector<Vec4> lift;      // translation part of a fixed element over holonomy[h]; lift[0] = 0
    Mat4 lattice{};              // columns: a basis of the translation subgroup
    std::vector<std::vector<int>> product;  // product[h][h'] = index of holonomy[h] * holonomy[h']

    // Coordinates of v in the lattice basis, if v is a lattice vector.
    std::optional<Vec4> lattice_coords(const Vec4& v) const;
    int index_of(const Mat4& m) const;  // -1 if absent
    HolonomyShape shape() const;
    bool orientable() const;
    bool torsion_free() const;

    // Relations of the abelianization on generators t_1..t_4 (lattice basis), s_h.
    IntMatrix relation_matrix() const;
    AbelianGroup abelianization() const;

    // Kernel of the homomorphism to Z/2 given by its values on t_1..t_4, s_0..s_{n-1}
    // (bit k for t_k, bit 4+h for s_h).
    FlatGroup index_two_kernel(std::uint32_t chi) const;
    // Homomorphisms onto Z/2, as bitmasks in the format above.
    std::vector<std::uint32_t> index_two_characters() const;
};

// Closure of finitely many integral affine maps. Throws std::domain_error when the
// holonomy exceeds `max_holonomy` or the translations do not have rank 4.
FlatGroup generate_flat_group(const std::vector<Affine4>& generators, int max_holonomy = 64);

struct MappingTorus {
    bool determined = false;
    int base = 0;         // j in O3_j
    bool product = false;  // O3_j x S1 rather than O3_j x| S1
    std::string to_string() const;
};

// Searches epimorphisms onto Z (integer combinations of a basis of Hom(G,Z) with
// coefficients up to `height`), preferring the largest fibre holonomy, then a direct product.
MappingTorus mapping_torus_type(const FlatGroup& g, int height = 3);

struct LinkInvariants {
    AbelianGroup h1;
    HolonomyShape holonomy;
    bool orientable = false;
    MappingTorus torus;
    std::vector<AbelianGroup> index_two_h1;  // sorted multiset
};

LinkInvariants link_invariants(const FlatGroup& g);

// Table-2 rows consistent with (H1, holonomy, mapping torus): one letter, "FG" or
// "IJ" for the pairs these invariants cannot separate, "P" for the dihedral type
// Z+Z4 over O3_6, or "" when nothing matches.
std::string link_candidates(const LinkInvariants& inv);

}  // namespace hyp5
