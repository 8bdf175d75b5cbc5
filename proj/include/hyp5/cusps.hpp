#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyp5/flat.hpp"
#include "hyp5/homology.hpp"
#include "hyp5/pairing.hpp"

namespace hyp5 {

enum class CuspSize { Large, Small };

// Cycle orders 1 and 8 give large maximal cusps, 2 and 16 small ones.
// Throws std::invalid_argument for any other order.
CuspSize cusp_size_class(int cycle_order);

struct Cusp {
    int cycle_order = 0;                        // polytope ideal vertices in the cycle
    std::vector<std::pair<int, int>> vertices;  // (piece, ideal vertex), development route only
    FlatGroup group;
};

// Kernel of the twist map on the reflection group of the cube with facets {t_j = 0}
// (twist axes[2j]) and {t_j = 1} (twist axes[2j+1]). Elements are t -> eps t + 2n with
// twist sum_j n_j gamma_j + sum_{eps_j = -1} alpha_j, gamma_j = alpha_j + beta_j.
FlatGroup stabilizer_kernel(const std::array<std::uint8_t, 8>& axes);

// Cusp groups as kernels of the twist homomorphism on the stabilizers of the ten
// P5 ideal vertices (cube reflection groups). One entry per cusp.
std::vector<Cusp> cusps_by_stabilizers(const PairingCode& code);

// Cusp groups generated by the loops of the developed vertex links, written in an
// integral horosphere chart at the first vertex of each cycle.
std::vector<Cusp> cusps_by_development(const std::vector<const TruncatedPolytope*>& pieces,
                                       const std::vector<Gluing>& gluings);
std::vector<Cusp> cusps_by_development(const SidePairing& p);

// Faithful affine action of the stabilizer of a lightlike integral vector on an integral
// chart of its horosphere. Throws std::invalid_argument if g does not fix `base`.
class HorosphereChart {
   public:
    explicit HorosphereChart(const Vec6& base);
    Affine4 affine(const Mat6& g) const;

   private:
    Vec6 base_;
    std::array<Vec6, 4> basis_{};      // lifts of the chart basis in base^perp
    std::array<std::array<std::int64_t, 6>, 4> coords_{};  // base^perp -> Z^4, kills base
};

// Link invariants are cached by the cusp group's defining data when it comes from
// the stabilizer route.
LinkInvariants stabilizer_link_invariants(const std::array<std::uint8_t, 8>& axes);

// Letter A..L (or P) of a link. F/G and I/J are separated by the multiset of
// index-two abelianizations; see link_type_calibration().
char link_letter(const LinkInvariants& inv);

struct CalibrationReport {
    bool fg_separated = false;  // the index-two invariant takes exactly two values on F/G groups
    bool ij_separated = false;
    int reference_groups = 0;   // torsion-free orientable cube-colouring groups examined
    std::vector<std::string> lines;
};
CalibrationReport link_type_calibration();

// Link-type string: letters sorted, and for 12-cusped manifolds the small cusps
// first and the four large cusps last.
std::string link_type_string(const PairingCode& code);

int cusp_count(const PairingCode& code);

}  // namespace hyp5
