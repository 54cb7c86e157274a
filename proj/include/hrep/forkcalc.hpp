// Arc rewriting for the action of Artin generators on the partition basis
// of LB_m(n).
//
// A basis vector w in P_m(n-1) is the diagram with w_i points on the
// straight arc (p_i, p_{i+1}). The half-twist sigma_i^eps moves the arcs at
// intervals i-1, i, i+1; the moved diagram is resolved by
//   R1  an Under-routed arc across one puncture splits into its two
//       sub-arcs, sum over the distributions of its points, unit coefficients;
//   R2  an Over-routed arc splits likewise at cost q^(eps s k), k the number
//       of points landing on the sub-arc next to the swapped pair
//       (or all mu points, under the WholeArc placement);
//   R3  a reversed block of mu points contributes
//       sign(mu) t^(eps e(mu)) q^(eps s mu);
//   R4  layers of points sharing an interval merge with the Gaussian
//       multinomial in -t^eps.
// s, e and sign come from the Calibration.
#pragma once

#include "hrep/groupring.hpp"
#include "hrep/matrix.hpp"
#include "hrep/partitions.hpp"

#include <string>
#include <vector>

namespace hrep {

enum class Route { Under, Over };

struct Arc {
    int left = 0;   // puncture index, 1-based
    int right = 0;  // > left
    std::vector<Route> routing;  // one flag per intermediate puncture
    int mult = 0;
    bool reversed = false;
    int layer = 0;
};

struct ArcDiagram {
    int m = 0;
    int n = 0;
    int twist = 1;  // sign of the half-twist that produced the diagram
    std::vector<Arc> arcs;
    Element coefficient;
};

enum class TwistRule { Zero, Mu, HalfMuMuMinus1, MuMuMinus1 };
enum class SignRule { Plus, PowMu, PowHalfMuMuMinus1, PowHalfMuMuPlus1 };
enum class Placement { MovedSubarc, WholeArc };

struct Calibration {
    int winding_sign = -1;
    TwistRule twist = TwistRule::HalfMuMuMinus1;
    SignRule sign = SignRule::PowHalfMuMuPlus1;
    Placement placement = Placement::MovedSubarc;

    int twist_exponent(int mu) const;
    int reversal_sign(int mu) const;
    bool operator==(const Calibration&) const = default;
    std::string describe() const;
    json to_json() const;
    static Calibration from_json(const json& j);
};

std::vector<Calibration> calibration_candidates();

class calibration_mismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Combination = std::vector<std::pair<Partition, Element>>;

std::vector<ArcDiagram> std_basis(int m, int n);
ArcDiagram halftwist_image(int m, int n, const Partition& w, int i, int sign);
// Total routing length, the measure that every R1/R2 step decreases.
int routing_length(const ArcDiagram& d);
Combination normalize(const ArcDiagram& d, const Calibration& cal);

// Column w of the generator matrix, coefficients in Z[q,t] (projected to
// Z[x], q -> x, when m = 1).
Combination generator_column(int m, int n, int i, int sign, const Partition& w, const Calibration& cal);
RepMatrix generator_matrix(int m, int n, int i, int sign, const Calibration& cal);

}  // namespace hrep
