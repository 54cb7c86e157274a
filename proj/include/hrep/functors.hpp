// Functors on the bracket category of the braid groupoid, tabulated up to
// an object cutoff, and the translation/difference/evanescence operations.
#pragma once

#include "hrep/forkcalc.hpp"
#include "hrep/matrix.hpp"
#include "hrep/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hrep {

class functor_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TabulatedFunctor {
    std::string name;
    RingPtr ring;
    int cutoff = 0;
    bool ranks_only = false;
    std::vector<std::vector<Label>> labels;       // objects 0..cutoff
    std::vector<std::vector<RepMatrix>> gen_pos;  // gen_pos[n][i-1] = F(sigma_i) on F(n)
    std::vector<std::vector<RepMatrix>> gen_neg;
    std::vector<RepMatrix> stab;                  // stab[n] = F([1, id_{1+n}]) : F(n) -> F(n+1), n < cutoff
    // Ranks-only insertion rule: stab inserts `block` zeros into a label at
    // index label_offset + slot * block.
    int slot = 0;
    int block = 1;
    int label_offset = 0;

    std::size_t rank(int n) const { return labels.at(n).size(); }
    bool is_zero() const;
};

TabulatedFunctor lb_tabulate(int m, int cutoff, const Calibration& cal);
TabulatedFunctor lb_tabulate(int m, int cutoff);
// LB_0: zero at objects 0 and 1, Z[x^+-] with trivial action elsewhere.
TabulatedFunctor lb0_tabulate(int cutoff);
// Constant functor of the given rank with identity stabilizations.
TabulatedFunctor constant_functor(RingPtr ring, std::size_t rank, int cutoff, bool ranks_only);
TabulatedFunctor moriyama_tabulate(int m, int cutoff);

// Labels of the inserted stabilization under the ranks-only rule.
Label insert_label(const TabulatedFunctor& F, const Label& l);

// Stabilization is a labeled coordinate injection (each column a distinct
// standard basis vector, labels matching the insertion rule when ranks-only).
std::optional<std::string> check_coordinate_injection(const TabulatedFunctor& F);

struct BracketMorphism {
    int source = 0;
    int target = 0;
    BraidWord braid;  // in B_target
};

RepMatrix word_matrix(const TabulatedFunctor& F, const BraidWord& w);
RepMatrix stab_power(const TabulatedFunctor& F, int n, int k);
RepMatrix eval(const TabulatedFunctor& F, const BracketMorphism& f);
// [B, psi] o [A, phi] = [B + A, psi o (id_B + phi)]
BracketMorphism compose(const BracketMorphism& g, const BracketMorphism& f);

std::optional<std::string> check_naturality(const TabulatedFunctor& F, int max_n);

// Cokernel of a matrix by unit-pivot elimination.
struct Cokernel {
    std::vector<std::size_t> complement;  // non-pivot rows: basis of the cokernel
    RepMatrix projection;                 // target -> cokernel
    RepMatrix section;                    // cokernel -> target (coordinate injection)
    std::size_t kernel_rank = 0;          // columns that reduced to zero
};
Cokernel unit_pivot_cokernel(const RepMatrix& S);

TabulatedFunctor translate(const TabulatedFunctor& F);
TabulatedFunctor difference(const TabulatedFunctor& F);
// Ranks of kappa_1 F(n) = ker stab[n] for n < cutoff.
std::vector<std::size_t> evanescence_ranks(const TabulatedFunctor& F);
TabulatedFunctor iterate_difference(const TabulatedFunctor& F, int k);

struct DegreeReport {
    std::string functor;
    int cutoff = 0;
    std::vector<std::vector<std::size_t>> delta_ranks;  // [k][n]
    std::vector<std::vector<std::size_t>> kappa_ranks;  // [k][n]
    std::optional<int> strong_degree;
    bool very_strong = false;
    std::optional<int> weak_degree;
    bool witness = false;  // i_1 bijective on delta^d F for objects >= 1
    std::string note;
    json to_json() const;
};
DegreeReport degree_report(const TabulatedFunctor& F, int max_k);

struct DiffevaResult {
    bool ok = false;
    std::string ring_map;
    std::vector<std::pair<Label, Label>> basis_map;  // on the top object
    std::string counterexample;
    json to_json() const;
};
DiffevaResult diffeva_check(int m, int cutoff);

}  // namespace hrep
