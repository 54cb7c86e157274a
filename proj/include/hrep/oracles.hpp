// Independent cross-checks: Fox-calculus Burau matrices (rank one),
// transcribed Lawrence-Krammer-Bigelow matrices (rank two), and the
// comparator that searches the finite set of conventions relating two
// families of matrices.
#pragma once

#include "hrep/forkcalc.hpp"
#include "hrep/matrix.hpp"
#include "hrep/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hrep {

// Abelianized Fox derivative d(w)/d(x_j) in Z[x^+-], every x_i -> x.
Element fox_derivative(const FreeWord& w, int j);

// Entry (i,j) = fox_derivative(artin_act(b, x_i), j); multiplicative in b.
RepMatrix burau_unreduced(const BraidWord& b);
// The induced action on the quotient by the fixed all-ones vector, in the
// difference basis e_i - e_{i+1}; (n-1) x (n-1).
RepMatrix burau_reduced(const BraidWord& b);

// Transcribed Krammer matrix of sigma_i on the C(n,2)-dimensional basis
// x_{j,k}, from data/lkb_generators.json; n <= 6.
const RepMatrix& lkb_reference(int n, int i);
// Basis change from Krammer's x_{i,j} to the partition basis of LB_2(n):
// x_{i,j} = sum_{i <= a <= b <= j-1} q^(b-i) e_(a,b).
RepMatrix lkb_fork_basis(int n);

struct CompareOptions {
    bool allow_transpose = true;
    bool allow_substitution = true;  // false: variables map to themselves
    bool allow_signs = false;  // v -> -v^(+-1) in addition to v -> v^(+-1)
    std::optional<RepMatrix> basis_change;  // A -> P^-1 A P before anything else
    std::string basis_change_name;
};

struct Witness {
    std::vector<std::string> substitution;  // image of each variable, printed
    bool transposed = false;
    std::string basis_change;
    std::vector<Element> diagonal;
    json to_json() const;
};

struct Verdict {
    bool match = false;
    std::optional<Witness> witness;
    std::string counterexample;
    json to_json() const;
};

// Searches substitutions x interpreted as images of A's ring variables,
// an optional transpose, and a diagonal monomial rescaling D with
// D^-1 phi(A_k) D = B_k for all k simultaneously.
Verdict compare_reps(const std::vector<RepMatrix>& A, const std::vector<RepMatrix>& B, const CompareOptions& opt = {});

// Generator matrices sigma_1..sigma_{n-1} then their inverses.
std::vector<RepMatrix> lb_generator_list(int m, int n, const Calibration& cal);
std::vector<RepMatrix> burau_generator_list(int n);

// literal: Fox matrices taken with x -> x (transpose and diagonal still allowed)
Verdict compare_burau(int n, const Calibration& cal, bool literal = false);
Verdict compare_lkb(int n, const Calibration& cal);

// Braid relations, far commutation and inverse pairs of a generator list
// (pos followed by neg); returns the first violated relation.
std::optional<std::string> check_braid_relations(const std::vector<RepMatrix>& pos, const std::vector<RepMatrix>& neg);

struct CandidateResult {
    Calibration calibration;
    bool burau_ok = false;
    bool braid_ok = false;
    std::string detail;
};

struct CalibrationSearch {
    std::vector<CandidateResult> results;
    std::vector<Calibration> accepted() const;
};

// (a) rank-one matrices match the literal Burau matrices for 2 <= n <= burau_max_n,
// (b) rank-two matrices satisfy the braid relations for n <= braid_max_n.
CalibrationSearch calibration_search(int burau_max_n = 5, int braid_max_n = 4);

// Digest of the oracle evidence for a calibration: the witnesses and the
// matrices they were computed from.
std::string oracle_digest(const Calibration& cal);

}  // namespace hrep
