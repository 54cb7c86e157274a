// Group presentations, Smith normal form over Z, abelian invariants.
#pragma once

#include "hrep/groupring.hpp"

#include <string>
#include <vector>

namespace hrep {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    bool operator==(const IntMatrix& o) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    IntMatrix transpose() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& a);

struct SNF {
    IntMatrix D, U, V;  // U * A * V = D
};
SNF snf(const IntMatrix& a);

struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // each >= 2, d_i | d_{i+1}
    bool operator==(const AbelianGroup&) const = default;
    std::string to_string() const;  // "Z^2 + Z/2", "0"
    json to_json() const;
};

// Abelian group Z^cols / rowspace(rel).
AbelianGroup cokernel_of_rows(const IntMatrix& rel);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;  // signed 1-based generator indices

    int generator_index(const std::string& name) const;  // 1-based, throws if unknown
    // Parse a token "name", "name^-1", "name^k".
    std::vector<int> parse_word(const std::vector<std::string>& tokens) const;
    std::vector<int> parse_word(const std::string& text) const;
    void add_relation(const std::string& lhs, const std::string& rhs);  // lhs rhs^-1
    void add_relator(const std::string& word);

    json to_json() const;
    static Presentation from_json(const json& j);
    void validate() const;
};

class presentation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

IntMatrix relator_matrix(const Presentation& p);
AbelianGroup abelianization(const Presentation& p);

// Element of Z^a + (Z/2)^b: a integer coordinates then b bits.
struct AmbientElement {
    std::vector<long> free;
    std::vector<int> bits;
};

// Lattice of relations among the generators of the subgroup of
// Z^a + (Z/2)^b they span: rows r with sum r_k g_k = 0.
IntMatrix subgroup_relations(int a, int b, const std::vector<AmbientElement>& gens);
AbelianGroup subgroup_image(int a, int b, const std::vector<AmbientElement>& gens);
// The spanned subgroup modulo extra relations given in generator coordinates.
AbelianGroup subgroup_image_quotient(int a, int b, const std::vector<AmbientElement>& gens,
                                     const std::vector<std::vector<long>>& extra);

enum class SurfaceKind { Orientable, NonOrientable };

// Orientable: generators s1..s{n-1}, a1..ag, b1..bg, x1..xs.
// Non-orientable: s1..s{n-1}, c1..cc, x1..xs.
// Orientable genus 0 gives B_n(D_s).
Presentation bellingeri_presentation(SurfaceKind kind, int genus, int punctures, int strands);

// Generators s1..s{n-1}, t1..t{n-1} and, when extended, r1..rn. Mixed
// relations are read from loop_braid_relations.json in the data directory.
Presentation loop_braid_presentation(int n, bool extended);
Presentation braid_presentation(int n);

// Candidate quotient groups of the alpha/beta/gamma constructions.
struct QuotientImageCase {
    std::string family;  // alpha, beta, gamma
    int m = 1;
    int a = 0, b = 0;
    std::vector<AmbientElement> gens;
    std::vector<std::vector<long>> extra;
    AbelianGroup expected;
    std::string ambient_description;
};
QuotientImageCase quotient_image_case(const std::string& family, int m);
AbelianGroup quotient_image(const QuotientImageCase& c);

}  // namespace hrep
