// Sparse matrices over a group ring, with basis labels.
#pragma once

#include "hrep/groupring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hrep {

using Label = std::vector<int>;

// Column-major sparse matrix: cols[j] maps row index -> nonzero entry.
// Column j is the image of the j-th source basis vector.
class RepMatrix {
  public:
    RepMatrix() = default;
    RepMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static RepMatrix identity(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }

    const Element& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Element v);
    void add(std::size_t i, std::size_t j, const Element& v);
    const std::map<std::size_t, Element>& column(std::size_t j) const { return cols_[j]; }
    std::map<std::size_t, Element>& column_mut(std::size_t j) { return cols_[j]; }
    std::size_t nnz() const;

    std::vector<Label> row_labels;
    std::vector<Label> col_labels;

    RepMatrix transpose() const;
    bool operator==(const RepMatrix& o) const;  // entries and shape only
    bool operator!=(const RepMatrix& o) const { return !(*this == o); }
    bool is_identity() const;

    // JSON in the schema {"ring","rows","cols","row_labels","col_labels","entries"}.
    json to_json() const;
    static RepMatrix from_json(const json& j);
    std::string to_latex() const;

  private:
    RingPtr ring_;
    std::size_t rows_ = 0;
    std::vector<std::map<std::size_t, Element>> cols_;
};

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
RepMatrix operator+(const RepMatrix& a, const RepMatrix& b);
RepMatrix operator-(const RepMatrix& a, const RepMatrix& b);

// Entrywise ring homomorphism.
RepMatrix substitute(const RepMatrix& a, const RingPtr& target, const std::vector<Element>& images);

// Inverse by Gauss-Jordan elimination using trivial-unit pivots only.
// Returns nullopt if some step finds no unit pivot.
std::optional<RepMatrix> inverse_unit_pivot(const RepMatrix& a);

// Determinant by expansion over column subsets; only for n <= 20.
Element determinant(const RepMatrix& a);

// First differing entry, formatted for counterexample reports.
std::optional<std::string> first_difference(const RepMatrix& a, const RepMatrix& b);

std::string label_string(const Label& l);

// 64-bit FNV-1a digest of a string.
std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

}  // namespace hrep
