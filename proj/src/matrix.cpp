#include "hrep/matrix.hpp"

#include "hrep/kernels.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hrep {

namespace {
const Element& zero_element() {
    static const Element z;
    return z;
}
}  // namespace

RepMatrix::RepMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {}

RepMatrix RepMatrix::identity(RingPtr ring, std::size_t n) {
    RepMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.cols_[i].emplace(i, Element(ring, 1));
    return m;
}

const Element& RepMatrix::at(std::size_t i, std::size_t j) const {
    const auto& c = cols_.at(j);
    auto it = c.find(i);
    return it == c.end() ? zero_element() : it->second;
}

void RepMatrix::set(std::size_t i, std::size_t j, Element v) {
    if (i >= rows_ || j >= cols_.size())
        throw std::out_of_range("RepMatrix::set index out of range");
    if (v.is_zero())
        cols_[j].erase(i);
    else
        cols_[j][i] = std::move(v);
}

void RepMatrix::add(std::size_t i, std::size_t j, const Element& v) {
    if (v.is_zero())
        return;
    if (i >= rows_ || j >= cols_.size())
        throw std::out_of_range("RepMatrix::add index out of range");
    auto it = cols_[j].find(i);
    if (it == cols_[j].end()) {
        cols_[j].emplace(i, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        cols_[j].erase(it);
}

std::size_t RepMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_)
        n += c.size();
    return n;
}

RepMatrix RepMatrix::transpose() const {
    RepMatrix t(ring_, cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j])
            t.cols_[i].emplace(j, v);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
}

bool RepMatrix::operator==(const RepMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols())
        return false;
    for (std::size_t j = 0; j < cols(); ++j) {
        const auto& a = cols_[j];
        const auto& b = o.cols_[j];
        if (a.size() != b.size())
            return false;
        for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second)
                return false;
    }
    return true;
}

bool RepMatrix::is_identity() const {
    if (rows_ != cols())
        return false;
    for (std::size_t j = 0; j < cols(); ++j) {
        const auto& c = cols_[j];
        if (c.size() != 1 || c.begin()->first != j || !c.begin()->second.is_one())
            return false;
    }
    return true;
}

json RepMatrix::to_json() const {
    json entries = json::array();
    // row-major order for readability and determinism
    std::vector<std::vector<std::pair<std::size_t, const Element*>>> by_row(rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j])
            by_row[i].emplace_back(j, &v);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : by_row[i])
            entries.push_back(json::array({i, j, v->to_json()}));
    return json{{"ring", ring_ ? ring_->to_json() : json(nullptr)},
                {"rows", rows_},
                {"cols", cols()},
                {"row_labels", row_labels},
                {"col_labels", col_labels},
                {"entries", entries}};
}

RepMatrix RepMatrix::from_json(const json& j) {
    auto ring = std::make_shared<const RingDescriptor>(RingDescriptor::from_json(j.at("ring")));
    RepMatrix m(ring, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    if (j.contains("row_labels"))
        m.row_labels = j.at("row_labels").get<std::vector<Label>>();
    if (j.contains("col_labels"))
        m.col_labels = j.at("col_labels").get<std::vector<Label>>();
    for (const auto& e : j.at("entries"))
        m.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), Element::from_json(ring, e.at(2)));
    return m;
}

std::string RepMatrix::to_latex() const {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            if (j)
                os << " & ";
            std::string s = at(i, j).to_string();
            std::string out;
            for (char ch : s)
                out += ch == '*' ? std::string(" ") : std::string(1, ch);
            os << out;
        }
        os << (i + 1 < rows_ ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) { return matmul_serial(a, b); }

RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    RepMatrix r = a;
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [i, v] : b.column(j))
            r.add(i, j, v);
    return r;
}

RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    RepMatrix r = a;
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [i, v] : b.column(j))
            r.add(i, j, -v);
    return r;
}

RepMatrix substitute(const RepMatrix& a, const RingPtr& target, const std::vector<Element>& images) {
    RepMatrix r(target, a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.column(j))
            r.set(i, j, substitute(v, target, images));
    r.row_labels = a.row_labels;
    r.col_labels = a.col_labels;
    return r;
}

std::optional<RepMatrix> inverse_unit_pivot(const RepMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols())
        return std::nullopt;
    // dense working copy [A | I], row operations
    std::vector<std::vector<Element>> w(n, std::vector<Element>(2 * n));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [i, v] : a.column(j))
            w[i][j] = v;
    for (std::size_t i = 0; i < n; ++i)
        w[i][n + i] = Element(a.ring(), 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        for (std::size_t r = c; r < n; ++r)
            if (gre_is_unit(w[r][c])) {
                p = r;
                break;
            }
        if (p == n)
            return std::nullopt;
        std::swap(w[c], w[p]);
        Element inv = gre_unit_inverse(w[c][c]);
        for (auto& e : w[c])
            if (!e.is_zero())
                e = e * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || w[r][c].is_zero())
                continue;
            Element f = w[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k)
                if (!w[c][k].is_zero())
                    w[r][k] -= f * w[c][k];
        }
    }
    RepMatrix inv(a.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.set(i, j, w[i][n + j]);
    inv.row_labels = a.col_labels;
    inv.col_labels = a.row_labels;
    return inv;
}

Element determinant(const RepMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n > 20)
        throw std::invalid_argument("determinant: matrix too large for subset expansion");
    if (n == 0)
        return Element(a.ring(), 1);
    // f[S] = signed sum over bijections rows {0..|S|-1} -> S
    std::vector<Element> f(std::size_t(1) << n, Element(a.ring()));
    f[0] = Element(a.ring(), 1);
    for (std::size_t s = 1; s < f.size(); ++s) {
        std::size_t r = __builtin_popcountll(s) - 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(s & (std::size_t(1) << c)))
                continue;
            const Element& e = a.at(r, c);
            const Element& sub = f[s & ~(std::size_t(1) << c)];
            if (e.is_zero() || sub.is_zero())
                continue;
            // sign: parity of elements of S greater than c
            int above = __builtin_popcountll(s >> (c + 1));
            if (above % 2)
                f[s] -= e * sub;
            else
                f[s] += e * sub;
        }
    }
    return f.back();
}

std::string label_string(const Label& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(l[i]);
    }
    return s + ")";
}

std::optional<std::string> first_difference(const RepMatrix& a, const RepMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
               std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a.at(i, j) != b.at(i, j)) {
                std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                if (i < a.row_labels.size() && j < a.col_labels.size())
                    where += " [" + label_string(a.row_labels[i]) + " <- " + label_string(a.col_labels[j]) + "]";
                return where + ": " + a.at(i, j).to_string() + " vs " + b.at(i, j).to_string();
            }
    return std::nullopt;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace hrep
