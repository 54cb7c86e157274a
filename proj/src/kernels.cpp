#include "hrep/kernels.hpp"

#include "hrep/forkcalc.hpp"

#include <exception>
#include <map>
#include <stdexcept>

namespace hrep {

namespace {

void check_shapes(const RepMatrix& a, const RepMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: shape mismatch");
}

std::map<std::size_t, Element> product_column(const RepMatrix& a, const RepMatrix& b, std::size_t j) {
    std::map<std::size_t, Element> out;
    for (const auto& [k, bkj] : b.column(j))
        for (const auto& [i, aik] : a.column(k)) {
            auto it = out.find(i);
            if (it == out.end())
                out.emplace(i, aik * bkj);
            else
                it->second += aik * bkj;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

RingPtr product_ring(const RepMatrix& a, const RepMatrix& b) { return a.ring() ? a.ring() : b.ring(); }

RepMatrix finish(const RepMatrix& a, const RepMatrix& b, RepMatrix c) {
    c.row_labels = a.row_labels;
    c.col_labels = b.col_labels;
    return c;
}

}  // namespace

RepMatrix matmul_serial(const RepMatrix& a, const RepMatrix& b) {
    check_shapes(a, b);
    RepMatrix c(product_ring(a, b), a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        c.column_mut(j) = product_column(a, b, j);
    return finish(a, b, std::move(c));
}

RepMatrix matmul_parallel(const RepMatrix& a, const RepMatrix& b) {
    check_shapes(a, b);
    RepMatrix c(product_ring(a, b), a.rows(), b.cols());
    const long ncols = static_cast<long>(b.cols());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < ncols; ++j)
        c.column_mut(static_cast<std::size_t>(j)) = product_column(a, b, static_cast<std::size_t>(j));
    return finish(a, b, std::move(c));
}

RepMatrix chain_product(const std::vector<const RepMatrix*>& factors, bool parallel) {
    if (factors.empty())
        throw std::invalid_argument("chain_product: no factors");
    RepMatrix acc = *factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        acc = parallel ? matmul_parallel(acc, *factors[k]) : matmul_serial(acc, *factors[k]);
    return acc;
}

namespace {

GeneratorSet empty_set(int m, int n) {
    if (m < 1 || n < 2)
        throw std::invalid_argument("assemble_generators: m >= 1 and n >= 2 required");
    GeneratorSet g;
    auto basis = enum_P(m, n - 1);
    for (int i = 1; i < n; ++i)
        for (auto* v : {&g.pos, &g.neg}) {
            RepMatrix M(ring_for_m(m), basis.size(), basis.size());
            M.row_labels = basis;
            M.col_labels = basis;
            v->push_back(std::move(M));
        }
    return g;
}

void fill_column(RepMatrix& M, const std::map<Partition, std::size_t>& index, std::size_t col, const Combination& c) {
    for (const auto& [p, e] : c)
        M.set(index.at(p), col, e);
}

std::map<Partition, std::size_t> basis_index(int m, int n) {
    std::map<Partition, std::size_t> index;
    auto basis = enum_P(m, n - 1);
    for (std::size_t k = 0; k < basis.size(); ++k)
        index[basis[k]] = k;
    return index;
}

}  // namespace

GeneratorSet assemble_generators_serial(int m, int n, const Calibration& cal) {
    GeneratorSet g = empty_set(m, n);
    auto index = basis_index(m, n);
    auto basis = enum_P(m, n - 1);
    for (int i = 1; i < n; ++i)
        for (std::size_t col = 0; col < basis.size(); ++col) {
            fill_column(g.pos[i - 1], index, col, generator_column(m, n, i, 1, basis[col], cal));
            fill_column(g.neg[i - 1], index, col, generator_column(m, n, i, -1, basis[col], cal));
        }
    return g;
}

GeneratorSet assemble_generators_parallel(int m, int n, const Calibration& cal) {
    GeneratorSet g = empty_set(m, n);
    auto index = basis_index(m, n);
    auto basis = enum_P(m, n - 1);
    const long cols = static_cast<long>(basis.size());
    const long total = 2L * (n - 1) * cols;
    std::exception_ptr failure;
    // Each task writes one column of one matrix; columns are disjoint maps.
#pragma omp parallel for schedule(dynamic)
    for (long task = 0; task < total; ++task) {
        const long col = task % cols;
        const long gen = task / cols;
        const int i = static_cast<int>(gen / 2) + 1;
        const int sign = gen % 2 == 0 ? 1 : -1;
        RepMatrix& M = sign > 0 ? g.pos[i - 1] : g.neg[i - 1];
        try {
            Combination c = generator_column(m, n, i, sign, basis[static_cast<std::size_t>(col)], cal);
            auto& dst = M.column_mut(static_cast<std::size_t>(col));
            for (const auto& [p, e] : c)
                dst[index.at(p)] = e;
        } catch (...) {
#pragma omp critical(hrep_kernel_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return g;
}

}  // namespace hrep
