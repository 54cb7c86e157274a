// Hot kernels in two flavors: a serial reference and an OpenMP version.
// Both produce identical results; tests compare them entry by entry.
#pragma once

#include "hrep/matrix.hpp"

#include <vector>

namespace hrep {

struct Calibration;

RepMatrix matmul_serial(const RepMatrix& a, const RepMatrix& b);
RepMatrix matmul_parallel(const RepMatrix& a, const RepMatrix& b);

// Product of a list of matrices, left to right.
RepMatrix chain_product(const std::vector<const RepMatrix*>& factors, bool parallel);

// All generator matrices of B_n (sign +1 then sign -1 for each i) on
// LB_m(n). Serial: columns in order. Parallel: columns fanned out over threads.
struct GeneratorSet {
    std::vector<RepMatrix> pos;  // sigma_i, i = 1..n-1
    std::vector<RepMatrix> neg;  // sigma_i^-1
};
GeneratorSet assemble_generators_serial(int m, int n, const Calibration& cal);
GeneratorSet assemble_generators_parallel(int m, int n, const Calibration& cal);

}  // namespace hrep
