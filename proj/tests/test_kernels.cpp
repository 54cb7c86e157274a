#include "hrep/config.hpp"
#include "hrep/kernels.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace hrep;

TEST_CASE("parallel matmul equals serial") {
    std::mt19937_64 rng(3);
    for (auto ring : {ring_x(), ring_qt(), ring_z()})
        for (int trial = 0; trial < 10; ++trial) {
            RepMatrix a = test::random_matrix(rng, ring, 9, 7), b = test::random_matrix(rng, ring, 7, 11);
            CHECK(matmul_serial(a, b) == matmul_parallel(a, b));
            CHECK(matmul_serial(a, b) == a * b);
        }
}

TEST_CASE("chain product") {
    std::mt19937_64 rng(5);
    RepMatrix a = test::random_matrix(rng, ring_qt(), 5, 5), b = test::random_matrix(rng, ring_qt(), 5, 5),
              c = test::random_matrix(rng, ring_qt(), 5, 5);
    CHECK(chain_product({&a, &b, &c}, false) == a * b * c);
    CHECK(chain_product({&a, &b, &c}, true) == a * b * c);
}

TEST_CASE("parallel generator assembly equals serial") {
    const Calibration& cal = active_calibration();
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 5; ++n) {
            GeneratorSet s = assemble_generators_serial(m, n, cal), p = assemble_generators_parallel(m, n, cal);
            REQUIRE(s.pos.size() == p.pos.size());
            for (std::size_t i = 0; i < s.pos.size(); ++i) {
                CHECK(s.pos[i] == p.pos[i]);
                CHECK(s.neg[i] == p.neg[i]);
                CHECK((s.pos[i] * s.neg[i]).is_identity());
            }
        }
}
