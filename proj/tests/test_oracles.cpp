#include "hrep/config.hpp"
#include "hrep/kernels.hpp"
#include "hrep/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hrep;

namespace {

Element xp(long c, int e) { return Element::monomial(ring_x(), Int(c), {e}); }

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
    BraidWord b{n, {}};
    std::uniform_int_distribution<int> idx(1, n - 1), sg(0, 1);
    for (int k = 0; k < len; ++k)
        b.letters.push_back({idx(rng), sg(rng) ? 1 : -1});
    return b;
}

}  // namespace

TEST_CASE("Fox derivatives") {
    FreeWord w{2, {1, 2, -1}};
    CHECK(fox_derivative(w, 1) == xp(1, 0) - xp(1, 1));
    CHECK(fox_derivative(w, 2) == xp(1, 1));
    CHECK(fox_derivative(FreeWord{1, {}}, 1).is_zero());
    CHECK(fox_derivative(FreeWord{1, {-1}}, 1) == xp(-1, -1));
}

TEST_CASE("unreduced Burau of B_2") {
    RepMatrix s = burau_unreduced(BraidWord{2, {{1, 1}}});
    CHECK(s.at(0, 0).is_zero());
    CHECK(s.at(0, 1) == xp(1, 0));
    CHECK(s.at(1, 0) == xp(1, -1));
    CHECK(s.at(1, 1) == xp(1, 0) - xp(1, -1));
}

TEST_CASE("Burau: fixed vector, multiplicativity, unimodular at x = 1") {
    std::mt19937_64 rng(11);
    const std::vector<Element> one{Element(ring_z(), 1)};
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + trial % 5;
        BraidWord a = random_braid(rng, n, 4), b = random_braid(rng, n, 4);
        RepMatrix A = burau_unreduced(a), B = burau_unreduced(b);
        CHECK(burau_unreduced(concat(a, b)) == A * B);
        if (trial % 50 == 0) {
            // row sums are 1
            for (std::size_t i = 0; i < A.rows(); ++i) {
                Element s(ring_x());
                for (std::size_t j = 0; j < A.cols(); ++j)
                    s += A.at(i, j);
                CHECK(s.is_one());
            }
            Element d = determinant(substitute(A, ring_z(), one));
            CHECK(gre_is_unit(d));
        }
    }
}

TEST_CASE("comparator finds the identity witness and rejects corrupted data") {
    const Calibration& cal = active_calibration();
    for (int n = 2; n <= 6; ++n) {
        Verdict v = compare_burau(n, cal, true);
        REQUIRE(v.match);
        CHECK(v.witness->substitution == std::vector<std::string>{"x->x"});
        for (const auto& d : v.witness->diagonal)
            CHECK(d.is_one());
    }
    auto A = lb_generator_list(1, 4, cal);
    auto B = burau_generator_list(4);
    A[1].set(0, 0, A[1].at(0, 0) + xp(1, 3));
    CHECK_FALSE(compare_reps(A, B).match);
}

TEST_CASE("transcribed LKB matrices") {
    for (int n = 3; n <= 5; ++n) {
        std::vector<RepMatrix> pos, neg;
        for (int i = 1; i < n; ++i) {
            pos.push_back(lkb_reference(n, i));
            auto inv = inverse_unit_pivot(pos.back());
            REQUIRE(inv.has_value());
            neg.push_back(*inv);
        }
        CHECK_FALSE(check_braid_relations(pos, neg).has_value());
        CHECK(pos.front().rows() == static_cast<std::size_t>(n * (n - 1) / 2));
        Verdict v = compare_lkb(n, active_calibration());
        CHECK_MESSAGE(v.match, v.counterexample);
    }
}

TEST_CASE("oracle digest is stable") {
    const Calibration& cal = active_calibration();
    CHECK(oracle_digest(cal) == oracle_digest(cal));
    Calibration other = cal;
    other.winding_sign = -cal.winding_sign;
    CHECK(oracle_digest(other) != oracle_digest(cal));
}
