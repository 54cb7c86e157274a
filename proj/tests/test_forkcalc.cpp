#include "hrep/config.hpp"
#include "hrep/forkcalc.hpp"
#include "hrep/kernels.hpp"
#include "hrep/oracles.hpp"

#include <doctest.h>

using namespace hrep;

namespace {

Element qt(long c, int qe, int te) { return Element::monomial(ring_qt(), Int(c), {qe, te}); }

Element coeff(const Combination& c, const Partition& w) {
    for (const auto& [p, e] : c)
        if (p == w)
            return e;
    return Element(ring_qt());
}

}  // namespace

TEST_CASE("standard basis") {
    CHECK(std_basis(2, 3).size() == 3);
    CHECK(std_basis(3, 1).empty());
    CHECK(std_basis(1, 4).size() == 3);
    auto b = std_basis(2, 3);
    CHECK(b[0].arcs.size() == 1);
    CHECK(b[0].arcs[0].mult == 2);
    CHECK(b[1].arcs.size() == 2);
}

TEST_CASE("normalize: straight arcs and single-arc splits") {
    const Calibration cal;
    ArcDiagram d{2, 3, 1, {{1, 3, {Route::Under}, 2, false, 0}}, qt(1, 0, 0)};
    Combination c = normalize(d, cal);
    CHECK(c.size() == 3);
    for (const auto& [p, e] : c)
        CHECK(e.is_one());

    ArcDiagram s{2, 3, 1, {{1, 2, {}, 1, false, 0}, {2, 3, {}, 1, false, 0}}, qt(1, 0, 0)};
    Combination cs = normalize(s, cal);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].first == Partition{1, 1});
    CHECK(cs[0].second.is_one());

    // an over-arc pays the winding on the sub-arc next to the swapped pair
    const int sw = cal.winding_sign;
    ArcDiagram o{1, 3, 1, {{1, 3, {Route::Over}, 1, false, 0}}, qt(1, 0, 0)};
    Combination co = normalize(o, cal);
    CHECK(coeff(co, {1, 0}) == qt(1, sw, 0));
    CHECK(coeff(co, {0, 1}) == qt(1, 0, 0));
    o.twist = -1;
    co = normalize(o, cal);
    CHECK(coeff(co, {1, 0}) == qt(1, 0, 0));
    CHECK(coeff(co, {0, 1}) == qt(1, -sw, 0));
}

TEST_CASE("reversal and merge rules") {
    const Calibration cal;
    // a reversed block of two points alone on an interval
    ArcDiagram r{2, 3, 1, {{1, 2, {}, 2, true, 1}}, qt(1, 0, 0)};
    Combination c = normalize(r, cal);
    REQUIRE(c.size() == 1);
    // sign (-1)^(2*3/2) = -1, t^(1), q^(s*2)
    CHECK(c[0].second == qt(-1, 2 * cal.winding_sign, 1));
    // two layers of one point each merge with [1,1]_{-t} = 1 - t
    ArcDiagram m{2, 3, 1, {{1, 2, {}, 1, false, 0}, {1, 2, {}, 1, false, 2}}, qt(1, 0, 0)};
    Combination cm = normalize(m, cal);
    REQUIRE(cm.size() == 1);
    CHECK(cm[0].second == qt(1, 0, 0) - qt(1, 0, 1));
}

TEST_CASE("half-twist geometry") {
    ArcDiagram d = halftwist_image(2, 4, {1, 0, 1}, 2, 1);
    REQUIRE(d.arcs.size() == 2);
    CHECK(d.arcs[0].routing == std::vector<Route>{Route::Under});
    CHECK(d.arcs[1].routing == std::vector<Route>{Route::Over});
    ArcDiagram e = halftwist_image(2, 4, {1, 0, 1}, 2, -1);
    CHECK(e.arcs[0].routing == std::vector<Route>{Route::Over});
    CHECK_THROWS_AS(halftwist_image(2, 4, {1, 0, 1}, 4, 1), std::out_of_range);
    CHECK_THROWS_AS(halftwist_image(2, 4, {1, 1, 1}, 1, 1), std::invalid_argument);
}

TEST_CASE("rank one generators are the transposed reduced Burau matrices") {
    const Calibration& cal = active_calibration();
    for (int n = 2; n <= 7; ++n)
        for (int i = 1; i < n; ++i)
            for (int sign : {1, -1}) {
                RepMatrix A = generator_matrix(1, n, i, sign, cal);
                RepMatrix B = burau_reduced(BraidWord{n, {{i, sign}}}).transpose();
                CHECK(A == B);
            }
}

TEST_CASE("inverses, braid relations, locality, unit determinants") {
    const Calibration& cal = active_calibration();
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 5; ++n) {
            GeneratorSet g = assemble_generators_serial(m, n, cal);
            CHECK_FALSE(check_braid_relations(g.pos, g.neg).has_value());
            auto basis = enum_P(m, n - 1);
            for (int i = 1; i < n; ++i) {
                CHECK(gre_is_unit(determinant(g.pos[i - 1])));
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    const auto& w = basis[c];
                    bool far = w[i - 1] == 0 && (i < 2 || w[i - 2] == 0) && (i > n - 2 || w[i] == 0);
                    if (!far)
                        continue;
                    const auto& col = g.pos[i - 1].column(c);
                    CHECK(col.size() == 1);
                    CHECK(col.begin()->first == c);
                    CHECK(col.begin()->second.is_one());
                }
            }
        }
}

TEST_CASE("the rank two relation s1 s2 s1 = s2 s1 s2 at n = 3") {
    const Calibration& cal = active_calibration();
    RepMatrix a = generator_matrix(2, 3, 1, 1, cal), b = generator_matrix(2, 3, 2, 1, cal);
    CHECK(a * b * a == b * a * b);
    CHECK(a.rows() == 3);
}

TEST_CASE("calibration search accepts exactly the stored calibration") {
    CalibrationSearch s = calibration_search(4, 4);
    auto acc = s.accepted();
    REQUIRE(acc.size() == 1);
    CHECK(acc.front() == active_calibration());
    CHECK(s.results.size() == calibration_candidates().size());
    // candidates with e(mu) in {0, mu, mu(mu-1)} all fail
    for (const auto& r : s.results)
        if (r.calibration.twist != TwistRule::HalfMuMuMinus1)
            CHECK_FALSE((r.burau_ok && r.braid_ok));
}

TEST_CASE("calibration json") {
    Calibration c;
    CHECK(Calibration::from_json(c.to_json()) == c);
    json bad = c.to_json();
    bad["block_twist"] = "mu^2";
    CHECK_THROWS(Calibration::from_json(bad));
    CHECK(c.reversal_sign(1) == -1);
    CHECK(c.reversal_sign(3) == 1);
    CHECK(c.twist_exponent(3) == 3);
}
