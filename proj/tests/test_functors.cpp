#include "hrep/functors.hpp"
#include "hrep/partitions.hpp"

#include <doctest.h>

#include <random>

using namespace hrep;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
    BraidWord b{n, {}};
    if (n < 2)
        return b;
    std::uniform_int_distribution<int> idx(1, n - 1), sg(0, 1);
    for (int k = 0; k < len; ++k)
        b.letters.push_back({idx(rng), sg(rng) ? 1 : -1});
    return b;
}

}  // namespace

TEST_CASE("LB_m ranks") {
    for (int m = 1; m <= 3; ++m) {
        TabulatedFunctor F = lb_tabulate(m, 6);
        CHECK(F.rank(0) == 0);
        CHECK(F.rank(1) == 0);
        for (int n = 2; n <= 6; ++n)
            CHECK(F.rank(n) == static_cast<std::size_t>(binomial(m + n - 2, m)));
    }
}

TEST_CASE("stabilization inserts a zero in front") {
    TabulatedFunctor F = lb_tabulate(1, 4);
    const RepMatrix& S = F.stab[3];
    CHECK(S.rows() == 3);
    CHECK(S.cols() == 2);
    // column (1,0) goes to (0,1,0)
    std::size_t c = 0;
    while (F.labels[3][c] != Label{1, 0})
        ++c;
    const auto& col = S.column(c);
    REQUIRE(col.size() == 1);
    CHECK(F.labels[4][col.begin()->first] == Label{0, 1, 0});
    CHECK_FALSE(check_coordinate_injection(F).has_value());
}

TEST_CASE("evaluation on identities and stabilizations") {
    TabulatedFunctor F = lb_tabulate(2, 5);
    for (int n = 2; n <= 5; ++n) {
        BracketMorphism id{n, n, BraidWord{n, {}}};
        CHECK(eval(F, id).is_identity());
    }
    BracketMorphism st{3, 4, BraidWord{4, {}}};
    CHECK(eval(F, st) == F.stab[3]);
}

TEST_CASE("composition law and well-definedness") {
    std::mt19937_64 rng(7);
    TabulatedFunctor F = lb_tabulate(2, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> obj(2, 5);
        int a = obj(rng), b = obj(rng), c = obj(rng);
        if (a > b)
            std::swap(a, b);
        if (b > c)
            std::swap(b, c);
        if (a > b)
            std::swap(a, b);
        BracketMorphism f{a, b, random_braid(rng, b, 6)};
        BracketMorphism g{b, c, random_braid(rng, c, 6)};
        CHECK(eval(F, compose(g, f)) == eval(F, g) * eval(F, f));
    }
    CHECK_FALSE(check_naturality(F, 4).has_value());
}

TEST_CASE("difference ranks of LB_m") {
    for (int m = 1; m <= 3; ++m) {
        TabulatedFunctor F = lb_tabulate(m, 7);
        TabulatedFunctor D = difference(F);
        auto kappa = evanescence_ranks(F);
        for (int n = 0; n + 1 <= F.cutoff && n < D.cutoff; ++n) {
            long expect = static_cast<long>(F.rank(n + 1)) - static_cast<long>(F.rank(n)) + static_cast<long>(kappa[n]);
            CHECK(static_cast<long>(D.rank(n)) == expect);
        }
        for (int n = 1; n < D.cutoff; ++n)
            CHECK(D.rank(n) == static_cast<std::size_t>(binomial(m + n - 2, m - 1)));
    }
    TabulatedFunctor F3 = lb_tabulate(2, 5);
    CHECK(difference(F3).rank(3) == 3);
}

TEST_CASE("degree reports") {
    TabulatedFunctor C = constant_functor(ring_x(), 2, 6, false);
    DegreeReport rc = degree_report(C, 3);
    REQUIRE(rc.strong_degree.has_value());
    CHECK(*rc.strong_degree == 0);

    DegreeReport r2 = degree_report(lb_tabulate(2, 8), 4);
    REQUIRE(r2.strong_degree.has_value());
    CHECK(*r2.strong_degree == 2);
    CHECK(r2.very_strong);
    REQUIRE(r2.weak_degree.has_value());
    CHECK(*r2.weak_degree == 2);
    CHECK(r2.witness);

    DegreeReport r1 = degree_report(lb_tabulate(1, 8), 4);
    CHECK_FALSE(r1.very_strong);
    REQUIRE(r1.kappa_ranks.size() > 2);
    CHECK(r1.kappa_ranks[2][0] == 1);
}

TEST_CASE("Moriyama ranks") {
    for (int m = 1; m <= 3; ++m) {
        TabulatedFunctor M = moriyama_tabulate(m, 4);
        CHECK(M.ranks_only);
        for (int g = 0; g <= 4; ++g)
            CHECK(M.rank(g) == static_cast<std::size_t>(factorial(m) * binomial(m + 2 * g - 1, m)));
    }
}

TEST_CASE("difference and evanescence") {
    for (int m = 1; m <= 3; ++m) {
        DiffevaResult r = diffeva_check(m, m + 4);
        CHECK_MESSAGE(r.ok, r.counterexample);
    }
}

TEST_CASE("cokernel by unit pivots") {
    RepMatrix S(ring_x(), 3, 2);
    S.set(0, 0, Element(ring_x(), 1));
    S.set(2, 1, Element(ring_x(), -1));
    Cokernel c = unit_pivot_cokernel(S);
    CHECK(c.complement == std::vector<std::size_t>{1});
    CHECK(c.kernel_rank == 0);
    CHECK((c.projection * S).nnz() == 0);
    CHECK((c.projection * c.section).is_identity());
}
