#include "hrep/words.hpp"

#include <doctest.h>

#include <random>

using namespace hrep;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
    BraidWord b{n, {}};
    std::uniform_int_distribution<int> idx(1, n - 1), sg(0, 1);
    for (int k = 0; k < len; ++k)
        b.letters.push_back({idx(rng), sg(rng) ? 1 : -1});
    return b;
}

FreeWord random_free(std::mt19937_64& rng, int n, int len) {
    FreeWord w{n, {}};
    std::uniform_int_distribution<int> idx(1, n), sg(0, 1);
    for (int k = 0; k < len; ++k)
        w.letters.push_back(sg(rng) ? idx(rng) : -idx(rng));
    return w;
}

FreeWord act_gen(const BraidWord& b, int i) { return reduce(artin_act(b, FreeWord{b.strands, {i}})); }

}  // namespace

TEST_CASE("parsing and printing") {
    BraidWord b = parse_braid("s1 s2^-1 s1^2", 3);
    CHECK(b.letters.size() == 4);
    CHECK(b.letters[1] == Letter{2, -1});
    CHECK(parse_braid(to_string(b), 3) == b);
    CHECK_THROWS_AS(parse_braid("s3", 3), word_error);
    CHECK_THROWS_AS(parse_braid("x1", 3), word_error);
    CHECK_THROWS_AS(parse_braid("s1^", 3), word_error);
    SurfaceBraidWord w = parse_surface("s1 x2^-1", 2, 3);
    CHECK(w.letters[1].family == Family::Xi);
    CHECK(parse_free("x1 x2^-1", 2).letters == std::vector<int>{1, -2});
    CHECK(parse_braid("", 4).letters.empty());
}

TEST_CASE("reduce and inverse") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        BraidWord b = random_braid(rng, 4, 8);
        CHECK(reduce(concat(b, inverse(b))).letters.empty());
        FreeWord f = random_free(rng, 3, 8);
        CHECK(reduce(concat(inverse(f), f)).letters.empty());
    }
}

TEST_CASE("Artin action: images of generators") {
    BraidWord s1 = parse_braid("s1", 2);
    CHECK(act_gen(s1, 1).letters == std::vector<int>{2});
    CHECK(act_gen(s1, 2).letters == std::vector<int>{-2, 1, 2});
    BraidWord s1i = parse_braid("s1^-1", 2);
    CHECK(act_gen(s1i, 2).letters == std::vector<int>{1});
}

TEST_CASE("Artin action respects braid relations and composes in word order") {
    std::mt19937_64 rng(2);
    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i + 1 < n; ++i) {
            BraidWord l{n, {{i, 1}, {i + 1, 1}, {i, 1}}}, r{n, {{i + 1, 1}, {i, 1}, {i + 1, 1}}};
            for (int j = 1; j <= n; ++j)
                CHECK(act_gen(l, j) == act_gen(r, j));
        }
    for (int k = 0; k < 300; ++k) {
        int n = 2 + k % 5;
        BraidWord a = random_braid(rng, n, 5), b = random_braid(rng, n, 5);
        FreeWord w = random_free(rng, n, 6);
        CHECK(reduce(artin_act(concat(a, b), w)) == reduce(artin_act(b, artin_act(a, w))));
        CHECK(reduce(artin_act(concat(a, inverse(a)), w)) == reduce(w));
        // the product x_1 ... x_n is fixed
        FreeWord top{n, {}};
        for (int j = 1; j <= n; ++j)
            top.letters.push_back(j);
        CHECK(reduce(artin_act(a, top)) == top);
    }
}

TEST_CASE("local system homomorphisms") {
    SurfaceBraidWord w = parse_surface("s1 s1 x1 x2^-1 x2^-1 s1^-1", 2, 3);
    CHECK(hom_T(w) == 1);
    CHECK(hom_W(w) == -1);
    Element p = phi(w, 2);
    CHECK(p == Element::monomial(ring_qt(), 1, {-1, 1}));
    SurfaceBraidWord v = parse_surface("x1 x3", 1, 3);
    CHECK(phi(v, 1) == Element::variable(ring_x(), 0, 2));
}

TEST_CASE("phi is invariant under the B_n action") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; ++k) {
        int m = 1 + k % 3, n = 2 + k % 4;
        BraidWord b = random_braid(rng, n, 6);
        SurfaceBraidWord w{m, n, {}};
        for (int j = 0; j < 6; ++j) {
            if (m >= 2 && j % 2)
                w.letters.push_back({Family::Sigma, 1 + static_cast<int>(rng() % (m - 1)), j % 3 ? 1 : -1});
            else
                w.letters.push_back({Family::Xi, 1 + static_cast<int>(rng() % n), j % 4 ? 1 : -1});
        }
        CHECK(phi(bn_act_on_surface(b, w), m) == phi(w, m));
    }
}

TEST_CASE("shift") {
    BraidWord b = parse_braid("s1 s2^-1", 3);
    BraidWord s = shift(b, 2);
    CHECK(s.strands == 5);
    CHECK(s.letters[0].index == 3);
    CHECK(s.letters[1] == Letter{4, -1});
}
