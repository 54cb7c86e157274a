#include "helpers.hpp"

#include "hrep/groupring.hpp"

#include <doctest.h>

using namespace hrep;

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(7);
    for (RingPtr ring : {ring_x(), ring_qt(), make_ring(1, 1, {"x", "z"}), make_ring(2, 2, {"x", "y", "z", "w"})}) {
        for (int k = 0; k < 2500; ++k) {
            Element a = test::random_element(rng, ring), b = test::random_element(rng, ring),
                    c = test::random_element(rng, ring);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            CHECK(a * Element(ring, 1) == a);
        }
    }
}

TEST_CASE("torsion variables square to one") {
    RingPtr r = make_ring(1, 1, {"x", "z"});
    Element z = Element::variable(r, 1);
    CHECK((z * z).is_one());
    CHECK(gre_unit_inverse(z) == z);
}

TEST_CASE("units and powers") {
    RingPtr r = ring_qt();
    Element q = Element::variable(r, 0), t = Element::variable(r, 1);
    Element u = -(q * gre_pow(t, -3));
    CHECK(gre_is_unit(u));
    CHECK((u * gre_unit_inverse(u)).is_one());
    CHECK_FALSE(gre_is_unit(q + t));
    CHECK_THROWS_AS(gre_unit_inverse(q + t), ring_error);
    CHECK(gre_pow(q + t, 2) == q * q + Element(r, 2) * q * t + t * t);
    CHECK(gre_div_unit(q * q + q * t, q) == q + t);
}

TEST_CASE("gaussian integers and multinomials") {
    RingPtr r = ring_x();
    Element x = Element::variable(r, 0);
    CHECK(gaussian_int(3, x) == Element(r, 1) + x + x * x);
    // [2,1]_x = [3]!/([2]![1]!) = 1 + x + x^2
    CHECK(gaussian_multinomial({2, 1}, x) == Element(r, 1) + x + x * x);
    // [2,2]_x = 1 + x + 2x^2 + x^3 + x^4
    CHECK(gaussian_multinomial({2, 2}, x) ==
          Element(r, 1) + x + Element(r, 2) * x * x + gre_pow(x, 3) + gre_pow(x, 4));
    CHECK(gaussian_multinomial({1, 1}, -x) == Element(r, 1) - x);
    CHECK(gaussian_multinomial({0, 3}, x).is_one());
}

TEST_CASE("json round trip, including large coefficients") {
    std::mt19937_64 rng(3);
    RingPtr r = make_ring(1, 1, {"x", "z"});
    for (int k = 0; k < 200; ++k) {
        Element a = test::random_element(rng, r);
        CHECK(Element::from_json(r, a.to_json()) == a);
    }
    Element big = gre_pow(Element(ring_x(), 1) + Element::variable(ring_x(), 0), 80);
    CHECK(Element::from_json(ring_x(), big.to_json()) == big);
    CHECK(RingDescriptor::from_json(ring_qt()->to_json()) == *ring_qt());
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(11);
    RingPtr r = ring_qt();
    std::vector<Element> images{Element::variable(r, 1, -1), -Element::variable(r, 0)};
    for (int k = 0; k < 300; ++k) {
        Element a = test::random_element(rng, r), b = test::random_element(rng, r);
        CHECK(substitute(a * b, r, images) == substitute(a, r, images) * substitute(b, r, images));
        CHECK(substitute(a + b, r, images) == substitute(a, r, images) + substitute(b, r, images));
    }
}

TEST_CASE("invalid ring descriptors are rejected") {
    CHECK_THROWS(make_ring(-1, 0, {}));
    CHECK_THROWS(make_ring(1, 0, {"x", "y"}));
    CHECK_THROWS(Element(ring_x(), Int(1), Key{1, 2}));
}
