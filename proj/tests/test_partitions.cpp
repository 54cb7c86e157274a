#include "hrep/partitions.hpp"

#include <doctest.h>

#include <set>

using namespace hrep;

TEST_CASE("enum_P sizes and order") {
    for (int m = 0; m <= 5; ++m)
        for (int len = 1; len <= 6; ++len)
            CHECK(enum_P(m, len).size() == static_cast<std::size_t>(binomial(m + len - 1, len - 1)));
    auto p = enum_P(2, 3);
    CHECK(p.front() == Partition{2, 0, 0});
    CHECK(p.back() == Partition{0, 0, 2});
    CHECK(std::is_sorted(p.rbegin(), p.rend()));
    CHECK(enum_P(1, 0).empty());
    CHECK(enum_P(0, 0).size() == 1);
    CHECK_THROWS_AS(enum_P(-1, 2), partition_error);
}

TEST_CASE("enum_P_delta") {
    CHECK(enum_P_delta(2, 1, 3).size() == 3);
    CHECK(enum_P_delta(2, 0, 1).empty());
    for (const auto& w : enum_P_delta(3, 2, 3)) {
        CHECK(w.size() == 4);
        CHECK(w[0] >= 1);
        CHECK(w[1] >= 1);
    }
    CHECK(enum_P_delta(2, 3, 2).empty());  // three constrained slots need three points
}

TEST_CASE("telescoping identity for n >= 1") {
    for (int m = 1; m <= 5; ++m)
        for (int k = 0; k <= m + 1; ++k)
            for (int n = 1; n <= 7; ++n)
                CHECK(enum_P_delta(m, k + 1, n).size() + enum_P_delta(m, k, n).size() ==
                      enum_P_delta(m, k, n + 1).size());
}

TEST_CASE("stabilization insertion and its complement") {
    CHECK(stab_insert(2, 0, {1, 1}) == Partition{0, 1, 1});
    CHECK(stab_insert(2, 1, {1, 1}) == Partition{1, 0, 1});
    CHECK_THROWS_AS(stab_insert(2, 1, {0, 2}), partition_error);
    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= m; ++k)
            for (int n = 1; n <= 5; ++n) {
                std::set<Partition> image;
                for (const auto& w : enum_P_delta(m, k, n))
                    image.insert(stab_insert(m, k, w));
                std::set<Partition> comp;
                for (const auto& w : delta_complement(m, k, n))
                    comp.insert(w);
                std::set<Partition> all;
                for (const auto& w : enum_P_delta(m, k, n + 1))
                    all.insert(w);
                CHECK(image.size() + comp.size() == all.size());
                for (const auto& w : comp)
                    CHECK(image.count(w) == 0);
                CHECK(delta_bijection(m, k, n).size() == comp.size());
            }
}

TEST_CASE("forget_first") {
    CHECK(forget_first({2, 0, 1}) == Partition{1, 0, 1});
    CHECK(unforget_first(forget_first({2, 0, 1})) == Partition{2, 0, 1});
    CHECK_THROWS_AS(forget_first({0, 1}), partition_error);
}

TEST_CASE("Q sets") {
    for (int m = 1; m <= 4; ++m)
        for (int g = 0; g <= 4; ++g)
            CHECK(enum_Q(m, g).size() ==
                  static_cast<std::size_t>(g == 0 ? 0 : factorial(m) * binomial(m + 2 * g - 1, m)));
    CHECK(enum_Q(1, 3).size() == 6);
    CHECK(enum_Q(2, 1).size() == 6);
    Arrangement a{{2, 1}, {1, 1}};
    Arrangement b = stab_insert_Q(0, a);
    CHECK(b.part == Partition{0, 0, 1, 1});
    CHECK(b.flat() == std::vector<int>{2, 1, 0, 0, 1, 1});
    for (const auto& q : enum_Q_delta(2, 1, 1))
        CHECK((q.part[0] != 0 || q.part[1] != 0));
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(5) == 120);
}
