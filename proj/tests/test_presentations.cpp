#include "hrep/presentations.hpp"
#include "hrep/words.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace hrep;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix A(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            A(i, j) = rows[i][j];
    return A;
}

// Image of x_j under the automorphism named by a letter of the loop braid
// presentation. Letters: s_i, t_i, r_i with sign.
std::vector<int> letter_image(const std::string& name, int sign, int j) {
    const char kind = name[0];
    const int i = std::stoi(name.substr(1));
    if (kind == 's') {
        if (sign > 0) {
            if (j == i)
                return {i + 1};
            if (j == i + 1)
                return {-(i + 1), i, i + 1};
        } else {
            if (j == i + 1)
                return {i};
            if (j == i)
                return {i, i + 1, -i};
        }
        return {j};
    }
    if (kind == 't') {
        if (j == i)
            return {i + 1};
        if (j == i + 1)
            return {i};
        return {j};
    }
    if (kind == 'r')
        return j == i ? std::vector<int>{-i} : std::vector<int>{j};
    throw std::logic_error("unknown generator " + name);
}

// The automorphism of a relator, letters composed as functions read right
// to left (the last letter is applied first).
bool relator_is_identity(const Presentation& p, const std::vector<int>& rel, int n) {
    for (int j = 1; j <= n; ++j) {
        std::vector<int> w{j};
        for (auto it = rel.rbegin(); it != rel.rend(); ++it) {
            const std::string& name = p.generators[std::abs(*it) - 1];
            const int sign = *it > 0 ? 1 : -1;
            std::vector<int> next;
            for (int l : w) {
                std::vector<int> img = letter_image(name, sign, std::abs(l));
                if (l > 0)
                    next.insert(next.end(), img.begin(), img.end());
                else
                    for (auto r = img.rbegin(); r != img.rend(); ++r)
                        next.push_back(-*r);
            }
            w = reduce(FreeWord{n, next}).letters;
        }
        if (w != std::vector<int>{j})
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
    SNF s = snf(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 6);
    CHECK(s.D(2, 2) == 12);
    CHECK(cokernel_of_rows(from_rows({{2, 0}, {0, 3}})).to_string() == "Z/6");
    CHECK(cokernel_of_rows(from_rows({{0, 0, 2}})).to_string() == "Z^2 + Z/2");
    CHECK(cokernel_of_rows(IntMatrix(0, 2)).to_string() == "Z^2");
    CHECK(cokernel_of_rows(from_rows({{1}})).to_string() == "0");
    CHECK(det(from_rows({{2, 1}, {7, 4}})) == 1);
}

TEST_CASE("Smith normal form properties on random matrices") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 300; ++k) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        IntMatrix A(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                A(i, j) = static_cast<long>(rng() % 13) - 6;
        SNF s = snf(A);
        CHECK(s.U * A * s.V == s.D);
        CHECK(abs(det(s.U)) == 1);
        CHECK(abs(det(s.V)) == 1);
        for (std::size_t i = 1; i < std::min(r, c); ++i)
            if (s.D(i, i) != 0)
                CHECK(s.D(i, i) % s.D(i - 1, i - 1) == 0);
    }
}

TEST_CASE("braid group abelianizes to Z") {
    for (int n = 2; n <= 7; ++n)
        CHECK(abelianization(braid_presentation(n)).to_string() == "Z");
    CHECK(abelianization(braid_presentation(1)).to_string() == "0");
}

TEST_CASE("Tietze moves do not change the abelianization") {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 5; ++n) {
        Presentation p = bellingeri_presentation(SurfaceKind::Orientable, 1, 0, n);
        AbelianGroup g = abelianization(p);
        // a consequence of the relators
        Presentation q = p;
        std::vector<int> prod = q.relators[rng() % q.relators.size()];
        const auto& other = q.relators[rng() % q.relators.size()];
        prod.insert(prod.end(), other.begin(), other.end());
        q.relators.push_back(prod);
        CHECK(abelianization(q) == g);
        // a new generator defined by a word
        Presentation r = p;
        r.generators.push_back("y");
        r.add_relation("y", r.generators[0] + " " + r.generators[1] + "^-1");
        CHECK(abelianization(r) == g);
    }
}

TEST_CASE("orientable surface braid groups: abelianization independent of n") {
    for (int g = 1; g <= 3; ++g) {
        std::string want = "Z^" + std::to_string(2 * g) + " + Z/2";
        for (int n = 2; n <= 5; ++n)
            CHECK(abelianization(bellingeri_presentation(SurfaceKind::Orientable, g, 0, n)).to_string() == want);
    }
    // punctures add free summands
    CHECK(abelianization(bellingeri_presentation(SurfaceKind::Orientable, 1, 2, 3)).to_string() == "Z^4 + Z/2");
    CHECK(abelianization(bellingeri_presentation(SurfaceKind::Orientable, 0, 3, 3)).to_string() == "Z^4");
    CHECK_THROWS_AS(bellingeri_presentation(SurfaceKind::NonOrientable, 1, 0, 3), presentation_error);
}

TEST_CASE("non-orientable surface braid groups") {
    for (int c = 2; c <= 4; ++c)
        for (int n = 2; n <= 4; ++n)
            CHECK(abelianization(bellingeri_presentation(SurfaceKind::NonOrientable, c, 0, n)).to_string() ==
                  "Z^" + std::to_string(c) + " + Z/2");
}

TEST_CASE("loop braid relators act trivially on the free group") {
    for (bool ext : {false, true})
        for (int n = 2; n <= 5; ++n) {
            Presentation p = loop_braid_presentation(n, ext);
            for (const auto& rel : p.relators)
                CHECK(relator_is_identity(p, rel, n));
        }
}

TEST_CASE("loop braid abelianizations") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(abelianization(loop_braid_presentation(n, false)).to_string() == "Z + Z/2");
        CHECK(abelianization(loop_braid_presentation(n, true)).to_string() == "(Z/2)^3");
    }
    CHECK(abelianization(loop_braid_presentation(1, true)).to_string() == "Z/2");
}

TEST_CASE("presentation json round trip") {
    Presentation p = loop_braid_presentation(3, true);
    Presentation q = Presentation::from_json(p.to_json());
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK_THROWS(p.parse_word("zz1"));
}

TEST_CASE("quotient images") {
    std::map<std::string, std::vector<std::string>> want{
        {"alpha", {"Z", "Z^2 + Z/2"}}, {"beta", {"(Z/2)^2", "(Z/2)^4"}}, {"gamma", {"Z/2", "Z + (Z/2)^2"}}};
    for (const auto& [f, w] : want)
        for (int m : {1, 2, 3}) {
            QuotientImageCase c = quotient_image_case(f, m);
            CHECK(quotient_image(c).to_string() == w[m == 1 ? 0 : 1]);
        }
}

TEST_CASE("subgroup image of explicit elements") {
    // <(2|0), (0|1)> in Z + Z/2 is Z + Z/2
    CHECK(subgroup_image(1, 1, {{{2}, {0}}, {{0}, {1}}}).to_string() == "Z + Z/2");
    // <(1|1)> is Z
    CHECK(subgroup_image(1, 1, {{{1}, {1}}}).to_string() == "Z");
    // <(0|1), (0|1)> is Z/2
    CHECK(subgroup_image(1, 1, {{{0}, {1}}, {{0}, {1}}}).to_string() == "Z/2");
}
