#include "hrep/acceptance.hpp"

#include "hrep/config.hpp"
#include "hrep/functors.hpp"
#include "hrep/kernels.hpp"
#include "hrep/oracles.hpp"
#include "hrep/partitions.hpp"
#include "hrep/presentations.hpp"
#include "hrep/words.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

namespace hrep {

json CriterionResult::to_json() const {
    return json{{"id", id},
                {"name", name},
                {"status", pass ? "pass" : "fail"},
                {"detail", detail},
                {"counterexamples", counterexamples},
                {"seconds", seconds}};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
    CriterionResult r;
    Clock::time_point start = Clock::now();
    Run(int id, std::string name) {
        r.id = id;
        r.name = std::move(name);
    }
    void fail(const std::string& c) {
        if (r.counterexamples.size() < 10)
            r.counterexamples.push_back(c);
    }
    CriterionResult done(std::string detail) {
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        r.pass = r.counterexamples.empty();
        r.detail = std::move(detail);
        return r;
    }
};

std::string cell(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

}  // namespace

CriterionResult criterion_rank(const AcceptanceOptions&) {
    Run run(1, "rank formula");
    int cells = 0;
    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 9; ++n) {
            std::size_t expect = n <= 1 ? 0 : static_cast<std::size_t>(binomial(n + m - 2, m));
            std::size_t got = std_basis(m, n).size();
            ++cells;
            if (got != expect)
                run.fail(cell(m, n) + ": " + std::to_string(got) + " != " + std::to_string(expect));
        }
    for (int m = 1; m <= 3; ++m) {
        TabulatedFunctor F = lb_tabulate(m, 6);
        for (int n = 0; n <= 6; ++n)
            if (F.rank(n) != std_basis(m, n).size())
                run.fail("tabulated rank differs at " + cell(m, n));
    }
    auto r = run.done(std::to_string(cells) + " cells, 1<=m<=5, 0<=n<=9");
    if (r.seconds >= 1.0) {
        r.pass = false;
        r.counterexamples.push_back("runtime " + std::to_string(r.seconds) + "s exceeds 1s");
    }
    return r;
}

CriterionResult criterion_braid(const AcceptanceOptions& o) {
    Run run(2, "braid relations");
    const Calibration& cal = active_calibration();
    int checked = 0;
    for (int m = 1; m <= 4; ++m) {
        int max_n = m <= 3 ? 6 : 5;
        if (o.quick)
            max_n = m <= 3 ? 5 : 4;
        for (int n = 2; n <= max_n; ++n) {
            GeneratorSet g = assemble_generators_parallel(m, n, cal);
            ++checked;
            if (auto bad = check_braid_relations(g.pos, g.neg))
                run.fail(cell(m, n) + ": " + *bad);
            for (int i = 1; i < n; ++i) {
                const RepMatrix& A = g.pos[i - 1];
                if (A.rows() <= 12) {
                    if (!gre_is_unit(determinant(A)))
                        run.fail(cell(m, n) + ": det s" + std::to_string(i) + " is not a unit");
                    continue;
                }
                // too large to expand: an inverse over the Laurent ring forces det to be +-monomial
                auto inv = inverse_unit_pivot(A);
                if (!inv || *inv != g.neg[i - 1])
                    run.fail(cell(m, n) + ": s" + std::to_string(i) + " has no inverse over the ring");
            }
        }
    }
    auto r = run.done(std::to_string(checked) + " (m,n) cells; braid, far commutation, inverses, unit determinants (expanded up to rank 12, by ring inverse above)" +
                      (o.quick ? " (quick bounds)" : ""));
    if (r.seconds >= 120.0) {
        r.pass = false;
        r.counterexamples.push_back("runtime exceeds 2 min");
    }
    return r;
}

CriterionResult criterion_burau(const AcceptanceOptions& o) {
    Run run(3, "Burau oracle");
    const Calibration& cal = active_calibration();
    const int max_n = o.quick ? 6 : 8;
    std::string witness;
    for (int n = 2; n <= max_n; ++n) {
        Verdict v = compare_burau(n, cal);
        if (!v.match)
            run.fail("n=" + std::to_string(n) + ": " + v.counterexample);
        else if (n == max_n)
            witness = v.witness->to_json().dump();
    }
    CriterionResult cc = check_calibration(o);
    for (const auto& c : cc.counterexamples)
        run.fail("calibration: " + c);
    return run.done("2<=n<=" + std::to_string(max_n) + ", witness " + witness + "; " + cc.detail);
}

CriterionResult criterion_lkb(const AcceptanceOptions&) {
    Run run(4, "LKB oracle");
    const Calibration& cal = active_calibration();
    for (int n = 2; n <= 5; ++n) {
        std::vector<RepMatrix> pos, neg;
        for (int i = 1; i < n; ++i) {
            pos.push_back(lkb_reference(n, i));
            auto inv = inverse_unit_pivot(pos.back());
            if (!inv) {
                run.fail("transcribed s" + std::to_string(i) + " at n=" + std::to_string(n) + " not invertible");
                continue;
            }
            neg.push_back(*inv);
            if (!gre_is_unit(determinant(pos.back())))
                run.fail("transcribed det not a unit at n=" + std::to_string(n));
        }
        if (neg.size() == pos.size())
            if (auto bad = check_braid_relations(pos, neg))
                run.fail("transcribed data n=" + std::to_string(n) + ": " + *bad);
    }
    std::string witness;
    for (int n = 2; n <= 5; ++n) {
        Verdict v = compare_lkb(n, cal);
        if (!v.match)
            run.fail("n=" + std::to_string(n) + ": " + v.counterexample);
        else if (n == 5)
            witness = v.witness->to_json().dump();
    }
    return run.done("2<=n<=5, transcribed data braid-checked, witness " + witness);
}

CriterionResult criterion_naturality(const AcceptanceOptions&) {
    Run run(5, "naturality");
    for (int m = 1; m <= 3; ++m) {
        TabulatedFunctor F = lb_tabulate(m, 6);
        if (auto bad = check_naturality(F, 5))
            run.fail(*bad);
        if (auto bad = check_coordinate_injection(F))
            run.fail(*bad);
    }
    return run.done("m<=3, n<=5, all generators and inverses");
}

CriterionResult criterion_delta(const AcceptanceOptions& o) {
    Run run(6, "delta ranks and evanescence");
    const int max_m = o.quick ? 3 : 4;
    int cells = 0;
    for (int m = 1; m <= max_m; ++m) {
        const int kmax = m + 1;
        TabulatedFunctor D = lb_tabulate(m, 8 + kmax);
        for (int k = 1; k <= kmax; ++k) {
            TabulatedFunctor prev = D;
            std::vector<std::size_t> kappa_prev = evanescence_ranks(prev);
            D = difference(D);
            std::vector<std::size_t> kappa = evanescence_ranks(D);
            for (int n = 0; n <= 7; ++n) {
                ++cells;
                const std::string where = cell(m, n) + " k=" + std::to_string(k);
                if (n >= 1) {
                    std::size_t expect = enum_P_delta(m, k, n).size();
                    if (D.rank(n) != expect)
                        run.fail(where + ": rank " + std::to_string(D.rank(n)) + " != |P^dk| " + std::to_string(expect));
                } else {
                    // 0 -> kappa -> F(0) -> F(1) -> delta F(0) -> 0
                    long expect = static_cast<long>(prev.rank(1)) - static_cast<long>(prev.rank(0)) +
                                  static_cast<long>(kappa_prev[0]);
                    if (static_cast<long>(D.rank(0)) != expect)
                        run.fail(where + ": rank " + std::to_string(D.rank(0)) + " violates the exact sequence");
                }
                const std::size_t expect_kappa = (m == 1 && k == 2 && n == 0) ? 1 : 0;
                if (kappa[n] != expect_kappa)
                    run.fail(where + ": kappa rank " + std::to_string(kappa[n]) + " != " + std::to_string(expect_kappa));
            }
        }
    }
    return run.done(std::to_string(cells) + " cells, m<=" + std::to_string(max_m) +
                    ", 1<=k<=m+1, n<=7; n>=1 against |P_m^dk(n)|, n=0 against the exact sequence; "
                    "kappa zero except kappa delta^2 LB_1(0) = Z");
}

CriterionResult criterion_diffeva(const AcceptanceOptions&) {
    Run run(7, "difference-evanescence isomorphism");
    std::string maps;
    for (int m : {1, 2, 3}) {
        DiffevaResult d = diffeva_check(m, 5);
        if (!d.ok)
            run.fail("m=" + std::to_string(m) + ": " + d.counterexample);
        maps += (maps.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + " " + d.ring_map;
    }
    return run.done("cutoff 5, ring maps: " + maps);
}

CriterionResult criterion_degree(const AcceptanceOptions&) {
    Run run(8, "polynomial degree of LB_m");
    {
        DegreeReport r = degree_report(lb_tabulate(1, 8), 3);
        if (r.strong_degree != 2)
            run.fail("LB_1 strong degree " + r.to_json()["strong_degree"].dump());
        if (r.weak_degree != 1)
            run.fail("LB_1 weak degree " + r.to_json()["weak_degree"].dump());
        if (r.very_strong)
            run.fail("LB_1 reported very strong");
        const auto& d2 = r.delta_ranks.at(2);
        for (std::size_t n = 0; n < d2.size(); ++n)
            if (d2[n] != (n == 0 ? 1u : 0u))
                run.fail("delta^2 LB_1(" + std::to_string(n) + ") has rank " + std::to_string(d2[n]));
        if (!r.witness)
            run.fail("LB_1: no i_1 bijection witness on delta^1");
    }
    for (int m : {2, 3}) {
        DegreeReport r = degree_report(lb_tabulate(m, 8), m + 1);
        if (r.strong_degree != m || !r.very_strong)
            run.fail("LB_" + std::to_string(m) + " very strong degree " + r.to_json()["strong_degree"].dump());
        if (r.weak_degree != m)
            run.fail("LB_" + std::to_string(m) + " weak degree " + r.to_json()["weak_degree"].dump());
        if (!r.witness)
            run.fail("LB_" + std::to_string(m) + ": no i_1 bijection witness on delta^m");
    }
    return run.done("window N=8: LB_1 strong 2 / weak 1, LB_2 and LB_3 very strong and weak m");
}

CriterionResult criterion_moriyama(const AcceptanceOptions& o) {
    Run run(9, "Moriyama ranks and degree");
    for (int m = 1; m <= 4; ++m) {
        TabulatedFunctor F = moriyama_tabulate(m, 5);
        for (int g = 0; g <= 5; ++g) {
            Int expect = 0;
            if (g >= 1) {
                Int num = 1;
                for (int j = 2 * g; j <= 2 * g + m - 1; ++j)
                    num *= j;
                expect = num;  // (2g+m-1)!/(2g-1)!
            }
            Int alt = Int(factorial(m)) * Int(binomial(m + 2 * g - 1, m));
            if (g >= 1 && alt != expect)
                run.fail("formulas disagree at m=" + std::to_string(m) + " g=" + std::to_string(g));
            if (Int(static_cast<long>(F.rank(g))) != expect)
                run.fail("m=" + std::to_string(m) + " g=" + std::to_string(g) + ": rank " + std::to_string(F.rank(g)));
        }
        if (auto bad = check_coordinate_injection(F))
            run.fail(*bad);
    }
    const int max_m = o.quick ? 3 : 4;
    for (int m = 1; m <= max_m; ++m) {
        DegreeReport r = degree_report(moriyama_tabulate(m, m + 4), m + 1);
        if (!r.witness || r.weak_degree != m)
            run.fail("Mor_" + std::to_string(m) + ": weak degree " + r.to_json()["weak_degree"].dump() +
                     (r.witness ? "" : ", no i_1 bijection on delta^m"));
    }
    return run.done("ranks m<=4, g<=5; injections; delta^m witness for m<=" + std::to_string(max_m) +
                    " on window m+4");
}

CriterionResult criterion_abelian(const AcceptanceOptions&) {
    Run run(10, "abelianizations");
    auto expect = [&](const std::string& what, const Presentation& p, const std::string& want) {
        std::string got = abelianization(p).to_string();
        if (got != want)
            run.fail(what + ": " + got + " != " + want);
    };
    for (int n = 2; n <= 6; ++n)
        expect("B_" + std::to_string(n), braid_presentation(n), "Z");
    for (int g = 1; g <= 3; ++g)
        for (int n = 2; n <= 5; ++n)
            expect("B_" + std::to_string(n) + "(S_" + std::to_string(g) + ",1)",
                   bellingeri_presentation(SurfaceKind::Orientable, g, 0, n), "Z^" + std::to_string(2 * g) + " + Z/2");
    for (int n = 2; n <= 6; ++n) {
        expect("LB_" + std::to_string(n), loop_braid_presentation(n, false), "Z + Z/2");
        expect("LB_" + std::to_string(n) + "^ext", loop_braid_presentation(n, true), "(Z/2)^3");
    }
    expect("LB_1^ext", loop_braid_presentation(1, true), "Z/2");
    return run.done("B_n, orientable surface braid groups g<=3 n<=5, loop braid groups n<=6");
}

CriterionResult criterion_quotient(const AcceptanceOptions&) {
    Run run(11, "quotient images");
    std::string seen;
    for (const std::string f : {"alpha", "beta", "gamma"})
        for (int m : {1, 2, 3}) {
            QuotientImageCase c = quotient_image_case(f, m);
            AbelianGroup got = quotient_image(c);
            if (!(got == c.expected))
                run.fail(f + " m=" + std::to_string(m) + ": " + got.to_string() + " != " + c.expected.to_string());
            if (m <= 2)
                seen += (seen.empty() ? "" : ", ") + f + "(m=" + std::to_string(m) + ")=" + got.to_string();
        }
    return run.done(seen);
}

namespace {

SurfaceBraidWord random_surface_word(std::mt19937_64& rng, int m, int n, int len) {
    SurfaceBraidWord w{m, n, {}};
    std::uniform_int_distribution<int> sign(0, 1);
    for (int k = 0; k < len; ++k) {
        bool xi = m < 2 || std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        if (xi)
            w.letters.push_back({Family::Xi, std::uniform_int_distribution<int>(1, n)(rng), sign(rng) ? 1 : -1});
        else
            w.letters.push_back({Family::Sigma, std::uniform_int_distribution<int>(1, m - 1)(rng), sign(rng) ? 1 : -1});
    }
    return w;
}

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
    BraidWord b{n, {}};
    if (n < 2)
        return b;
    for (int k = 0; k < len; ++k)
        b.letters.push_back({std::uniform_int_distribution<int>(1, n - 1)(rng),
                             std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    return b;
}

}  // namespace

CriterionResult criterion_phi(const AcceptanceOptions& o) {
    Run run(12, "phi invariance");
    std::mt19937_64 rng(o.seed);
    const int pairs = o.quick ? 200 : 1000;
    long total = 0;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k < pairs; ++k) {
                BraidWord b = random_braid(rng, n, std::uniform_int_distribution<int>(0, 8)(rng));
                SurfaceBraidWord w = random_surface_word(rng, m, n, std::uniform_int_distribution<int>(0, 10)(rng));
                ++total;
                if (phi(bn_act_on_surface(b, w), m) != phi(w, m))
                    run.fail(cell(m, n) + ": b=" + to_string(b) + " w=" + to_string(w));
            }
    return run.done(std::to_string(total) + " pairs, " + std::to_string(pairs) + " per (m,n), m<=3, n<=6");
}

CriterionResult criterion_snf(const AcceptanceOptions& o) {
    Run run(13, "Smith normal form");
    std::mt19937_64 rng(o.seed + 13);
    const int count = o.quick ? 300 : 1000;
    for (int k = 0; k < count; ++k) {
        std::size_t r = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        std::size_t c = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        int density = std::uniform_int_distribution<int>(1, 4)(rng);
        IntMatrix A(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (std::uniform_int_distribution<int>(0, 3)(rng) < density)
                    A(i, j) = std::uniform_int_distribution<int>(-9, 9)(rng);
        SNF s = snf(A);
        std::string tag = "matrix " + std::to_string(k) + " (" + std::to_string(r) + "x" + std::to_string(c) + ")";
        if (!(s.U * A * s.V == s.D))
            run.fail(tag + ": U A V != D");
        Int du = det(s.U), dv = det(s.V);
        if (abs(du) != 1 || abs(dv) != 1)
            run.fail(tag + ": transforms not unimodular");
        Int prev = 1;
        bool zero_seen = false;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const Int& d = s.D(i, j);
                if (i != j && d != 0)
                    run.fail(tag + ": off-diagonal entry");
                if (i == j) {
                    if (d < 0)
                        run.fail(tag + ": negative diagonal entry");
                    if (d == 0)
                        zero_seen = true;
                    else if (zero_seen || prev == 0 || d % prev != 0)
                        run.fail(tag + ": divisibility chain broken");
                    prev = d;
                }
            }
    }
    return run.done(std::to_string(count) + " random integer matrices up to 12x12");
}

CriterionResult check_calibration(const AcceptanceOptions&) {
    Run run(0, "calibration");
    CalibrationSearch s = calibration_search();
    auto acc = s.accepted();
    if (acc.size() != 1)
        run.fail(std::to_string(acc.size()) + " candidates accepted, expected exactly one");
    StoredCalibration stored;
    try {
        stored = load_calibration(data_path("calibration.json"));
    } catch (const std::exception& e) {
        run.fail(e.what());
        return run.done("no stored calibration");
    }
    if (acc.size() == 1 && !(acc.front() == stored.calibration))
        run.fail("search result " + acc.front().describe() + " differs from stored " + stored.calibration.describe());
    if (!(active_calibration() == stored.calibration))
        run.fail("active calibration differs from the stored one");
    std::string digest = oracle_digest(stored.calibration);
    if (digest != stored.oracle_digest)
        run.fail("oracle digest " + digest + " != stored " + stored.oracle_digest);
    return run.done("unique accepted candidate of " + std::to_string(s.results.size()) + ": " +
                    stored.calibration.describe() + ", digest " + stored.oracle_digest);
}

const std::vector<NamedCriterion>& all_criteria() {
    static const std::vector<NamedCriterion> v{
        {"rank", criterion_rank},         {"braid", criterion_braid},       {"burau", criterion_burau},
        {"lkb", criterion_lkb},           {"naturality", criterion_naturality}, {"delta", criterion_delta},
        {"diffeva", criterion_diffeva},   {"degree", criterion_degree},     {"moriyama", criterion_moriyama},
        {"abelian", criterion_abelian},   {"quotient", criterion_quotient}, {"phi", criterion_phi},
        {"snf", criterion_snf}};
    return v;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
    std::vector<CriterionResult> out;
    for (const auto& c : all_criteria()) {
        try {
            out.push_back(c.run(o));
        } catch (const std::exception& e) {
            CriterionResult r;
            r.id = static_cast<int>(out.size()) + 1;
            r.name = c.suite;
            r.detail = "exception";
            r.counterexamples.push_back(e.what());
            out.push_back(r);
        }
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << secs << "): " << r.detail;
    for (const auto& c : r.counterexamples)
        os << "\n    counterexample: " << c;
    return os.str();
}

}  // namespace hrep
