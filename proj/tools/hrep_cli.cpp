// hrep: command-line front end.
#include "hrep/acceptance.hpp"
#include "hrep/config.hpp"
#include "hrep/functors.hpp"
#include "hrep/oracles.hpp"
#include "hrep/partitions.hpp"
#include "hrep/presentations.hpp"
#include "hrep/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace hrep;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void cap(const char* what, int value, int limit, bool force) {
    if (value > limit && !force)
        throw usage_error(std::string(what) + " = " + std::to_string(value) + " exceeds the configured cap " +
                          std::to_string(limit) + " (pass --force to override)");
}

json report(const std::string& command, json params, bool pass, json payload, const std::vector<std::string>& cx) {
    return json{{"command", command},
                {"parameters", std::move(params)},
                {"status", pass ? "pass" : "fail"},
                {"payload", std::move(payload)},
                {"counterexamples", cx}};
}

int run_verify(const std::string& suite, bool quick, bool as_json, int oracle_m, int oracle_max_n, bool store) {
    AcceptanceOptions o;
    o.quick = quick;
    std::vector<CriterionResult> results;
    if (suite == "all") {
        results = run_acceptance(o);
    } else if (suite == "calibration") {
        if (store) {
            auto acc = calibration_search().accepted();
            if (acc.size() != 1) {
                std::cerr << "calibration search accepted " << acc.size() << " candidates; nothing stored\n";
                return 1;
            }
            StoredCalibration s{1, acc.front(), oracle_digest(acc.front())};
            store_calibration(data_path("calibration.json"), s);
            std::cout << "stored " << s.calibration.describe() << " digest " << s.oracle_digest << "\n";
            return 0;
        }
        results.push_back(check_calibration(o));
    } else if (suite == "oracle" && oracle_m != 0) {
        if (oracle_m != 1 && oracle_m != 2)
            throw usage_error("verify oracle: --m must be 1 or 2");
        CriterionResult r;
        r.id = oracle_m == 1 ? 3 : 4;
        r.name = oracle_m == 1 ? "Burau oracle" : "LKB oracle";
        std::string witness;
        for (int n = 2; n <= oracle_max_n; ++n) {
            Verdict v = oracle_m == 1 ? compare_burau(n, active_calibration()) : compare_lkb(n, active_calibration());
            if (!v.match)
                r.counterexamples.push_back("n=" + std::to_string(n) + ": " + v.counterexample);
            else
                witness = v.witness->to_json().dump();
        }
        r.pass = r.counterexamples.empty();
        r.detail = "2<=n<=" + std::to_string(oracle_max_n) + ", witness " + witness;
        results.push_back(r);
    } else {
        bool found = false;
        for (const auto& c : all_criteria())
            if (c.suite == suite || (suite == "oracle" && (c.suite == "burau" || c.suite == "lkb"))) {
                results.push_back(c.run(o));
                found = true;
            }
        if (!found)
            throw usage_error("unknown verify suite '" + suite + "'");
    }
    bool pass = true;
    json payload = json::array();
    std::vector<std::string> cx;
    for (const auto& r : results) {
        pass = pass && r.pass;
        payload.push_back(r.to_json());
        for (const auto& c : r.counterexamples)
            cx.push_back("[" + std::to_string(r.id) + "] " + c);
        if (!as_json)
            std::cout << format_line(r) << "\n";
    }
    if (as_json)
        std::cout << report("verify", {{"suite", suite}, {"quick", quick}}, pass, payload, cx).dump(2) << "\n";
    else
        std::cout << (pass ? "all passed" : "FAILED") << "\n";
    return pass ? 0 : 1;
}

Presentation preset(const std::string& name, int n, int genus, int punctures) {
    if (name == "braid")
        return braid_presentation(n);
    if (name == "loop")
        return loop_braid_presentation(n, false);
    if (name == "loop-ext")
        return loop_braid_presentation(n, true);
    if (name == "surface")
        return bellingeri_presentation(SurfaceKind::Orientable, genus, punctures, n);
    if (name == "surface-nonorientable")
        return bellingeri_presentation(SurfaceKind::NonOrientable, genus, punctures, n);
    throw usage_error("unknown preset '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homological representations of braid groups: matrices, functors, verification"};
    app.require_subcommand(1);
    bool force = false;
    app.add_flag("--force", force, "Lift the configured bounds caps");

    int m = 1, n = 2, cutoff = 6, genus = 1, punctures = 0, len = 0, k = 0, max_n = 5;
    bool as_json = false, latex = false, quick = false, store = false;
    std::string word, functor = "lb", suite = "all", family = "alpha", preset_name = "braid", file;

    auto* dim = app.add_subcommand("dim", "Rank of LB_m(n)");
    dim->add_option("--m", m)->required();
    dim->add_option("--n", n)->required();
    dim->add_flag("--json", as_json);

    auto* matrix = app.add_subcommand("matrix", "Matrix of a braid word on LB_m(n)");
    matrix->add_option("--m", m)->required();
    matrix->add_option("--n", n)->required();
    matrix->add_option("--word", word, "e.g. \"s1 s2^-1\"")->required();
    matrix->add_flag("--json", as_json, "JSON output (default)");
    matrix->add_flag("--latex", latex, "LaTeX output");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite,
                       "all|rank|braid|oracle|burau|lkb|naturality|delta|diffeva|degree|moriyama|abelian|quotient|"
                       "phi|snf|calibration");
    verify->add_flag("--quick", quick, "Reduced bounds");
    verify->add_flag("--json", as_json);
    int oracle_m = 0;
    verify->add_option("--m", oracle_m, "oracle suite: 1 (Burau) or 2 (LKB)");
    verify->add_option("--max-n", max_n, "oracle suite: largest n");
    verify->add_flag("--store", store, "calibration suite: run the search and store the result");

    auto* degree = app.add_subcommand("degree", "Polynomial degree report");
    degree->add_option("--functor", functor)->check(CLI::IsMember({"lb", "moriyama"}));
    degree->add_option("--m", m)->required();
    degree->add_option("--cutoff", cutoff);
    degree->add_flag("--json", as_json);

    auto* diso = app.add_subcommand("delta-iso", "Check delta LB_m = tau LB_{m-1}");
    diso->add_option("--m", m)->required();
    diso->add_option("--cutoff", cutoff);
    diso->add_flag("--json", as_json);

    auto* abel = app.add_subcommand("abelianize", "Abelianization of a presentation");
    abel->add_option("--preset", preset_name)
        ->check(CLI::IsMember({"braid", "loop", "loop-ext", "surface", "surface-nonorientable"}));
    abel->add_option("--n", n);
    abel->add_option("--genus", genus);
    abel->add_option("--punctures", punctures);
    abel->add_option("--file", file, "presentation JSON instead of a preset");
    abel->add_flag("--json", as_json);

    auto* qimg = app.add_subcommand("quotient-image", "Image group of the alpha/beta/gamma quotients");
    qimg->add_option("--family", family)->check(CLI::IsMember({"alpha", "beta", "gamma"}));
    qimg->add_option("--m", m)->required();
    qimg->add_flag("--json", as_json);

    auto* mor = app.add_subcommand("moriyama", "Ranks and labels of Mor_m");
    mor->add_option("--m", m)->required();
    mor->add_option("--g", genus)->required();
    mor->add_flag("--json", as_json);

    auto* parts = app.add_subcommand("partitions", "Enumerate P_m(len) or P_m^{delta k}(n)");
    parts->add_option("--m", m)->required();
    parts->add_option("--len", len);
    parts->add_option("--delta", k);
    parts->add_option("--n", n);
    parts->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Caps& c = caps();
        if (*dim) {
            cap("m", m, c.max_m + 1, force);
            if (m < 1 || n < 0)
                throw usage_error("dim: m >= 1 and n >= 0 required");
            std::size_t r = n <= 1 ? 0 : static_cast<std::size_t>(binomial(n + m - 2, m));
            if (as_json)
                std::cout << json{{"m", m}, {"n", n}, {"rank", r}}.dump() << "\n";
            else
                std::cout << r << "\n";
            return 0;
        }
        if (*matrix) {
            cap("m", m, c.max_m, force);
            cap("n", n, c.max_n, force);
            BraidWord w = parse_braid(word, n);
            cap("word length", static_cast<int>(w.letters.size()), c.max_word_length, force);
            if (m < 1 || n < 2)
                throw usage_error("matrix: m >= 1 and n >= 2 required");
            TabulatedFunctor F = lb_tabulate(m, n);
            RepMatrix M = word_matrix(F, w);
            if (latex)
                std::cout << M.to_latex();
            else
                std::cout << M.to_json().dump() << "\n";
            return 0;
        }
        if (*verify)
            return run_verify(suite, quick, as_json, oracle_m, max_n, store);
        if (*degree) {
            cap("m", m, c.max_m, force);
            cap("cutoff", cutoff, c.max_cutoff, force);
            TabulatedFunctor F = functor == "lb" ? lb_tabulate(m, cutoff) : moriyama_tabulate(m, cutoff);
            DegreeReport r = degree_report(F, m + 2);
            if (as_json) {
                std::cout << r.to_json().dump(2) << "\n";
            } else {
                auto j = r.to_json();
                std::cout << r.functor << " cutoff " << r.cutoff << ": strong degree " << j["strong_degree"].dump()
                          << (r.very_strong ? " (very strong)" : "") << ", weak degree " << j["weak_degree"].dump()
                          << ", i1 witness " << (r.witness ? "yes" : "no") << "\n";
                for (std::size_t d = 0; d < r.delta_ranks.size(); ++d) {
                    std::cout << "  delta^" << d << " ranks:";
                    for (auto x : r.delta_ranks[d])
                        std::cout << " " << x;
                    std::cout << "\n";
                }
            }
            return r.strong_degree || r.weak_degree ? 0 : 1;
        }
        if (*diso) {
            cap("m", m, c.max_m, force);
            cap("cutoff", cutoff, c.max_cutoff, force);
            DiffevaResult d = diffeva_check(m, cutoff);
            if (as_json)
                std::cout << report("delta-iso", {{"m", m}, {"cutoff", cutoff}}, d.ok, d.to_json(),
                                    d.ok ? std::vector<std::string>{} : std::vector<std::string>{d.counterexample})
                                 .dump(2)
                          << "\n";
            else
                std::cout << (d.ok ? "isomorphism holds, ring map " + d.ring_map : "FAIL: " + d.counterexample) << "\n";
            return d.ok ? 0 : 1;
        }
        if (*abel) {
            Presentation p;
            if (!file.empty()) {
                std::ifstream in(file);
                if (!in)
                    throw usage_error("cannot open " + file);
                p = Presentation::from_json(json::parse(in));
            } else {
                cap("n", n, c.max_n, force);
                cap("genus", genus, c.max_genus, force);
                p = preset(preset_name, n, genus, punctures);
            }
            AbelianGroup g = abelianization(p);
            if (as_json)
                std::cout << json{{"generators", p.generators.size()}, {"relators", p.relators.size()}, {"abelianization", g.to_json()}, {"text", g.to_string()}}.dump() << "\n";
            else
                std::cout << g.to_string() << "\n";
            return 0;
        }
        if (*qimg) {
            QuotientImageCase qc = quotient_image_case(family, m);
            AbelianGroup g = quotient_image(qc);
            bool ok = g == qc.expected;
            if (as_json)
                std::cout << json{{"family", family}, {"m", m}, {"ambient", qc.ambient_description}, {"image", g.to_string()}, {"expected", qc.expected.to_string()}, {"status", ok ? "pass" : "fail"}}.dump() << "\n";
            else
                std::cout << g.to_string() << "\n";
            return ok ? 0 : 1;
        }
        if (*mor) {
            cap("m", m, c.max_m, force);
            cap("g", genus, c.max_genus, force);
            auto q = enum_Q(m, genus);
            if (as_json) {
                json labels = json::array();
                for (const auto& a : q)
                    labels.push_back({{"perm", a.perm}, {"part", a.part}});
                std::cout << json{{"m", m}, {"g", genus}, {"rank", q.size()}, {"labels", labels}}.dump() << "\n";
            } else {
                std::cout << q.size() << "\n";
            }
            return 0;
        }
        if (*parts) {
            cap("m", m, c.max_m + 1, force);
            std::vector<Partition> ps = k > 0 ? enum_P_delta(m, k, n) : enum_P(m, len);
            if (as_json) {
                std::cout << json(ps).dump() << "\n";
            } else {
                for (const auto& p : ps)
                    std::cout << label_string(p) << "\n";
            }
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const word_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const presentation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
