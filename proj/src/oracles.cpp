#include "hrep/oracles.hpp"

#include "hrep/config.hpp"
#include "hrep/kernels.hpp"
#include "hrep/partitions.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace hrep {

Element fox_derivative(const FreeWord& w, int j) {
    validate(w);
    std::map<int, long> acc;  // exponent of x -> coefficient
    int e = 0;
    for (int l : w.letters) {
        if (l > 0) {
            if (l == j)
                acc[e] += 1;
            ++e;
        } else {
            --e;
            if (-l == j)
                acc[e] -= 1;
        }
    }
    std::vector<std::pair<Key, Int>> terms;
    for (auto [k, c] : acc)
        if (c != 0)
            terms.push_back({{k}, Int(c)});
    return Element::from_terms(ring_x(), std::move(terms));
}

RepMatrix burau_unreduced(const BraidWord& b) {
    validate(b);
    const int n = b.strands;
    RepMatrix U(ring_x(), n, n);
    for (int i = 1; i <= n; ++i) {
        FreeWord img = artin_act(b, FreeWord{n, {i}});
        for (int j = 1; j <= n; ++j)
            U.set(i - 1, j - 1, fox_derivative(img, j));
    }
    return U;
}

RepMatrix burau_reduced(const BraidWord& b) {
    if (b.strands < 2)
        throw std::invalid_argument("burau_reduced: n >= 2 required");
    RepMatrix U = burau_unreduced(b);
    const std::size_t n = b.strands;
    RepMatrix R(ring_x(), n - 1, n - 1);
    // Row vector e_j - e_{j+1} maps to (U_j - U_{j+1}); rewrite in the
    // difference basis, whose coordinates are the partial sums.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Element acc(ring_x());
        for (std::size_t k = 0; k + 1 < n; ++k) {
            acc += U.at(j, k) - U.at(j + 1, k);
            R.set(j, k, acc);
        }
    }
    return R;
}

namespace {

struct LkbData {
    std::map<std::pair<int, int>, RepMatrix> mats;
};

const LkbData& lkb_data() {
    static const LkbData d = [] {
        LkbData out;
        std::ifstream in(data_path("lkb_generators.json"));
        if (!in)
            throw std::runtime_error("cannot open " + data_path("lkb_generators.json"));
        json j = json::parse(in);
        for (const auto& [key, m] : j.at("matrices").items()) {
            auto comma = key.find(',');
            int n = std::stoi(key.substr(0, comma));
            int i = std::stoi(key.substr(comma + 1));
            RepMatrix M = RepMatrix::from_json(m);
            // share the canonical ring object
            out.mats.emplace(std::make_pair(n, i), substitute(M, ring_qt(), {Element::variable(ring_qt(), 0), Element::variable(ring_qt(), 1)}));
            out.mats.at({n, i}).row_labels = M.row_labels;
            out.mats.at({n, i}).col_labels = M.col_labels;
        }
        return out;
    }();
    return d;
}

}  // namespace

const RepMatrix& lkb_reference(int n, int i) {
    const auto& d = lkb_data();
    auto it = d.mats.find({n, i});
    if (it == d.mats.end())
        throw std::out_of_range("lkb_reference: no data for n=" + std::to_string(n) + ", i=" + std::to_string(i));
    return it->second;
}

RepMatrix lkb_fork_basis(int n) {
    auto basis = enum_P(2, n - 1);
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k)
        index[basis[k]] = k;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.push_back({i, j});
    RepMatrix P(ring_qt(), basis.size(), pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
        auto [i, j] = pairs[col];
        for (int a = i; a < j; ++a)
            for (int b = a; b < j; ++b) {
                Partition w(n - 1, 0);
                ++w[a - 1];
                ++w[b - 1];
                P.add(index.at(w), col, Element::variable(ring_qt(), 0, b - i));
            }
        P.col_labels.push_back({i, j});
    }
    P.row_labels = basis;
    return P;
}

json Witness::to_json() const {
    json d = json::array();
    for (const auto& e : diagonal)
        d.push_back(e.to_string());
    return json{{"substitution", substitution}, {"transposed", transposed}, {"basis_change", basis_change}, {"diagonal", d}};
}

json Verdict::to_json() const {
    json j{{"match", match}};
    if (witness)
        j["witness"] = witness->to_json();
    if (!counterexample.empty())
        j["counterexample"] = counterexample;
    return j;
}

namespace {

struct Candidate {
    std::vector<Element> images;
    std::vector<std::string> printed;
};

std::vector<Candidate> substitution_candidates(const RingPtr& ring, bool signs) {
    const int r = ring->free_rank;
    const int s = ring->torsion2_rank;
    std::vector<Candidate> out;
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i)
        perm[i] = i;
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    const int choices = signs ? 4 : 2;
    long total = 1;
    for (int i = 0; i < r; ++i)
        total *= choices;
    for (const auto& p : perms)
        for (long code = 0; code < total; ++code) {
            Candidate c;
            long rest = code;
            for (int v = 0; v < r; ++v) {
                int ch = static_cast<int>(rest % choices);
                rest /= choices;
                int power = ch % 2 == 0 ? 1 : -1;
                int sign = ch / 2 == 0 ? 1 : -1;
                c.images.push_back(Element::variable(ring, p[v], power, sign));
                std::string name = ring->variable_names[p[v]];
                c.printed.push_back(ring->variable_names[v] + "->" + (sign < 0 ? "-" : "") + name + (power < 0 ? "^-1" : ""));
            }
            for (int b = 0; b < s; ++b) {
                c.images.push_back(Element::variable(ring, r + b));
                c.printed.push_back(ring->variable_names[r + b] + "->" + ring->variable_names[r + b]);
            }
            out.push_back(std::move(c));
        }
    return out;
}

// K = r * M with r a signed monomial; returns r.
std::optional<Element> monomial_ratio(const Element& K, const Element& M) {
    if (K.size() != M.size() || K.is_zero())
        return std::nullopt;
    const auto& [kk, kc] = K.terms().front();
    const auto& [mk, mc] = M.terms().front();
    Int c;
    if (kc == mc)
        c = 1;
    else if (kc == -mc)
        c = -1;
    else
        return std::nullopt;
    Key d(kk.size());
    for (std::size_t i = 0; i < kk.size(); ++i)
        d[i] = kk[i] - mk[i];
    const int fr = K.ring()->free_rank;
    for (std::size_t i = fr; i < d.size(); ++i)
        d[i] = (kk[i] + mk[i]) % 2;
    Element r = Element::monomial(K.ring(), c, d);
    if (r * M != K)
        return std::nullopt;
    return r;
}

std::optional<std::vector<Element>> find_diagonal(const std::vector<RepMatrix>& M, const std::vector<RepMatrix>& K, std::string& why) {
    const std::size_t n = K.front().rows();
    const RingPtr& ring = K.front().ring();
    std::vector<std::optional<Element>> d(n);
    for (std::size_t start = 0; start < n; ++start) {
        if (d[start])
            continue;
        d[start] = Element(ring, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < K.size(); ++k)
                for (std::size_t b = 0; b < n; ++b)
                    for (const auto& [a, kab] : K[k].column(b)) {
                        if (d[a].has_value() == d[b].has_value())
                            continue;
                        const Element& mab = M[k].at(a, b);
                        auto r = monomial_ratio(kab, mab);
                        if (!r) {
                            why = "entry (" + std::to_string(a) + "," + std::to_string(b) + ") of matrix " +
                                  std::to_string(k) + ": " + mab.to_string() + " vs " + kab.to_string();
                            return std::nullopt;
                        }
                        // M_ab d_b / d_a = K_ab
                        if (d[a])
                            d[b] = *d[a] * *r;
                        else
                            d[a] = *d[b] * gre_unit_inverse(*r);
                        changed = true;
                    }
        }
    }
    std::vector<Element> out;
    for (auto& e : d)
        out.push_back(*e);
    return out;
}

RepMatrix diag_conj(const RepMatrix& A, const std::vector<Element>& d) {
    RepMatrix R(A.ring(), A.rows(), A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (const auto& [i, v] : A.column(j))
            R.set(i, j, gre_unit_inverse(d[i]) * v * d[j]);
    return R;
}

}  // namespace

Verdict compare_reps(const std::vector<RepMatrix>& A, const std::vector<RepMatrix>& B, const CompareOptions& opt) {
    Verdict v;
    if (A.size() != B.size() || A.empty()) {
        v.counterexample = "matrix lists differ in length or are empty";
        return v;
    }
    std::vector<RepMatrix> base;
    if (opt.basis_change) {
        auto Pinv = inverse_unit_pivot(*opt.basis_change);
        if (!Pinv) {
            v.counterexample = "basis change is not invertible by unit pivots";
            return v;
        }
        for (const auto& a : A)
            base.push_back(*Pinv * a * *opt.basis_change);
    } else {
        base = A;
    }
    for (std::size_t k = 0; k < A.size(); ++k)
        if (base[k].rows() != B[k].rows() || base[k].cols() != B[k].cols()) {
            v.counterexample = "matrix " + std::to_string(k) + " has a different shape";
            return v;
        }
    const RingPtr& ring = base.front().ring();
    if (!same_ring(ring, B.front().ring())) {
        v.counterexample = "matrices live over different rings";
        return v;
    }
    std::string first_failure;
    for (bool tr : {false, true}) {
        if (tr && !opt.allow_transpose)
            continue;
        auto cands = substitution_candidates(ring, opt.allow_signs);
        if (!opt.allow_substitution)
            cands.resize(1);
        for (const auto& cand : cands) {
            std::vector<RepMatrix> M;
            bool shape_ok = true;
            for (const auto& a : base) {
                M.push_back(substitute(tr ? a.transpose() : a, ring, cand.images));
                shape_ok = shape_ok && M.back().rows() == B[M.size() - 1].rows();
            }
            if (!shape_ok)
                continue;
            std::string why;
            auto d = find_diagonal(M, B, why);
            if (d) {
                bool all = true;
                for (std::size_t k = 0; k < M.size() && all; ++k) {
                    RepMatrix C = diag_conj(M[k], *d);
                    if (C != B[k]) {
                        all = false;
                        auto diff = first_difference(C, B[k]);
                        why = "matrix " + std::to_string(k) + ": " + (diff ? *diff : "differs");
                    }
                }
                if (all) {
                    v.match = true;
                    v.witness = Witness{cand.printed, tr, opt.basis_change_name, *d};
                    return v;
                }
            }
            if (first_failure.empty())
                first_failure = why;
        }
    }
    v.counterexample = first_failure.empty() ? "no convention matched" : "identity convention: " + first_failure;
    return v;
}

std::vector<RepMatrix> lb_generator_list(int m, int n, const Calibration& cal) {
    GeneratorSet g = assemble_generators_parallel(m, n, cal);
    std::vector<RepMatrix> out = g.pos;
    out.insert(out.end(), g.neg.begin(), g.neg.end());
    return out;
}

std::vector<RepMatrix> burau_generator_list(int n) {
    std::vector<RepMatrix> out;
    for (int sign : {1, -1})
        for (int i = 1; i < n; ++i)
            out.push_back(burau_reduced(BraidWord{n, {{i, sign}}}));
    return out;
}

Verdict compare_burau(int n, const Calibration& cal, bool literal) {
    CompareOptions opt;
    opt.allow_substitution = !literal;
    try {
        return compare_reps(lb_generator_list(1, n, cal), burau_generator_list(n), opt);
    } catch (const calibration_mismatch& e) {
        Verdict v;
        v.counterexample = e.what();
        return v;
    }
}

Verdict compare_lkb(int n, const Calibration& cal) {
    std::vector<RepMatrix> K;
    for (int i = 1; i < n; ++i)
        K.push_back(lkb_reference(n, i));
    GeneratorSet g = assemble_generators_parallel(2, n, cal);
    CompareOptions opt;
    opt.allow_signs = true;
    opt.basis_change = lkb_fork_basis(n);
    opt.basis_change_name = "x_ij = sum_{i<=a<=b<j} q^(b-i) e_(a,b)";
    return compare_reps(g.pos, K, opt);
}

std::optional<std::string> check_braid_relations(const std::vector<RepMatrix>& pos, const std::vector<RepMatrix>& neg) {
    const std::size_t k = pos.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (!(pos[i] * neg[i]).is_identity())
            return "s" + std::to_string(i + 1) + " * s" + std::to_string(i + 1) + "^-1 != 1";
        if (!(neg[i] * pos[i]).is_identity())
            return "s" + std::to_string(i + 1) + "^-1 * s" + std::to_string(i + 1) + " != 1";
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        RepMatrix l = pos[i] * pos[i + 1] * pos[i];
        RepMatrix r = pos[i + 1] * pos[i] * pos[i + 1];
        if (l != r) {
            auto d = first_difference(l, r);
            return "s" + std::to_string(i + 1) + " s" + std::to_string(i + 2) + " s" + std::to_string(i + 1) +
                   " relation fails" + (d ? ": " + *d : "");
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j)
            if (pos[i] * pos[j] != pos[j] * pos[i])
                return "s" + std::to_string(i + 1) + " and s" + std::to_string(j + 1) + " do not commute";
    return std::nullopt;
}

std::vector<Calibration> CalibrationSearch::accepted() const {
    std::vector<Calibration> out;
    for (const auto& r : results)
        if (r.burau_ok && r.braid_ok)
            out.push_back(r.calibration);
    return out;
}

CalibrationSearch calibration_search(int burau_max_n, int braid_max_n) {
    CalibrationSearch s;
    for (const auto& cal : calibration_candidates()) {
        CandidateResult r{cal, true, true, ""};
        for (int n = 2; n <= burau_max_n && r.burau_ok; ++n) {
            Verdict v = compare_burau(n, cal, true);
            if (!v.match) {
                r.burau_ok = false;
                r.detail = "Burau n=" + std::to_string(n) + ": " + v.counterexample;
            }
        }
        for (int n = 3; n <= braid_max_n && r.braid_ok; ++n) {
            GeneratorSet g = assemble_generators_parallel(2, n, cal);
            if (auto bad = check_braid_relations(g.pos, g.neg)) {
                r.braid_ok = false;
                if (r.detail.empty())
                    r.detail = "m=2 n=" + std::to_string(n) + ": " + *bad;
            }
        }
        s.results.push_back(std::move(r));
    }
    return s;
}

std::string oracle_digest(const Calibration& cal) {
    std::ostringstream os;
    os << cal.to_json().dump();
    for (int n = 2; n <= 5; ++n) {
        Verdict v = compare_burau(n, cal);
        os << "|burau" << n << v.to_json().dump();
    }
    for (int n = 3; n <= 4; ++n) {
        Verdict v = compare_lkb(n, cal);
        os << "|lkb" << n << v.to_json().dump();
        for (const auto& M : lb_generator_list(2, n, cal))
            os << M.to_json().dump();
    }
    return hex64(fnv1a64(os.str()));
}

}  // namespace hrep
