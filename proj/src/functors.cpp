#include "hrep/functors.hpp"

#include "hrep/config.hpp"
#include "hrep/kernels.hpp"
#include "hrep/partitions.hpp"

#include <map>
#include <set>

namespace hrep {

bool TabulatedFunctor::is_zero() const {
    for (const auto& l : labels)
        if (!l.empty())
            return false;
    return true;
}

Label insert_label(const TabulatedFunctor& F, const Label& l) {
    const std::size_t at = static_cast<std::size_t>(F.label_offset + F.slot * F.block);
    if (at > l.size())
        throw functor_error("insert_label: insertion index past the end of the label");
    Label r = l;
    r.insert(r.begin() + static_cast<long>(at), static_cast<std::size_t>(F.block), 0);
    return r;
}

namespace {

// Stabilization matrices from the label insertion rule.
void stab_from_labels(TabulatedFunctor& F) {
    F.stab.clear();
    for (int n = 0; n < F.cutoff; ++n) {
        std::map<Label, std::size_t> index;
        for (std::size_t r = 0; r < F.labels[n + 1].size(); ++r)
            index[F.labels[n + 1][r]] = r;
        RepMatrix S(F.ring, F.rank(n + 1), F.rank(n));
        for (std::size_t c = 0; c < F.rank(n); ++c) {
            auto it = index.find(insert_label(F, F.labels[n][c]));
            if (it == index.end())
                throw functor_error(F.name + ": inserted label " + label_string(insert_label(F, F.labels[n][c])) +
                                    " missing at object " + std::to_string(n + 1));
            S.set(it->second, c, Element(F.ring, 1));
        }
        S.row_labels = F.labels[n + 1];
        S.col_labels = F.labels[n];
        F.stab.push_back(std::move(S));
    }
}

void check_cutoff(int m, int cutoff) {
    if (m < 1 || cutoff < 0)
        throw functor_error("m >= 1 and cutoff >= 0 required");
}

}  // namespace

TabulatedFunctor lb_tabulate(int m, int cutoff, const Calibration& cal) {
    check_cutoff(m, cutoff);
    TabulatedFunctor F;
    F.name = "LB_" + std::to_string(m);
    F.ring = ring_for_m(m);
    F.cutoff = cutoff;
    F.gen_pos.resize(cutoff + 1);
    F.gen_neg.resize(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) {
        F.labels.push_back(n >= 2 ? enum_P(m, n - 1) : std::vector<Label>{});
        if (n >= 2) {
            GeneratorSet g = assemble_generators_parallel(m, n, cal);
            F.gen_pos[n] = std::move(g.pos);
            F.gen_neg[n] = std::move(g.neg);
        }
    }
    stab_from_labels(F);
    return F;
}

TabulatedFunctor lb_tabulate(int m, int cutoff) { return lb_tabulate(m, cutoff, active_calibration()); }

TabulatedFunctor lb0_tabulate(int cutoff) {
    if (cutoff < 0)
        throw functor_error("cutoff >= 0 required");
    TabulatedFunctor F;
    F.name = "LB_0";
    F.ring = ring_x();
    F.cutoff = cutoff;
    F.gen_pos.resize(cutoff + 1);
    F.gen_neg.resize(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) {
        F.labels.push_back(n >= 2 ? enum_P(0, n - 1) : std::vector<Label>{});
        for (int i = 1; i < n; ++i) {
            F.gen_pos[n].push_back(RepMatrix::identity(F.ring, F.rank(n)));
            F.gen_neg[n].push_back(RepMatrix::identity(F.ring, F.rank(n)));
        }
    }
    stab_from_labels(F);
    return F;
}

TabulatedFunctor constant_functor(RingPtr ring, std::size_t rank, int cutoff, bool ranks_only) {
    TabulatedFunctor F;
    F.name = "const";
    F.ring = std::move(ring);
    F.cutoff = cutoff;
    F.ranks_only = ranks_only;
    F.block = 0;
    F.gen_pos.resize(cutoff + 1);
    F.gen_neg.resize(cutoff + 1);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < rank; ++i)
        labels.push_back({static_cast<int>(i)});
    for (int n = 0; n <= cutoff; ++n) {
        F.labels.push_back(labels);
        if (!ranks_only)
            for (int i = 1; i < n; ++i) {
                F.gen_pos[n].push_back(RepMatrix::identity(F.ring, rank));
                F.gen_neg[n].push_back(RepMatrix::identity(F.ring, rank));
            }
    }
    stab_from_labels(F);
    return F;
}

TabulatedFunctor moriyama_tabulate(int m, int cutoff) {
    check_cutoff(m, cutoff);
    TabulatedFunctor F;
    F.name = "Mor_" + std::to_string(m);
    F.ring = ring_z();
    F.cutoff = cutoff;
    F.ranks_only = true;
    F.block = 2;
    F.label_offset = m;
    F.gen_pos.resize(cutoff + 1);
    F.gen_neg.resize(cutoff + 1);
    for (int g = 0; g <= cutoff; ++g) {
        std::vector<Label> l;
        for (const auto& a : enum_Q(m, g))
            l.push_back(a.flat());
        F.labels.push_back(std::move(l));
    }
    stab_from_labels(F);
    return F;
}

std::optional<std::string> check_coordinate_injection(const TabulatedFunctor& F) {
    for (int n = 0; n < F.cutoff; ++n) {
        const RepMatrix& S = F.stab[n];
        std::set<std::size_t> seen;
        for (std::size_t c = 0; c < S.cols(); ++c) {
            const auto& col = S.column(c);
            if (col.size() != 1 || !col.begin()->second.is_one())
                return F.name + ": stab at object " + std::to_string(n) + " column " + std::to_string(c) +
                       " is not a standard basis vector";
            if (!seen.insert(col.begin()->first).second)
                return F.name + ": stab at object " + std::to_string(n) + " hits a row twice";
            if (F.labels[n + 1][col.begin()->first] != insert_label(F, F.labels[n][c]))
                return F.name + ": stab at object " + std::to_string(n) + " does not follow the insertion rule";
        }
    }
    return std::nullopt;
}

RepMatrix word_matrix(const TabulatedFunctor& F, const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    if (n > F.cutoff)
        throw functor_error("object " + std::to_string(n) + " exceeds the cutoff " + std::to_string(F.cutoff));
    if (F.ranks_only && !w.letters.empty())
        throw functor_error(F.name + " carries no generator matrices");
    RepMatrix M = RepMatrix::identity(F.ring, F.rank(n));
    M.row_labels = M.col_labels = F.labels[n];
    for (const auto& l : w.letters)
        M = M * (l.sign > 0 ? F.gen_pos[n][l.index - 1] : F.gen_neg[n][l.index - 1]);
    return M;
}

RepMatrix stab_power(const TabulatedFunctor& F, int n, int k) {
    if (n < 0 || k < 0 || n + k > F.cutoff)
        throw functor_error("stabilization outside the tabulated window");
    RepMatrix S = RepMatrix::identity(F.ring, F.rank(n));
    S.row_labels = S.col_labels = F.labels[n];
    for (int j = 0; j < k; ++j)
        S = F.stab[n + j] * S;
    return S;
}

RepMatrix eval(const TabulatedFunctor& F, const BracketMorphism& f) {
    if (f.target < f.source || f.braid.strands != f.target)
        throw functor_error("eval: malformed bracket morphism");
    return word_matrix(F, f.braid) * stab_power(F, f.source, f.target - f.source);
}

BracketMorphism compose(const BracketMorphism& g, const BracketMorphism& f) {
    if (g.source != f.target)
        throw functor_error("compose: morphisms are not composable");
    return {f.source, g.target, concat(g.braid, shift(f.braid, g.target - g.source))};
}

std::optional<std::string> check_naturality(const TabulatedFunctor& F, int max_n) {
    if (F.ranks_only)
        return std::nullopt;
    for (int n = 2; n <= std::min(max_n, F.cutoff - 1); ++n)
        for (int i = 1; i < n; ++i)
            for (int sign : {1, -1}) {
                const auto& g = sign > 0 ? F.gen_pos : F.gen_neg;
                RepMatrix l = F.stab[n] * g[n][i - 1];
                RepMatrix r = g[n + 1][i] * F.stab[n];
                if (l != r) {
                    auto d = first_difference(l, r);
                    return F.name + ": naturality fails at n=" + std::to_string(n) + " for s" + std::to_string(i) +
                           (sign < 0 ? "^-1" : "") + (d ? ": " + *d : "");
                }
            }
    return std::nullopt;
}

Cokernel unit_pivot_cokernel(const RepMatrix& S) {
    const std::size_t R = S.rows();
    const std::size_t C = S.cols();
    std::vector<std::map<std::size_t, Element>> work(C);
    std::vector<std::set<std::size_t>> row_cols(R);  // row -> later columns with an entry there
    for (std::size_t c = 0; c < C; ++c) {
        work[c] = S.column(c);
        for (const auto& [r, v] : work[c])
            row_cols[r].insert(c);
    }
    std::vector<bool> is_pivot(R, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
    Cokernel out;
    for (std::size_t c = 0; c < C; ++c) {
        auto& col = work[c];
        for (const auto& [r, v] : col)
            row_cols[r].erase(c);
        if (col.empty()) {
            ++out.kernel_rank;
            continue;
        }
        std::optional<std::size_t> p;
        for (const auto& [r, v] : col)
            if (!is_pivot[r] && gre_is_unit(v)) {
                p = r;
                break;
            }
        if (!p)
            throw functor_error("unit_pivot_cokernel: column " + std::to_string(c) + " has no unit entry");
        is_pivot[*p] = true;
        pivots.push_back({*p, c});
        const Element inv = gre_unit_inverse(col.at(*p));
        std::vector<std::size_t> targets(row_cols[*p].begin(), row_cols[*p].end());
        for (std::size_t c2 : targets) {
            auto& dst = work[c2];
            const Element f = dst.at(*p) * inv;
            for (const auto& [r, v] : col) {
                auto it = dst.find(r);
                Element nv = (it == dst.end() ? Element(v.ring()) : it->second) - f * v;
                if (nv.is_zero()) {
                    if (it != dst.end())
                        dst.erase(it);
                    row_cols[r].erase(c2);
                } else {
                    if (it == dst.end())
                        row_cols[r].insert(c2);
                    dst[r] = std::move(nv);
                }
            }
        }
    }
    std::vector<std::size_t> index(R, 0);
    for (std::size_t r = 0; r < R; ++r)
        if (!is_pivot[r]) {
            index[r] = out.complement.size();
            out.complement.push_back(r);
        }
    const std::size_t K = out.complement.size();
    out.projection = RepMatrix(S.ring(), K, R);
    out.section = RepMatrix(S.ring(), R, K);
    for (std::size_t k = 0; k < K; ++k) {
        out.projection.set(k, out.complement[k], Element(S.ring(), 1));
        out.section.set(out.complement[k], k, Element(S.ring(), 1));
    }
    // e_p = -(1/col_p) sum_{r != p} col_r e_r modulo the image; later pivots first
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [p, c] = *it;
        const auto& col = work[c];
        const Element inv = gre_unit_inverse(col.at(p));
        std::map<std::size_t, Element> img;
        for (const auto& [r, v] : col) {
            if (r == p)
                continue;
            const Element f = -(v * inv);
            for (const auto& [k, w] : out.projection.column(r)) {
                auto jt = img.find(k);
                if (jt == img.end())
                    img.emplace(k, f * w);
                else
                    jt->second += f * w;
            }
        }
        auto& dst = out.projection.column_mut(p);
        dst.clear();
        for (auto& [k, v] : img)
            if (!v.is_zero())
                dst.emplace(k, std::move(v));
    }
    return out;
}

namespace {

std::vector<Label> pick_labels(const std::vector<Label>& all, const std::vector<std::size_t>& rows) {
    std::vector<Label> out;
    for (auto r : rows)
        out.push_back(all.at(r));
    return out;
}

}  // namespace

TabulatedFunctor translate(const TabulatedFunctor& F) {
    if (F.cutoff < 1)
        throw functor_error("translate: cutoff too small");
    TabulatedFunctor T;
    T.name = "tau(" + F.name + ")";
    T.ring = F.ring;
    T.cutoff = F.cutoff - 1;
    T.ranks_only = F.ranks_only;
    T.slot = F.slot;
    T.block = F.block;
    T.label_offset = F.label_offset;
    T.gen_pos.resize(T.cutoff + 1);
    T.gen_neg.resize(T.cutoff + 1);
    for (int n = 0; n <= T.cutoff; ++n) {
        T.labels.push_back(F.labels[n + 1]);
        if (!F.ranks_only)
            for (int i = 1; i < n; ++i) {
                T.gen_pos[n].push_back(F.gen_pos[n + 1][i]);
                T.gen_neg[n].push_back(F.gen_neg[n + 1][i]);
            }
    }
    for (int n = 0; n < T.cutoff; ++n) {
        if (F.ranks_only)
            T.stab.push_back(F.stab[n + 1]);
        else
            // tau_1 F([1, id]) = F(sigma_1^-1) o F([1, id_{1+n}])
            T.stab.push_back(F.gen_neg[n + 2][0] * F.stab[n + 1]);
    }
    return T;
}

TabulatedFunctor difference(const TabulatedFunctor& F) {
    if (F.cutoff < 1)
        throw functor_error("difference: cutoff too small");
    TabulatedFunctor D;
    D.name = "delta(" + F.name + ")";
    D.ring = F.ring;
    D.cutoff = F.cutoff - 1;
    D.ranks_only = F.ranks_only;
    D.slot = F.slot + 1;
    D.block = F.block;
    D.label_offset = F.label_offset;
    D.gen_pos.resize(D.cutoff + 1);
    D.gen_neg.resize(D.cutoff + 1);
    std::vector<Cokernel> cok;
    for (int n = 0; n <= D.cutoff; ++n) {
        cok.push_back(unit_pivot_cokernel(F.stab[n]));
        D.labels.push_back(pick_labels(F.labels[n + 1], cok[n].complement));
    }
    if (F.ranks_only) {
        stab_from_labels(D);
        return D;
    }
    for (int n = 0; n <= D.cutoff; ++n)
        for (int i = 1; i < n; ++i) {
            D.gen_pos[n].push_back(cok[n].projection * F.gen_pos[n + 1][i] * cok[n].section);
            D.gen_neg[n].push_back(cok[n].projection * F.gen_neg[n + 1][i] * cok[n].section);
        }
    for (int n = 0; n < D.cutoff; ++n) {
        RepMatrix tstab = F.gen_neg[n + 2][0] * F.stab[n + 1];
        RepMatrix S = cok[n + 1].projection * tstab * cok[n].section;
        S.row_labels = D.labels[n + 1];
        S.col_labels = D.labels[n];
        D.stab.push_back(std::move(S));
    }
    for (int n = 0; n <= D.cutoff; ++n)
        for (auto* v : {&D.gen_pos[n], &D.gen_neg[n]})
            for (auto& M : *v)
                M.row_labels = M.col_labels = D.labels[n];
    return D;
}

std::vector<std::size_t> evanescence_ranks(const TabulatedFunctor& F) {
    std::vector<std::size_t> out;
    for (int n = 0; n < F.cutoff; ++n)
        out.push_back(unit_pivot_cokernel(F.stab[n]).kernel_rank);
    return out;
}

TabulatedFunctor iterate_difference(const TabulatedFunctor& F, int k) {
    TabulatedFunctor D = F;
    for (int j = 0; j < k; ++j)
        D = difference(D);
    return D;
}

json DegreeReport::to_json() const {
    json j{{"functor", functor},
           {"cutoff", cutoff},
           {"delta_ranks", delta_ranks},
           {"kappa_ranks", kappa_ranks},
           {"very_strong", very_strong},
           {"i1_bijection_witness", witness}};
    j["strong_degree"] = strong_degree ? json(*strong_degree) : json("inconclusive");
    j["weak_degree"] = weak_degree ? json(*weak_degree) : json("inconclusive");
    if (!note.empty())
        j["note"] = note;
    return j;
}

namespace {

std::vector<std::size_t> ranks_of(const TabulatedFunctor& F) {
    std::vector<std::size_t> r;
    for (int n = 0; n <= F.cutoff; ++n)
        r.push_back(F.rank(n));
    return r;
}

bool stab_bijective(const TabulatedFunctor& F, int n) {
    if (F.rank(n) != F.rank(n + 1))
        return false;
    Cokernel c = unit_pivot_cokernel(F.stab[n]);
    return c.kernel_rank == 0 && c.complement.empty();
}

}  // namespace

DegreeReport degree_report(const TabulatedFunctor& F, int max_k) {
    DegreeReport rep;
    rep.functor = F.name;
    rep.cutoff = F.cutoff;
    std::vector<TabulatedFunctor> D{F};
    for (int k = 1; k <= max_k && D.back().cutoff >= 1; ++k)
        D.push_back(difference(D.back()));
    for (const auto& d : D) {
        rep.delta_ranks.push_back(ranks_of(d));
        rep.kappa_ranks.push_back(evanescence_ranks(d));
    }
    // strong: least d with delta^{d+1} F = 0 on a window reaching object 1
    for (std::size_t d = 0; d + 1 < D.size(); ++d)
        if (D[d + 1].cutoff >= 1 && D[d + 1].is_zero()) {
            rep.strong_degree = static_cast<int>(d);
            bool vs = true;
            for (std::size_t k = 0; k <= d; ++k)
                for (auto r : rep.kappa_ranks[k])
                    vs = vs && r == 0;
            rep.very_strong = vs;
            break;
        }
    // weak: least d with delta^{d+1} F supported on objects n with 2n <= top
    for (std::size_t d = 0; d + 1 < D.size(); ++d) {
        const auto& E = D[d + 1];
        if (E.cutoff < 2)
            break;
        bool small = true;
        for (int n = 0; n <= E.cutoff; ++n)
            small = small && (E.rank(n) == 0 || 2 * n <= E.cutoff);
        if (small) {
            rep.weak_degree = static_cast<int>(d);
            bool w = D[d].cutoff >= 2;
            for (int n = 1; n < D[d].cutoff; ++n)
                w = w && stab_bijective(D[d], n);
            rep.witness = w;
            break;
        }
    }
    if (!rep.strong_degree || !rep.weak_degree)
        rep.note = "window too small for a conclusive report";
    return rep;
}

json DiffevaResult::to_json() const {
    json bm = json::array();
    for (const auto& [a, b] : basis_map)
        bm.push_back({a, b});
    json j{{"ok", ok}, {"ring_map", ring_map}, {"basis_map_top_object", bm}};
    if (!counterexample.empty())
        j["counterexample"] = counterexample;
    return j;
}

namespace {

// A(i,j) == phi(B)(perm_r(i), perm_c(j)) for all entries.
std::optional<std::string> compare_relabeled(const RepMatrix& A, const RepMatrix& B,
                                             const std::vector<std::size_t>& pr, const std::vector<std::size_t>& pc,
                                             const RingPtr& target, const std::vector<Element>& images,
                                             const std::string& what) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        return what + ": shapes differ";
    std::size_t nnz = 0;
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (const auto& [i, v] : A.column(j)) {
            ++nnz;
            Element w = substitute(B.at(pr[i], pc[j]), target, images);
            if (w != v)
                return what + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") " + v.to_string() +
                       " vs " + w.to_string();
        }
    if (nnz != B.nnz())
        return what + ": support differs";
    return std::nullopt;
}

std::vector<std::size_t> forget_perm(const std::vector<Label>& from, const std::vector<Label>& to) {
    std::map<Label, std::size_t> index;
    for (std::size_t k = 0; k < to.size(); ++k)
        index[to[k]] = k;
    std::vector<std::size_t> p;
    for (const auto& l : from) {
        auto it = index.find(forget_first(l));
        if (it == index.end())
            throw functor_error("forget_first image " + label_string(forget_first(l)) + " missing");
        p.push_back(it->second);
    }
    return p;
}

}  // namespace

DiffevaResult diffeva_check(int m, int cutoff) {
    check_cutoff(m, cutoff);
    DiffevaResult res;
    TabulatedFunctor A = difference(lb_tabulate(m, cutoff));
    TabulatedFunctor B = translate(m == 1 ? lb0_tabulate(cutoff) : lb_tabulate(m - 1, cutoff));
    struct RingMap {
        std::string name;
        std::vector<Element> images;
    };
    std::vector<RingMap> maps;
    if (m == 2) {
        const RingPtr qt = ring_qt();
        maps = {{"x -> q", {Element::variable(qt, 0)}},
                {"x -> t", {Element::variable(qt, 1)}},
                {"x -> q^-1", {Element::variable(qt, 0, -1)}},
                {"x -> t^-1", {Element::variable(qt, 1, -1)}}};
    } else if (m == 1) {
        maps = {{"identity", {Element::variable(ring_x(), 0)}}};
    } else {
        maps = {{"identity", {Element::variable(ring_qt(), 0), Element::variable(ring_qt(), 1)}}};
    }
    for (int n = 0; n <= A.cutoff; ++n)
        if (A.rank(n) != B.rank(n)) {
            res.counterexample = "rank mismatch at object " + std::to_string(n) + ": " + std::to_string(A.rank(n)) +
                                 " vs " + std::to_string(B.rank(n));
            return res;
        }
    std::vector<std::vector<std::size_t>> perm;
    for (int n = 0; n <= A.cutoff; ++n)
        perm.push_back(forget_perm(A.labels[n], B.labels[n]));
    std::string first;
    for (const auto& rm : maps) {
        std::optional<std::string> bad;
        for (int n = 0; n <= A.cutoff && !bad; ++n)
            for (int i = 1; i < n && !bad; ++i) {
                bad = compare_relabeled(A.gen_pos[n][i - 1], B.gen_pos[n][i - 1], perm[n], perm[n], A.ring, rm.images,
                                        "object " + std::to_string(n) + " s" + std::to_string(i));
                if (!bad)
                    bad = compare_relabeled(A.gen_neg[n][i - 1], B.gen_neg[n][i - 1], perm[n], perm[n], A.ring,
                                            rm.images, "object " + std::to_string(n) + " s" + std::to_string(i) + "^-1");
            }
        for (int n = 0; n < A.cutoff && !bad; ++n)
            bad = compare_relabeled(A.stab[n], B.stab[n], perm[n + 1], perm[n], A.ring, rm.images,
                                    "stabilization at object " + std::to_string(n));
        if (!bad) {
            res.ok = true;
            res.ring_map = rm.name;
            for (const auto& l : A.labels[A.cutoff])
                res.basis_map.push_back({l, forget_first(l)});
            return res;
        }
        if (first.empty())
            first = rm.name + ": " + *bad;
    }
    res.counterexample = first;
    return res;
}

}  // namespace hrep
