#include "hrep/forkcalc.hpp"

#include <map>
#include <numeric>

namespace hrep {

int Calibration::twist_exponent(int mu) const {
    switch (twist) {
        case TwistRule::Zero: return 0;
        case TwistRule::Mu: return mu;
        case TwistRule::HalfMuMuMinus1: return mu * (mu - 1) / 2;
        case TwistRule::MuMuMinus1: return mu * (mu - 1);
    }
    return 0;
}

int Calibration::reversal_sign(int mu) const {
    int e = 0;
    switch (sign) {
        case SignRule::Plus: e = 0; break;
        case SignRule::PowMu: e = mu; break;
        case SignRule::PowHalfMuMuMinus1: e = mu * (mu - 1) / 2; break;
        case SignRule::PowHalfMuMuPlus1: e = mu * (mu + 1) / 2; break;
    }
    return e % 2 ? -1 : 1;
}

namespace {

const char* twist_name(TwistRule r) {
    switch (r) {
        case TwistRule::Zero: return "0";
        case TwistRule::Mu: return "mu";
        case TwistRule::HalfMuMuMinus1: return "mu(mu-1)/2";
        case TwistRule::MuMuMinus1: return "mu(mu-1)";
    }
    return "?";
}

const char* sign_name(SignRule r) {
    switch (r) {
        case SignRule::Plus: return "+1";
        case SignRule::PowMu: return "(-1)^mu";
        case SignRule::PowHalfMuMuMinus1: return "(-1)^(mu(mu-1)/2)";
        case SignRule::PowHalfMuMuPlus1: return "(-1)^(mu(mu+1)/2)";
    }
    return "?";
}

const char* placement_name(Placement p) { return p == Placement::MovedSubarc ? "moved-subarc" : "whole-arc"; }

}  // namespace

std::string Calibration::describe() const {
    return std::string("s=") + std::to_string(winding_sign) + " e=" + twist_name(twist) + " sign=" + sign_name(sign) +
           " placement=" + placement_name(placement);
}

json Calibration::to_json() const {
    return json{{"winding_sign", winding_sign},
                {"block_twist", twist_name(twist)},
                {"reversal_sign", sign_name(sign)},
                {"over_cost_placement", placement_name(placement)},
                {"merge_variable", "-t^eps"}};
}

Calibration Calibration::from_json(const json& j) {
    Calibration c;
    c.winding_sign = j.at("winding_sign").get<int>();
    if (c.winding_sign != 1 && c.winding_sign != -1)
        throw std::invalid_argument("calibration: winding_sign must be +1 or -1");
    std::string t = j.at("block_twist").get<std::string>();
    bool found = false;
    for (auto r : {TwistRule::Zero, TwistRule::Mu, TwistRule::HalfMuMuMinus1, TwistRule::MuMuMinus1})
        if (t == twist_name(r)) {
            c.twist = r;
            found = true;
        }
    if (!found)
        throw std::invalid_argument("calibration: unknown block_twist '" + t + "'");
    std::string s = j.at("reversal_sign").get<std::string>();
    found = false;
    for (auto r : {SignRule::Plus, SignRule::PowMu, SignRule::PowHalfMuMuMinus1, SignRule::PowHalfMuMuPlus1})
        if (s == sign_name(r)) {
            c.sign = r;
            found = true;
        }
    if (!found)
        throw std::invalid_argument("calibration: unknown reversal_sign '" + s + "'");
    std::string p = j.at("over_cost_placement").get<std::string>();
    if (p == placement_name(Placement::MovedSubarc))
        c.placement = Placement::MovedSubarc;
    else if (p == placement_name(Placement::WholeArc))
        c.placement = Placement::WholeArc;
    else
        throw std::invalid_argument("calibration: unknown over_cost_placement '" + p + "'");
    return c;
}

std::vector<Calibration> calibration_candidates() {
    std::vector<Calibration> out;
    for (int s : {1, -1})
        for (auto t : {TwistRule::Zero, TwistRule::Mu, TwistRule::HalfMuMuMinus1, TwistRule::MuMuMinus1})
            for (auto g : {SignRule::Plus, SignRule::PowMu, SignRule::PowHalfMuMuMinus1, SignRule::PowHalfMuMuPlus1})
                for (auto p : {Placement::MovedSubarc, Placement::WholeArc})
                    out.push_back({s, t, g, p});
    return out;
}

std::vector<ArcDiagram> std_basis(int m, int n) {
    std::vector<ArcDiagram> out;
    if (n <= 1)
        return out;
    for (const auto& w : enum_P(m, n - 1)) {
        ArcDiagram d{m, n, 1, {}, Element(ring_qt(), 1)};
        for (int i = 0; i < n - 1; ++i)
            if (w[i] > 0)
                d.arcs.push_back({i + 1, i + 2, {}, w[i], false, 0});
        out.push_back(std::move(d));
    }
    return out;
}

ArcDiagram halftwist_image(int m, int n, const Partition& w, int i, int sign) {
    if (i < 1 || i > n - 1)
        throw std::out_of_range("halftwist_image: generator index out of range");
    if (static_cast<int>(w.size()) != n - 1 || std::accumulate(w.begin(), w.end(), 0) != m)
        throw std::invalid_argument("halftwist_image: w is not in P_m(n-1)");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("halftwist_image: sign must be +1 or -1");
    ArcDiagram d{m, n, sign, {}, Element(ring_qt(), 1)};
    // Intervals are 1-based: interval k joins p_k and p_{k+1}.
    const int a = i >= 2 ? w[i - 2] : 0;
    const int b = w[i - 1];
    const int c = i <= n - 2 ? w[i] : 0;
    for (int k = 1; k <= n - 1; ++k) {
        if (k >= i - 1 && k <= i + 1)
            continue;
        if (w[k - 1] > 0)
            d.arcs.push_back({k, k + 1, {}, w[k - 1], false, 0});
    }
    // The swap of p_i and p_{i+1}: the arc ending at p_i is dragged to p_{i+1}
    // passing on one side of p_i, the arc starting at p_{i+1} is dragged to
    // p_i on the other side, and the middle arc is turned around.
    const Route left_route = sign > 0 ? Route::Under : Route::Over;
    const Route right_route = sign > 0 ? Route::Over : Route::Under;
    if (a > 0)
        d.arcs.push_back({i - 1, i + 1, {left_route}, a, false, 0});
    if (b > 0)
        d.arcs.push_back({i, i + 1, {}, b, true, 1});
    if (c > 0)
        d.arcs.push_back({i, i + 2, {right_route}, c, false, 2});
    return d;
}

int routing_length(const ArcDiagram& d) {
    int r = 0;
    for (const auto& a : d.arcs)
        r += static_cast<int>(a.routing.size());
    return r;
}

namespace {

Element qt_monomial(long c, int qe, int te) { return Element::monomial(ring_qt(), Int(c), {qe, te}); }

void resolve(const ArcDiagram& d, const Calibration& cal, std::map<Partition, Element>& acc) {
    const int eps = d.twist;
    const int s = cal.winding_sign;
    for (std::size_t idx = 0; idx < d.arcs.size(); ++idx) {
        const Arc& arc = d.arcs[idx];
        if (arc.routing.empty())
            continue;
        if (arc.routing.size() != 1 || arc.right != arc.left + 2)
            throw std::logic_error("normalize: only arcs across a single puncture are supported");
        const int mid = arc.left + 1;
        const int before = routing_length(d);
        for (int k = 0; k <= arc.mult; ++k) {
            ArcDiagram e = d;
            e.arcs.erase(e.arcs.begin() + static_cast<long>(idx));
            if (k > 0)
                e.arcs.push_back({arc.left, mid, {}, k, false, arc.layer});
            if (arc.mult - k > 0)
                e.arcs.push_back({mid, arc.right, {}, arc.mult - k, false, arc.layer});
            if (arc.routing[0] == Route::Over) {
                // points on the sub-arc next to the swapped pair pick up the winding
                int moved = eps > 0 ? k : arc.mult - k;
                int cnt = cal.placement == Placement::MovedSubarc ? moved : arc.mult;
                e.coefficient = e.coefficient * qt_monomial(1, eps * s * cnt, 0);
            }
            if (routing_length(e) >= before)
                throw std::logic_error("normalize: rewrite did not decrease routing length");
            resolve(e, cal, acc);
        }
        return;
    }
    // straight arcs only: R3 then R4
    Element coef = d.coefficient;
    std::map<int, std::vector<std::pair<int, int>>> by_interval;  // left -> (layer, mult)
    for (const auto& arc : d.arcs) {
        if (arc.reversed) {
            int mu = arc.mult;
            coef = coef * qt_monomial(cal.reversal_sign(mu), eps * s * mu, eps * cal.twist_exponent(mu));
        }
        by_interval[arc.left].push_back({arc.layer, arc.mult});
    }
    Partition w(d.n - 1, 0);
    const Element merge_var = qt_monomial(-1, 0, eps);
    for (auto& [left, layers] : by_interval) {
        std::sort(layers.begin(), layers.end());
        std::vector<int> mults;
        for (const auto& l : layers) {
            mults.push_back(l.second);
            w[left - 1] += l.second;
        }
        if (mults.size() > 1)
            coef = coef * gaussian_multinomial(mults, merge_var);
    }
    if (std::accumulate(w.begin(), w.end(), 0) != d.m)
        throw std::logic_error("normalize: point count not preserved");
    auto it = acc.find(w);
    if (it == acc.end())
        acc.emplace(w, coef);
    else
        it->second += coef;
}

Element project_m1(const Element& e) {
    std::vector<std::pair<Key, Int>> terms;
    for (const auto& [k, c] : e.terms()) {
        if (k[1] != 0)
            throw calibration_mismatch("t appears in a rank-one coefficient: " + e.to_string());
        terms.push_back({{k[0]}, c});
    }
    return Element::from_terms(ring_x(), std::move(terms));
}

}  // namespace

Combination normalize(const ArcDiagram& d, const Calibration& cal) {
    std::map<Partition, Element> acc;
    resolve(d, cal, acc);
    Combination out;
    for (auto& [w, c] : acc)
        if (!c.is_zero())
            out.emplace_back(w, c);
    return out;
}

Combination generator_column(int m, int n, int i, int sign, const Partition& w, const Calibration& cal) {
    Combination col = normalize(halftwist_image(m, n, w, i, sign), cal);
    if (m == 1)
        for (auto& [p, c] : col)
            c = project_m1(c);
    return col;
}

RepMatrix generator_matrix(int m, int n, int i, int sign, const Calibration& cal) {
    if (m < 1)
        throw std::invalid_argument("generator_matrix: m >= 1 required");
    if (i < 1 || i > n - 1)
        throw std::out_of_range("generator_matrix: generator index out of range");
    auto basis = enum_P(m, n - 1);
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k)
        index[basis[k]] = k;
    RepMatrix M(ring_for_m(m), basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [p, c] : generator_column(m, n, i, sign, basis[col], cal))
            M.set(index.at(p), col, c);
    M.row_labels = basis;
    M.col_labels = basis;
    return M;
}

}  // namespace hrep
