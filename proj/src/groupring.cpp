#include "hrep/groupring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace hrep {

RingDescriptor::RingDescriptor(int r, int s, std::vector<std::string> names)
    : free_rank(r), torsion2_rank(s), variable_names(std::move(names)) {
    if (r < 0 || s < 0)
        throw ring_error("ring descriptor: negative rank");
    if (static_cast<int>(variable_names.size()) != r + s)
        throw ring_error("ring descriptor: expected " + std::to_string(r + s) + " variable names");
    std::set<std::string> seen(variable_names.begin(), variable_names.end());
    if (seen.size() != variable_names.size())
        throw ring_error("ring descriptor: variable names must be distinct");
}

json RingDescriptor::to_json() const {
    return json{{"free_rank", free_rank}, {"torsion2_rank", torsion2_rank}, {"variables", variable_names}};
}

RingDescriptor RingDescriptor::from_json(const json& j) {
    return RingDescriptor(j.at("free_rank").get<int>(), j.at("torsion2_rank").get<int>(),
                          j.at("variables").get<std::vector<std::string>>());
}

RingPtr make_ring(int r, int s, std::vector<std::string> names) {
    return std::make_shared<const RingDescriptor>(r, s, std::move(names));
}

RingPtr ring_x() {
    static const RingPtr r = make_ring(1, 0, {"x"});
    return r;
}

RingPtr ring_qt() {
    static const RingPtr r = make_ring(2, 0, {"q", "t"});
    return r;
}

RingPtr ring_z() {
    static const RingPtr r = make_ring(0, 0, {});
    return r;
}

RingPtr ring_for_m(int m) { return m <= 1 ? ring_x() : ring_qt(); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
    if (a && b && !same_ring(a, b))
        throw ring_error("group ring mismatch");
}

Key unit_key(const RingPtr& r) { return Key(r ? r->width() : 0, 0); }

Key add_keys(const Key& a, const Key& b, int free_rank) {
    Key k(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        k[i] = static_cast<int>(i) < free_rank ? a[i] + b[i] : (a[i] ^ b[i]);
    return k;
}

Key neg_key(const Key& a, int free_rank) {
    Key k(a);
    for (int i = 0; i < free_rank; ++i)
        k[i] = -k[i];
    return k;
}

}  // namespace

Element::Element(RingPtr ring, long c) : ring_(std::move(ring)) {
    if (c != 0)
        terms_.emplace_back(unit_key(ring_), Int(c));
}

Element::Element(RingPtr ring, const Int& c, Key key) : ring_(std::move(ring)) {
    if (!ring_ || static_cast<int>(key.size()) != ring_->width())
        throw ring_error("exponent key has wrong length");
    for (int i = ring_->free_rank; i < ring_->width(); ++i)
        key[i] &= 1;
    if (c != 0)
        terms_.emplace_back(std::move(key), c);
}

Element Element::variable(RingPtr ring, int i, int e, long c) {
    Key k = unit_key(ring);
    k.at(i) = e;
    return Element(std::move(ring), Int(c), std::move(k));
}

bool Element::is_one() const {
    if (terms_.size() != 1 || terms_[0].second != 1)
        return false;
    return std::all_of(terms_[0].first.begin(), terms_[0].first.end(), [](int e) { return e == 0; });
}

void Element::adopt(const Element& o) {
    require_same(ring_, o.ring_);
    if (!ring_)
        ring_ = o.ring_;
}

Element Element::operator-() const {
    Element r(*this);
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

namespace {

// Merge two sorted term lists with a sign on the second.
std::vector<std::pair<Key, Int>> merge_terms(const std::vector<std::pair<Key, Int>>& a,
                                             const std::vector<std::pair<Key, Int>>& b, bool negate) {
    std::vector<std::pair<Key, Int>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, negate ? Int(-b[j].second) : b[j].second);
            ++j;
        } else {
            Int c = negate ? Int(a[i].second - b[j].second) : Int(a[i].second + b[j].second);
            if (c != 0)
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Element& Element::operator+=(const Element& o) {
    adopt(o);
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    adopt(o);
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Element Element::from_terms(RingPtr ring, std::vector<std::pair<Key, Int>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Element r(std::move(ring));
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first)
            r.terms_.back().second += t.second;
        else
            r.terms_.push_back(std::move(t));
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
    return r;
}

Element operator*(const Element& a, const Element& b) {
    require_same(a.ring_, b.ring_);
    RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
    if (a.is_zero() || b.is_zero())
        return Element(ring);
    const int fr = ring->free_rank;
    std::map<Key, Int> acc;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Int& slot = acc[add_keys(ka, kb, fr)];
            slot += ca * cb;
        }
    Element r(ring);
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0)
            r.terms_.emplace_back(k, std::move(c));
    return r;
}

Element Element::scaled(const Int& c, const Key& key) const {
    Element r(ring_);
    if (c == 0)
        return r;
    const int fr = ring_ ? ring_->free_rank : 0;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_)
        r.terms_.emplace_back(add_keys(k, key, fr), v * c);
    if (ring_ && ring_->torsion2_rank > 0)
        return from_terms(ring_, std::move(r.terms_));
    // translation by a free-group element preserves the lexicographic order
    return r;
}

bool Element::operator==(const Element& o) const {
    if (terms_.empty() && o.terms_.empty())
        return true;
    if (ring_ && o.ring_ && !same_ring(ring_, o.ring_))
        return false;
    return terms_ == o.terms_;
}

json Element::to_json() const {
    json arr = json::array();
    const int fr = ring_ ? ring_->free_rank : 0;
    for (const auto& [k, c] : terms_) {
        json coeff;
        if (c >= Int(std::numeric_limits<long long>::min()) && c <= Int(std::numeric_limits<long long>::max()))
            coeff = static_cast<long long>(c);
        else
            coeff = c.str();
        std::vector<int> e(k.begin(), k.begin() + fr), b(k.begin() + fr, k.end());
        arr.push_back(json::array({coeff, e, b}));
    }
    return arr;
}

Element Element::from_json(RingPtr ring, const json& j) {
    if (!j.is_array())
        throw ring_error("element must be a JSON array of terms");
    std::vector<std::pair<Key, Int>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw ring_error("term must be [c, [e...], [b...]]");
        Int c = t[0].is_string() ? Int(t[0].get<std::string>()) : Int(t[0].get<long long>());
        auto e = t[1].get<std::vector<int>>();
        auto b = t[2].get<std::vector<int>>();
        if (static_cast<int>(e.size()) != ring->free_rank || static_cast<int>(b.size()) != ring->torsion2_rank)
            throw ring_error("term exponent vector has wrong length");
        Key k(e);
        for (int bit : b) {
            if (bit != 0 && bit != 1)
                throw ring_error("torsion bit must be 0 or 1");
            k.push_back(bit);
        }
        terms.emplace_back(std::move(k), std::move(c));
    }
    return from_terms(std::move(ring), std::move(terms));
}

std::string Element::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        bool trivial = std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
        Int mag = c < 0 ? Int(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != 1 || trivial) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0)
                continue;
            if (wrote)
                os << "*";
            os << ring_->variable_names[i];
            if (k[i] != 1)
                os << "^" << k[i];
            wrote = true;
        }
    }
    return os.str();
}

Element gre_add(const Element& a, const Element& b) { return a + b; }
Element gre_mul(const Element& a, const Element& b) { return a * b; }

bool gre_is_unit(const Element& a) {
    return a.size() == 1 && (a.terms()[0].second == 1 || a.terms()[0].second == -1);
}

Element gre_unit_inverse(const Element& a) {
    if (!gre_is_unit(a))
        throw ring_error("element is not a trivial unit: " + a.to_string());
    const auto& [k, c] = a.terms()[0];
    return Element::monomial(a.ring(), c, neg_key(k, a.ring()->free_rank));
}

Element gre_div_unit(const Element& a, const Element& u) {
    Element inv = gre_unit_inverse(u);
    return a.scaled(inv.terms()[0].second, inv.terms()[0].first);
}

Element gre_pow(const Element& a, int e) {
    if (e < 0)
        return gre_pow(gre_unit_inverse(a), -e);
    Element r(a.ring(), 1);
    Element base = a;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

Element substitute(const Element& a, const RingPtr& target, const std::vector<Element>& images) {
    const RingPtr& src = a.ring();
    Element out(target);
    if (a.is_zero())
        return out;
    if (static_cast<int>(images.size()) != src->width())
        throw ring_error("substitute: one image per variable expected");
    for (const auto& [k, c] : a.terms()) {
        Element term(target, Int(c), Key(target->width(), 0));
        for (int i = 0; i < src->width(); ++i)
            if (k[i] != 0)
                term = term * gre_pow(images[i], k[i]);
        out += term;
    }
    return out;
}

Element gaussian_int(int k, const Element& x) {
    Element r(x.ring());
    Element p(x.ring(), 1);
    for (int i = 0; i < k; ++i) {
        r += p;
        p = p * x;
    }
    return r;
}

namespace {

// [n choose k]_x by the q-Pascal recurrence [n,k] = [n-1,k-1] + x^k [n-1,k].
Element gaussian_binomial(int n, int k, const Element& x) {
    if (k < 0 || k > n)
        return Element(x.ring());
    std::vector<Element> row(k + 1, Element(x.ring()));
    row[0] = Element(x.ring(), 1);
    std::vector<Element> xp(k + 1, Element(x.ring(), 1));
    for (int j = 1; j <= k; ++j)
        xp[j] = xp[j - 1] * x;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = row[j - 1] + xp[j] * row[j];
    return row[k];
}

}  // namespace

Element gaussian_multinomial(const std::vector<int>& parts, const Element& x) {
    Element r(x.ring(), 1);
    int total = 0;
    for (int p : parts) {
        total += p;
        if (p > 0)
            r = r * gaussian_binomial(total, p, x);
    }
    return r;
}

}  // namespace hrep
