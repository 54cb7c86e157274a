#include "hrep/words.hpp"

#include <algorithm>
#include <sstream>

namespace hrep {

namespace {

template <class L>
bool cancels(const L& a, const L& b) {
    L inv = b;
    inv.sign = -inv.sign;
    return a == inv;
}

template <class Vec, class Pred>
Vec free_reduce(const Vec& in, Pred inverse_pair) {
    Vec out;
    out.reserve(in.size());
    for (const auto& x : in) {
        if (!out.empty() && inverse_pair(out.back(), x))
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

struct Token {
    char kind;
    int index;
    int power;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
            throw word_error("bad token '" + tok + "'");
        Token t{tok[0], 0, 1};
        std::size_t caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        try {
            std::size_t used = 0;
            t.index = std::stoi(idx, &used);
            if (used != idx.size())
                throw word_error("bad index in token '" + tok + "'");
            if (caret != std::string::npos) {
                std::string p = tok.substr(caret + 1);
                t.power = std::stoi(p, &used);
                if (used != p.size())
                    throw word_error("bad exponent in token '" + tok + "'");
            }
        } catch (const std::logic_error&) {
            throw word_error("bad token '" + tok + "'");
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace

BraidWord reduce(const BraidWord& w) {
    return {w.strands, free_reduce(w.letters, [](const Letter& a, const Letter& b) { return cancels(a, b); })};
}

SurfaceBraidWord reduce(const SurfaceBraidWord& w) {
    return {w.m, w.n,
            free_reduce(w.letters, [](const SurfaceLetter& a, const SurfaceLetter& b) { return cancels(a, b); })};
}

FreeWord reduce(const FreeWord& w) {
    return {w.rank, free_reduce(w.letters, [](int a, int b) { return a == -b; })};
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r{w.strands, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->index, -it->sign});
    return r;
}

FreeWord inverse(const FreeWord& w) {
    FreeWord r{w.rank, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

SurfaceBraidWord inverse(const SurfaceBraidWord& w) {
    SurfaceBraidWord r{w.m, w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->family, it->index, -it->sign});
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw word_error("concat: strand counts differ");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
    if (a.rank != b.rank)
        throw word_error("concat: ranks differ");
    FreeWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

SurfaceBraidWord concat(const SurfaceBraidWord& a, const SurfaceBraidWord& b) {
    if (a.m != b.m || a.n != b.n)
        throw word_error("concat: parameters differ");
    SurfaceBraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

void validate(const BraidWord& w) {
    for (const auto& l : w.letters)
        if (l.index < 1 || l.index >= w.strands || (l.sign != 1 && l.sign != -1))
            throw word_error("braid letter s" + std::to_string(l.index) + " out of range for B_" +
                             std::to_string(w.strands));
}

void validate(const SurfaceBraidWord& w) {
    for (const auto& l : w.letters) {
        int hi = l.family == Family::Sigma ? w.m - 1 : w.n;
        if (l.index < 1 || l.index > hi || (l.sign != 1 && l.sign != -1))
            throw word_error(std::string(l.family == Family::Sigma ? "s" : "x") + std::to_string(l.index) +
                             " out of range");
    }
}

void validate(const FreeWord& w) {
    for (int l : w.letters)
        if (l == 0 || std::abs(l) > w.rank)
            throw word_error("free letter out of range");
}

namespace {

// Image of x_k (k >= 1) under sigma_i^sign, as a signed letter list.
std::vector<int> artin_image(int i, int sign, int k) {
    if (sign > 0) {
        if (k == i)
            return {i + 1};
        if (k == i + 1)
            return {-(i + 1), i, i + 1};
    } else {
        if (k == i + 1)
            return {i};
        if (k == i)
            return {i, i + 1, -i};
    }
    return {k};
}

std::vector<int> substitute_letters(const std::vector<int>& w, int i, int sign) {
    std::vector<int> out;
    for (int a : w) {
        auto im = artin_image(i, sign, std::abs(a));
        if (a > 0) {
            out.insert(out.end(), im.begin(), im.end());
        } else {
            for (auto it = im.rbegin(); it != im.rend(); ++it)
                out.push_back(-*it);
        }
    }
    return free_reduce(out, [](int a, int b) { return a == -b; });
}

}  // namespace

FreeWord artin_act(const BraidWord& b, const FreeWord& w) {
    if (b.strands != w.rank)
        throw word_error("artin_act: B_" + std::to_string(b.strands) + " does not act on F_" + std::to_string(w.rank));
    validate(b);
    validate(w);
    std::vector<int> cur = free_reduce(w.letters, [](int a, int c) { return a == -c; });
    for (const auto& l : b.letters)
        cur = substitute_letters(cur, l.index, l.sign);
    return {w.rank, cur};
}

SurfaceBraidWord bn_act_on_surface(const BraidWord& b, const SurfaceBraidWord& w) {
    if (b.strands != w.n)
        throw word_error("bn_act_on_surface: B_" + std::to_string(b.strands) + " does not act on B_m(D_" +
                         std::to_string(w.n) + ")");
    validate(b);
    validate(w);
    // Sigma letters are fixed; Xi letters transform like free generators.
    // Encode Sigma letters with offsets beyond n so they pass through unchanged.
    const int off = w.n + 1;
    std::vector<int> enc;
    for (const auto& l : w.letters) {
        int k = l.family == Family::Xi ? l.index : off + l.index;
        enc.push_back(l.sign * k);
    }
    enc = free_reduce(enc, [](int a, int c) { return a == -c; });
    for (const auto& l : b.letters)
        enc = substitute_letters(enc, l.index, l.sign);
    SurfaceBraidWord r{w.m, w.n, {}};
    for (int a : enc) {
        int k = std::abs(a);
        int s = a > 0 ? 1 : -1;
        if (k >= off)
            r.letters.push_back({Family::Sigma, k - off, s});
        else
            r.letters.push_back({Family::Xi, k, s});
    }
    return r;
}

long hom_T(const SurfaceBraidWord& w) {
    long t = 0;
    for (const auto& l : w.letters)
        if (l.family == Family::Sigma)
            t += l.sign;
    return t;
}

long hom_W(const SurfaceBraidWord& w) {
    long s = 0;
    for (const auto& l : w.letters)
        if (l.family == Family::Xi)
            s += l.sign;
    return s;
}

Element phi(const SurfaceBraidWord& w, int m) {
    if (m != w.m)
        throw word_error("phi: m does not match the word");
    if (m >= 2)
        return Element::monomial(ring_qt(), 1, {static_cast<int>(hom_W(w)), static_cast<int>(hom_T(w))});
    long total = 0;
    for (const auto& l : w.letters)
        total += l.sign;
    return Element::monomial(ring_x(), 1, {static_cast<int>(total)});
}

BraidWord shift(const BraidWord& b, int k) {
    if (k < 0)
        throw word_error("shift by a negative amount");
    BraidWord r{b.strands + k, b.letters};
    for (auto& l : r.letters)
        l.index += k;
    return r;
}

BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord w{strands, {}};
    for (const auto& t : tokenize(text)) {
        if (t.kind != 's')
            throw word_error(std::string("unexpected generator '") + t.kind + "' in braid word");
        for (int p = 0; p < std::abs(t.power); ++p)
            w.letters.push_back({t.index, t.power > 0 ? 1 : -1});
    }
    validate(w);
    return w;
}

SurfaceBraidWord parse_surface(const std::string& text, int m, int n) {
    SurfaceBraidWord w{m, n, {}};
    for (const auto& t : tokenize(text)) {
        if (t.kind != 's' && t.kind != 'x')
            throw word_error(std::string("unexpected generator '") + t.kind + "' in surface braid word");
        Family f = t.kind == 's' ? Family::Sigma : Family::Xi;
        for (int p = 0; p < std::abs(t.power); ++p)
            w.letters.push_back({f, t.index, t.power > 0 ? 1 : -1});
    }
    validate(w);
    return w;
}

FreeWord parse_free(const std::string& text, int rank) {
    FreeWord w{rank, {}};
    for (const auto& t : tokenize(text)) {
        if (t.kind != 'x')
            throw word_error(std::string("unexpected generator '") + t.kind + "' in free word");
        for (int p = 0; p < std::abs(t.power); ++p)
            w.letters.push_back(t.power > 0 ? t.index : -t.index);
    }
    validate(w);
    return w;
}

namespace {
std::string tok(char c, int idx, int sign) {
    return std::string(1, c) + std::to_string(idx) + (sign < 0 ? "^-1" : "");
}
}  // namespace

std::string to_string(const BraidWord& w) {
    std::string s;
    for (const auto& l : w.letters)
        s += (s.empty() ? "" : " ") + tok('s', l.index, l.sign);
    return s;
}

std::string to_string(const SurfaceBraidWord& w) {
    std::string s;
    for (const auto& l : w.letters)
        s += (s.empty() ? "" : " ") + tok(l.family == Family::Sigma ? 's' : 'x', l.index, l.sign);
    return s;
}

std::string to_string(const FreeWord& w) {
    std::string s;
    for (int l : w.letters)
        s += (s.empty() ? "" : " ") + tok('x', std::abs(l), l > 0 ? 1 : -1);
    return s;
}

}  // namespace hrep
