#include "hrep/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace hrep {

std::vector<int> Arrangement::flat() const {
    std::vector<int> v = perm;
    v.insert(v.end(), part.begin(), part.end());
    return v;
}

namespace {

void fill(int remaining, int len, Partition& cur, std::vector<Partition>& out) {
    if (static_cast<int>(cur.size()) == len - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int f = remaining; f >= 0; --f) {
        cur.push_back(f);
        fill(remaining - f, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enum_P(int m, int len) {
    if (m < 0 || len < 0)
        throw partition_error("enum_P: m and len must be non-negative");
    std::vector<Partition> out;
    if (len == 0) {
        if (m == 0)
            out.push_back({});
        return out;
    }
    Partition cur;
    fill(m, len, cur, out);
    return out;
}

std::vector<Partition> enum_P_delta(int m, int k, int n) {
    if (m < 1 || k < 0 || n < 0)
        throw partition_error("enum_P_delta: m >= 1, k >= 0, n >= 0 required");
    std::vector<Partition> out;
    if (n + k <= 1 || k + n - 1 < k)
        return out;
    for (auto& w : enum_P(m, k + n - 1)) {
        bool ok = true;
        for (int i = 0; i < k; ++i)
            ok = ok && w[i] >= 1;
        if (ok)
            out.push_back(std::move(w));
    }
    return out;
}

Partition stab_insert(int m, int k, const Partition& w) {
    int sum = std::accumulate(w.begin(), w.end(), 0);
    if (sum != m || static_cast<int>(w.size()) < k)
        throw partition_error("stab_insert: input is not in P_m^{delta k}");
    for (int i = 0; i < k; ++i)
        if (w[i] < 1)
            throw partition_error("stab_insert: constrained slot is zero");
    Partition r = w;
    r.insert(r.begin() + k, 0);
    return r;
}

std::vector<Partition> delta_complement(int m, int k, int n) {
    std::vector<Partition> out;
    for (auto& w : enum_P_delta(m, k, n + 1))
        if (w[k] >= 1)
            out.push_back(std::move(w));
    return out;
}

std::vector<std::pair<Partition, Partition>> delta_bijection(int m, int k, int n) {
    auto src = enum_P_delta(m, k + 1, n);
    auto dst = delta_complement(m, k, n);
    if (src.size() != dst.size())
        throw partition_error("delta_bijection: the two sets have different sizes");
    std::vector<std::pair<Partition, Partition>> out;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] != dst[i])
            throw partition_error("delta_bijection: the sets differ");
        out.emplace_back(src[i], dst[i]);
    }
    return out;
}

Partition forget_first(const Partition& w) {
    if (w.empty() || w[0] < 1)
        throw partition_error("forget_first: first entry must be >= 1");
    Partition r = w;
    --r[0];
    return r;
}

Partition unforget_first(const Partition& w) {
    if (w.empty())
        throw partition_error("unforget_first: empty tuple");
    Partition r = w;
    ++r[0];
    return r;
}

std::vector<std::vector<int>> permutations(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Arrangement> enum_Q(int m, int g) {
    if (m < 1 || g < 0)
        throw partition_error("enum_Q: m >= 1, g >= 0 required");
    std::vector<Arrangement> out;
    auto parts = enum_P(m, 2 * g);
    for (const auto& p : permutations(m))
        for (const auto& w : parts)
            out.push_back({p, w});
    return out;
}

std::vector<Arrangement> enum_Q_delta(int m, int k, int g) {
    if (m < 1 || k < 0 || g < 0)
        throw partition_error("enum_Q_delta: m >= 1, k >= 0, g >= 0 required");
    std::vector<Arrangement> out;
    if (2 * k + 2 * g <= 1)
        return out;
    std::vector<Partition> parts;
    for (auto& w : enum_P(m, 2 * k + 2 * g)) {
        bool ok = true;
        for (int i = 0; i < k; ++i)
            ok = ok && (w[2 * i] != 0 || w[2 * i + 1] != 0);
        if (ok)
            parts.push_back(std::move(w));
    }
    for (const auto& p : permutations(m))
        for (const auto& w : parts)
            out.push_back({p, w});
    return out;
}

Arrangement stab_insert_Q(int k, const Arrangement& a) {
    if (static_cast<int>(a.part.size()) < 2 * k)
        throw partition_error("stab_insert_Q: tuple shorter than the constrained pairs");
    Arrangement r = a;
    r.part.insert(r.part.begin() + 2 * k, {0, 0});
    return r;
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long factorial(long n) {
    long r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

}  // namespace hrep
