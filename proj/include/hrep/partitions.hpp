// Index sets of the free bases: P_m(n), P_m^{delta k}(n), Q_m(g), Q_m^{delta k}(g).
#pragma once

#include <stdexcept>
#include <vector>

namespace hrep {

using Partition = std::vector<int>;

struct Arrangement {
    std::vector<int> perm;  // permutation of 1..m
    Partition part;
    bool operator==(const Arrangement&) const = default;
    // perm followed by part, the flat label used by tabulated functors
    std::vector<int> flat() const;
};

class partition_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Tuples of length len summing to m, in decreasing lexicographic order.
std::vector<Partition> enum_P(int m, int len);

// Tuples of length k+n-1 summing to m whose first k entries lie in [1, m];
// empty when n+k <= 1.
std::vector<Partition> enum_P_delta(int m, int k, int n);

// Insert a 0 after the k constrained slots.
Partition stab_insert(int m, int k, const Partition& w);

// The complement of stab_insert(m, k, P^{dk}(n)) in P^{dk}(n+1), i.e. the
// tuples whose slot k+1 is >= 1; as a set equal to P^{d(k+1)}(n).
std::vector<Partition> delta_complement(int m, int k, int n);
// Pairs (w, w) realizing P^{d(k+1)}(n) = complement: the bijection is the identity on entries.
std::vector<std::pair<Partition, Partition>> delta_bijection(int m, int k, int n);

Partition forget_first(const Partition& w);
Partition unforget_first(const Partition& w);

std::vector<std::vector<int>> permutations(int m);

// Q_m(g) = S_m x P_m(2g), ordered by permutation then partition.
std::vector<Arrangement> enum_Q(int m, int g);
// S_m x {tuples of length 2k+2g with pairs 1..k nonzero}; empty when 2k+2g <= 1.
std::vector<Arrangement> enum_Q_delta(int m, int k, int g);
// Insert (0,0) after pair k.
Arrangement stab_insert_Q(int k, const Arrangement& a);

long binomial(long n, long k);
long factorial(long n);

}  // namespace hrep
