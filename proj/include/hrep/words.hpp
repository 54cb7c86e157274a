// Words in B_n, B_m(D_n) and F_n; the Artin action and the local-system
// homomorphisms T, W and phi.
//
// Convention: a braid b acts on words by substituting generator images
// letter by letter from left to right, so act(b1 b2, w) = act(b2, act(b1, w)).
// This is the convention under which the Fox Jacobian of the Artin action
// is multiplicative in word order.
#pragma once

#include "hrep/groupring.hpp"

#include <string>
#include <vector>

namespace hrep {

struct Letter {
    int index = 0;  // 1-based
    int sign = 1;   // +1 or -1
    bool operator==(const Letter&) const = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<Letter> letters;
    bool operator==(const BraidWord&) const = default;
};

enum class Family { Sigma, Xi };

struct SurfaceLetter {
    Family family = Family::Sigma;
    int index = 0;
    int sign = 1;
    bool operator==(const SurfaceLetter&) const = default;
};

struct SurfaceBraidWord {
    int m = 1;
    int n = 0;
    std::vector<SurfaceLetter> letters;
    bool operator==(const SurfaceBraidWord&) const = default;
};

struct FreeWord {
    int rank = 0;
    std::vector<int> letters;  // +k for x_k, -k for x_k^-1
    bool operator==(const FreeWord&) const = default;
};

class word_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

BraidWord reduce(const BraidWord& w);
SurfaceBraidWord reduce(const SurfaceBraidWord& w);
FreeWord reduce(const FreeWord& w);

BraidWord inverse(const BraidWord& w);
FreeWord inverse(const FreeWord& w);
SurfaceBraidWord inverse(const SurfaceBraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
FreeWord concat(const FreeWord& a, const FreeWord& b);
SurfaceBraidWord concat(const SurfaceBraidWord& a, const SurfaceBraidWord& b);

void validate(const BraidWord& w);
void validate(const SurfaceBraidWord& w);
void validate(const FreeWord& w);

FreeWord artin_act(const BraidWord& b, const FreeWord& w);
SurfaceBraidWord bn_act_on_surface(const BraidWord& b, const SurfaceBraidWord& w);

long hom_T(const SurfaceBraidWord& w);
long hom_W(const SurfaceBraidWord& w);
// t^T q^W in Z[q^+-, t^+-] for m >= 2; x^(exponent sum) in Z[x^+-] for m = 1.
Element phi(const SurfaceBraidWord& w, int m);

BraidWord shift(const BraidWord& b, int k);

// Token syntax: "s1 s2^-1 x3". Braid words accept only s-tokens, surface
// words accept s and x (xi), free words accept x (free generators).
BraidWord parse_braid(const std::string& text, int strands);
SurfaceBraidWord parse_surface(const std::string& text, int m, int n);
FreeWord parse_free(const std::string& text, int rank);

std::string to_string(const BraidWord& w);
std::string to_string(const SurfaceBraidWord& w);
std::string to_string(const FreeWord& w);

}  // namespace hrep
