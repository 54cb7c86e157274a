// Exact arithmetic in group rings Z[Z^r + (Z/2)^s].
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hrep {

using Int = boost::multiprecision::mpz_int;
using json = nlohmann::json;

struct RingDescriptor {
    int free_rank = 0;
    int torsion2_rank = 0;
    std::vector<std::string> variable_names;  // free names first, then torsion names

    RingDescriptor() = default;
    RingDescriptor(int r, int s, std::vector<std::string> names);

    int width() const { return free_rank + torsion2_rank; }
    bool operator==(const RingDescriptor& o) const = default;
    json to_json() const;
    static RingDescriptor from_json(const json& j);
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(int r, int s, std::vector<std::string> names);
// Z[x^+-], the ring of A_1.
RingPtr ring_x();
// Z[q^+-, t^+-], the ring of A_m for m >= 2. Variable order (q, t).
RingPtr ring_qt();
// Z: no variables.
RingPtr ring_z();
RingPtr ring_for_m(int m);

bool same_ring(const RingPtr& a, const RingPtr& b);

class ring_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exponent key of a group element: free exponents then torsion bits (0/1).
using Key = std::vector<int>;

// Sparse element of Z[A]. Terms are kept sorted by key with nonzero
// coefficients. A default-constructed element is zero in an unspecified
// ring and adopts the ring of whatever it is combined with.
class Element {
  public:
    Element() = default;
    explicit Element(RingPtr ring) : ring_(std::move(ring)) {}
    Element(RingPtr ring, long c);
    Element(RingPtr ring, const Int& c, Key key);

    static Element monomial(RingPtr ring, const Int& c, Key key) { return Element(std::move(ring), c, std::move(key)); }
    // c * v_i^e for the named variable index i.
    static Element variable(RingPtr ring, int i, int e = 1, long c = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::pair<Key, Int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Multiply by a single term c*g (cheaper than a general product).
    Element scaled(const Int& c, const Key& key) const;

    json to_json() const;  // array of [c, [e...], [b...]]
    static Element from_json(RingPtr ring, const json& j);
    std::string to_string() const;

    // Internal: build from unsorted terms, merging equal keys.
    static Element from_terms(RingPtr ring, std::vector<std::pair<Key, Int>> terms);

  private:
    RingPtr ring_;
    std::vector<std::pair<Key, Int>> terms_;
    void adopt(const Element& o);
};

Element gre_add(const Element& a, const Element& b);
Element gre_mul(const Element& a, const Element& b);
// True iff a is a single term with coefficient +-1.
bool gre_is_unit(const Element& a);
// Inverse of a trivial unit; throws ring_error otherwise.
Element gre_unit_inverse(const Element& a);
// Exact division by a trivial unit.
Element gre_div_unit(const Element& a, const Element& u);
// Power of an element (e >= 0) or of a unit (any e).
Element gre_pow(const Element& a, int e);

// Ring homomorphism given by the image of each variable. Images of free
// variables must be units; images of torsion variables must square to 1.
Element substitute(const Element& a, const RingPtr& target, const std::vector<Element>& images);

// Gaussian integer [k]_x = 1 + x + ... + x^{k-1} and multinomials in x.
Element gaussian_int(int k, const Element& x);
Element gaussian_multinomial(const std::vector<int>& parts, const Element& x);

}  // namespace hrep
