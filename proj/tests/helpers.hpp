#pragma once

#include "hrep/groupring.hpp"
#include "hrep/matrix.hpp"

#include <random>

namespace hrep::test {

inline Element random_element(std::mt19937_64& rng, const RingPtr& ring, int terms = 4, int range = 3) {
    std::vector<std::pair<Key, Int>> t;
    std::uniform_int_distribution<int> nterms(0, terms), exp(-range, range), bit(0, 1), coef(-5, 5);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Key key;
        for (int v = 0; v < ring->free_rank; ++v)
            key.push_back(exp(rng));
        for (int v = 0; v < ring->torsion2_rank; ++v)
            key.push_back(bit(rng));
        t.push_back({key, Int(coef(rng))});
    }
    return Element::from_terms(ring, std::move(t));
}

inline RepMatrix random_matrix(std::mt19937_64& rng, const RingPtr& ring, std::size_t r, std::size_t c,
                               double density = 0.4) {
    RepMatrix M(ring, r, c);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng))
                M.set(i, j, random_element(rng, ring, 3, 2));
    return M;
}

}  // namespace hrep::test
