#pragma once

// Shared helpers for the test binaries: deterministic random elements and
// a few shorthands. All randomness is seeded per call site.

#include <random>
#include <vector>

#include "w22/algebra.hpp"

namespace w22::testing {

using Rng = std::mt19937_64;

inline Generator random_generator(Rng& rng, std::int64_t max_index = 6) {
    std::uniform_int_distribution<std::int64_t> idx(-max_index, max_index);
    std::uniform_int_distribution<int> kind(0, 1);
    return {kind(rng) == 0 ? GenKind::L : GenKind::W, idx(rng)};
}

inline Rational random_scalar(Rng& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    long n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

// Random element: up to `terms` words of length <= `len`, mixed kinds.
inline AlgebraElement random_element(Rng& rng, int terms = 3, int len = 3,
                                     std::int64_t max_index = 6) {
    std::uniform_int_distribution<int> nterms(1, terms);
    std::uniform_int_distribution<int> nlen(0, len);
    AlgebraElement out;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<Generator> word;
        const int l = nlen(rng);
        for (int j = 0; j < l; ++j) word.push_back(random_generator(rng, max_index));
        AlgebraElement w = normal_form_of_word(word);
        out += random_scalar(rng) * w;
    }
    return out;
}

}  // namespace w22::testing
