// Shared helpers for the test suite: a seeded RNG and random generators for
// group elements and series.  Everything is deterministic per run.

#pragma once

#include <random>
#include <vector>

#include "qqm/group.hpp"
#include "qqm/parse.hpp"
#include "qqm/series.hpp"

namespace qqm::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(rng());
}

inline GroupElem rand_elem(std::size_t n, std::int64_t lo = -6,
                           std::int64_t hi = 6) {
    std::vector<Dyadic> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.emplace_back(rand_int(lo, hi));
    return GroupElem(std::move(c));
}

inline Rat rand_coeff() {
    Rat c = Rat(rand_int(1, 12)) / rand_int(1, 12);
    return rand_int(0, 1) ? c : -c;
}

// Random nonzero exact series with small integer exponents.
inline Series rand_series(std::size_t n, std::int64_t lo = -4,
                          std::int64_t hi = 6, int max_terms = 4) {
    for (;;) {
        Series s(n);
        int terms = static_cast<int>(rand_int(1, max_terms));
        for (int i = 0; i < terms; ++i)
            s.add_term(rand_elem(n, lo, hi), rand_coeff());
        if (!s.no_visible_terms()) return s;
    }
}

// Random series whose valuation lies in H_j union G>=0 (i.e. a ring element).
inline Series rand_ring_series(std::size_t n, const ConvexSubgroup& H,
                               std::int64_t hi = 6, int max_terms = 4) {
    for (;;) {
        Series s = rand_series(n, -4, hi, max_terms);
        if (ring_membership(s, H)) return s;
    }
}

}  // namespace qqm::testing
