// Upward-closed subsets (rays / cuts) of a lexicographic product.
//
// An upward-closed subset of (D^dim, lex) with D totally ordered is
// determined by a prefix p of length k <= dim and an "inclusive" bit:
//
//     member(x)  <=>  x[0..k) > p,  or  x[0..k) == p and inclusive.
//
// Think of the cut as a threshold padded with -inf (inclusive) or +inf
// (exclusive) in positions k..dim: membership is strict lexicographic
// dominance of the padded threshold, so cuts over a fixed dim are totally
// ordered by set inclusion (smaller padded threshold = bigger set).
//
// Special shapes: Empty = (k=0, exclusive), Full = (k=0, inclusive),
// ClosedRay(g0) = (k=dim, prefix g0, inclusive).
//
// Used for the All-frontier of Theta-families (over G/H) and for the
// well-behaved valuation sets of the char-2 calculus (over G itself).

#pragma once

#include <optional>
#include <vector>

#include "qqm/dyadic.hpp"
#include "qqm/errors.hpp"

namespace qqm {

struct Cut {
    std::size_t dim = 0;
    std::vector<Dyadic> prefix;  // length k <= dim
    bool inclusive = false;

    Cut() = default;
    Cut(std::size_t d, std::vector<Dyadic> p, bool incl)
        : dim(d), prefix(std::move(p)), inclusive(incl) {
        if (prefix.size() > dim)
            throw dimension_mismatch("cut prefix longer than dimension");
    }

    static Cut empty(std::size_t d) { return Cut(d, {}, false); }
    static Cut full(std::size_t d) { return Cut(d, {}, true); }
    static Cut closed_ray(std::vector<Dyadic> g0) {
        std::size_t d = g0.size();
        return Cut(d, std::move(g0), true);
    }

    bool is_empty_set() const { return prefix.empty() && !inclusive; }
    bool is_full_set() const { return prefix.empty() && inclusive; }
    bool is_closed_ray() const { return prefix.size() == dim && inclusive; }

    bool member(const std::vector<Dyadic>& x) const {
        if (x.size() != dim)
            throw dimension_mismatch("cut membership: wrong dimension");
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            auto c = x[i] <=> prefix[i];
            if (c > 0) return true;
            if (c < 0) return false;
        }
        return inclusive;
    }

    // Least element, when one exists.  Only a closed ray has one: any other
    // nonempty shape contains strictly descending chains (the free trailing
    // coordinates, or boundary approach in an exclusive cut).
    std::optional<std::vector<Dyadic>> min() const {
        if (is_closed_ray() && !is_empty_set()) return prefix;
        return std::nullopt;
    }
};

// Compare two cuts over the same dim as sets.  Returns -1 if a is a proper
// subset of b, 0 if equal, +1 if a proper superset.  Compares the padded
// thresholds: pad with +1 (exclusive) / -1 (inclusive) sentinels past the
// prefix plus one extra virtual slot, larger threshold = smaller set.
//
// Note: over a dense coordinate domain (dyadics) distinct normal forms are
// distinct sets.  Over the integer lattice the caller should normalize
// exclusive full-length prefixes first (see normalize_integral).
inline int cut_cmp(const Cut& a, const Cut& b) {
    if (a.dim != b.dim)
        throw dimension_mismatch("comparing cuts of different dimension");
    std::size_t n = std::max(a.prefix.size(), b.prefix.size()) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        // sentinel: -1 below every dyadic, +1 above every dyadic
        int sa = i < a.prefix.size() ? 0 : (a.inclusive ? -1 : +1);
        int sb = i < b.prefix.size() ? 0 : (b.inclusive ? -1 : +1);
        if (sa != 0 || sb != 0) {
            if (sa < sb) return +1;  // lower threshold => bigger set
            if (sa > sb) return -1;
            if (sa != 0) return 0;  // both padded from here on
            continue;
        }
        auto c = a.prefix[i] <=> b.prefix[i];
        if (c < 0) return +1;
        if (c > 0) return -1;
    }
    return 0;
}

inline bool cut_subset(const Cut& a, const Cut& b) { return cut_cmp(a, b) <= 0; }
inline bool cut_equal(const Cut& a, const Cut& b) { return cut_cmp(a, b) == 0; }

// Union and intersection of nested sets: pick the bigger / smaller one.
inline Cut cut_union(const Cut& a, const Cut& b) {
    return cut_cmp(a, b) >= 0 ? a : b;
}
inline Cut cut_intersect(const Cut& a, const Cut& b) {
    return cut_cmp(a, b) <= 0 ? a : b;
}

// Over the integer lattice {x : x[0..k) > p} equals {x : x[0..k) >= p'}
// with p' = p except last coordinate bumped by one; rewrite to the
// inclusive form so that cut_cmp treats aliases as equal.
inline Cut normalize_integral(Cut c) {
    if (!c.inclusive && !c.prefix.empty()) {
        for (const auto& d : c.prefix)
            if (!d.is_integer()) return c;
        c.prefix.back() = c.prefix.back() + Dyadic(1);
        c.inclusive = true;
    }
    return c;
}

}  // namespace qqm
