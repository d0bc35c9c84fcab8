// The value group G = Z^n (dyadic Q^n in the char-2 model) under the
// lexicographic order, its convex subgroups H_j, and the quotients
// G/G^2 (square classes), G/H (heads) and G/H^2 (mixed classes).
//
// Everything is written additively: the identity e is the zero vector,
// multiplicative g*h is g + h and g^2 is 2g.

#pragma once

#include <compare>
#include <vector>

#include "qqm/dyadic.hpp"
#include "qqm/errors.hpp"

namespace qqm {

struct GroupElem {
    std::vector<Dyadic> coords;

    GroupElem() = default;
    explicit GroupElem(std::vector<Dyadic> c) : coords(std::move(c)) {}
    GroupElem(std::initializer_list<std::int64_t> c) {
        coords.reserve(c.size());
        for (auto v : c) coords.emplace_back(v);
    }

    static GroupElem zero(std::size_t n) {
        return GroupElem(std::vector<Dyadic>(n));
    }

    std::size_t dim() const noexcept { return coords.size(); }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c.num != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& c : coords)
            if (!c.is_integer()) return false;
        return true;
    }

    friend GroupElem operator+(const GroupElem& a, const GroupElem& b) {
        check_dims(a, b);
        GroupElem r;
        r.coords.reserve(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            r.coords.push_back(a.coords[i] + b.coords[i]);
        return r;
    }
    friend GroupElem operator-(const GroupElem& a, const GroupElem& b) {
        check_dims(a, b);
        GroupElem r;
        r.coords.reserve(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            r.coords.push_back(a.coords[i] - b.coords[i]);
        return r;
    }
    friend GroupElem operator-(const GroupElem& a) {
        GroupElem r;
        r.coords.reserve(a.dim());
        for (const auto& c : a.coords) r.coords.push_back(-c);
        return r;
    }

    GroupElem twice() const {
        GroupElem r;
        r.coords.reserve(dim());
        for (const auto& c : coords) r.coords.push_back(c.twice());
        return r;
    }
    GroupElem half() const {
        GroupElem r;
        r.coords.reserve(dim());
        for (const auto& c : coords) r.coords.push_back(c.half());
        return r;
    }

    static void check_dims(const GroupElem& a, const GroupElem& b) {
        if (a.dim() != b.dim())
            throw dimension_mismatch("group elements of different dimension");
    }
};

enum class Ordering { less, equal, greater };

// Lexicographic comparison, first coordinate most significant.
inline Ordering lex_cmp(const GroupElem& a, const GroupElem& b) {
    GroupElem::check_dims(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto c = a.coords[i] <=> b.coords[i];
        if (c < 0) return Ordering::less;
        if (c > 0) return Ordering::greater;
    }
    return Ordering::equal;
}

inline bool lex_less(const GroupElem& a, const GroupElem& b) {
    return lex_cmp(a, b) == Ordering::less;
}
inline bool lex_leq(const GroupElem& a, const GroupElem& b) {
    return lex_cmp(a, b) != Ordering::greater;
}
inline bool operator==(const GroupElem& a, const GroupElem& b) {
    return lex_cmp(a, b) == Ordering::equal;
}

// Strict-weak-order functor for ordered maps keyed by exponents.
struct LexLess {
    bool operator()(const GroupElem& a, const GroupElem& b) const {
        return lex_less(a, b);
    }
};

// H_j = {g : g_1 = ... = g_j = 0}.  These are exactly the convex subgroups
// of Z^n with the lexicographic order; j = n gives H = {e} (so A = B) and
// j = 0 gives H = G (so A = K).
struct ConvexSubgroup {
    std::size_t j = 0;

    ConvexSubgroup() = default;
    explicit ConvexSubgroup(std::size_t idx) : j(idx) {}

    bool contains(const GroupElem& g) const {
        if (j > g.dim())
            throw dimension_mismatch("convex subgroup index exceeds dimension");
        for (std::size_t i = 0; i < j; ++i)
            if (g.coords[i].num != 0) return false;
        return true;
    }
};

// Square class of g: the image of g in G/G^2, i.e. coordinates mod 2.
// Only defined on the integral lattice.
struct SquareClass {
    std::vector<int> parity;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

// Mixed class [[g]]: the image of g in G/H^2.  Two elements agree iff they
// differ by 2h with h in H_j, i.e. the first j coordinates agree exactly and
// the rest agree mod 2.
struct MixedClass {
    std::vector<Dyadic> head;  // first j coordinates, exact
    std::vector<int> tail_parity;

    friend bool operator==(const MixedClass&, const MixedClass&) = default;
};

inline SquareClass square_class(const GroupElem& g) {
    SquareClass s;
    s.parity.reserve(g.dim());
    for (const auto& c : g.coords) s.parity.push_back(c.parity());
    return s;
}

inline MixedClass mixed_class(const GroupElem& g, const ConvexSubgroup& H) {
    if (H.j > g.dim())
        throw dimension_mismatch("convex subgroup index exceeds dimension");
    MixedClass m;
    m.head.assign(g.coords.begin(), g.coords.begin() + H.j);
    m.tail_parity.reserve(g.dim() - H.j);
    for (std::size_t i = H.j; i < g.dim(); ++i)
        m.tail_parity.push_back(g.coords[i].parity());
    return m;
}

// The head of g: its coset [g] in G/H_j, identified with the first j
// coordinates.
inline std::vector<Dyadic> head_of(const GroupElem& g, const ConvexSubgroup& H) {
    if (H.j > g.dim())
        throw dimension_mismatch("convex subgroup index exceeds dimension");
    return {g.coords.begin(), g.coords.begin() + H.j};
}

// Compare [a] and [b] in G/H: equal iff a - b lies in H, otherwise the heads
// decide lexicographically (the quotient order is well defined by convexity).
inline Ordering quotient_cmp(const GroupElem& a, const GroupElem& b,
                             const ConvexSubgroup& H) {
    GroupElem::check_dims(a, b);
    if (H.j > a.dim())
        throw dimension_mismatch("convex subgroup index exceeds dimension");
    for (std::size_t i = 0; i < H.j; ++i) {
        auto c = a.coords[i] <=> b.coords[i];
        if (c < 0) return Ordering::less;
        if (c > 0) return Ordering::greater;
    }
    return Ordering::equal;
}

// val(A) = H union G_{>=e}: the monoid of valuations of nonzero ring elements.
inline bool in_value_monoid(const GroupElem& g, const ConvexSubgroup& H) {
    return H.contains(g) || lex_leq(GroupElem::zero(g.dim()), g);
}

}  // namespace qqm
