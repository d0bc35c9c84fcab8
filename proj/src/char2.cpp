#include "qqm/char2.hpp"

namespace qqm {

namespace {

void check_char2(const Series& x) {
    if (!x.char2())
        throw domain_error("the char-2 calculus needs char-2 series");
}

void check_shape(const CutSet& S) {
    if (S.cut.dim != S.n || S.H.j > S.n)
        throw dimension_mismatch("cut set with inconsistent dimensions");
}

void check_same_ring(const CutSet& a, const CutSet& b) {
    if (a.n != b.n || a.H.j != b.H.j)
        throw dimension_mismatch("char-2 modules over different rings");
}

bool ray_with_min(const CutSet& S) {
    return S.cut.is_closed_ray() && !S.cut.is_empty_set();
}

}  // namespace

std::pair<Series, Series> two_square_decompose(const Series& x) {
    check_char2(x);
    if (x.no_visible_terms()) {
        if (!x.exact())
            throw precision_error("valuation exceeds precision window");
        throw domain_error("two_square_decompose of zero");
    }
    const std::size_t n = x.dim();
    const GroupElem zero = GroupElem::zero(n);
    const GroupElem& v = x.val_nonzero();
    if (v == zero)
        throw domain_error("units of B are not covered by the two-square lemma");
    Series one = Series::one(n, true);
    if (lex_less(zero, v)) {
        // val x > e: x = sqrt(1+x)^2 + 1^2 exactly, since -1 = 1
        return {sqrt_char2(one + x), one};
    }
    // val x < e: decompose x^-1 and divide through, u = x sqrt(1 + x^-1).
    // The square root halves the frontier and the two factors of x shift it
    // by 2 val x, so ask for -2 val x + 32 to keep u^2 known past val x
    Series y = inverse(x, default_prec(-v - v, 32));
    return {x * sqrt_char2(one + y), x};
}

CutSet c2_empty_cut(std::size_t n, ConvexSubgroup H) {
    CutSet S{n, H, Cut::empty(n)};
    check_shape(S);
    return S;
}

CutSet c2_closed_ray(ConvexSubgroup H, const GroupElem& g0) {
    CutSet S{g0.dim(), H, Cut::closed_ray(g0.coords)};
    check_shape(S);
    return S;
}

CutSet c2_open_cut(std::size_t n, ConvexSubgroup H, std::vector<Dyadic> prefix,
                   bool inclusive) {
    CutSet S{n, H, Cut(n, std::move(prefix), inclusive)};
    check_shape(S);
    return S;
}

CutSet c2_value_cut(std::size_t n, ConvexSubgroup H) {
    CutSet S{n, H,
             Cut(n, std::vector<Dyadic>(H.j), true)};  // heads >= 0, any tail
    check_shape(S);
    return S;
}

bool cut_membership(const CutSet& S, const GroupElem& g) {
    check_shape(S);
    if (g.dim() != S.n)
        throw dimension_mismatch("cut membership: wrong dimension");
    return S.cut.member(g.coords);
}

bool cut_validate(const CutSet& S) {
    check_shape(S);
    if (S.cut.is_empty_set()) return true;
    if (S.H.j == S.n)  // A = B: upward closed inside G >= e
        return cut_subset(S.cut, Cut::closed_ray(
                                     std::vector<Dyadic>(S.n)));
    // A != B: tail translations must not cross the boundary, so the prefix
    // stays within the head block; domination of unit valuations pins the
    // head strictly positive
    if (S.cut.prefix.size() > S.H.j) return false;
    return cut_subset(S.cut, Cut(S.n, std::vector<Dyadic>(S.H.j), false));
}

std::optional<GroupElem> cut_min(const CutSet& S) {
    check_shape(S);
    if (auto m = S.cut.min()) return GroupElem(*m);
    return std::nullopt;
}

Char2Module c2_gamma1(CutSet S) {
    check_shape(S);
    if (S.H.j == S.n && ray_with_min(S))
        return Char2Module{std::move(S), RMod::All};
    return Char2Module{std::move(S), std::nullopt};
}

Char2Module c2_gamma2(CutSet S, RMod M) {
    check_shape(S);
    if (S.H.j != S.n)
        throw domain_error("the minimal-layer form needs A = B");
    if (!ray_with_min(S))
        throw domain_error("the minimal-layer form needs a least valuation");
    if (M == RMod::Zero)
        throw domain_error("the minimal layer must be a nonzero module");
    return Char2Module{std::move(S), M};
}

bool c2_equal(const Char2Module& a, const Char2Module& b) {
    check_same_ring(a.S, b.S);
    return cut_equal(a.S.cut, b.S.cut) && a.layer == b.layer;
}

bool c2_contains(const Char2Module& m, const Series& x) {
    check_char2(x);
    if (x.dim() != m.S.n)
        throw dimension_mismatch("membership query of wrong dimension");
    if (!ring_membership(x, m.S.H))
        throw domain_error("element lies outside the ring A");
    std::optional<GroupElem> v = x.val();  // throws on indeterminate zero
    if (!v.has_value()) return true;
    if (m.layer.has_value()) {
        const GroupElem gmin = *cut_min(m.S);
        // at the minimum the single nonzero residue class of F_2 lies in
        // every nonzero layer
        if (*v == gmin) return true;
        return lex_less(gmin, *v);
    }
    return m.S.cut.member(v->coords);
}

Char2Module c2_sum(const Char2Module& a, const Char2Module& b) {
    check_same_ring(a.S, b.S);
    if (a.layer.has_value() && b.layer.has_value()) {
        int c = cut_cmp(a.S.cut, b.S.cut);
        if (c < 0) return b;
        if (c > 0) return a;
        return Char2Module{a.S, rsum(*a.layer, *b.layer)};
    }
    if (!a.layer.has_value() && !b.layer.has_value()) {
        CutSet u{a.S.n, a.S.H, cut_union(a.S.cut, b.S.cut)};
        return c2_gamma1(std::move(u));
    }
    // one minimal layer against a min-less set: the larger valuation set wins
    const Char2Module& g2 = a.layer.has_value() ? a : b;
    const Char2Module& g1 = a.layer.has_value() ? b : a;
    if (cut_subset(g2.S.cut, g1.S.cut)) return g1;
    return g2;
}

Char2Module c2_intersect(const Char2Module& a, const Char2Module& b) {
    check_same_ring(a.S, b.S);
    if (a.layer.has_value() && b.layer.has_value()) {
        int c = cut_cmp(a.S.cut, b.S.cut);
        if (c < 0) return a;
        if (c > 0) return b;
        RMod meet = rmeet(*a.layer, *b.layer);
        if (meet != RMod::Zero) return Char2Module{a.S, meet};
        // layers meet in {0}: the minimum drops out, leaving the open ray
        Cut punctured(a.S.n, a.S.cut.prefix, false);
        return c2_gamma1(CutSet{a.S.n, a.S.H, std::move(punctured)});
    }
    if (!a.layer.has_value() && !b.layer.has_value()) {
        CutSet i{a.S.n, a.S.H, cut_intersect(a.S.cut, b.S.cut)};
        return c2_gamma1(std::move(i));
    }
    const Char2Module& g2 = a.layer.has_value() ? a : b;
    const Char2Module& g1 = a.layer.has_value() ? b : a;
    if (cut_subset(g2.S.cut, g1.S.cut)) return g2;
    return g1;
}

Char2Module c2_classify(std::size_t n, ConvexSubgroup H,
                        const std::vector<Series>& gens) {
    if (H.j > n) throw dimension_mismatch("convex subgroup index exceeds dimension");
    std::vector<GroupElem> vals;
    for (const Series& f : gens) {
        check_char2(f);
        if (f.dim() != n)
            throw dimension_mismatch("generator of wrong dimension");
        if (f.no_visible_terms()) {
            if (!f.exact())
                throw precision_error("valuation exceeds precision window");
            continue;
        }
        if (!ring_membership(f, H))
            throw domain_error("generator lies outside the ring A");
        vals.push_back(f.val_nonzero());
    }
    if (vals.empty()) return c2_gamma1(c2_empty_cut(n, H));

    if (H.j == n) {
        // A = B: squares sweep the generator's valuation upward without
        // gaps, so the set is the closed ray at the least valuation
        GroupElem vmin = vals.front();
        for (const GroupElem& v : vals)
            if (lex_less(v, vmin)) vmin = v;
        return c2_gamma2(c2_closed_ray(H, vmin), RMod::All);
    }

    // A != B: multiplying by units moves the tail freely, so only the head
    // of each valuation survives; a nonpositive head floods to the whole ring
    std::vector<Dyadic> hmin(vals.front().coords.begin(),
                             vals.front().coords.begin() + H.j);
    for (const GroupElem& v : vals) {
        std::vector<Dyadic> h(v.coords.begin(), v.coords.begin() + H.j);
        if (h < hmin) hmin = h;
    }
    bool positive_head = hmin > std::vector<Dyadic>(H.j);
    if (!positive_head) return c2_gamma1(c2_value_cut(n, H));
    return c2_gamma1(c2_open_cut(n, H, std::move(hmin), true));
}

}  // namespace qqm
