#include "qqm/series.hpp"

namespace qqm {

Rat Series::reduce_mod2(const Rat& c) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(c);
    cpp_int den = denominator(c);
    if (den % 2 == 0)
        throw domain_error("coefficient has no residue mod 2");
    return (num % 2 == 0) ? Rat(0) : Rat(1);
}

void Series::check_compat(const Series& a, const Series& b) {
    if (a.n_ != b.n_)
        throw dimension_mismatch("series of different dimension");
    if (a.char2_ != b.char2_)
        throw dimension_mismatch("mixing char-2 and char-0 series");
}

namespace {

// The least exponent a possibly-hidden term of s could have.
// Precondition: s is not the exact zero series.
const GroupElem& floor_exp(const Series& s) {
    if (!s.terms().empty()) return s.terms().begin()->first;
    return *s.prec();
}

std::optional<GroupElem> min_prec(const std::optional<GroupElem>& a,
                                  const std::optional<GroupElem>& b) {
    if (!a) return b;
    if (!b) return a;
    return lex_less(*a, *b) ? a : b;
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
    Series::check_compat(a, b);
    Series r(a.dim(), a.char2());
    r.prec_ = min_prec(a.prec(), b.prec());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

Series operator-(const Series& a) { return a.scaled(-1); }

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    Series::check_compat(a, b);
    Series r(a.dim(), a.char2());
    if (a.known_zero() || b.known_zero()) return r;
    // An unknown tail of one factor smears by the other factor's least
    // exponent: that is where the result's window closes.
    std::optional<GroupElem> p;
    if (a.prec()) p = min_prec(p, *a.prec() + floor_exp(b));
    if (b.prec()) p = min_prec(p, *b.prec() + floor_exp(a));
    r.prec_ = p;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(ea + eb, ca * cb);
    return r;
}

Series Series::scaled(const Rat& c) const {
    Series r(n_, char2_);
    r.prec_ = prec_;
    for (const auto& [e, co] : terms_) r.add_term(e, co * c);
    return r;
}

Series Series::shifted(const GroupElem& e) const {
    if (e.dim() != n_)
        throw dimension_mismatch("shift exponent of wrong dimension");
    Series r(n_, char2_);
    if (prec_) r.prec_ = *prec_ + e;
    for (const auto& [ex, co] : terms_) r.add_term(ex + e, co);
    return r;
}

bool Series::agrees_with(const Series& other, const GroupElem& p) const {
    check_compat(*this, other);
    if ((prec_ && lex_less(*prec_, p)) ||
        (other.prec_ && lex_less(*other.prec_, p)))
        throw precision_error("window too narrow to compare through requested precision");
    auto ae = terms_.lower_bound(p);
    auto be = other.terms_.lower_bound(p);
    return std::equal(terms_.begin(), ae, other.terms_.begin(), be,
                      [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

Series inverse(const Series& f, const GroupElem& target_prec) {
    if (f.no_visible_terms()) {
        if (!f.exact())
            throw precision_error("inverse of a series with no visible terms");
        throw domain_error("inverse of the zero series");
    }
    const GroupElem v = f.val_nonzero();
    const Rat c = f.lead_coeff();
    // f = c t^v (1 + g) with val g > 0; 1/f = c^-1 t^-v sum (-g)^k.
    Series unit_part = f.shifted(-v).scaled(Rat(1) / c);
    if (f.char2()) unit_part = f.shifted(-v);  // c = 1 in F_2
    Series g = unit_part - Series::one(f.dim(), f.char2());
    const GroupElem w = target_prec + v;  // frontier before the back-shift
    Series acc = Series::one(f.dim(), f.char2()).truncated(w);
    Series term = Series::one(f.dim(), f.char2());
    Series neg_g = (-g).truncated(w);
    constexpr int kMaxIter = 4096;
    int it = 0;
    for (; it < kMaxIter; ++it) {
        term = (term * neg_g).truncated(w);
        if (term.no_visible_terms()) break;
        acc = acc + term;
    }
    if (it == kMaxIter)
        throw precision_error("inverse: geometric series does not close the window");
    Series r = acc.shifted(-v);
    if (!f.char2()) r = r.scaled(Rat(1) / c);
    if (f.prec()) r = r.truncated(*f.prec() - v - v);
    return r.truncated(target_prec);
}

GroupElem default_prec(const GroupElem& val, std::int64_t steps) {
    GroupElem p = val;
    if (p.dim() == 0)
        throw dimension_mismatch("precision for dimension-0 exponent");
    p.coords.back() = p.coords.back() + Dyadic(steps);
    return p;
}

bool ring_membership(const Series& f, const ConvexSubgroup& H) {
    auto v = f.val();
    if (!v) return true;  // 0 is in every A
    return in_value_monoid(*v, H);
}

bool unit_membership(const Series& f, const ConvexSubgroup& H) {
    auto v = f.val();
    if (!v) return false;
    return H.contains(*v);
}

}  // namespace qqm
