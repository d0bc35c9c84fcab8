// Exact truncated arithmetic in K = F((t1))...((tn)).
//
// A Series is a finite map exponent -> nonzero rational coefficient plus an
// optional precision frontier: all exponents lexicographically >= prec are
// unknown.  Operations are exact on the common window and propagate the
// frontier; anything that would need terms beyond it raises precision_error
// rather than guessing.
//
// The same type doubles as the char-2 model: coefficients in F_2 (stored as
// the rational 1) and exponents in (Z[1/2])^n.

#pragma once

#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "qqm/group.hpp"

namespace qqm {

using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r.sign(); }

class Series {
public:
    using TermMap = std::map<GroupElem, Rat, LexLess>;

    explicit Series(std::size_t n, bool char2 = false)
        : n_(n), char2_(char2) {}

    static Series zero(std::size_t n, bool char2 = false) {
        return Series(n, char2);
    }
    static Series constant(std::size_t n, const Rat& c, bool char2 = false) {
        return monomial(n, c, GroupElem::zero(n), char2);
    }
    static Series one(std::size_t n, bool char2 = false) {
        return constant(n, 1, char2);
    }
    static Series monomial(std::size_t n, const Rat& c, const GroupElem& e,
                           bool char2 = false) {
        Series s(n, char2);
        s.add_term(e, c);
        return s;
    }

    std::size_t dim() const noexcept { return n_; }
    bool char2() const noexcept { return char2_; }
    const TermMap& terms() const noexcept { return terms_; }
    const std::optional<GroupElem>& prec() const noexcept { return prec_; }
    bool exact() const noexcept { return !prec_.has_value(); }

    // Is this series zero as far as we can see?  An exact empty series is
    // zero; a truncated empty series is merely "zero up to precision".
    bool known_zero() const { return terms_.empty() && exact(); }
    bool no_visible_terms() const { return terms_.empty(); }

    // Valuation: the lex-minimal exponent of the support.  Throws
    // precision_error when the support is empty but the series is truncated
    // (the valuation, if any, would exceed the frontier); returns nullopt
    // (conventionally "infinity") for the exact zero series.
    std::optional<GroupElem> val() const {
        if (!terms_.empty()) return terms_.begin()->first;
        if (!exact())
            throw precision_error("valuation exceeds precision window");
        return std::nullopt;
    }

    // Valuation of a series required to be visibly nonzero.
    const GroupElem& val_nonzero() const {
        if (terms_.empty()) {
            if (!exact())
                throw precision_error("valuation exceeds precision window");
            throw domain_error("valuation of the zero series");
        }
        return terms_.begin()->first;
    }

    // Leading (lex-minimal-exponent) coefficient.
    const Rat& lead_coeff() const {
        val_nonzero();
        return terms_.begin()->second;
    }

    void add_term(const GroupElem& e, const Rat& c) {
        if (e.dim() != n_)
            throw dimension_mismatch("term exponent of wrong dimension");
        if (!char2_ && !e.is_integral())
            throw domain_error("non-integral exponent outside char-2 mode");
        if (prec_ && !lex_less(e, *prec_)) return;  // beyond the window
        Rat cc = char2_ ? reduce_mod2(c) : c;
        if (cc == 0) return;
        auto [it, fresh] = terms_.emplace(e, cc);
        if (!fresh) {
            it->second += cc;
            if (char2_) it->second = reduce_mod2(it->second);
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Tighten the precision frontier to p (no-op if already tighter).
    Series truncated(const GroupElem& p) const {
        Series r(*this);
        if (!r.prec_ || lex_less(p, *r.prec_)) r.prec_ = p;
        if (r.prec_)
            r.terms_.erase(r.terms_.lower_bound(*r.prec_), r.terms_.end());
        return r;
    }

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Rat& c) const;                 // c * this
    Series shifted(const GroupElem& e) const;          // t^e * this

    // Do two series agree exactly on the window below p?
    bool agrees_with(const Series& other, const GroupElem& p) const;

    // Exact structural equality (terms and frontier).
    friend bool operator==(const Series& a, const Series& b) {
        return a.n_ == b.n_ && a.char2_ == b.char2_ && a.terms_ == b.terms_ &&
               a.prec_ == b.prec_;
    }

    static Rat reduce_mod2(const Rat& c);
    static void check_compat(const Series& a, const Series& b);

private:
    std::size_t n_;
    bool char2_;
    TermMap terms_;
    std::optional<GroupElem> prec_;

    friend Series inverse(const Series&, const GroupElem&);
};

// f^-1 computed to the absolute frontier target_prec via leading-term
// division and the geometric series.
Series inverse(const Series& f, const GroupElem& target_prec);

// The default working window: valuation + `steps` in the last coordinate
// (16 unless overridden).  Enough for every acceptance check.
GroupElem default_prec(const GroupElem& val, std::int64_t steps = 16);

// f in A = V(H_j)?  f a unit of A?
bool ring_membership(const Series& f, const ConvexSubgroup& H);
bool unit_membership(const Series& f, const ConvexSubgroup& H);

}  // namespace qqm
