#include "qqm/angular.hpp"

namespace qqm {

AngularValue an(const Series& f) {
    const Rat& c = f.lead_coeff();
    return AngularValue{c, sign_of(c)};
}

int eps(const Series& f) { return sign_of(f.lead_coeff()); }

Series sqrt_char2(const Series& f) {
    if (!f.char2())
        throw domain_error("sqrt_char2 needs a char-2 series");
    Series r(f.dim(), true);
    if (f.prec()) r = r.truncated(f.prec()->half());
    for (const auto& [e, c] : f.terms()) r.add_term(e.half(), c);
    return r;
}

Series sqrt_strict_unit(const Series& f, const GroupElem& target_prec) {
    const GroupElem zero = GroupElem::zero(f.dim());
    if (!(f.val_nonzero() == zero))
        throw domain_error("sqrt_strict_unit: valuation is not e");
    if (f.char2()) {
        // Over F_2 with dyadic exponents every series is a square.
        return sqrt_char2(f).truncated(target_prec);
    }
    if (f.lead_coeff() != 1)
        throw domain_error("sqrt_strict_unit: leading coefficient is not 1");
    // Greedy coefficientwise lifting: with u leading 1, adding (c/2) t^g to u
    // cancels the val-g term of f - u^2 and moves the defect strictly up.
    Series u = Series::one(f.dim()).truncated(target_prec);
    Series ft = f.truncated(target_prec);
    constexpr int kMaxSteps = 4096;
    for (int step = 0; step < kMaxSteps; ++step) {
        Series r = (ft - u * u).truncated(target_prec);
        if (r.no_visible_terms()) return u;
        const GroupElem& g = r.val_nonzero();
        if (!lex_less(zero, g))
            throw domain_error("sqrt_strict_unit: input is not a strict unit");
        u = u + Series::monomial(f.dim(), r.lead_coeff() / 2, g);
    }
    throw precision_error("sqrt_strict_unit: defect chain too long for window");
}

std::optional<SquareWitness> square_witness(const Series& x, const Series& y,
                                            const GroupElem& target_prec) {
    const GroupElem vx = x.val_nonzero();
    const GroupElem vy = y.val_nonzero();
    GroupElem d = vy - vx;
    for (const auto& c : d.coords)
        if (c.is_integer() && c.parity() != 0) return std::nullopt;
    GroupElem h = d.half();
    if (!x.char2() && !h.is_integral()) return std::nullopt;
    Rat ratio = y.lead_coeff() / x.lead_coeff();
    if (!x.char2() && sign_of(ratio) < 0) return std::nullopt;

    // q = y / x has valuation 2h and positive leading coefficient `ratio`;
    // strip the monomial and the scale, take the strict-unit square root.
    // x^-1 known through target_prec - vx makes q = y * x^-1 known through
    // target_prec + 2h, i.e. the strict-unit part through target_prec.
    Series q = y * inverse(x, target_prec - vx);
    Series strict = q.shifted(-h - h).scaled(Rat(1) / ratio);
    if (x.char2()) strict = q.shifted(-h - h);
    GroupElem wprec = target_prec;  // root has valuation h >= window base
    Series w = sqrt_strict_unit(strict.truncated(wprec), wprec);
    return SquareWitness{ratio, w.shifted(h)};
}

namespace {

using boost::multiprecision::cpp_int;

std::array<cpp_int, 4> four_squares_int(const cpp_int& m) {
    using boost::multiprecision::sqrt;
    if (m < 0) throw domain_error("four_squares of a negative number");
    for (cpp_int a = sqrt(m);; --a) {
        cpp_int r1 = m - a * a;
        for (cpp_int b = sqrt(r1); b >= 0 && b * b * 2 >= r1; --b) {
            cpp_int r2 = r1 - b * b;
            for (cpp_int c = sqrt(r2); c >= 0 && c * c * 2 >= r2; --c) {
                cpp_int r3 = r2 - c * c;
                cpp_int d = sqrt(r3);
                if (d * d == r3) return {a, b, c, d};
            }
        }
        if (a == 0) throw domain_error("four_squares: search failed");
    }
}

// Euler's four-square identity.
std::array<cpp_int, 4> euler_product(const std::array<cpp_int, 4>& a,
                                     const std::array<cpp_int, 4>& b) {
    return {a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3],
            a[0] * b[1] - a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] - a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] - a[3] * b[0]};
}

}  // namespace

std::array<Rat, 4> four_squares(const Rat& c) {
    if (c < 0) throw domain_error("four_squares of a negative rational");
    cpp_int p = numerator(c);
    cpp_int q = denominator(c);
    // c = p/q = (p*q) / q^2; decompose p and q separately and combine, so the
    // integer search never sees the full product's magnitude.
    auto sp = four_squares_int(p);
    auto sq = four_squares_int(q);
    auto s = euler_product(sp, sq);
    std::array<Rat, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = Rat(s[i]) / q;
    return out;
}

}  // namespace qqm
