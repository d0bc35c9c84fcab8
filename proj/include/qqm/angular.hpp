// Angular component from the monomial cross-section w(g) = t^g, square roots
// of strict units, and square witnesses.
//
// an(x) is the coefficient of the lex-minimal exponent: for the monomial
// cross-section this is exactly pi(x * w(val x)^-1).  It is multiplicative,
// restricts to the residue map on units, and satisfies all six pseudo-angular
// axioms.
//
// Because coefficients are plain rationals standing in for a euclidean field,
// a square witness cannot always be a rational series (the leading ratio may
// be a non-square positive rational).  A witness therefore carries a positive
// rational square_scale c with  y = c * x * root^2;  c is a square in any
// euclidean field containing Q, and callers that need a fully rational
// certificate expand c as a Lagrange four-square sum.

#pragma once

#include <array>
#include <optional>

#include "qqm/series.hpp"

namespace qqm {

struct AngularValue {
    Rat coeff;
    int sign;  // +1 or -1
};

// Leading coefficient of a visibly nonzero series.
AngularValue an(const Series& f);

// Convenience: the sign of an(f).
int eps(const Series& f);

// Square root of a strict unit (val f = e, an f = 1) through target_prec.
// In char-2 mode the root is exact: exponent halving (Frobenius).
Series sqrt_strict_unit(const Series& f, const GroupElem& target_prec);

// Exact square root in the char-2 model (defined for every series there).
Series sqrt_char2(const Series& f);

struct SquareWitness {
    Rat square_scale;  // positive rational c
    Series root;       // w with  y = c * x * w^2  through the window
};

// Witness that y is x times a square: succeeds iff val y - val x lies in 2G
// and the leading signs agree; then y = c * x * root^2 with c = |ratio of
// leading coefficients| adjusted, root = t^h * sqrt(strict unit).
std::optional<SquareWitness> square_witness(const Series& x, const Series& y,
                                            const GroupElem& target_prec);

// Lagrange: a positive rational as a sum of four rational squares
// (via four-square decompositions of numerator and denominator combined
// with the Euler four-square identity).  Zero entries allowed.
std::array<Rat, 4> four_squares(const Rat& c);

}  // namespace qqm
