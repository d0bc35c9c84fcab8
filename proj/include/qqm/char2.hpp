// Quasi-quadratic modules when the residue field has characteristic two.
//
// Working model: F_2 coefficients with dyadic exponent vectors, so every
// strict unit is a square by exponent halving.  The structure collapses:
// sums of two squares reach every non-unit, so membership in a module only
// sees the valuation, except possibly at a single minimal valuation where a
// residue module of F appears.  Concretely,
//
//   Gamma1(S)    = {x : val x in S} u {0}         (S well-behaved),
//   Gamma2(S, M) = {x : val x = min S, an x in M} u {x : val x > min S},
//
// and every nonzero proper module is of one of these forms, Gamma2 only for
// A = B.  Well-behaved subsets of val(A) are upward-closed and closed under
// translation by val(A); both properties have closed forms on cut shapes.
//
// Over F_2 there is a single nonzero residue class, so series-level Gamma2
// membership treats every nonzero M alike; the finer euclidean-lattice
// values of M still matter to the sum/intersection case tables, which are
// implemented (and tested) on the formal layer.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qqm/angular.hpp"
#include "qqm/cut.hpp"
#include "qqm/residue.hpp"
#include "qqm/series.hpp"

namespace qqm {

// Every non-unit of K is a sum of two squares: returns (u, v) with
// x = u^2 + v^2 through a default window and val u = val v = min(e, val x).
// Exact when val x > e.  Throws domain_error for units of B, zero, and
// series outside char-2 mode.
std::pair<Series, Series> two_square_decompose(const Series& x);

// A well-behaved subset of val(A) carried as an upward-closed cut of the
// dyadic exponent lattice.
struct CutSet {
    std::size_t n = 0;
    ConvexSubgroup H;
    Cut cut;  // over G itself (dimension n)
};

CutSet c2_empty_cut(std::size_t n, ConvexSubgroup H);
CutSet c2_closed_ray(ConvexSubgroup H, const GroupElem& g0);
CutSet c2_open_cut(std::size_t n, ConvexSubgroup H, std::vector<Dyadic> prefix,
                   bool inclusive);
// val(A) itself: the cut of the improper module A.  Well-behaved only for
// A = B (for larger rings unit valuations violate domination).
CutSet c2_value_cut(std::size_t n, ConvexSubgroup H);

bool cut_membership(const CutSet& S, const GroupElem& g);

// Both defining conditions in closed form: every member dominates every unit
// valuation, and S + val(A) stays in S (equivalently: the prefix stops at
// the head block when A != B, and S sits inside G >= e when A = B).
bool cut_validate(const CutSet& S);

// The least element; exists exactly for a full-length inclusive prefix.
std::optional<GroupElem> cut_min(const CutSet& S);

// Gamma1(S) when layer is empty; Gamma2(S, *layer) otherwise.
struct Char2Module {
    CutSet S;
    std::optional<RMod> layer;
};

// Canonical constructors: a Gamma1 over a cut with a least element is stored
// as Gamma2(S, All), matching the classification's disjoint union.
Char2Module c2_gamma1(CutSet S);
Char2Module c2_gamma2(CutSet S, RMod M);  // needs A = B, min S, M != Zero

bool c2_equal(const Char2Module& a, const Char2Module& b);

// Membership of a ring element; zero always belongs.  Throws domain_error
// when x lies outside A and precision_error when x is an indeterminate
// truncated zero.
bool c2_contains(const Char2Module& m, const Series& x);

// The sum/intersection case tables over the cut order (cut inclusion is
// total for well-behaved sets).  The only shape-changing case: intersecting
// equal-minimum layers that meet in {0} drops the minimum, giving Gamma1 of
// the punctured ray.
Char2Module c2_sum(const Char2Module& a, const Char2Module& b);
Char2Module c2_intersect(const Char2Module& a, const Char2Module& b);

// The module generated by char-2 ring elements: its valuation set is the
// least well-behaved set containing the generators' valuations, with the
// full residue module at the minimum when A = B.  A generator whose
// valuation sits at or below some unit valuation floods to the whole ring,
// reported as Gamma1(val(A)).
Char2Module c2_classify(std::size_t n, ConvexSubgroup H,
                        const std::vector<Series>& gens);

}  // namespace qqm
