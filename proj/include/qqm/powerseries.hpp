// Quadratic modules of F[[X]] over a euclidean coefficient field: monogenic
// normal forms, the five-way classification by residue tables, two-generator
// presentations, and the left/center/right decomposition.
//
// Case tags and their residue tables (k ranges over nonnegative integers):
//
//   a:  even -> F^2, odd -> {0}                          (sums of squares)
//   b:  everything -> F                                  (the whole ring)
//   c:  even -> F^2, odd >= n -> +-F^2 (n odd)           (PO(+-X^n))
//   d:  even < n -> F^2, >= n -> F                       (negative even lead)
//   e:  even < n -> F^2, odd in [m, n) -> +-F^2, >= n -> F  (m odd, m < n)

#pragma once

#include <cstdint>
#include <vector>

#include "qqm/module.hpp"

namespace qqm {

struct PSQuadClass {
    char case_tag;       // 'a' .. 'e'
    std::int64_t n = 0;  // threshold exponent (cases c, d, e)
    std::int64_t m = 0;  // odd sub-threshold exponent (case e only)
    int sign = 0;        // +1 / -1 in cases c and e, 0 otherwise

    friend bool operator==(const PSQuadClass&, const PSQuadClass&) = default;
};

// A monogenic module PO(sign * X^exponent); PO(1) is {+1, 0}.
struct MonoDescriptor {
    int sign;
    std::int64_t exponent;

    friend bool operator==(const MonoDescriptor&, const MonoDescriptor&) =
        default;
};

struct LCRTriple {
    MonoDescriptor q_l, q_c, q_r;
};

// The quadratic module generated by f (and 1) in F[[X]], stored with its
// normal-form generator: PO(1) when val f is even with positive sign, and
// PO(sign(f) X^{val f}) otherwise.
QQModule po_monogenic(const Series& f);

// The module of a monogenic descriptor.
QQModule mono_module(const MonoDescriptor& d);

// The unique table row matching a quadratic module of F[[X]].  Throws
// domain_error when the module is not quadratic or not over F[[X]].
PSQuadClass classify(const QQModule& q);

// Generators (beyond the implicit 1) regenerating the class: at most two
// monomials.
std::vector<Series> two_generator_presentation(const PSQuadClass& cls);

// The module of a class via its presentation.
QQModule class_module(const PSQuadClass& cls);

// Q_l = PO(X^{n_l}) for the least positive odd n_l with X^{n_l} in Q (else
// PO(1)); Q_c uses -X^{n_c} with n_c nonnegative even; Q_r uses -X^{n_r}
// with n_r positive odd.  Always Q = Q_l union Q_c union Q_r.
LCRTriple lcr_decompose(const QQModule& q);

}  // namespace qqm
