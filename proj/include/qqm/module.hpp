// Quasi-quadratic modules of A = V(H_j), B <= A <= K.
//
// A module is carried either as a finite generator list (the module of all
// sums sum_i sigma_i f_i with sigma_i sums of squares of A, together with the
// implicit generator 1 whenever the list is nonempty; the empty list is the
// zero module) or as a ThetaFamily.  Every constructor computes the family up
// front — over a euclidean residue field a generator contributes exactly the
// layer (sign, class of its valuation), so nothing is lost — and all queries
// read the family:
//
//   x in M      <=>  x = 0  or  an(x)'s sign lies in value(val x),
//   x in supp M <=>  x = 0  or  value(val x) = All,
//
// which is the canonical-representation theorem made executable.
//
// Certificates.  For generator modules, membership can be witnessed
// explicitly: certify() returns terms (i, u) with  x = sum f_i u^2  through a
// window, built from square roots of strict units; positive rational scales
// are expanded by Lagrange four-square decompositions so the multipliers stay
// rational.

#pragma once

#include <optional>
#include <vector>

#include "qqm/angular.hpp"
#include "qqm/theta.hpp"

namespace qqm {

class QQModule {
public:
    static QQModule from_generators(std::size_t n, ConvexSubgroup H,
                                    std::vector<Series> gens);
    static QQModule from_family(ThetaFamily fam);

    std::size_t dim() const noexcept { return n_; }
    const ConvexSubgroup& subgroup() const noexcept { return H_; }
    const ThetaFamily& theta() const noexcept { return theta_; }

    bool has_generators() const noexcept { return gens_.has_value(); }
    const std::vector<Series>& generators() const;
    // The generator list actually in force: the given one preceded by 1
    // (empty for the zero module and for family-built modules without one).
    const std::vector<Series>& effective_generators() const;

private:
    QQModule(std::size_t n, ConvexSubgroup H, ThetaFamily fam)
        : n_(n), H_(H), theta_(std::move(fam)) {}

    std::size_t n_;
    ConvexSubgroup H_;
    ThetaFamily theta_;
    std::optional<std::vector<Series>> gens_;  // as given
    std::vector<Series> eff_gens_;             // with the implicit 1
};

// Membership in Phi^A(M, [[g]]) = {x : val x has g's parity, val x = [[g]] or
// val x > g, sign of an(x) in M} union {0}.
bool phi_contains(RMod M, const GroupElem& g, const ConvexSubgroup& H,
                  const Series& x);

// The residue module M_g(module) = {an(x) : x in module, val x = g} u {0}.
RMod mg_of(const QQModule& m, const GroupElem& g);

bool contains(const QQModule& m, const Series& x);
bool supp_contains(const QQModule& m, const Series& x);

QQModule sum(const QQModule& a, const QQModule& b);
QQModule intersect(const QQModule& a, const QQModule& b);

bool is_whole_ring(const QQModule& m);
bool is_quadratic(const QQModule& m);
// The next two are decided for A = K (any n) and A = B with n = 1; other
// rings have no finite criterion and raise domain_error.
bool is_preordering(const QQModule& m);
bool is_quasi_semiordering(const QQModule& m);

inline const ThetaFamily& theta_of(const QQModule& m) { return m.theta(); }
inline QQModule lambda_of(ThetaFamily fam) {
    return QQModule::from_family(std::move(fam));
}

// Pointwise equality of the underlying sets, via the canonical families.
inline bool module_equal(const QQModule& a, const QQModule& b) {
    return theta_equal(a.theta(), b.theta());
}

// An ideal of A given by generators: its nonzero valuations form the head
// ray {g : [g] >= min_i [val f_i]}, and membership depends on the valuation
// class alone.
struct IdealDecomposition {
    std::size_t n;
    ConvexSubgroup H;
    Cut head_cut;                    // over G/H: the set [val(I \ {0})]
    std::vector<MixedClass> bases;   // classes of the generators

    bool contains(const Series& x) const;
};

IdealDecomposition ideal_decompose(std::size_t n, ConvexSubgroup H,
                                   const std::vector<Series>& gens);

// One certificate term: generator index (into effective_generators()) and a
// multiplier u, contributing  f_i * u^2.
struct CertTerm {
    std::size_t gen;
    Series mult;
};

// Explicit membership witness for a generator module: terms summing to x
// through `window`.  Throws domain_error when x is not a member or the
// module has no generator presentation.
std::vector<CertTerm> certify(const QQModule& m, const Series& x,
                              const GroupElem& window);

// Evaluate a certificate: sum of gens[term.gen] * term.mult^2.
Series apply_certificate(const QQModule& m, const std::vector<CertTerm>& cert);

}  // namespace qqm
