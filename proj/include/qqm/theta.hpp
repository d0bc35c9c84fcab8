// Theta-families: the canonical coordinates of a quasi-quadratic module of
// A = V(H_j), i.e. a compatible assignment g -> ResidueModule over the value
// monoid H union G>=e.
//
// Finite representation.  The compatibility axioms say the assignment is
// constant on mixed classes [[g]], monotone along square increments, and that
// the All-region is determined by the head [g] alone and upward closed; so a
// family is captured exactly by
//
//   * per full-parity-vector layers: an upward-closed head set (a Cut over
//     G/H) on which the value is at least Pos, and one for Neg, and
//   * a parity-blind "all" Cut over G/H marking where the value is All.
//
// A generator f contributes the layer (parity of val f, heads >= head(val f),
// sign of f): the layer is active at g exactly when g - val f = 2u with u in
// the value monoid, i.e. equal parity and head(g) >= head(val f).
//
// Saturation: wherever layers of opposite sign and equal parity overlap the
// value is All, and All spreads to every g' above a witness and across its
// whole head coset; the spread of a region is again a Cut (flood_cut below),
// so closing a family needs one pass over layer pairs.  Sums and
// intersections follow the same calculus: the sum takes unions of layers and
// floods, the intersection intersects each side's "at least Pos" (resp. Neg)
// regions and the All-regions.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qqm/cut.hpp"
#include "qqm/group.hpp"
#include "qqm/residue.hpp"

namespace qqm {

// One contribution: value >= `value` at every g with parity(g) == parity and
// head(g) in head_cut.
struct ThetaPatch {
    std::vector<int> parity;  // n bits
    Cut head_cut;             // over G/H, dimension j
    RMod value;               // Pos or Neg
};

// The upward closure (within the head order) of the parity-matching points of
// an integral head cut: the set of heads h' >= h for some h in `region` with
// h congruent to head_parity mod 2.  This is again a cut; it is the exact
// spread of an All-witness region, because every mixed class with head h
// contains module elements with arbitrarily low tail.
Cut flood_cut(Cut region, const std::vector<int>& head_parity);

class ThetaFamily {
public:
    // Layer map: parity -> (heads where the value is >= Pos,
    //                       heads where the value is >= Neg).
    using LayerMap = std::map<std::vector<int>, std::pair<Cut, Cut>>;

    // The zero family (value Zero everywhere).
    ThetaFamily(std::size_t n, ConvexSubgroup H);

    // The family of the whole ring (value All everywhere).
    static ThetaFamily whole(std::size_t n, ConvexSubgroup H);

    // Build and saturate from raw layers plus an initial All-region.
    static ThetaFamily from_layers(std::size_t n, ConvexSubgroup H,
                                   const std::vector<ThetaPatch>& layers,
                                   Cut all);

    // Build from user patches given as (base point, value) pairs plus an
    // explicit All-frontier, validating the compatibility axioms: a base
    // point with value M asserts value >= M at every g with the base's
    // parity and head >= the base's head.  Throws domain_error when the
    // declared assignment would need All outside the frontier (opposite
    // layers overlapping, or an All patch not inside the frontier).
    static ThetaFamily from_patches(
        std::size_t n, ConvexSubgroup H,
        const std::vector<std::pair<GroupElem, RMod>>& patches, Cut frontier);

    std::size_t dim() const noexcept { return n_; }
    const ConvexSubgroup& subgroup() const noexcept { return H_; }
    const Cut& all_cut() const noexcept { return all_; }
    const LayerMap& layers() const noexcept { return layers_; }

    // The assigned residue module at g; g must lie in the value monoid.
    RMod value(const GroupElem& g) const;

    bool is_zero_family() const {
        return layers_.empty() && all_.is_empty_set();
    }

private:
    std::size_t n_;
    ConvexSubgroup H_;
    Cut all_;          // over G/H
    LayerMap layers_;  // canonical: no empty cut, nothing inside all_
};

// Pointwise sum (join with All-flooding) and intersection (pointwise meet).
ThetaFamily theta_sum(const ThetaFamily& a, const ThetaFamily& b);
ThetaFamily theta_intersect(const ThetaFamily& a, const ThetaFamily& b);

// Pointwise equality of the assignments (representations are canonical, so
// this is a finite comparison).
bool theta_equal(const ThetaFamily& a, const ThetaFamily& b);

}  // namespace qqm
