// The A = K specialization: proper quasi-quadratic modules of an iterated
// Laurent field are exactly assignments of a proper residue module to each of
// the 2^n square classes of the value group.  K itself is kept outside the
// type as a marker (an optional without a value), so the decomposition map
// stays a bijection on the nose.
//
// Monogenic quadratic modules PO_K(f) depend only on the sign of the leading
// coefficient and the parity vector of val f, and form a very flat lattice:
// K^2 at the bottom, K at the top, and 2 (2^n - 1) pairwise incomparable
// modules in between.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqm/module.hpp"

namespace qqm {

struct KModule {
    std::size_t n = 0;
    // Indexed by parity mask: bit i set when coordinate i is odd.  Values are
    // Zero, Pos or Neg; All never appears in a proper module.
    std::vector<RMod> assign;
};

// Validated constructor; throws domain_error on an All entry or a size
// mismatch.
KModule k_module(std::size_t n, std::vector<RMod> assign);

std::size_t class_index(const SquareClass& cls);

// Pointwise join; no value (the Whole marker) when any class floods to F and
// the sum is all of K.
std::optional<KModule> k_sum(const KModule& a, const KModule& b);
// Pointwise meet (always proper).
KModule k_intersect(const KModule& a, const KModule& b);

struct KPredicates {
    bool quadratic;
    bool preordering;
    bool quasi_semiordering;
};
KPredicates k_predicates(const KModule& m);

// Bridges to the general module layer (H = G).
QQModule k_to_module(const KModule& m);
// No value when the module is K itself (some class carries All).
std::optional<KModule> k_of_module(const QQModule& q);

enum class NodeKind { bottom, middle, top };

struct MonogenicNode {
    NodeKind kind;
    int sign = 0;                // +1 / -1, middle nodes only
    std::vector<int> cls;        // parity vector, middle nodes only

    friend bool operator==(const MonogenicNode&, const MonogenicNode&) =
        default;
};

// Normal form of PO_K(f): bottom (K^2) for positive leads in the trivial
// square class, top (K) for negative ones, middle(sign, class) otherwise.
MonogenicNode po_normal_form_K(const Series& f);

// The KModule of a node (top has none: it is K).
std::optional<KModule> node_module(std::size_t n, const MonogenicNode& node);

struct LatticeGraph {
    std::vector<MonogenicNode> nodes;                    // bottom first, top last
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // strict inclusions
};

// All monogenic quadratic modules of F((t1))...((tn)) with their inclusion
// edges: 2 (2^n - 1) + 2 nodes, no middle-middle edge.
LatticeGraph monogenic_lattice(std::size_t n);

// "K^2", "K", or "PO(-t1*t2)"-style names for the middle nodes.
std::string node_label(const MonogenicNode& node);

// Graphviz rendering with labels K^2, PO(+t1), PO(-t1*t2), ..., K.
std::string lattice_dot(const LatticeGraph& g);

}  // namespace qqm
