#include "qqm/field_lattice.hpp"

#include <algorithm>
#include <sstream>

namespace qqm {

namespace {

constexpr std::size_t kLatticeCap = 6;

// A = K is the subgroup H_0 = G.
ConvexSubgroup whole_group() { return ConvexSubgroup(0); }

void check_same_shape(const KModule& a, const KModule& b) {
    if (a.n != b.n)
        throw dimension_mismatch("field modules of different dimension");
}

std::vector<int> mask_parity(std::size_t n, std::size_t mask) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1u;
    return p;
}

GroupElem mask_elem(std::size_t n, std::size_t mask) {
    GroupElem g = GroupElem::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) g.coords[i] = Dyadic(1);
    return g;
}

}  // namespace

std::size_t class_index(const SquareClass& cls) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < cls.parity.size(); ++i)
        if (cls.parity[i]) idx |= std::size_t{1} << i;
    return idx;
}

KModule k_module(std::size_t n, std::vector<RMod> assign) {
    if (assign.size() != (std::size_t{1} << n))
        throw dimension_mismatch("one residue module per square class expected");
    for (RMod m : assign)
        if (!ris_proper(m))
            throw domain_error("proper field modules carry no All class");
    return KModule{n, std::move(assign)};
}

std::optional<KModule> k_sum(const KModule& a, const KModule& b) {
    check_same_shape(a, b);
    std::vector<RMod> out(a.assign.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = rsum(a.assign[i], b.assign[i]);
        // one flooded class pulls the whole field in
        if (out[i] == RMod::All) return std::nullopt;
    }
    return KModule{a.n, std::move(out)};
}

KModule k_intersect(const KModule& a, const KModule& b) {
    check_same_shape(a, b);
    std::vector<RMod> out(a.assign.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = rmeet(a.assign[i], b.assign[i]);
    return KModule{a.n, std::move(out)};
}

KPredicates k_predicates(const KModule& m) {
    KPredicates p{};
    p.quadratic = ris_quadratic(m.assign[0]);
    p.quasi_semiordering = true;
    for (RMod v : m.assign)
        if (!ris_semiordering(v)) p.quasi_semiordering = false;
    // multiplicative closure: products of nonzero members land in the
    // product class
    p.preordering = p.quadratic;
    for (std::size_t i = 0; i < m.assign.size() && p.preordering; ++i)
        for (std::size_t j = 0; j < m.assign.size(); ++j)
            if (!rleq(rprod(m.assign[i], m.assign[j]), m.assign[i ^ j])) {
                p.preordering = false;
                break;
            }
    return p;
}

QQModule k_to_module(const KModule& m) {
    std::vector<std::pair<GroupElem, RMod>> patches;
    for (std::size_t mask = 0; mask < m.assign.size(); ++mask)
        if (m.assign[mask] != RMod::Zero)
            patches.emplace_back(mask_elem(m.n, mask), m.assign[mask]);
    return lambda_of(ThetaFamily::from_patches(m.n, whole_group(), patches,
                                               Cut::empty(0)));
}

std::optional<KModule> k_of_module(const QQModule& q) {
    if (q.subgroup().j != 0)
        throw domain_error("field decomposition needs A = K");
    std::vector<RMod> assign(std::size_t{1} << q.dim());
    for (std::size_t mask = 0; mask < assign.size(); ++mask) {
        // over K the family is constant on square classes, so one
        // representative per class reads the whole assignment
        RMod v = q.theta().value(mask_elem(q.dim(), mask));
        if (v == RMod::All) return std::nullopt;
        assign[mask] = v;
    }
    return KModule{q.dim(), std::move(assign)};
}

MonogenicNode po_normal_form_K(const Series& f) {
    if (f.char2())
        throw domain_error("char-2 series need the char-2 module calculus");
    if (f.no_visible_terms())
        throw domain_error("po_normal_form_K of the zero series");
    SquareClass cls = square_class(f.val_nonzero());
    int s = eps(f);
    bool trivial_class = class_index(cls) == 0;
    if (trivial_class)
        return MonogenicNode{s > 0 ? NodeKind::bottom : NodeKind::top, 0, {}};
    return MonogenicNode{NodeKind::middle, s, std::move(cls.parity)};
}

std::optional<KModule> node_module(std::size_t n, const MonogenicNode& node) {
    if (node.kind == NodeKind::top) return std::nullopt;
    std::vector<RMod> assign(std::size_t{1} << n, RMod::Zero);
    assign[0] = RMod::Pos;
    if (node.kind == NodeKind::middle)
        assign[class_index(SquareClass{node.cls})] = rgenerated(node.sign);
    return KModule{n, std::move(assign)};
}

LatticeGraph monogenic_lattice(std::size_t n) {
    if (n < 1 || n > kLatticeCap)
        throw domain_error("lattice dimension out of range");
    LatticeGraph g;
    g.nodes.push_back({NodeKind::bottom, 0, {}});
    for (int sign : {+1, -1})
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            // masks in increasing order list the parity vectors
            // lexicographically from the last coordinate; re-sort below
            g.nodes.push_back({NodeKind::middle, sign, mask_parity(n, mask)});
        }
    std::sort(g.nodes.begin() + 1, g.nodes.end(),
              [](const MonogenicNode& a, const MonogenicNode& b) {
                  if (a.sign != b.sign) return a.sign > b.sign;  // + before -
                  return a.cls < b.cls;
              });
    g.nodes.push_back({NodeKind::top, 0, {}});

    std::size_t top = g.nodes.size() - 1;
    for (std::size_t i = 1; i < top; ++i) {
        g.edges.emplace_back(0, i);
        g.edges.emplace_back(i, top);
    }
    g.edges.emplace_back(0, top);
    return g;
}

std::string node_label(const MonogenicNode& node) {
    switch (node.kind) {
        case NodeKind::bottom: return "K^2";
        case NodeKind::top: return "K";
        case NodeKind::middle: break;
    }
    std::ostringstream out;
    out << "PO(" << (node.sign > 0 ? '+' : '-');
    bool first = true;
    for (std::size_t i = 0; i < node.cls.size(); ++i)
        if (node.cls[i]) {
            if (!first) out << '*';
            out << 't' << (i + 1);
            first = false;
        }
    out << ')';
    return out.str();
}

std::string lattice_dot(const LatticeGraph& g) {
    std::ostringstream out;
    out << "digraph monogenic_lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << node_label(g.nodes[i])
            << "\"];\n";
    for (const auto& [a, b] : g.edges)
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace qqm
