#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "qqm/field_lattice.hpp"
#include "test_util.hpp"

using namespace qqm;
using namespace qqm::testing;

namespace {

const ConvexSubgroup kK(0);

const RMod kProper[3] = {RMod::Zero, RMod::Pos, RMod::Neg};

// All 3^(2^n) proper assignments.
std::vector<KModule> all_k_modules(std::size_t n) {
    std::size_t classes = std::size_t{1} << n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < classes; ++i) total *= 3;
    std::vector<KModule> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<RMod> assign(classes);
        std::size_t c = code;
        for (std::size_t i = 0; i < classes; ++i) {
            assign[i] = kProper[c % 3];
            c /= 3;
        }
        out.push_back(k_module(n, std::move(assign)));
    }
    return out;
}

KModule rand_k_module(std::size_t n) {
    std::size_t classes = std::size_t{1} << n;
    std::vector<RMod> assign(classes);
    for (std::size_t i = 0; i < classes; ++i)
        assign[i] = kProper[rand_int(0, 2)];
    return k_module(n, std::move(assign));
}

bool k_equal(const KModule& a, const KModule& b) {
    return a.n == b.n && a.assign == b.assign;
}

Series mono(std::size_t n, int sign, const GroupElem& e) {
    return Series::monomial(n, sign, e);
}

}  // namespace

TEST_CASE("proper field modules and their indices") {
    CHECK_THROWS_AS(k_module(1, {RMod::Pos}), dimension_mismatch);
    CHECK_THROWS_AS(k_module(1, {RMod::Pos, RMod::All}), domain_error);
    CHECK(class_index(square_class(GroupElem{3, 2})) == 1);
    CHECK(class_index(square_class(GroupElem{2, 5})) == 2);
    CHECK(class_index(square_class(GroupElem{-1, 1})) == 3);
}

TEST_CASE("pointwise sum and intersection with the whole-field marker") {
    KModule pos = k_module(1, {RMod::Pos, RMod::Zero});
    KModule neg = k_module(1, {RMod::Neg, RMod::Zero});
    CHECK_FALSE(k_sum(pos, neg).has_value());

    // flooding in a nontrivial class also pulls in the whole field
    KModule pp = k_module(1, {RMod::Pos, RMod::Pos});
    KModule pn = k_module(1, {RMod::Pos, RMod::Neg});
    CHECK_FALSE(k_sum(pp, pn).has_value());
    // ... confirmed by membership of both signs of t in the module sum
    QQModule both = sum(k_to_module(pp), k_to_module(pn));
    CHECK(contains(both, mono(1, +1, GroupElem{1})));
    CHECK(contains(both, mono(1, -1, GroupElem{1})));

    std::optional<KModule> s =
        k_sum(pos, k_module(1, {RMod::Zero, RMod::Neg}));
    REQUIRE(s.has_value());
    CHECK(k_equal(*s, pn));

    CHECK(k_equal(k_intersect(pp, pn), pos));
    CHECK(k_equal(k_intersect(pn, pn), pn));
}

TEST_CASE("predicates on assignments") {
    KPredicates pn = k_predicates(k_module(1, {RMod::Pos, RMod::Neg}));
    CHECK(pn.quadratic);
    CHECK(pn.quasi_semiordering);
    CHECK(pn.preordering);

    CHECK_FALSE(
        k_predicates(k_module(1, {RMod::Pos, RMod::Zero})).quasi_semiordering);
    CHECK_FALSE(k_predicates(k_module(1, {RMod::Neg, RMod::Pos})).quadratic);
    CHECK_FALSE(k_predicates(k_module(1, {RMod::Neg, RMod::Pos})).preordering);

    // the assignment-level predicates agree with the module-level ones
    for (std::size_t n : {std::size_t{1}, std::size_t{2}})
        for (const KModule& m : all_k_modules(n)) {
            QQModule q = k_to_module(m);
            KPredicates p = k_predicates(m);
            CHECK(p.quadratic == is_quadratic(q));
            CHECK(p.preordering == is_preordering(q));
            CHECK(p.quasi_semiordering == is_quasi_semiordering(q));
        }
}

TEST_CASE("decomposition is a bijection on proper modules") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}})
        for (const KModule& m : all_k_modules(n)) {
            QQModule q = k_to_module(m);
            std::optional<KModule> back = k_of_module(q);
            REQUIRE(back.has_value());
            CHECK(k_equal(*back, m));
            // membership is read off the class of the valuation
            for (int i = 0; i < 8; ++i) {
                Series x = rand_series(n, -5, 5, 3);
                RMod cls = m.assign[class_index(square_class(x.val_nonzero()))];
                CHECK(contains(q, x) == rcontains(cls, eps(x)));
            }
        }
    for (int i = 0; i < 40; ++i) {
        KModule m = rand_k_module(3);
        std::optional<KModule> back = k_of_module(k_to_module(m));
        REQUIRE(back.has_value());
        CHECK(k_equal(*back, m));
    }
    // K itself is not in the image
    QQModule whole =
        QQModule::from_generators(1, kK, {Series::one(1), mono(1, -1, GroupElem{0})});
    CHECK_FALSE(k_of_module(whole).has_value());
    QQModule wrong_ring =
        QQModule::from_generators(1, ConvexSubgroup(1), {Series::one(1)});
    CHECK_THROWS_AS(k_of_module(wrong_ring), domain_error);
}

TEST_CASE("assignment arithmetic matches module arithmetic") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}})
        for (int i = 0; i < 60; ++i) {
            KModule a = rand_k_module(n), b = rand_k_module(n);
            QQModule qa = k_to_module(a), qb = k_to_module(b);
            std::optional<KModule> s = k_sum(a, b);
            if (s.has_value())
                CHECK(module_equal(k_to_module(*s), sum(qa, qb)));
            else
                CHECK(is_whole_ring(sum(qa, qb)));
            CHECK(module_equal(k_to_module(k_intersect(a, b)),
                               intersect(qa, qb)));
        }
}

TEST_CASE("the field is pythagorean") {
    auto check_sum_of_two = [](const Series& f1, const Series& f2) {
        Series s = f1 * f1 + f2 * f2;
        REQUIRE_FALSE(s.no_visible_terms());
        GroupElem vs = s.val_nonzero();
        // the root's window is shifted by vs/2 and squaring shifts it again,
        // so ask deep enough that the reconstruction still covers vs + 8
        GroupElem target = vs.dim() == 1
                               ? GroupElem{std::max(vs.coords[0].num,
                                                    std::int64_t{0}) +
                                           24}
                               : default_prec(vs, 12);
        auto w = square_witness(Series::one(s.dim()), s, target);
        REQUIRE(w.has_value());
        Series back = (w->root * w->root).scaled(w->square_scale);
        CHECK(s.agrees_with(back, default_prec(vs, 8)));
    };
    // one variable: arbitrary valuations, deep windows
    for (int i = 0; i < 50; ++i)
        check_sum_of_two(rand_series(1, -4, 6, 4), rand_series(1, -4, 6, 4));
    // two variables: unit leads keep the root's window one-ended (a frontier
    // whose head exceeds the root's valuation head leaves the tail coordinate
    // unbounded)
    for (int i = 0; i < 25; ++i)
        check_sum_of_two(Series::constant(2, 5) + rand_series(2, 1, 4, 3),
                         Series::constant(2, 2) + rand_series(2, 1, 4, 3));
}

TEST_CASE("pythagorean normal form of a monogenic module") {
    Series f1(2);
    f1.add_term(GroupElem{0, 0}, 1);
    f1.add_term(GroupElem{1, 0}, 1);
    CHECK(po_normal_form_K(f1) == MonogenicNode{NodeKind::bottom, 0, {}});

    Series f2(2);
    f2.add_term(GroupElem{0, 0}, -3);
    f2.add_term(GroupElem{0, 1}, 1);
    CHECK(po_normal_form_K(f2) == MonogenicNode{NodeKind::top, 0, {}});

    CHECK(po_normal_form_K(mono(2, -1, GroupElem{1, 3})) ==
          MonogenicNode{NodeKind::middle, -1, {1, 1}});

    CHECK_THROWS_AS(po_normal_form_K(Series::zero(2)), domain_error);

    // the normal form names exactly the module PO_K(f) = PO(1) + PO(f)
    for (int i = 0; i < 60; ++i) {
        Series f = rand_series(2, -4, 4, 3);
        MonogenicNode node = po_normal_form_K(f);
        QQModule po = QQModule::from_generators(2, kK, {f});
        std::optional<KModule> m = node_module(2, node);
        if (node.kind == NodeKind::top) {
            CHECK(is_whole_ring(po));
            CHECK_FALSE(m.has_value());
        } else {
            REQUIRE(m.has_value());
            CHECK(module_equal(k_to_module(*m), po));
        }
    }
}

TEST_CASE("the monogenic inclusion lattice") {
    CHECK_THROWS_AS(monogenic_lattice(0), domain_error);
    CHECK_THROWS_AS(monogenic_lattice(9), domain_error);

    LatticeGraph g1 = monogenic_lattice(1);
    REQUIRE(g1.nodes.size() == 4);
    CHECK(g1.nodes[1] == MonogenicNode{NodeKind::middle, +1, {1}});
    CHECK(g1.nodes[2] == MonogenicNode{NodeKind::middle, -1, {1}});
    CHECK(g1.edges.size() == 5);

    LatticeGraph g2 = monogenic_lattice(2);
    REQUIRE(g2.nodes.size() == 8);
    CHECK(g2.edges.size() == 13);

    // inclusion matrix: i <= j iff i = j, i is the bottom, or j is the top
    std::size_t top = g2.nodes.size() - 1;
    for (std::size_t i = 0; i < g2.nodes.size(); ++i)
        for (std::size_t j = 0; j < g2.nodes.size(); ++j) {
            std::optional<KModule> mi = node_module(2, g2.nodes[i]);
            std::optional<KModule> mj = node_module(2, g2.nodes[j]);
            bool included;
            if (!mj.has_value())
                included = true;  // everything sits below K
            else if (!mi.has_value())
                included = false;
            else {
                included = true;
                for (std::size_t c = 0; c < mi->assign.size(); ++c)
                    if (!rleq(mi->assign[c], mj->assign[c])) included = false;
            }
            CHECK(included == (i == j || i == 0 || j == top));
            // cross-check by elements: a middle node's generating monomial
            // separates it from every other middle node
            if (i != j && g2.nodes[i].kind == NodeKind::middle &&
                g2.nodes[j].kind == NodeKind::middle) {
                const MonogenicNode& a = g2.nodes[i];
                Series wit = mono(2, a.sign, GroupElem{a.cls[0], a.cls[1]});
                CHECK(contains(k_to_module(*mi), wit));
                CHECK_FALSE(contains(k_to_module(*mj), wit));
            }
        }
}

TEST_CASE("graphviz rendering of the lattice") {
    std::string dot = lattice_dot(monogenic_lattice(1));
    CHECK(dot.find("label=\"K^2\"") != std::string::npos);
    CHECK(dot.find("label=\"K\"") != std::string::npos);
    CHECK(dot.find("label=\"PO(+t1)\"") != std::string::npos);
    CHECK(dot.find("label=\"PO(-t1)\"") != std::string::npos);
    CHECK(dot.find("PO(+t1)") < dot.find("PO(-t1)"));
    CHECK(dot == lattice_dot(monogenic_lattice(1)));

    std::string dot2 = lattice_dot(monogenic_lattice(2));
    CHECK(dot2.find("label=\"PO(-t1*t2)\"") != std::string::npos);
    CHECK(dot2.find("label=\"PO(+t2)\"") != std::string::npos);
    // middles ordered by sign first, then class
    CHECK(dot2.find("PO(+t2)") < dot2.find("PO(+t1)"));
    CHECK(dot2.find("PO(+t1*t2)") < dot2.find("PO(-t2)"));
}
