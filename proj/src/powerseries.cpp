#include "qqm/powerseries.hpp"

#include <algorithm>
#include <cstdlib>

namespace qqm {

namespace {

const ConvexSubgroup kB1(1);

Series mono_series(const MonoDescriptor& d) {
    return Series::monomial(1, d.sign, GroupElem{d.exponent});
}

void check_ps_ring(const QQModule& q) {
    if (q.dim() != 1 || q.subgroup().j != 1)
        throw domain_error("classification lives in F[[X]] (n = 1, A = B)");
}

}  // namespace

QQModule po_monogenic(const Series& f) {
    if (f.dim() != 1)
        throw dimension_mismatch("one-variable series expected");
    if (f.char2())
        throw domain_error("char-2 series need the char-2 module calculus");
    if (f.no_visible_terms())
        throw domain_error("po_monogenic of the zero series");
    std::int64_t v = f.val_nonzero().coords[0].num;
    if (v < 0) throw domain_error("generator lies outside the ring A");
    int s = eps(f);
    MonoDescriptor normal =
        (v % 2 == 0 && s > 0) ? MonoDescriptor{+1, 0} : MonoDescriptor{s, v};
    return mono_module(normal);
}

QQModule mono_module(const MonoDescriptor& d) {
    return QQModule::from_generators(1, kB1, {mono_series(d)});
}

PSQuadClass classify(const QQModule& q) {
    check_ps_ring(q);
    if (!is_quadratic(q)) throw domain_error("classify needs a quadratic module");

    // scan far enough to see every layer and All threshold
    std::int64_t bound = 2;
    auto widen = [&](const Cut& c) {
        for (const Dyadic& t : c.prefix) bound = std::max(bound, std::abs(t.num));
    };
    widen(q.theta().all_cut());
    for (const auto& [par, pn] : q.theta().layers()) {
        (void)par;
        widen(pn.first);
        widen(pn.second);
    }
    bound += 4;

    std::int64_t n_all = -1, m_odd = -1;
    int sign = 0;
    for (std::int64_t k = 0; k <= bound; ++k) {
        RMod v = mg_of(q, GroupElem{k});
        if (v == RMod::All && n_all < 0) n_all = k;
        if (k % 2 == 1 && (v == RMod::Pos || v == RMod::Neg) && m_odd < 0) {
            m_odd = k;
            sign = v == RMod::Pos ? +1 : -1;
        }
    }

    PSQuadClass cls{};
    if (n_all == 0) {
        cls = {'b', 0, 0, 0};
    } else if (n_all < 0) {
        cls = m_odd < 0 ? PSQuadClass{'a', 0, 0, 0}
                        : PSQuadClass{'c', m_odd, 0, sign};
    } else {
        cls = m_odd < 0 ? PSQuadClass{'d', n_all, 0, 0}
                        : PSQuadClass{'e', n_all, m_odd, sign};
    }

    // the residue table of the determined row must match everywhere scanned;
    // anything else is not a valid quadratic-module family
    for (std::int64_t k = 0; k <= bound; ++k) {
        RMod v = mg_of(q, GroupElem{k});
        RMod expect;
        switch (cls.case_tag) {
            case 'a': expect = k % 2 == 0 ? RMod::Pos : RMod::Zero; break;
            case 'b': expect = RMod::All; break;
            case 'c':
                expect = k % 2 == 0 ? RMod::Pos
                         : k >= cls.n ? rgenerated(cls.sign)
                                      : RMod::Zero;
                break;
            case 'd':
                expect = k >= cls.n          ? RMod::All
                         : k % 2 == 0        ? RMod::Pos
                                             : RMod::Zero;
                break;
            default:
                expect = k >= cls.n   ? RMod::All
                         : k % 2 == 0 ? RMod::Pos
                         : k >= cls.m ? rgenerated(cls.sign)
                                      : RMod::Zero;
                break;
        }
        if (v != expect)
            throw domain_error("residue family matches no classification row");
    }
    return cls;
}

std::vector<Series> two_generator_presentation(const PSQuadClass& cls) {
    auto mono = [](int s, std::int64_t k) {
        return Series::monomial(1, s, GroupElem{k});
    };
    switch (cls.case_tag) {
        case 'a': return {mono(+1, 0)};
        case 'b': return {mono(-1, 0)};
        case 'c':
            if (cls.n <= 0 || cls.n % 2 == 0 || cls.sign == 0)
                throw domain_error("case c needs a positive odd n and a sign");
            return {mono(cls.sign, cls.n)};
        case 'd':
            if (cls.n <= 0) throw domain_error("case d needs a positive n");
            if (cls.n % 2 == 0) return {mono(-1, cls.n)};
            return {mono(+1, cls.n), mono(-1, cls.n)};
        case 'e':
            if (cls.m <= 0 || cls.m % 2 == 0 || cls.m >= cls.n ||
                cls.sign == 0)
                throw domain_error(
                    "case e needs odd 0 < m < n and a sign");
            if (cls.n % 2 == 0) return {mono(cls.sign, cls.m), mono(-1, cls.n)};
            return {mono(cls.sign, cls.m), mono(-cls.sign, cls.n)};
        default: throw domain_error("unknown classification tag");
    }
}

QQModule class_module(const PSQuadClass& cls) {
    return QQModule::from_generators(1, kB1,
                                     two_generator_presentation(cls));
}

LCRTriple lcr_decompose(const QQModule& q) {
    PSQuadClass cls = classify(q);
    const MonoDescriptor po1{+1, 0};
    switch (cls.case_tag) {
        case 'a': return {po1, po1, po1};
        case 'b': return {{+1, 1}, {-1, 0}, {-1, 1}};
        case 'c':
            if (cls.sign > 0) return {{+1, cls.n}, po1, po1};
            return {po1, po1, {-1, cls.n}};
        case 'd':
            if (cls.n % 2 == 0)
                return {{+1, cls.n + 1}, {-1, cls.n}, {-1, cls.n + 1}};
            return {{+1, cls.n}, {-1, cls.n + 1}, {-1, cls.n}};
        default:  // case e
            if (cls.n % 2 == 0) {
                if (cls.sign > 0)
                    return {{+1, cls.m}, {-1, cls.n}, {-1, cls.n + 1}};
                return {{+1, cls.n + 1}, {-1, cls.n}, {-1, cls.m}};
            }
            if (cls.sign > 0)
                return {{+1, cls.m}, {-1, cls.n + 1}, {-1, cls.n}};
            return {{+1, cls.n}, {-1, cls.n + 1}, {-1, cls.m}};
    }
}

}  // namespace qqm
