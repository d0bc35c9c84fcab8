#include "qqm/module.hpp"

#include <algorithm>
#include <cstdlib>

namespace qqm {

namespace {

void check_element(const QQModule& m, const Series& x) {
    if (x.dim() != m.dim())
        throw dimension_mismatch("element of wrong dimension");
    if (x.char2())
        throw domain_error("char-2 series need the char-2 module calculus");
}

// The ring-membership gate: queries are only defined on elements of A.
const GroupElem& gated_val(const Series& x, const ConvexSubgroup& H) {
    const GroupElem& v = x.val_nonzero();
    if (!in_value_monoid(v, H))
        throw domain_error("element lies outside the ring A");
    return v;
}

std::vector<ThetaPatch> generator_layers(const std::vector<Series>& gens,
                                         const ConvexSubgroup& H) {
    std::vector<ThetaPatch> layers;
    layers.reserve(gens.size());
    for (const Series& f : gens) {
        const GroupElem& v = f.val_nonzero();
        layers.push_back({square_class(v).parity,
                          Cut::closed_ray(head_of(v, H)),
                          rgenerated(eps(f))});
    }
    return layers;
}

}  // namespace

QQModule QQModule::from_generators(std::size_t n, ConvexSubgroup H,
                                   std::vector<Series> gens) {
    for (const Series& f : gens) {
        if (f.dim() != n)
            throw dimension_mismatch("generator of wrong dimension");
        if (f.char2())
            throw domain_error("char-2 series need the char-2 module calculus");
        if (!ring_membership(f, H))
            throw domain_error("generator lies outside the ring A");
    }
    std::vector<Series> eff;
    if (!gens.empty()) {
        eff.reserve(gens.size() + 1);
        eff.push_back(Series::one(n));
        eff.insert(eff.end(), gens.begin(), gens.end());
    }
    QQModule m(n, H,
               ThetaFamily::from_layers(n, H, generator_layers(eff, H),
                                        Cut::empty(H.j)));
    m.gens_ = std::move(gens);
    m.eff_gens_ = std::move(eff);
    return m;
}

QQModule QQModule::from_family(ThetaFamily fam) {
    std::size_t n = fam.dim();
    ConvexSubgroup H = fam.subgroup();
    return QQModule(n, H, std::move(fam));
}

const std::vector<Series>& QQModule::generators() const {
    if (!gens_)
        throw domain_error("module has no generator presentation");
    return *gens_;
}

const std::vector<Series>& QQModule::effective_generators() const {
    if (!gens_)
        throw domain_error("module has no generator presentation");
    return eff_gens_;
}

bool phi_contains(RMod M, const GroupElem& g, const ConvexSubgroup& H,
                  const Series& x) {
    if (!in_value_monoid(g, H))
        throw domain_error("phi base point outside val(A)");
    if (x.known_zero()) return true;
    const GroupElem& v = gated_val(x, H);
    GroupElem::check_dims(v, g);
    if (!(square_class(v) == square_class(g))) return false;
    if (!(mixed_class(v, H) == mixed_class(g, H)) &&
        lex_cmp(v, g) != Ordering::greater)
        return false;
    return rcontains(M, eps(x));
}

RMod mg_of(const QQModule& m, const GroupElem& g) { return m.theta().value(g); }

bool contains(const QQModule& m, const Series& x) {
    check_element(m, x);
    if (x.known_zero()) return true;
    const GroupElem& v = gated_val(x, m.subgroup());
    return rcontains(m.theta().value(v), eps(x));
}

bool supp_contains(const QQModule& m, const Series& x) {
    check_element(m, x);
    if (x.known_zero()) return true;
    const GroupElem& v = gated_val(x, m.subgroup());
    return m.theta().value(v) == RMod::All;
}

namespace {

void check_same_ring(const QQModule& a, const QQModule& b) {
    if (a.dim() != b.dim() || a.subgroup().j != b.subgroup().j)
        throw dimension_mismatch("modules over different rings");
}

}  // namespace

QQModule sum(const QQModule& a, const QQModule& b) {
    check_same_ring(a, b);
    if (a.has_generators() && b.has_generators()) {
        std::vector<Series> gens = a.generators();
        gens.insert(gens.end(), b.generators().begin(), b.generators().end());
        return QQModule::from_generators(a.dim(), a.subgroup(),
                                         std::move(gens));
    }
    return QQModule::from_family(theta_sum(a.theta(), b.theta()));
}

QQModule intersect(const QQModule& a, const QQModule& b) {
    check_same_ring(a, b);
    return QQModule::from_family(theta_intersect(a.theta(), b.theta()));
}

bool is_whole_ring(const QQModule& m) {
    return m.theta().value(GroupElem::zero(m.dim())) == RMod::All;
}

bool is_quadratic(const QQModule& m) {
    return rleq(RMod::Pos, m.theta().value(GroupElem::zero(m.dim())));
}

namespace {

// Representatives of the 2^n square classes of G (coordinates 0/1).
std::vector<GroupElem> parity_reps(std::size_t n) {
    std::vector<GroupElem> reps;
    reps.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        GroupElem g = GroupElem::zero(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) g.coords[i] = Dyadic(1);
        reps.push_back(std::move(g));
    }
    return reps;
}

std::int64_t threshold_bound(const ThetaFamily& fam) {
    std::int64_t bound = 2;
    auto update = [&](const Cut& c) {
        for (const Dyadic& d : c.prefix)
            bound = std::max(bound, std::abs(d.num));
    };
    update(fam.all_cut());
    for (const auto& [par, pn] : fam.layers()) {
        (void)par;
        update(pn.first);
        update(pn.second);
    }
    return bound;
}

[[noreturn]] void unsupported_scope() {
    throw domain_error(
        "no finite criterion for this ring (supported: A = K for any n, "
        "and A = B with n = 1)");
}

}  // namespace

bool is_preordering(const QQModule& m) {
    const std::size_t n = m.dim(), j = m.subgroup().j;
    if (j == 0) {
        // A = K: multiplicativity is a finite check over square-class pairs.
        if (!is_quadratic(m)) return false;
        auto reps = parity_reps(n);
        for (const GroupElem& g1 : reps)
            for (const GroupElem& g2 : reps) {
                RMod m1 = m.theta().value(g1);
                RMod m2 = m.theta().value(g2);
                RMod m12 = m.theta().value(g1 + g2);
                for (int s1 : {+1, -1})
                    for (int s2 : {+1, -1})
                        if (rcontains(m1, s1) && rcontains(m2, s2) &&
                            !rcontains(m12, s1 * s2))
                            return false;
            }
        return true;
    }
    if (j == n && n == 1) {
        // Every quadratic module of F[[X]] is a preordering.
        return is_quadratic(m);
    }
    unsupported_scope();
}

bool is_quasi_semiordering(const QQModule& m) {
    const std::size_t n = m.dim(), j = m.subgroup().j;
    const ThetaFamily& fam = m.theta();
    if (j == 0) {
        auto reps = parity_reps(n);
        for (const GroupElem& g : reps) {
            RMod v = fam.value(g);
            if (v != RMod::All && !ris_semiordering(v)) return false;
        }
        for (const GroupElem& g1 : reps)
            for (const GroupElem& g2 : reps)
                if (fam.value(g1) != RMod::All && fam.value(g2) != RMod::All &&
                    fam.value(g1 + g2) == RMod::All)
                    return false;
        return true;
    }
    if (j == n && n == 1) {
        const Cut& all = fam.all_cut();
        if (all.is_full_set()) return true;  // no index left to test
        if (!all.is_empty_set()) {
            // closed ray at a: the non-All indices are [0, a); index sums
            // escape into the All-region as soon as 2(a-1) >= a, i.e. a >= 2
            std::int64_t a = all.prefix[0].num;
            if (a >= 2) return false;
            if (a <= 0) return true;
            return ris_semiordering(fam.value(GroupElem{0}));
        }
        // no All anywhere: only the pointwise condition remains, and values
        // are eventually constant per parity beyond every layer threshold
        std::int64_t top = threshold_bound(fam) + 2;
        for (std::int64_t g = 0; g <= top; ++g)
            if (!ris_semiordering(fam.value(GroupElem{g}))) return false;
        return true;
    }
    unsupported_scope();
}

bool IdealDecomposition::contains(const Series& x) const {
    if (x.dim() != n)
        throw dimension_mismatch("element of wrong dimension");
    if (x.known_zero()) return true;
    return head_cut.member(head_of(gated_val(x, H), H));
}

IdealDecomposition ideal_decompose(std::size_t n, ConvexSubgroup H,
                                   const std::vector<Series>& gens) {
    IdealDecomposition d{n, H, Cut::empty(H.j), {}};
    for (const Series& f : gens) {
        if (f.dim() != n)
            throw dimension_mismatch("generator of wrong dimension");
        const GroupElem& v = f.val_nonzero();
        if (!in_value_monoid(v, H))
            throw domain_error("generator lies outside the ring A");
        d.head_cut = cut_union(d.head_cut, Cut::closed_ray(head_of(v, H)));
        d.bases.push_back(mixed_class(v, H));
    }
    return d;
}

namespace {

// A parity-matching element of `region` lying at or below `bound`, which is
// assumed to be a member of flood_cut(region, head_parity).  Mirrors the
// flood_cut case analysis; free coordinates are pushed far down so the result
// stays below the bound whenever their prefixes tie.
std::vector<Dyadic> flood_witness(const Cut& region_,
                                  const std::vector<int>& head_parity,
                                  const std::vector<Dyadic>& bound) {
    Cut region = normalize_integral(region_);
    std::int64_t big = 2;
    for (const Dyadic& d : bound) big = std::max(big, std::abs(d.num));
    for (const Dyadic& d : region.prefix)
        big = std::max(big, std::abs(d.num));
    big += 2;
    auto matches = [&](const std::vector<Dyadic>& h) {
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i].parity() != head_parity[i]) return false;
        return true;
    };
    if (matches(bound) && region.member(bound)) return bound;
    auto finish = [&](std::vector<Dyadic> pref) {
        while (pref.size() < region.dim)
            pref.emplace_back(head_parity[pref.size()] - 2 * big);
        return pref;
    };
    for (std::size_t i = 0; i < region.prefix.size(); ++i) {
        if (region.prefix[i].parity() != head_parity[i]) {
            std::vector<Dyadic> p(region.prefix.begin(),
                                  region.prefix.begin() + i + 1);
            p[i] = p[i] + Dyadic(1);
            return finish(std::move(p));
        }
    }
    if (region.inclusive) return finish(region.prefix);
    std::vector<Dyadic> p = region.prefix;
    p.back() = p.back() + Dyadic(2);
    return finish(std::move(p));
}

void push_scaled_terms(std::vector<CertTerm>& out, std::size_t gen,
                       const Rat& scale, const Series& root) {
    for (const Rat& q : four_squares(scale))
        if (q != 0) out.push_back({gen, root.scaled(q)});
}

}  // namespace

std::vector<CertTerm> certify(const QQModule& m, const Series& x,
                              const GroupElem& window) {
    check_element(m, x);
    if (x.known_zero()) return {};
    if (!contains(m, x)) throw domain_error("certify: not a member");
    const auto& eff = m.effective_generators();  // throws without generators
    const ConvexSubgroup& H = m.subgroup();
    const std::size_t n = m.dim(), j = H.j;
    const GroupElem& v = x.val_nonzero();
    const int s = eps(x);
    const std::vector<Dyadic> vhead = head_of(v, H);
    const SquareClass vpar = square_class(v);

    // Single-generator route: some generator with x's sign is active at v,
    // so x is that generator times a square (up to a positive square scale).
    for (std::size_t i = 0; i < eff.size(); ++i) {
        const Series& f = eff[i];
        if (eps(f) != s) continue;
        const GroupElem& vf = f.val_nonzero();
        if (!(square_class(vf) == vpar)) continue;
        if (!Cut::closed_ray(head_of(vf, H)).member(vhead)) continue;
        auto w = square_witness(f, x, window);
        if (!w) continue;
        std::vector<CertTerm> out;
        push_scaled_terms(out, i, w->square_scale, w->root);
        return out;
    }

    // Flood route: v lies in the All-region, produced by a pair of opposite
    // generators of equal parity.  Pick a valuation c of that parity strictly
    // below val x with head in the pair's overlap; then x splits as
    //   x = f_pos * u^2 + f_neg * (t^{(c - val f_neg)/2})^2
    // with the second summand supplying a term of valuation c that the first
    // absorbs via a square witness.
    for (std::size_t ip = 0; ip < eff.size(); ++ip) {
        if (eps(eff[ip]) != +1) continue;
        const GroupElem& vp = eff[ip].val_nonzero();
        for (std::size_t in = 0; in < eff.size(); ++in) {
            if (eps(eff[in]) != -1) continue;
            const GroupElem& vn = eff[in].val_nonzero();
            if (!(square_class(vp) == square_class(vn))) continue;
            Cut overlap = cut_intersect(Cut::closed_ray(head_of(vp, H)),
                                        Cut::closed_ray(head_of(vn, H)));
            const std::vector<int> pi = square_class(vp).parity;
            std::vector<int> pi_head(pi.begin(), pi.begin() + j);
            if (!flood_cut(overlap, pi_head).member(vhead)) continue;
            std::vector<Dyadic> h = flood_witness(overlap, pi_head, vhead);
            GroupElem c(h);
            if (j < n) {
                // extend by a pi-parity tail; when the heads tie, push the
                // first tail slot far enough down to fall below val x
                std::int64_t drop = std::abs(v.coords[j].num) + 2;
                c.coords.push_back(Dyadic(pi[j] - 2 * drop));
                for (std::size_t i = j + 1; i < n; ++i)
                    c.coords.push_back(Dyadic(pi[i]));
            } else if (!lex_less(c, v)) {
                continue;  // cannot go strictly below val x in this class
            }
            Series mult_n = Series::monomial(n, 1, (c - vn).half());
            Series y2 = eff[in] * mult_n * mult_n;
            Series y1 = x - y2;
            auto w = square_witness(eff[ip], y1, window);
            if (!w) continue;
            std::vector<CertTerm> out;
            out.push_back({in, mult_n});
            push_scaled_terms(out, ip, w->square_scale, w->root);
            return out;
        }
    }
    throw domain_error("certify: no witness found");
}

Series apply_certificate(const QQModule& m,
                         const std::vector<CertTerm>& cert) {
    const auto& eff = m.effective_generators();
    Series acc = Series::zero(m.dim());
    for (const CertTerm& t : cert)
        acc = acc + eff.at(t.gen) * t.mult * t.mult;
    return acc;
}

}  // namespace qqm
