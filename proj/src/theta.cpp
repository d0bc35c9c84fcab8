#include "qqm/theta.hpp"

namespace qqm {

namespace {

std::vector<int> head_parity_of(const std::vector<int>& parity, std::size_t j) {
    return {parity.begin(), parity.begin() + j};
}

}  // namespace

Cut flood_cut(Cut region, const std::vector<int>& head_parity) {
    region = normalize_integral(region);
    if (head_parity.size() != region.dim)
        throw dimension_mismatch("flood_cut: parity length is not the head dimension");
    if (region.is_empty_set()) return region;
    // First prefix coordinate with the wrong parity: the least matching
    // elements agree with the prefix up to there and exceed it at that slot,
    // with every later coordinate free.
    for (std::size_t i = 0; i < region.prefix.size(); ++i) {
        if (region.prefix[i].parity() != head_parity[i]) {
            std::vector<Dyadic> p(region.prefix.begin(),
                                  region.prefix.begin() + i + 1);
            p[i] = p[i] + Dyadic(1);
            return Cut(region.dim, std::move(p), true);
        }
    }
    if (region.inclusive) return region;
    // Exclusive cut whose prefix already matches: the least matching prefixes
    // sit two steps up in the last constrained slot.
    std::vector<Dyadic> p = region.prefix;
    p.back() = p.back() + Dyadic(2);
    return Cut(region.dim, std::move(p), true);
}

ThetaFamily::ThetaFamily(std::size_t n, ConvexSubgroup H)
    : n_(n), H_(H), all_(Cut::empty(H.j)) {
    if (H.j > n)
        throw dimension_mismatch("convex subgroup index exceeds dimension");
}

ThetaFamily ThetaFamily::whole(std::size_t n, ConvexSubgroup H) {
    ThetaFamily fam(n, H);
    fam.all_ = Cut::full(H.j);
    return fam;
}

ThetaFamily ThetaFamily::from_layers(std::size_t n, ConvexSubgroup H,
                                     const std::vector<ThetaPatch>& layers,
                                     Cut all) {
    ThetaFamily fam(n, H);
    const std::size_t j = H.j;
    if (all.dim != j)
        throw dimension_mismatch("frontier cut of wrong head dimension");
    Cut acc = normalize_integral(all);

    LayerMap raw;
    for (const auto& patch : layers) {
        if (patch.parity.size() != n)
            throw dimension_mismatch("layer parity of wrong dimension");
        if (patch.head_cut.dim != j)
            throw dimension_mismatch("layer cut of wrong head dimension");
        if (patch.value != RMod::Pos && patch.value != RMod::Neg)
            throw domain_error("layer value must be pos or neg");
        Cut c = normalize_integral(patch.head_cut);
        if (c.is_empty_set()) continue;
        auto it = raw.try_emplace(patch.parity, Cut::empty(j), Cut::empty(j))
                      .first;
        Cut& slot =
            patch.value == RMod::Pos ? it->second.first : it->second.second;
        slot = slot.is_empty_set() ? c : cut_union(slot, c);
    }

    // Saturate: opposite layers of equal parity make the value All on their
    // overlap, and All spreads along the flood of that region.
    for (const auto& [par, pn] : raw) {
        if (pn.first.is_empty_set() || pn.second.is_empty_set()) continue;
        Cut overlap = cut_intersect(pn.first, pn.second);
        if (overlap.is_empty_set()) continue;
        acc = cut_union(acc, flood_cut(overlap, head_parity_of(par, j)));
    }

    // Canonicalize each layer: only the heads matching the layer's parity are
    // observable, so replace a cut by the flood of (cut union All-region) —
    // two cuts with the same observable part get the same form — and drop
    // layers that add nothing beyond the All-region.
    fam.all_ = acc;
    for (const auto& [par, pn] : raw) {
        auto hp = head_parity_of(par, j);
        Cut base = flood_cut(acc, hp);
        auto canon = [&](const Cut& c) {
            if (c.is_empty_set()) return c;
            Cut e = flood_cut(cut_union(c, acc), hp);
            return cut_equal(e, base) ? Cut::empty(j) : e;
        };
        Cut pos = canon(pn.first);
        Cut neg = canon(pn.second);
        if (pos.is_empty_set() && neg.is_empty_set()) continue;
        fam.layers_.emplace(par, std::make_pair(pos, neg));
    }
    return fam;
}

ThetaFamily ThetaFamily::from_patches(
    std::size_t n, ConvexSubgroup H,
    const std::vector<std::pair<GroupElem, RMod>>& patches, Cut frontier) {
    const std::size_t j = H.j;
    if (frontier.dim != j)
        throw dimension_mismatch("frontier cut of wrong head dimension");
    frontier = normalize_integral(frontier);

    std::vector<ThetaPatch> layers;
    for (const auto& [base, value] : patches) {
        if (base.dim() != n)
            throw dimension_mismatch("patch base of wrong dimension");
        if (!in_value_monoid(base, H))
            throw domain_error("patch base outside val(A)");
        if (value == RMod::Zero) continue;
        Cut ray = Cut::closed_ray(head_of(base, H));
        if (value == RMod::All) {
            if (!cut_subset(ray, frontier))
                throw domain_error(
                    "invalid family: an All patch reaches outside the frontier");
            continue;
        }
        layers.push_back({square_class(base).parity, ray, value});
    }

    // The declared assignment may not force All anywhere the frontier does
    // not cover: opposite layers of equal parity must overlap only where the
    // induced flood stays inside the frontier.
    std::map<std::vector<int>, std::pair<Cut, Cut>> grouped;
    for (const auto& patch : layers) {
        auto it = grouped.try_emplace(patch.parity, Cut::empty(j),
                                      Cut::empty(j)).first;
        Cut& slot =
            patch.value == RMod::Pos ? it->second.first : it->second.second;
        slot = slot.is_empty_set() ? patch.head_cut
                                   : cut_union(slot, patch.head_cut);
    }
    for (const auto& [par, pn] : grouped) {
        if (pn.first.is_empty_set() || pn.second.is_empty_set()) continue;
        Cut overlap = cut_intersect(pn.first, pn.second);
        if (overlap.is_empty_set()) continue;
        if (!cut_subset(flood_cut(overlap, head_parity_of(par, j)), frontier))
            throw domain_error(
                "invalid family: opposite patches overlap outside the frontier");
    }
    return from_layers(n, H, layers, frontier);
}

RMod ThetaFamily::value(const GroupElem& g) const {
    if (g.dim() != n_)
        throw dimension_mismatch("theta value: element of wrong dimension");
    if (!in_value_monoid(g, H_))
        throw domain_error("theta value: element outside val(A)");
    std::vector<Dyadic> head = head_of(g, H_);
    if (all_.member(head)) return RMod::All;
    auto it = layers_.find(square_class(g).parity);
    RMod r = RMod::Zero;
    if (it != layers_.end()) {
        if (!it->second.first.is_empty_set() && it->second.first.member(head))
            r = rsum(r, RMod::Pos);
        if (!it->second.second.is_empty_set() && it->second.second.member(head))
            r = rsum(r, RMod::Neg);
    }
    return r;
}

namespace {

void check_same_context(const ThetaFamily& a, const ThetaFamily& b) {
    if (a.dim() != b.dim() || a.subgroup().j != b.subgroup().j)
        throw dimension_mismatch("theta families over different rings");
}

}  // namespace

ThetaFamily theta_sum(const ThetaFamily& a, const ThetaFamily& b) {
    check_same_context(a, b);
    std::vector<ThetaPatch> layers;
    for (const ThetaFamily* fam : {&a, &b})
        for (const auto& [par, pn] : fam->layers()) {
            if (!pn.first.is_empty_set())
                layers.push_back({par, pn.first, RMod::Pos});
            if (!pn.second.is_empty_set())
                layers.push_back({par, pn.second, RMod::Neg});
        }
    return ThetaFamily::from_layers(a.dim(), a.subgroup(), layers,
                                    cut_union(a.all_cut(), b.all_cut()));
}

ThetaFamily theta_intersect(const ThetaFamily& a, const ThetaFamily& b) {
    check_same_context(a, b);
    const std::size_t j = a.subgroup().j;
    // region where the value is >= Pos (resp. Neg) for a given parity: the
    // stored layer cut if any (it already contains the All-region), else the
    // All-region alone.
    auto at_least = [&](const ThetaFamily& fam, const std::vector<int>& par,
                        bool pos) -> Cut {
        auto it = fam.layers().find(par);
        if (it == fam.layers().end()) return fam.all_cut();
        const Cut& c = pos ? it->second.first : it->second.second;
        return c.is_empty_set() ? fam.all_cut() : c;
    };
    std::vector<ThetaPatch> layers;
    for (const ThetaFamily* fam : {&a, &b})
        for (const auto& [par, pn] : fam->layers()) {
            (void)pn;
            Cut pos = cut_intersect(at_least(a, par, true),
                                    at_least(b, par, true));
            Cut neg = cut_intersect(at_least(a, par, false),
                                    at_least(b, par, false));
            if (!pos.is_empty_set()) layers.push_back({par, pos, RMod::Pos});
            if (!neg.is_empty_set()) layers.push_back({par, neg, RMod::Neg});
        }
    (void)j;
    return ThetaFamily::from_layers(a.dim(), a.subgroup(), layers,
                                    cut_intersect(a.all_cut(), b.all_cut()));
}

bool theta_equal(const ThetaFamily& a, const ThetaFamily& b) {
    check_same_context(a, b);
    if (!cut_equal(a.all_cut(), b.all_cut())) return false;
    auto covers = [](const ThetaFamily& x, const ThetaFamily& y) {
        for (const auto& [par, pn] : x.layers()) {
            auto it = y.layers().find(par);
            Cut ypos = it == y.layers().end() ? Cut::empty(pn.first.dim)
                                              : it->second.first;
            Cut yneg = it == y.layers().end() ? Cut::empty(pn.second.dim)
                                              : it->second.second;
            auto same = [](const Cut& u, const Cut& v) {
                if (u.is_empty_set() || v.is_empty_set())
                    return u.is_empty_set() == v.is_empty_set();
                return cut_equal(u, v);
            };
            if (!same(pn.first, ypos) || !same(pn.second, yneg)) return false;
        }
        return true;
    };
    return covers(a, b) && covers(b, a);
}

}  // namespace qqm
