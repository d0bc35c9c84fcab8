#include <doctest.h>

#include <vector>

#include "qqm/theta.hpp"
#include "test_util.hpp"

using namespace qqm;
using namespace qqm::testing;

namespace {

std::vector<int> rand_parity(std::size_t n) {
    std::vector<int> p(n);
    for (auto& b : p) b = static_cast<int>(rand_int(0, 1));
    return p;
}

std::vector<Dyadic> rand_head(std::size_t j, std::int64_t lo = -5,
                              std::int64_t hi = 5) {
    std::vector<Dyadic> h;
    h.reserve(j);
    for (std::size_t i = 0; i < j; ++i) h.emplace_back(rand_int(lo, hi));
    return h;
}

Cut rand_integral_cut(std::size_t j) {
    switch (rand_int(0, 3)) {
        case 0: return Cut::empty(j);
        case 1: return Cut::full(j);
        case 2: return Cut::closed_ray(rand_head(j));
        default: {
            auto k = static_cast<std::size_t>(rand_int(0, std::int64_t(j)));
            return Cut(j, rand_head(k), rand_int(0, 1) == 0);
        }
    }
}

// Brute-force the definition of the flood: h lies in the upward closure of
// the parity-matching part of `region` iff some h' <= h in a box around the
// data matches the parity and the region.  The box radius covers every
// witness the closed form can need (prefix coordinates shifted by at most
// two, free coordinates pushed down by roughly twice the data magnitude).
bool flood_member_oracle(const Cut& region, const std::vector<int>& hp,
                         const std::vector<Dyadic>& h, std::int64_t radius) {
    std::size_t j = region.dim;
    if (j == 0)
        return region.member({}) || (region.inclusive && region.prefix.empty());
    std::vector<std::int64_t> idx(j, -radius);
    for (;;) {
        std::vector<Dyadic> cand;
        cand.reserve(j);
        for (auto v : idx) cand.emplace_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i)
            if (cand[i].parity() != hp[i]) ok = false;
        if (ok && region.member(cand)) {
            // compare cand <= h lexicographically
            bool leq = true;
            for (std::size_t i = 0; i < j; ++i) {
                auto c = cand[i] <=> h[i];
                if (c < 0) break;
                if (c > 0) {
                    leq = false;
                    break;
                }
            }
            if (leq) return true;
        }
        std::size_t i = j;
        while (i > 0 && idx[i - 1] == radius) idx[--i] = -radius;
        if (i == 0) return false;
        ++idx[i - 1];
    }
}

std::int64_t data_radius(const Cut& region, const std::vector<Dyadic>& h) {
    std::int64_t m = 2;
    for (const auto& d : region.prefix) m = std::max(m, std::abs(d.num));
    for (const auto& d : h) m = std::max(m, std::abs(d.num));
    return 3 * m + 8;
}

}  // namespace

TEST_CASE("flood of a ray snaps to the first parity mismatch") {
    std::vector<int> even{0}, odd{1};
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(3)}), even),
                    Cut::closed_ray({Dyadic(4)})));
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(4)}), even),
                    Cut::closed_ray({Dyadic(4)})));
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(3)}), odd),
                    Cut::closed_ray({Dyadic(3)})));
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(4)}), odd),
                    Cut::closed_ray({Dyadic(5)})));
    // exclusive integral cut {x > 3} = {x >= 4}
    CHECK(cut_equal(flood_cut(Cut(1, {Dyadic(3)}, false), even),
                    Cut::closed_ray({Dyadic(4)})));

    std::vector<int> ee{0, 0};
    // mismatch already in the first slot: everything from 6 on, any second
    // coordinate
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(5), Dyadic(3)}), ee),
                    Cut(2, {Dyadic(6)}, true)));
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(4), Dyadic(3)}), ee),
                    Cut::closed_ray({Dyadic(4), Dyadic(4)})));
    CHECK(cut_equal(flood_cut(Cut::closed_ray({Dyadic(4), Dyadic(4)}), ee),
                    Cut::closed_ray({Dyadic(4), Dyadic(4)})));

    CHECK(flood_cut(Cut::empty(2), ee).is_empty_set());
    CHECK(flood_cut(Cut::full(2), ee).is_full_set());
    CHECK_THROWS_AS(flood_cut(Cut::full(2), even), dimension_mismatch);
}

TEST_CASE("flood agrees with the brute-force closure on random cuts") {
    for (int i = 0; i < 120; ++i) {
        auto j = static_cast<std::size_t>(rand_int(1, 2));
        Cut region = rand_integral_cut(j);
        auto hp = rand_parity(j);
        Cut flooded = flood_cut(region, hp);
        for (int k = 0; k < 12; ++k) {
            auto h = rand_head(j, -6, 6);
            std::int64_t r = data_radius(region, h);
            bool expected = flood_member_oracle(region, hp, h, r);
            CHECK(flooded.member(h) == expected);
            // the box is already stable: doubling the radius changes nothing
            if (k == 0)
                CHECK(flood_member_oracle(region, hp, h, 2 * r) == expected);
        }
    }
}

TEST_CASE("layer cuts with the same observable part are identified") {
    ConvexSubgroup H(1);
    // with even parity, heads 3 and 4 start the same matching set {4, 6, ...}
    ThetaFamily a = ThetaFamily::from_layers(
        1, H, {{{0}, Cut::closed_ray({Dyadic(3)}), RMod::Pos}}, Cut::empty(1));
    ThetaFamily b = ThetaFamily::from_layers(
        1, H, {{{0}, Cut::closed_ray({Dyadic(4)}), RMod::Pos}}, Cut::empty(1));
    CHECK(theta_equal(a, b));
    CHECK(a.value(GroupElem{4}) == RMod::Pos);
    CHECK(a.value(GroupElem{2}) == RMod::Zero);
    CHECK(a.value(GroupElem{3}) == RMod::Zero);  // parity blocks the layer
}

TEST_CASE("opposite layers of one parity flood to All") {
    ConvexSubgroup H(1);
    ThetaFamily fam = ThetaFamily::from_layers(
        1, H,
        {{{1}, Cut::closed_ray({Dyadic(1)}), RMod::Pos},
         {{1}, Cut::closed_ray({Dyadic(3)}), RMod::Neg}},
        Cut::empty(1));
    CHECK(fam.value(GroupElem{1}) == RMod::Pos);
    CHECK(fam.value(GroupElem{2}) == RMod::Zero);
    CHECK(fam.value(GroupElem{3}) == RMod::All);
    CHECK(fam.value(GroupElem{4}) == RMod::All);  // All ignores parity
    CHECK(cut_equal(fam.all_cut(), Cut::closed_ray({Dyadic(3)})));
    CHECK_THROWS_AS(fam.value(GroupElem{-1}), domain_error);
}

TEST_CASE("zero and whole families") {
    ConvexSubgroup H(2);
    ThetaFamily zero(2, H);
    CHECK(zero.is_zero_family());
    CHECK(zero.value(GroupElem{0, 0}) == RMod::Zero);
    ThetaFamily whole = ThetaFamily::whole(2, H);
    CHECK(whole.value(GroupElem{0, 0}) == RMod::All);
    CHECK(whole.value(GroupElem{5, -2}) == RMod::All);
    CHECK_FALSE(theta_equal(zero, whole));
    CHECK(theta_equal(theta_sum(zero, whole), whole));
    CHECK(theta_equal(theta_intersect(zero, whole), zero));
}

TEST_CASE("patch construction validates the compatibility axioms") {
    ConvexSubgroup H(1);
    // even -> Pos from the base point 0
    ThetaFamily fam = ThetaFamily::from_patches(
        1, H, {{GroupElem{0}, RMod::Pos}}, Cut::empty(1));
    CHECK(fam.value(GroupElem{0}) == RMod::Pos);
    CHECK(fam.value(GroupElem{2}) == RMod::Pos);
    CHECK(fam.value(GroupElem{1}) == RMod::Zero);

    // opposite even patches force All at 2, which the empty frontier forbids
    CHECK_THROWS_AS(ThetaFamily::from_patches(
                        1, H,
                        {{GroupElem{0}, RMod::Pos}, {GroupElem{2}, RMod::Neg}},
                        Cut::empty(1)),
                    domain_error);
    // with the frontier at 2 the same data is a valid family
    ThetaFamily ok = ThetaFamily::from_patches(
        1, H, {{GroupElem{0}, RMod::Pos}, {GroupElem{2}, RMod::Neg}},
        Cut::closed_ray({Dyadic(2)}));
    CHECK(ok.value(GroupElem{0}) == RMod::Pos);
    CHECK(ok.value(GroupElem{2}) == RMod::All);
    CHECK(ok.value(GroupElem{3}) == RMod::All);

    // an All patch must sit inside the declared frontier
    CHECK_THROWS_AS(
        ThetaFamily::from_patches(1, H, {{GroupElem{1}, RMod::All}},
                                  Cut::closed_ray({Dyadic(4)})),
        domain_error);
    CHECK_THROWS_AS(
        ThetaFamily::from_patches(1, H, {{GroupElem{-1}, RMod::Pos}},
                                  Cut::empty(1)),
        domain_error);

    // Zero patches carry no information
    ThetaFamily z = ThetaFamily::from_patches(
        1, H, {{GroupElem{3}, RMod::Zero}}, Cut::empty(1));
    CHECK(z.is_zero_family());
}

namespace {

ThetaFamily rand_family(std::size_t n, const ConvexSubgroup& H) {
    std::vector<ThetaPatch> layers;
    int count = static_cast<int>(rand_int(0, 3));
    for (int i = 0; i < count; ++i)
        layers.push_back({rand_parity(n), rand_integral_cut(H.j),
                          rand_int(0, 1) ? RMod::Pos : RMod::Neg});
    Cut all = rand_int(0, 2) == 0 ? rand_integral_cut(H.j) : Cut::empty(H.j);
    return ThetaFamily::from_layers(n, H, layers, all);
}

// Monoid points h <= g within a coordinate box, for the existential
// All-flood condition of the sum.
bool sum_floods_at(const ThetaFamily& a, const ThetaFamily& b,
                   const GroupElem& g, std::int64_t radius) {
    std::size_t n = a.dim();
    std::vector<std::int64_t> idx(n, -radius);
    for (;;) {
        GroupElem h = GroupElem::zero(n);
        for (std::size_t i = 0; i < n; ++i) h.coords[i] = Dyadic(idx[i]);
        if (in_value_monoid(h, a.subgroup()) && lex_leq(h, g) &&
            rsum(a.value(h), b.value(h)) == RMod::All)
            return true;
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == radius) idx[--i] = -radius;
        if (i == 0) return false;
        ++idx[i - 1];
    }
}

}  // namespace

TEST_CASE("sum and intersection match the pointwise formulas") {
    for (int trial = 0; trial < 60; ++trial) {
        auto n = static_cast<std::size_t>(rand_int(1, 2));
        ConvexSubgroup H(static_cast<std::size_t>(
            rand_int(0, static_cast<std::int64_t>(n))));
        ThetaFamily a = rand_family(n, H), b = rand_family(n, H);
        ThetaFamily s = theta_sum(a, b);
        ThetaFamily m = theta_intersect(a, b);
        for (int k = 0; k < 10; ++k) {
            GroupElem g = rand_elem(n, -6, 6);
            if (!in_value_monoid(g, H)) continue;
            // intersection is the pointwise meet
            CHECK(m.value(g) == rmeet(a.value(g), b.value(g)));
            // sum is the pointwise join, flooded to All wherever some lower
            // monoid point already joins to All
            RMod expect = sum_floods_at(a, b, g, 14)
                              ? RMod::All
                              : rsum(a.value(g), b.value(g));
            CHECK(s.value(g) == expect);
        }
    }
}

TEST_CASE("lattice laws for families") {
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<std::size_t>(rand_int(1, 2));
        ConvexSubgroup H(static_cast<std::size_t>(
            rand_int(0, static_cast<std::int64_t>(n))));
        ThetaFamily a = rand_family(n, H), b = rand_family(n, H),
                    c = rand_family(n, H);
        CHECK(theta_equal(theta_sum(a, b), theta_sum(b, a)));
        CHECK(theta_equal(theta_intersect(a, b), theta_intersect(b, a)));
        CHECK(theta_equal(theta_sum(a, theta_sum(b, c)),
                          theta_sum(theta_sum(a, b), c)));
        CHECK(theta_equal(theta_intersect(a, theta_intersect(b, c)),
                          theta_intersect(theta_intersect(a, b), c)));
        CHECK(theta_equal(theta_sum(a, a), a));
        CHECK(theta_equal(theta_intersect(a, a), a));
        CHECK(theta_equal(theta_sum(a, ThetaFamily(n, H)), a));
        CHECK(theta_equal(theta_intersect(a, ThetaFamily::whole(n, H)), a));
    }
}
