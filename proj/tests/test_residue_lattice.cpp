#include <doctest.h>

#include "qqm/residue.hpp"

using namespace qqm;

namespace {
constexpr RMod kAll[] = {RMod::Zero, RMod::Pos, RMod::Neg, RMod::All};
}

TEST_CASE("join, meet and order basics") {
    CHECK(rsum(RMod::Pos, RMod::Neg) == RMod::All);
    CHECK(rmeet(RMod::Pos, RMod::Neg) == RMod::Zero);
    for (RMod m : kAll) {
        CHECK(rsum(RMod::Zero, m) == m);
        CHECK(rmeet(RMod::All, m) == m);
        CHECK(rleq(RMod::Zero, m));
        CHECK(rleq(m, RMod::All));
    }
    CHECK_FALSE(rleq(RMod::Pos, RMod::Neg));
    CHECK_FALSE(rleq(RMod::Neg, RMod::Pos));
}

TEST_CASE("lattice laws, exhaustively over all triples") {
    for (RMod a : kAll)
        for (RMod b : kAll) {
            CHECK(rsum(a, b) == rsum(b, a));
            CHECK(rmeet(a, b) == rmeet(b, a));
            CHECK(rsum(a, rmeet(a, b)) == a);   // absorption
            CHECK(rmeet(a, rsum(a, b)) == a);
            CHECK(rsum(a, a) == a);
            for (RMod c : kAll) {
                CHECK(rsum(a, rsum(b, c)) == rsum(rsum(a, b), c));
                CHECK(rmeet(a, rmeet(b, c)) == rmeet(rmeet(a, b), c));
            }
        }
}

TEST_CASE("membership and generation") {
    CHECK_FALSE(rcontains(RMod::Pos, -1));
    CHECK(rcontains(RMod::Pos, +1));
    CHECK(rcontains(RMod::All, -1));
    CHECK(rcontains(RMod::All, +1));
    for (RMod m : kAll) CHECK(rcontains(m, 0));  // 0 is in every module
    CHECK(rgenerated(-1) == RMod::Neg);
    CHECK(rgenerated(+1) == RMod::Pos);
    CHECK_THROWS_AS(rgenerated(0), domain_error);
}

TEST_CASE("sum floods exactly when opposite signs meet") {
    for (RMod a : kAll)
        for (RMod b : kAll) {
            bool opposite = false;
            for (int s : {+1, -1})
                if (rcontains(a, s) && rcontains(b, -s)) opposite = true;
            // the sum is everything iff an operand already was, or opposite
            // signs meet across the two operands
            CHECK((rsum(a, b) == RMod::All) ==
                  (a == RMod::All || b == RMod::All || opposite));
        }
}

TEST_CASE("sign products land in the product module") {
    for (RMod a : kAll)
        for (RMod b : kAll)
            for (int sa : {+1, -1})
                for (int sb : {+1, -1})
                    if (rcontains(a, sa) && rcontains(b, sb))
                        CHECK(rcontains(rprod(a, b), sa * sb));
    CHECK(rprod(RMod::Pos, RMod::Neg) == RMod::Neg);
    CHECK(rprod(RMod::Neg, RMod::Neg) == RMod::Pos);
    CHECK(rprod(RMod::Zero, RMod::All) == RMod::Zero);
    CHECK(rprod(RMod::All, RMod::Neg) == RMod::All);
}

TEST_CASE("predicates") {
    CHECK(ris_proper(RMod::Pos));
    CHECK_FALSE(ris_proper(RMod::All));
    CHECK(ris_quadratic(RMod::Pos));
    CHECK(ris_quadratic(RMod::All));
    CHECK_FALSE(ris_quadratic(RMod::Neg));
    CHECK_FALSE(ris_quadratic(RMod::Zero));
    CHECK(ris_semiordering(RMod::Pos));
    CHECK(ris_semiordering(RMod::Neg));
    CHECK_FALSE(ris_semiordering(RMod::Zero));
    CHECK_FALSE(ris_semiordering(RMod::All));
    // Neg and its negative cover F, and their meet is {0}: the euclidean
    // dichotomy behind ris_semiordering(Neg)
    CHECK(rsum(RMod::Neg, rneg(RMod::Neg)) == RMod::All);
    CHECK(rmeet(RMod::Neg, rneg(RMod::Neg)) == RMod::Zero);
}

TEST_CASE("JSON names round-trip") {
    for (RMod m : kAll) CHECK(rmod_from_name(rname(m)) == m);
    CHECK_THROWS_AS(rmod_from_name("bogus"), domain_error);
}
