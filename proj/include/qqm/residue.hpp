// The lattice of quasi-quadratic modules of the residue field F.
//
// For a euclidean F (char != 2) there are exactly four: {0}, the squares,
// minus the squares, and F itself.  Encoded as a two-bit set {has +, has -},
// which makes join/meet plain bit operations and the lattice distributive.
// In the char-2 model (perfect F) only Zero and All are inhabited.

#pragma once

#include <string>

#include "qqm/errors.hpp"

namespace qqm {

enum class RMod : unsigned {
    Zero = 0b00,  // {0}
    Pos = 0b01,   // F^2
    Neg = 0b10,   // -F^2
    All = 0b11,   // F
};

inline RMod rsum(RMod a, RMod b) {
    return static_cast<RMod>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
inline RMod rmeet(RMod a, RMod b) {
    return static_cast<RMod>(static_cast<unsigned>(a) & static_cast<unsigned>(b));
}
inline bool rleq(RMod a, RMod b) { return rsum(a, b) == b; }

// Sign of a nonzero field element: +1 or -1.  The euclidean abstraction
// identifies the square class of a nonzero element with its sign.
inline RMod rgenerated(int sign) {
    if (sign > 0) return RMod::Pos;
    if (sign < 0) return RMod::Neg;
    throw domain_error("rgenerated: zero has no sign");
}

// Does M contain a nonzero element of the given sign (or zero, sign == 0)?
inline bool rcontains(RMod m, int sign) {
    if (sign == 0) return true;
    return rleq(rgenerated(sign), m);
}

// The set of products {ab : a in M1 \ 0, b in M2 \ 0} together with 0,
// as a residue module.  Used by the preordering criteria.
inline RMod rprod(RMod a, RMod b) {
    unsigned r = 0;
    for (int sa : {+1, -1})
        for (int sb : {+1, -1})
            if (rcontains(a, sa) && rcontains(b, sb))
                r |= static_cast<unsigned>(rgenerated(sa * sb));
    return static_cast<RMod>(r);
}

inline RMod rneg(RMod a) {
    unsigned v = static_cast<unsigned>(a);
    return static_cast<RMod>(((v & 1u) << 1) | ((v >> 1) & 1u));
}

inline bool ris_proper(RMod m) { return m != RMod::All; }
inline bool ris_quadratic(RMod m) { return rleq(RMod::Pos, m); }

// Semiordering on F: M union -M = F with prime support.  On the euclidean
// lattice exactly Pos and Neg qualify (All fails properness of the support
// only in the sense that supp = F; the defining criterion asks M cup -M = F
// and supp prime, which holds exactly for the two sign cones).
inline bool ris_semiordering(RMod m) { return m == RMod::Pos || m == RMod::Neg; }

inline std::string rname(RMod m) {
    switch (m) {
        case RMod::Zero: return "zero";
        case RMod::Pos: return "pos";
        case RMod::Neg: return "neg";
        case RMod::All: return "all";
    }
    throw domain_error("rname: bad tag");
}

inline RMod rmod_from_name(const std::string& s) {
    if (s == "zero") return RMod::Zero;
    if (s == "pos") return RMod::Pos;
    if (s == "neg") return RMod::Neg;
    if (s == "all") return RMod::All;
    throw domain_error("unknown residue module name: " + s);
}

}  // namespace qqm
