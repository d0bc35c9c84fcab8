// Exact dyadic rationals num / 2^k.
//
// Exponent coordinates of series live here: plain integers in the
// characteristic-0 model, and elements of Z[1/2] in the characteristic-2
// model (square roots halve exponents, nothing else ever divides).

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qqm/errors.hpp"

namespace qqm {

struct Dyadic {
    // Value is num / 2^k, normalized so that k == 0 when num == 0 and
    // num is odd whenever k > 0.
    std::int64_t num = 0;
    int k = 0;

    Dyadic() = default;
    Dyadic(std::int64_t n) : num(n), k(0) {}  // NOLINT: implicit by design
    Dyadic(std::int64_t n, int halvings) : num(n), k(halvings) { normalize(); }

    void normalize() {
        if (num == 0) {
            k = 0;
            return;
        }
        while (k > 0 && num % 2 == 0) {
            num /= 2;
            --k;
        }
        if (k < 0) {  // negative k means multiply out
            num <<= -k;
            k = 0;
        }
    }

    bool is_integer() const noexcept { return k == 0; }

    // Parity is only meaningful for integers (square classes live in Z^n).
    int parity() const {
        if (!is_integer())
            throw domain_error("parity of a non-integer dyadic");
        return static_cast<int>(((num % 2) + 2) % 2);
    }

    Dyadic half() const { return Dyadic(num, k + 1); }
    Dyadic twice() const { return Dyadic(num * 2, k); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        int kk = a.k > b.k ? a.k : b.k;
        return Dyadic((a.num << (kk - a.k)) + (b.num << (kk - b.k)), kk);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        int kk = a.k > b.k ? a.k : b.k;
        return Dyadic((a.num << (kk - a.k)) - (b.num << (kk - b.k)), kk);
    }
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num, a.k); }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        int kk = a.k > b.k ? a.k : b.k;
        auto lhs = static_cast<__int128>(a.num) << (kk - a.k);
        auto rhs = static_cast<__int128>(b.num) << (kk - b.k);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.k == b.k;
    }

    std::string str() const {
        if (k == 0) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(std::int64_t(1) << k);
    }
};

}  // namespace qqm
