#ifndef INTAMP_DYADIC_HPP
#define INTAMP_DYADIC_HPP

#include "intamp/rational.hpp"

namespace intamp {

/**
 * Dyadic rational m * 2^e, normalized so that m is odd or zero.
 * Addition and multiplication are exact; rounding is explicit.
 */
struct Dyadic {
    Int man{0};
    long exp{0};

    Dyadic() = default;
    Dyadic(Int m, long e) : man(std::move(m)), exp(e) { normalize(); }
    explicit Dyadic(long v) : man(v), exp(0) { normalize(); }

    void normalize() {
        if (man == 0) {
            exp = 0;
            return;
        }
        unsigned tz = lsb(int_abs(man));
        if (tz > 0) {
            man >>= tz;
            exp += static_cast<long>(tz);
        }
    }

    bool is_zero() const { return man == 0; }
    int sign() const { return man.sign(); }

    Rat to_rat() const {
        if (exp >= 0) return Rat(man << static_cast<unsigned>(exp));
        return Rat(man, Int(1) << static_cast<unsigned>(-exp));
    }

    double to_double() const;

    /** Number of bits in |man| (0 for zero). */
    unsigned bits() const { return man == 0 ? 0 : msb(int_abs(man)) + 1; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.man == 0) return b;
        if (b.man == 0) return a;
        long e = std::min(a.exp, b.exp);
        Int m = (a.man << static_cast<unsigned>(a.exp - e)) + (b.man << static_cast<unsigned>(b.exp - e));
        return Dyadic(std::move(m), e);
    }
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.man, a.exp); }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.man * b.man, a.exp + b.exp); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.man == b.man && a.exp == b.exp; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return (a - b).sign() <= 0; }
};

inline Dyadic dyadic_abs(const Dyadic& x) { return Dyadic(int_abs(x.man), x.exp); }

/** 2^k as a dyadic. */
inline Dyadic dyadic_pow2(long k) { return Dyadic(Int(1), k); }

/**
 * Round x to at most prec mantissa bits.  The result r satisfies
 * |r - x| <= 2^(e) where e is returned via err_exp (err_exp meaningful
 * only when rounding actually dropped bits).  Rounds toward zero.
 */
Dyadic dyadic_round(const Dyadic& x, unsigned prec, Dyadic* err_bound = nullptr);

/** Directed conversion from a rational; |result - x| <= 2^-prec. */
Dyadic dyadic_from_rat(const Rat& x, unsigned prec, int direction /* -1 down, 0 nearest-ish, +1 up */);

/** Upper bound on sqrt(x) as a dyadic, x a nonnegative rational. */
Dyadic dyadic_sqrt_upper(const Rat& x, unsigned prec);
Dyadic dyadic_sqrt_lower(const Rat& x, unsigned prec);

/** Division rounded toward zero to prec bits, with |result - a/b| <= 2^err. */
Dyadic dyadic_div(const Dyadic& a, const Dyadic& b, unsigned prec);

}  // namespace intamp

#endif  // INTAMP_DYADIC_HPP
