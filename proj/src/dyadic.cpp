#include "intamp/dyadic.hpp"

#include <cmath>

namespace intamp {

double Dyadic::to_double() const {
    if (man == 0) return 0.0;
    // keep top 64 bits, track exponent
    Int m = man;
    long e = exp;
    unsigned b = bits();
    if (b > 64) {
        m >>= (b - 64);
        e += static_cast<long>(b - 64);
    }
    return static_cast<double>(m.convert_to<long long>()) * std::ldexp(1.0, static_cast<int>(e));
}

Dyadic dyadic_round(const Dyadic& x, unsigned prec, Dyadic* err_bound) {
    if (err_bound) *err_bound = Dyadic();
    unsigned b = x.bits();
    if (b <= prec) return x;
    unsigned shift = b - prec;
    Int mag = int_abs(x.man) >> shift;  // truncation toward zero
    Int m = x.man < 0 ? Int(-mag) : mag;
    if (err_bound) *err_bound = dyadic_pow2(x.exp + static_cast<long>(shift));
    return Dyadic(std::move(m), x.exp + static_cast<long>(shift));
}

Dyadic dyadic_from_rat(const Rat& x, unsigned prec, int direction) {
    if (x == 0) return Dyadic();
    Int n = num(x), d = den(x);
    bool neg = n < 0;
    if (neg) n = -n;
    // choose t so the quotient has ~prec significant bits and error <= 2^-prec
    long t = static_cast<long>(prec) + static_cast<long>(msb(d)) - static_cast<long>(msb(n)) + 2;
    if (t < static_cast<long>(prec)) t = prec;
    Int q = (n << static_cast<unsigned>(t)) / d;  // floor of |x| * 2^t
    bool exact = q * d == (n << static_cast<unsigned>(t));
    if (!exact) {
        bool round_away = (direction > 0 && !neg) || (direction < 0 && neg);
        if (round_away) ++q;
    }
    return Dyadic(neg ? Int(-q) : q, -t);
}

Dyadic dyadic_sqrt_upper(const Rat& x, unsigned prec) {
    return dyadic_from_rat(rat_sqrt_upper(x, prec + 1), prec + 4, +1);
}

Dyadic dyadic_sqrt_lower(const Rat& x, unsigned prec) {
    Dyadic lo = dyadic_from_rat(rat_sqrt_lower(x, prec + 1), prec + 4, -1);
    if (lo.sign() < 0) return Dyadic();  // sqrt is nonnegative
    return lo;
}

Dyadic dyadic_div(const Dyadic& a, const Dyadic& b, unsigned prec) {
    if (b.is_zero()) throw MathError("dyadic division by zero");
    if (a.is_zero()) return Dyadic();
    Rat q = a.to_rat() / b.to_rat();
    return dyadic_from_rat(q, prec, 0);
}

}  // namespace intamp
