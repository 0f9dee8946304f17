#ifndef INTAMP_BALL_HPP
#define INTAMP_BALL_HPP

#include "intamp/dyadic.hpp"

namespace intamp {

/**
 * Closed complex disk { z : |z - (re + i*im)| <= rad } with dyadic data.
 * Every operation returns a ball enclosing the exact image set.
 */
struct ComplexBall {
    Dyadic re{};
    Dyadic im{};
    Dyadic rad{};

    ComplexBall() = default;
    ComplexBall(Dyadic r, Dyadic i, Dyadic rd) : re(std::move(r)), im(std::move(i)), rad(std::move(rd)) {}

    static ComplexBall exact(const Dyadic& r, const Dyadic& i) { return {r, i, Dyadic()}; }

    bool is_exact() const { return rad.is_zero(); }

    /** Exact rational |center|^2. */
    Rat center_norm() const {
        Rat r = re.to_rat(), i = im.to_rat();
        return r * r + i * i;
    }

    /** Rational upper / lower bounds on |z| over the ball. */
    Rat abs_upper(unsigned prec = 64) const {
        return rat_sqrt_upper(center_norm(), prec) + rad.to_rat();
    }
    Rat abs_lower(unsigned prec = 64) const {
        Rat lo = rat_sqrt_lower(center_norm(), prec) - rad.to_rat();
        return lo < 0 ? Rat(0) : lo;
    }

    bool contains(const Rat& x, const Rat& y) const {
        Rat dx = re.to_rat() - x, dy = im.to_rat() - y;
        Rat r = rad.to_rat();
        return dx * dx + dy * dy <= r * r;
    }
};

/** Sum/difference/product with radius tracking; centers rounded to prec bits. */
ComplexBall cb_add(const ComplexBall& a, const ComplexBall& b, unsigned prec);
ComplexBall cb_sub(const ComplexBall& a, const ComplexBall& b, unsigned prec);
ComplexBall cb_mul(const ComplexBall& a, const ComplexBall& b, unsigned prec);

/** Ball of the rational point x + iy with |error| <= 2^-prec (0 when exact dyadic). */
ComplexBall cb_from_rat(const Rat& x, const Rat& y, unsigned prec);

/** Do the two disks have empty intersection? Exact rational test. */
bool cb_disjoint(const ComplexBall& a, const ComplexBall& b);

}  // namespace intamp

#endif  // INTAMP_BALL_HPP
