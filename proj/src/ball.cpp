#include "intamp/ball.hpp"

namespace intamp {

namespace {

// round a ball's center to prec bits, absorbing the rounding error into rad
ComplexBall rounded(Dyadic re, Dyadic im, Dyadic rad, unsigned prec) {
    Dyadic e1, e2;
    Dyadic r = dyadic_round(re, prec, &e1);
    Dyadic i = dyadic_round(im, prec, &e2);
    Dyadic rr = rad + e1 + e2;
    rr = dyadic_round(rr, 32, &e1);
    rr = rr + e1;  // radius rounding must go up
    return {std::move(r), std::move(i), std::move(rr)};
}

// cheap dyadic upper bound for |a + bi|
Dyadic abs1_upper(const Dyadic& a, const Dyadic& b) { return dyadic_abs(a) + dyadic_abs(b); }

}  // namespace

ComplexBall cb_add(const ComplexBall& a, const ComplexBall& b, unsigned prec) {
    return rounded(a.re + b.re, a.im + b.im, a.rad + b.rad, prec);
}

ComplexBall cb_sub(const ComplexBall& a, const ComplexBall& b, unsigned prec) {
    return rounded(a.re - b.re, a.im - b.im, a.rad + b.rad, prec);
}

ComplexBall cb_mul(const ComplexBall& a, const ComplexBall& b, unsigned prec) {
    Dyadic re = a.re * b.re - a.im * b.im;
    Dyadic im = a.re * b.im + a.im * b.re;
    // |a||rb| + |b||ra| + ra*rb, with |.| the 1-norm upper bound
    Dyadic rad = abs1_upper(a.re, a.im) * b.rad + abs1_upper(b.re, b.im) * a.rad + a.rad * b.rad;
    return rounded(std::move(re), std::move(im), std::move(rad), prec);
}

ComplexBall cb_from_rat(const Rat& x, const Rat& y, unsigned prec) {
    // exact dyadic representation when denominators are powers of two
    auto pow2_den = [](const Rat& v) { return (den(v) & (den(v) - 1)) == 0; };
    Dyadic rad;
    Dyadic re, im;
    if (pow2_den(x)) {
        re = Dyadic(num(x), -static_cast<long>(lsb(den(x) == 1 ? Int(1) : den(x))));
        if (den(x) == 1) re = Dyadic(num(x), 0);
    } else {
        re = dyadic_from_rat(x, prec + 1, 0);
        rad = rad + dyadic_pow2(-static_cast<long>(prec) - 1);
    }
    if (pow2_den(y)) {
        im = Dyadic(num(y), -static_cast<long>(lsb(den(y) == 1 ? Int(1) : den(y))));
        if (den(y) == 1) im = Dyadic(num(y), 0);
    } else {
        im = dyadic_from_rat(y, prec + 1, 0);
        rad = rad + dyadic_pow2(-static_cast<long>(prec) - 1);
    }
    return {std::move(re), std::move(im), std::move(rad)};
}

bool cb_disjoint(const ComplexBall& a, const ComplexBall& b) {
    Rat dx = a.re.to_rat() - b.re.to_rat();
    Rat dy = a.im.to_rat() - b.im.to_rat();
    Rat s = a.rad.to_rat() + b.rad.to_rat();
    return dx * dx + dy * dy > s * s;
}

}  // namespace intamp
