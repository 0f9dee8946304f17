#include "intamp/quad.hpp"

namespace intamp {

bool valid_discriminant(long d) {
    if (d >= 0) return false;
    long n = -d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

namespace {

long dmod4(long d) { return ((d % 4) + 4) % 4; }

void check_ring(const QuadElem& x, const QuadElem& y) {
    if (x.d != y.d) throw RingMismatchError();
}

}  // namespace

QuadElem::QuadElem(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
    if (!valid_discriminant(d)) throw MathError("ring tag must be a negative squarefree integer");
}

void QuadElem::omega_sq(long d, Rat& u, Rat& v) {
    if (dmod4(d) == 1) {
        // omega = (1+sqrt(d))/2, omega^2 = (d-1)/4 + omega
        u = Rat(d - 1, 4);
        v = 1;
    } else {
        u = d;
        v = 0;
    }
}

QuadElem QuadElem::conj() const {
    if (dmod4(d) == 1) return {a + b, -b, d};
    return {a, -b, d};
}

Rat QuadElem::norm() const {
    QuadElem n = *this * conj();
    if (n.b != 0) throw MathError("norm is not rational (internal)");
    return n.a;
}

Rat QuadElem::trace() const {
    QuadElem t = *this + conj();
    return t.a;  // b-part cancels by construction
}

QuadElem QuadElem::inverse() const {
    Rat n = norm();
    if (n == 0) throw MathError("inverse of zero");
    QuadElem c = conj();
    return {c.a / n, c.b / n, d};
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    check_ring(x, y);
    return {x.a + y.a, x.b + y.b, x.d};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    check_ring(x, y);
    return {x.a - y.a, x.b - y.b, x.d};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    check_ring(x, y);
    Rat u, v;
    QuadElem::omega_sq(x.d, u, v);
    Rat bb = x.b * y.b;
    return {x.a * y.a + bb * u, x.a * y.b + x.b * y.a + bb * v, x.d};
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    check_ring(x, y);
    return x * y.inverse();
}

ComplexBall embed(const QuadElem& x, unsigned prec) {
    unsigned wp = prec + 8;
    // omega = (r_re, r_im): (0, sqrt|d|) or (1/2, sqrt|d|/2)
    Rat sd_lo = rat_sqrt_lower(Rat(-x.d), wp);
    Rat sd_hi = rat_sqrt_upper(Rat(-x.d), wp);
    Rat om_re, om_im_lo, om_im_hi;
    if (((x.d % 4) + 4) % 4 == 1) {
        om_re = Rat(1, 2);
        om_im_lo = sd_lo / 2;
        om_im_hi = sd_hi / 2;
    } else {
        om_re = 0;
        om_im_lo = sd_lo;
        om_im_hi = sd_hi;
    }
    // x = a + b*omega: real part a + b*om_re exact rational, imag part b * [om_im]
    Rat re = x.a + x.b * om_re;
    Rat im_c = x.b * (om_im_lo + om_im_hi) / 2;
    Rat im_r = rat_abs(x.b) * (om_im_hi - om_im_lo) / 2;
    ComplexBall c = cb_from_rat(re, im_c, wp);
    Dyadic extra = dyadic_from_rat(im_r, 32, +1);
    c.rad = c.rad + extra;
    if (x.b == 0 && (den(re) & (den(re) - 1)) == 0) {
        // exact dyadic real value
        return ComplexBall::exact(c.re, Dyadic());
    }
    return c;
}

GaussRat embed_gauss(const QuadElem& x) {
    if (x.d != -1) throw MathError("exact Gaussian embedding needs d = -1");
    return {x.a, x.b};
}

}  // namespace intamp
