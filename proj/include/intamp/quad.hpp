#ifndef INTAMP_QUAD_HPP
#define INTAMP_QUAD_HPP

#include "intamp/ball.hpp"
#include "intamp/rational.hpp"

namespace intamp {

/** Is d a valid ring tag: negative and squarefree? */
bool valid_discriminant(long d);

/**
 * Element a + b*omega of the maximal order of Q(sqrt(d)), d < 0 squarefree.
 * omega = sqrt(d) when d = 2,3 (mod 4), omega = (1 + sqrt(d))/2 when d = 1 (mod 4).
 */
struct QuadElem {
    Rat a{};
    Rat b{};
    long d{-1};

    QuadElem() = default;
    QuadElem(Rat a_, Rat b_, long d_);
    static QuadElem from_rat(const Rat& r, long d) { return QuadElem(r, Rat(0), d); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    /** omega^2 = u + v*omega depending on d mod 4. */
    static void omega_sq(long d, Rat& u, Rat& v);

    QuadElem conj() const;
    Rat norm() const;     // x * conj(x), a nonnegative rational
    Rat trace() const;    // x + conj(x)

    /** True when the element lies in the maximal order (integer coordinates). */
    bool is_integral() const { return is_integer(a) && is_integer(b); }

    QuadElem inverse() const;

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x) { return {-x.a, -x.b, x.d}; }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

/**
 * Certified embedding into C sending omega to the root with positive
 * imaginary part; radius <= 2^(1-prec).
 */
ComplexBall embed(const QuadElem& x, unsigned prec);

/** Exact Gaussian-rational value of the embedding, only valid for d = -1. */
GaussRat embed_gauss(const QuadElem& x);

}  // namespace intamp

#endif  // INTAMP_QUAD_HPP
