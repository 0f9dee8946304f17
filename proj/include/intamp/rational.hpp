#ifndef INTAMP_RATIONAL_HPP
#define INTAMP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "intamp/errors.hpp"

namespace intamp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return numerator(x); }
inline Int den(const Rat& x) { return denominator(x); }

inline int sgn(const Rat& x) { return x.sign(); }
inline int sgn(const Int& x) { return x.sign(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline bool is_integer(const Rat& x) { return den(x) == 1; }

/** Parse "p/q" or "p"; accepts optional sign; denominator must be nonzero. */
Rat parse_rat(const std::string& s);

/** Canonical string form: "p" for integers, "p/q" otherwise (q > 0). */
std::string rat_str(const Rat& x);

/** Floor of log2(|x|) for x != 0. */
long floor_log2(const Rat& x);

/** Exact integer k-th root if it exists. */
bool perfect_kth_root(const Int& x, unsigned k, Int& root);

/** Exact rational k-th root of a nonnegative rational, if it exists. */
bool rational_kth_root(const Rat& x, unsigned k, Rat& root);

inline bool rational_square_root(const Rat& x, Rat& root) { return rational_kth_root(x, 2, root); }

/** Lower/upper rational bounds on sqrt(x) with error < 2^-prec, x >= 0. */
Rat rat_sqrt_lower(const Rat& x, unsigned prec);
Rat rat_sqrt_upper(const Rat& x, unsigned prec);

/** Gaussian rational re + im*i; exact complex arithmetic over Q. */
struct GaussRat {
    Rat re{};
    Rat im{};

    GaussRat() = default;
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }  // |z|^2

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.norm();
        if (n == 0) throw MathError("division by zero Gaussian rational");
        GaussRat t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

}  // namespace intamp

#endif  // INTAMP_RATIONAL_HPP
