#ifndef INTAMP_POLY_HPP
#define INTAMP_POLY_HPP

#include <utility>
#include <vector>

#include "intamp/rational.hpp"

namespace intamp {

/**
 * Univariate polynomial over Q, coefficients stored low degree first.
 * Canonical form: no trailing (high-order) zero coefficients; the zero
 * polynomial has an empty coefficient vector.
 */
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

    /** Monic (x - r). */
    static RatPoly linear_root(const Rat& r) { return RatPoly({-r, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lc() const { return c_.back(); }
    Rat constant_term() const { return c_.empty() ? Rat(0) : c_.front(); }

    Rat eval(const Rat& x) const;
    GaussRat eval(const GaussRat& z) const;

    RatPoly derivative() const;
    RatPoly monic() const;
    RatPoly reversed() const;              // x^deg * p(1/x)
    RatPoly scale_arg(const Rat& s) const; // p(s*x)
    RatPoly compose_x2() const;            // p(x^2)
    RatPoly shift_down(long k) const;      // p / x^k (requires divisibility)

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend RatPoly operator+(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator-(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator-(const RatPoly& p);
    friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator*(const Rat& s, const RatPoly& p);
    friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.c_ == q.c_; }

    /** Quotient and remainder; divisor must be nonzero. */
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q);
    /** Exact division; throws when the remainder is nonzero. */
    static RatPoly div_exact(const RatPoly& p, const RatPoly& q);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/** Monic gcd. */
RatPoly poly_gcd(RatPoly a, RatPoly b);

bool is_squarefree(const RatPoly& p);

/** Yun decomposition: returns (factor, multiplicity) with factor monic squarefree. */
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/** Number of distinct real roots in the open interval (a, b); endpoints must not be roots. */
long sturm_count(const RatPoly& p, const Rat& a, const Rat& b);

/** Number of distinct real roots on the whole line. */
long sturm_count_all(const RatPoly& p);

/** Cauchy bound: all complex roots have |z| <= bound. */
Rat root_bound(const RatPoly& p);

/** Unique polynomial of degree < points.size() through the given (x, y) pairs. */
RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

/** Exact square root of a polynomial that is a perfect square (monic input). */
RatPoly poly_sqrt_exact(const RatPoly& p);

/** lcm of two monic polynomials. */
RatPoly poly_lcm(const RatPoly& a, const RatPoly& b);

}  // namespace intamp

#endif  // INTAMP_POLY_HPP
