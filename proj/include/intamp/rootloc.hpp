#ifndef INTAMP_ROOTLOC_HPP
#define INTAMP_ROOTLOC_HPP

#include <optional>
#include <vector>

#include "intamp/ball.hpp"
#include "intamp/matrix.hpp"
#include "intamp/poly.hpp"

namespace intamp {

/** Exact counts of roots (with multiplicity) relative to a circle. */
struct CircleProfile {
    long inside{0};
    long on{0};
    long outside{0};
    Rat radius_sq{1};

    long total() const { return inside + on + outside; }
    friend bool operator==(const CircleProfile& a, const CircleProfile& b) {
        return a.inside == b.inside && a.on == b.on && a.outside == b.outside &&
               a.radius_sq == b.radius_sq;
    }
};

/**
 * Exact root counts of p relative to the circle of squared radius radius_sq.
 * radius_sq must be positive and a square of a rational (the shipped
 * contract; every radius the artifact needs is of this form).
 */
CircleProfile circle_profile(const RatPoly& p, const Rat& radius_sq);

struct ModulusVerdict {
    enum class Kind { AllEqual, AllEqualIrrational, NotAllEqual, Unknown };
    Kind kind{Kind::Unknown};
    Rat q_sq{};     // AllEqual: the common |root|^2
    long prec{0};   // Unknown: precision at which the search stopped
};

/**
 * Decides whether all roots of a monic p share the same modulus.  Fully
 * exact: the common-modulus condition is certified through the ratio
 * polynomial (roots lambda_i / lambda_j), whose roots must all lie on
 * the unit circle.
 */
ModulusVerdict same_modulus(const RatPoly& p, long prec = 4096);

/** Squarefree minimal polynomial test. */
bool is_diagonalizable(const RatMatrix& A);

struct RootBall {
    ComplexBall ball;
    int multiplicity{1};
};

/**
 * Validated enclosures of all complex roots: pairwise disjoint disks,
 * multiplicities summing to the degree, radii <= 2^(1-prec) * max(1, |center|).
 */
std::vector<RootBall> root_balls(const RatPoly& p, unsigned prec);

namespace detail {

/**
 * Schur-Cohn counts (inside, outside) for a polynomial with no roots on
 * the unit circle and no root at zero; nullopt when the recursion
 * degenerates (a vanishing Schur-Cohn coefficient).
 */
std::optional<std::pair<long, long>> schur_cohn_counts(const RatPoly& p);

/**
 * For a squarefree monic p with p(0) = +-1, p(+-1) != 0, and root set
 * closed under inversion: number of roots on the unit circle.
 */
long self_inversive_on_circle_count(const RatPoly& p);

/** Certified off-circle counting via root isolation (used as fallback). */
std::pair<long, long> ball_counts_off_circle(const RatPoly& p);

/** Resultant-based ratio polynomial with roots lambda_i / lambda_j. */
RatPoly ratio_poly(const RatPoly& p);

/** Res_x(p(x), q(x)) over Q. */
Rat resultant(const RatPoly& p, const RatPoly& q);

}  // namespace detail

}  // namespace intamp

#endif  // INTAMP_ROOTLOC_HPP
