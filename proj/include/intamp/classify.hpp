#ifndef INTAMP_CLASSIFY_HPP
#define INTAMP_CLASSIFY_HPP

#include <string>
#include <vector>

#include "intamp/nspullback.hpp"
#include "intamp/rootloc.hpp"

namespace intamp {

/**
 * Spectral verdicts for a pullback action.
 *  - int_amplified: every eigenvalue has modulus > 1 (exact).
 *  - amplified_sufficient: no eigenvalue on the unit circle (a sufficient
 *    spectral condition; the existence of the divisor is out of scope).
 *  - polarized_profile: necessary-condition profile — diagonalizable and
 *    all eigenvalues of equal modulus q with q^2 > 1.
 */
struct ClassificationReport {
    enum class Sufficient { Yes, NoEvidence };
    enum class Polarized { Yes, No, Unknown };

    CircleProfile unit_profile;
    bool int_amplified{false};
    Sufficient amplified_sufficient{Sufficient::NoEvidence};
    Polarized polarized_profile{Polarized::Unknown};
    Rat q_sq{};  // meaningful when polarized_profile = Yes
    bool diagonalizable{false};
    std::optional<Int> degree;
    std::vector<std::string> notes;
};

ClassificationReport classify(const EndoAction& phi);

/**
 * Least i such that inf_norm(inverse(phi_f)^i) * inf_norm(inverse(phi_g))
 * < 1; this certifies that g composed with f^i is int-amplified for every
 * power at or above the bound.  Smaller exponents are probed directly.
 */
struct CompositionReport {
    long i_norm_bound{0};
    std::vector<long> passing_below_bound;
    std::string direction{"pullback composes as phi_g o phi_f^i"};
};

CompositionReport compose_min_power(const EndoAction& phi_f, const EndoAction& phi_g);

/**
 * For an int-amplified endomorphism: checks that every N^1 eigenvalue has
 * modulus strictly below the degree, and that the degree exceeds 1.
 */
struct DegreeBoundReport {
    bool ok{false};
    Int degree{0};
    CircleProfile profile;  // relative to the circle of radius deg
    std::vector<std::string> notes;
};

DegreeBoundReport verify_spectrum_below_degree(const CMEndo& e);

}  // namespace intamp

#endif  // INTAMP_CLASSIFY_HPP
