#ifndef INTAMP_NSPULLBACK_HPP
#define INTAMP_NSPULLBACK_HPP

#include <optional>
#include <string>

#include "intamp/matrix.hpp"
#include "intamp/poly.hpp"
#include "intamp/quad.hpp"

namespace intamp {

/**
 * Endomorphism of a product E^n, E an elliptic curve with ring tag d.
 * cm = true: End(E) is the maximal order of Q(sqrt(d)); entries are
 * order elements.  cm = false: End(E) = Z; entries must be rational
 * integers (b = 0).  Translation parts are irrelevant for the NS action
 * and are not modelled.
 */
struct CMEndo {
    QuadMatrix M;
    bool cm{true};
};

/** Pullback action on N^1 (or N_{n-1}); a square invertible rational matrix. */
struct EndoAction {
    RatMatrix mat;
    std::string provenance;
    std::optional<Int> degree;  // populated when built from a CMEndo
};

/**
 * The matrix of H |-> conj-transpose(M) H M on Hermitian matrices over
 * the order, in the fixed basis: E_kk (k = 1..n), then for k < l the
 * pair (E_kl + E_lk, omega E_kl + conj(omega) E_lk).  cm = false drops
 * the omega vectors (symmetric model).  Spectrum: {lambda_i conj(lambda_j)}.
 * Contravariant: ns_pullback(M1 M2) = ns_pullback(M2) * ns_pullback(M1).
 */
EndoAction ns_pullback(const CMEndo& e);

/**
 * Characteristic polynomial of the N^1 action, built independently of
 * ns_pullback through resultants of the analytic characteristic
 * polynomial with its coefficient-conjugate.
 */
RatPoly h11_charpoly(const CMEndo& e);

/** norm(det M): the degree of the endomorphism, a positive integer. */
Int endo_degree(const CMEndo& e);

}  // namespace intamp

#endif  // INTAMP_NSPULLBACK_HPP
