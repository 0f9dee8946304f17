#ifndef INTAMP_CONE_HPP
#define INTAMP_CONE_HPP

#include <optional>
#include <vector>

#include "intamp/lp.hpp"
#include "intamp/matrix.hpp"

namespace intamp {

/** Finitely generated convex cone in Q^m. */
struct PolyCone {
    long ambient_dim{0};
    std::vector<std::vector<Rat>> generators;

    PolyCone() = default;
    PolyCone(long dim, std::vector<std::vector<Rat>> gens);

    bool full_dimensional() const;
    bool pointed() const;
};

struct MembershipResult {
    bool member{false};
    std::vector<Rat> combination;  // nonnegative coefficients when member
    std::vector<Rat> separator;    // functional >= 0 on generators, < 0 on v, when not
};

/**
 * Non-strict: is v a nonnegative combination of the generators?
 * Strict: is v in the relative interior (a combination with every
 * coefficient strictly positive)?
 */
MembershipResult cone_contains(const PolyCone& C, const std::vector<Rat>& v, bool strict);

/** phi(C) = C, decided exactly for finitely generated cones. */
bool is_invariant(const RatMatrix& phi, const PolyCone& C);

struct ConeWitnessReport {
    bool premise_ok{false};
    bool spectral_ok{false};
    std::vector<Rat> ell;  // interior point with phi(ell) - ell interior, when premise_ok
    std::vector<Rat> h;    // phi(ell) - ell
    // orbit-cone search: least m with v in relint(E_m), if found
    std::optional<long> least_m;
    std::vector<std::pair<long, bool>> partial_sum_trace;  // (m, strict membership of v in E_m)
    std::vector<Rat> certificate;                          // coefficients of the witness combination
};

/**
 * Searches for ell in the interior of C with phi(ell) - ell interior;
 * when found, the spectral conclusion (all eigenvalue moduli > 1) is
 * verified by exact root counting and reported in spectral_ok.
 */
ConeWitnessReport verify_pf_lemma(const RatMatrix& phi, const PolyCone& C);

/**
 * Constructive orbit-cone search: e = phi(v) - v, E_m generated by
 * phi^{-1}(e) .. phi^{-m}(e); reports the least m <= m_max with v in
 * the relative interior of E_m.
 */
ConeWitnessReport orbit_cone_witness(const RatMatrix& phi, const std::vector<Rat>& v, long m_max);

}  // namespace intamp

#endif  // INTAMP_CONE_HPP
