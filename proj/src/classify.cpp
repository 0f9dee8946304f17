#include "intamp/classify.hpp"

namespace intamp {

ClassificationReport classify(const EndoAction& phi) {
    if (!phi.mat.square() || phi.mat.rows() == 0) throw NonSquareError();
    RatPoly cp = char_poly(phi.mat);
    if (cp.coeff(0) == 0) throw SingularMatrixError("pullback action is singular");

    ClassificationReport r;
    r.degree = phi.degree;
    r.unit_profile = circle_profile(cp, Rat(1));
    const long dim = phi.mat.rows();
    r.int_amplified = (r.unit_profile.inside == 0 && r.unit_profile.on == 0 &&
                       r.unit_profile.outside == dim);
    r.amplified_sufficient = r.unit_profile.on == 0 ? ClassificationReport::Sufficient::Yes
                                                    : ClassificationReport::Sufficient::NoEvidence;
    r.diagonalizable = is_diagonalizable(phi.mat);

    ModulusVerdict mv = same_modulus(cp);
    switch (mv.kind) {
        case ModulusVerdict::Kind::AllEqual:
            if (!r.diagonalizable) {
                r.polarized_profile = ClassificationReport::Polarized::No;
                r.notes.push_back("equal moduli but not diagonalizable");
            } else if (mv.q_sq > 1) {
                r.polarized_profile = ClassificationReport::Polarized::Yes;
                r.q_sq = mv.q_sq;
            } else {
                r.polarized_profile = ClassificationReport::Polarized::No;
                r.notes.push_back("common modulus is not greater than 1");
            }
            break;
        case ModulusVerdict::Kind::NotAllEqual:
            r.polarized_profile = ClassificationReport::Polarized::No;
            break;
        default:
            r.polarized_profile = ClassificationReport::Polarized::Unknown;
            r.notes.push_back("equal moduli with irrational modulus squared");
            break;
    }
    return r;
}

CompositionReport compose_min_power(const EndoAction& phi_f, const EndoAction& phi_g) {
    if (phi_f.mat.rows() != phi_g.mat.rows() || phi_f.mat.cols() != phi_g.mat.cols())
        throw DimensionMismatchError();
    if (!classify(phi_f).int_amplified)
        throw NotIntAmplifiedError("compose_min_power requires an int-amplified phi_f");
    RatMatrix finv = inverse(phi_f.mat);
    Rat gnorm = inf_norm(inverse(phi_g.mat));

    CompositionReport rep;
    RatMatrix pw = finv;
    for (long i = 1;; ++i) {
        if (inf_norm(pw) * gnorm < 1) {
            rep.i_norm_bound = i;
            break;
        }
        if (i > 100000) throw MathError("norm bound search did not terminate");
        pw = pw * finv;
    }
    const long dim = phi_f.mat.rows();
    for (long i = 0; i < rep.i_norm_bound; ++i) {
        EndoAction comp;
        comp.mat = phi_g.mat * mat_pow(phi_f.mat, static_cast<unsigned long>(i));
        if (classify(comp).int_amplified) rep.passing_below_bound.push_back(i);
        (void)dim;
    }
    return rep;
}

DegreeBoundReport verify_spectrum_below_degree(const CMEndo& e) {
    EndoAction act = ns_pullback(e);
    if (!classify(act).int_amplified)
        throw HypothesisNotMetError("verify_spectrum_below_degree requires int-amplified input");

    DegreeBoundReport rep;
    rep.degree = endo_degree(e);
    RatPoly h11 = h11_charpoly(e);
    rep.profile = circle_profile(h11, Rat(rep.degree) * Rat(rep.degree));
    bool all_below = rep.profile.inside == h11.degree();
    bool deg_gt_one = rep.degree > 1;
    if (!all_below) rep.notes.push_back("an eigenvalue has modulus >= deg");
    if (!deg_gt_one) rep.notes.push_back("degree does not exceed 1");
    rep.ok = all_below && deg_gt_one;
    return rep;
}

}  // namespace intamp
