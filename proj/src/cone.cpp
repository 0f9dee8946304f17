#include "intamp/cone.hpp"

#include "intamp/rootloc.hpp"

namespace intamp {

PolyCone::PolyCone(long dim, std::vector<std::vector<Rat>> gens)
    : ambient_dim(dim), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (static_cast<long>(g.size()) != ambient_dim) throw DimensionMismatchError();
        bool nonzero = false;
        for (const auto& x : g) nonzero |= (x != 0);
        if (!nonzero) throw ConeDegenerateError("zero generator");
    }
}

namespace {

long rank_of(const std::vector<std::vector<Rat>>& vecs, long dim) {
    std::vector<std::vector<Rat>> rows = vecs;
    long rank = 0;
    for (long col = 0; col < dim && rank < static_cast<long>(rows.size()); ++col) {
        long piv = -1;
        for (long r = rank; r < static_cast<long>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[rank][col];
            for (long j = 0; j < dim; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool PolyCone::full_dimensional() const { return rank_of(generators, ambient_dim) == ambient_dim; }

bool PolyCone::pointed() const {
    // pointed iff the only nonnegative combination summing to zero is trivial:
    // maximize sum x_i subject to G x = 0, x_i <= 1
    const long k = static_cast<long>(generators.size());
    const long d = ambient_dim;
    // variables: x_1..x_k, slacks s_1..s_k for x_i + s_i = 1
    std::vector<std::vector<Rat>> A(d + k, std::vector<Rat>(2 * k, Rat(0)));
    std::vector<Rat> b(d + k, Rat(0));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < k; ++j) A[i][j] = generators[j][i];
    for (long j = 0; j < k; ++j) {
        A[d + j][j] = 1;
        A[d + j][k + j] = 1;
        b[d + j] = 1;
    }
    std::vector<Rat> c(2 * k, Rat(0));
    for (long j = 0; j < k; ++j) c[j] = 1;
    LpResult r = lp_solve(A, b, c);
    return r.status == LpStatus::Optimal && r.objective == 0;
}

MembershipResult cone_contains(const PolyCone& C, const std::vector<Rat>& v, bool strict) {
    if (static_cast<long>(v.size()) != C.ambient_dim) throw DimensionMismatchError();
    const long k = static_cast<long>(C.generators.size());
    const long d = C.ambient_dim;
    MembershipResult out;
    if (!strict) {
        std::vector<std::vector<Rat>> A(d, std::vector<Rat>(k, Rat(0)));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < k; ++j) A[i][j] = C.generators[j][i];
        LpResult r = lp_solve(A, v, std::vector<Rat>(k, Rat(0)));
        if (r.status == LpStatus::Optimal) {
            out.member = true;
            out.combination = r.x;
        } else {
            out.member = false;
            out.separator.assign(d, Rat(0));
            for (long i = 0; i < d; ++i) out.separator[i] = -r.farkas_y[i];
        }
        return out;
    }
    // strict: maximize t with v = sum (x'_j + t) g_j, t <= 1
    // variables: x'_1..x'_k, t, s
    std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(k + 2, Rat(0)));
    std::vector<Rat> b(d + 1, Rat(0));
    for (long i = 0; i < d; ++i) {
        Rat tsum(0);
        for (long j = 0; j < k; ++j) {
            A[i][j] = C.generators[j][i];
            tsum += C.generators[j][i];
        }
        A[i][k] = tsum;
        b[i] = v[i];
    }
    A[d][k] = 1;
    A[d][k + 1] = 1;
    b[d] = 1;
    std::vector<Rat> c(k + 2, Rat(0));
    c[k] = 1;
    LpResult r = lp_solve(A, b, c);
    if (r.status == LpStatus::Optimal && r.objective > 0) {
        out.member = true;
        out.combination.assign(k, Rat(0));
        for (long j = 0; j < k; ++j) out.combination[j] = r.x[j] + r.x[k];
    }
    return out;
}

bool is_invariant(const RatMatrix& phi, const PolyCone& C) {
    if (phi.rows() != C.ambient_dim || phi.cols() != C.ambient_dim) throw DimensionMismatchError();
    std::vector<std::vector<Rat>> images;
    images.reserve(C.generators.size());
    for (const auto& g : C.generators) images.push_back(phi.apply(g));
    for (const auto& img : images)
        if (!cone_contains(C, img, false).member) return false;
    PolyCone image_cone(C.ambient_dim, images);
    for (const auto& g : C.generators)
        if (!cone_contains(image_cone, g, false).member) return false;
    return true;
}

namespace {

bool all_moduli_above_one(const RatMatrix& phi) {
    CircleProfile pr = circle_profile(char_poly(phi), Rat(1));
    return pr.inside == 0 && pr.on == 0;
}

}  // namespace

ConeWitnessReport verify_pf_lemma(const RatMatrix& phi, const PolyCone& C) {
    if (!C.full_dimensional() || !C.pointed())
        throw ConeDegenerateError("cone must be full-dimensional and pointed");
    if (!is_invariant(phi, C)) throw NotInvariantError();
    const long k = static_cast<long>(C.generators.size());
    const long d = C.ambient_dim;

    // P = (phi - I) G; find x, y > 0 with P x = G y, scaled so min coefficient t <= 1.
    RatMatrix P = phi - RatMatrix::identity(d);
    std::vector<std::vector<Rat>> pg;
    pg.reserve(k);
    for (const auto& g : C.generators) pg.push_back(P.apply(g));

    // variables: x'_1..x'_k, y'_1..y'_k, t, s
    std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(2 * k + 2, Rat(0)));
    std::vector<Rat> b(d + 1, Rat(0));
    for (long i = 0; i < d; ++i) {
        Rat tsum(0);
        for (long j = 0; j < k; ++j) {
            A[i][j] = pg[j][i];
            A[i][k + j] = -C.generators[j][i];
            tsum += pg[j][i] - C.generators[j][i];
        }
        A[i][2 * k] = tsum;
    }
    A[d][2 * k] = 1;
    A[d][2 * k + 1] = 1;
    b[d] = 1;
    std::vector<Rat> c(2 * k + 2, Rat(0));
    c[2 * k] = 1;
    LpResult r = lp_solve(A, b, c);

    ConeWitnessReport rep;
    rep.premise_ok = (r.status == LpStatus::Optimal && r.objective > 0);
    if (rep.premise_ok) {
        std::vector<Rat> ell(d, Rat(0));
        for (long j = 0; j < k; ++j) {
            Rat coef = r.x[j] + r.x[2 * k];
            for (long i = 0; i < d; ++i) ell[i] += coef * C.generators[j][i];
        }
        rep.ell = ell;
        rep.h = P.apply(ell);
        rep.spectral_ok = all_moduli_above_one(phi);
    }
    return rep;
}

ConeWitnessReport orbit_cone_witness(const RatMatrix& phi, const std::vector<Rat>& v, long m_max) {
    if (!phi.square() || phi.rows() != static_cast<long>(v.size())) throw DimensionMismatchError();
    if (!all_moduli_above_one(phi))
        throw SpectrumNotExpandingError("orbit_cone_witness requires all eigenvalue moduli > 1");
    const long d = phi.rows();
    RatMatrix inv = inverse(phi);

    std::vector<Rat> e = phi.apply(v);
    for (long i = 0; i < d; ++i) e[i] -= v[i];

    ConeWitnessReport rep;
    rep.premise_ok = true;
    bool e_zero = true;
    for (const auto& x : e) e_zero &= (x == 0);
    if (e_zero) {
        // no eigenvalue equals 1, so e = 0 forces v = 0: the degenerate case
        rep.least_m = 0;
        rep.spectral_ok = true;
        return rep;
    }

    std::vector<std::vector<Rat>> gens;
    std::vector<Rat> it = e;
    for (long m = 1; m <= m_max; ++m) {
        it = inv.apply(it);
        gens.push_back(it);
        PolyCone Em(d, gens);
        MembershipResult mr = cone_contains(Em, v, true);
        rep.partial_sum_trace.emplace_back(m, mr.member);
        if (mr.member) {
            rep.least_m = m;
            rep.certificate = mr.combination;
            rep.spectral_ok = true;
            break;
        }
    }
    return rep;
}

}  // namespace intamp
