#include "intamp/rootloc.hpp"

#include <algorithm>

namespace intamp {

namespace detail {

std::optional<std::pair<long, long>> schur_cohn_counts(const RatPoly& p) {
    // formal-degree Schur-Cohn recursion; requires p(0) != 0
    std::vector<Rat> cur(p.coeffs());
    const long n = static_cast<long>(cur.size()) - 1;
    long inside = 0;
    int prod_sign = 1;
    for (long k = 1; k <= n; ++k) {
        long deg = static_cast<long>(cur.size()) - 1;
        const Rat a0 = cur.front();
        const Rat an = cur.back();
        std::vector<Rat> next(deg);  // formal degree deg-1
        for (long j = 0; j < deg; ++j) next[j] = a0 * cur[j] - an * cur[deg - j];
        Rat gamma = a0 * a0 - an * an;
        if (gamma == 0) return std::nullopt;
        prod_sign *= (gamma > 0 ? 1 : -1);
        if (prod_sign < 0) ++inside;
        cur = std::move(next);
    }
    return std::make_pair(inside, n - inside);
}

long self_inversive_on_circle_count(const RatPoly& q) {
    const long deg = q.degree();
    if (deg == 0) return 0;
    if (deg % 2 != 0) throw MathError("self-inversive factor must have even degree");
    const long m = deg / 2;
    if (!q.is_monic() || q.constant_term() != 1)
        throw MathError("expected a monic factor with constant term 1");
    for (long i = 0; i <= deg; ++i)
        if (q.coeff(i) != q.coeff(deg - i)) throw MathError("factor is not palindromic");
    // compress via u = x + 1/x:  q(x)/x^m = a_m + sum a_{m+k} (x^k + x^-k)
    RatPoly pk_prev = RatPoly::constant(Rat(2));  // x^0 + x^0
    RatPoly pk = RatPoly::x();                    // x + 1/x
    RatPoly S = RatPoly::constant(q.coeff(m));
    for (long k = 1; k <= m; ++k) {
        S = S + q.coeff(m + k) * pk;
        RatPoly pk_next = RatPoly::x() * pk - pk_prev;
        pk_prev = pk;
        pk = pk_next;
    }
    // on-circle pairs of q <-> real roots of S in (-2, 2)
    return 2 * sturm_count(S, Rat(-2), Rat(2));
}

std::pair<long, long> ball_counts_off_circle(const RatPoly& p);  // rootballs.cpp

Rat resultant(const RatPoly& A_in, const RatPoly& B_in) {
    RatPoly A = A_in, B = B_in;
    if (A.is_zero() || B.is_zero()) return Rat(0);
    Rat acc(1);
    for (;;) {
        if (B.degree() == 0) {
            Rat lc = B.lc();
            Rat r(1);
            for (long i = 0; i < A.degree(); ++i) r *= lc;
            return acc * r;
        }
        RatPoly R = RatPoly::divmod(A, B).second;
        if (R.is_zero()) return Rat(0);
        long da = A.degree(), db = B.degree(), dr = R.degree();
        Rat lcb = B.lc();
        Rat f(1);
        for (long i = 0; i < da - dr; ++i) f *= lcb;
        if ((da * db) % 2 == 1) f = -f;
        acc *= f;
        A = std::move(B);
        B = std::move(R);
    }
}

RatPoly ratio_poly(const RatPoly& p_in) {
    RatPoly p = p_in.monic();
    if (p.coeff(0) == 0) throw MathError("ratio_poly: zero root present");
    const long n = p.degree();
    const long dz = n * n;
    // Res_x(p(x), p(z x)) by evaluation-interpolation in z
    std::vector<std::pair<Rat, Rat>> points;
    points.reserve(dz + 1);
    Rat z(0);
    while (static_cast<long>(points.size()) <= dz) {
        z += 1;
        RatPoly pz = p.scale_arg(z);
        points.emplace_back(z, resultant(p, pz));
    }
    return lagrange_interpolate(points).monic();
}

}  // namespace detail

namespace {

// counts for the unit circle after zero roots have been stripped
CircleProfile unit_profile(RatPoly p) {
    CircleProfile out;
    // roots at +-1
    for (const Rat r : {Rat(1), Rat(-1)}) {
        while (p.degree() > 0 && p.eval(r) == 0) {
            p = RatPoly::div_exact(p, RatPoly::linear_root(r));
            ++out.on;
        }
    }
    if (p.degree() == 0) return out;

    RatPoly g = poly_gcd(p, p.reversed());
    RatPoly h = p;
    if (g.degree() > 0) {
        h = RatPoly::div_exact(p, g);
        long on_g = 0;
        for (const auto& [q, mult] : squarefree_decomposition(g))
            on_g += mult * detail::self_inversive_on_circle_count(q);
        out.on += on_g;
        // remaining roots of g are reciprocal pairs, split evenly
        long pairs = (g.degree() - on_g) / 2;
        out.inside += pairs;
        out.outside += pairs;
    }
    if (h.degree() > 0) {
        auto sc = detail::schur_cohn_counts(h);
        std::pair<long, long> counts =
            sc ? *sc : detail::ball_counts_off_circle(h);
        out.inside += counts.first;
        out.outside += counts.second;
    }
    return out;
}

}  // namespace

CircleProfile circle_profile(const RatPoly& p, const Rat& radius_sq) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (radius_sq <= 0) throw MathError("radius_sq must be positive");
    Rat s;
    if (!rational_square_root(radius_sq, s))
        throw MathError("radius_sq must be a square of a rational (shipped contract)");

    CircleProfile out;
    RatPoly q = p;
    long zero_roots = 0;
    while (q.degree() > 0 && q.coeff(0) == 0) {
        q = q.shift_down(1);
        ++zero_roots;
    }
    // roots of q(s x) are roots of q divided by s
    CircleProfile u = unit_profile(q.scale_arg(s).monic());
    out.inside = u.inside + zero_roots;
    out.on = u.on;
    out.outside = u.outside;
    out.radius_sq = radius_sq;
    return out;
}

ModulusVerdict same_modulus(const RatPoly& p_in, long /*prec*/) {
    if (p_in.is_zero()) throw ZeroPolynomialError();
    if (!p_in.is_monic()) throw MathError("same_modulus expects a monic polynomial");
    ModulusVerdict v;
    RatPoly p = p_in;
    long zero_roots = 0;
    while (p.degree() > 0 && p.coeff(0) == 0) {
        p = p.shift_down(1);
        ++zero_roots;
    }
    if (p.degree() == 0) {
        // all roots are zero (or there are none)
        v.kind = ModulusVerdict::Kind::AllEqual;
        v.q_sq = 0;
        return v;
    }
    if (zero_roots > 0) {
        v.kind = ModulusVerdict::Kind::NotAllEqual;
        return v;
    }
    // distinct roots determine the modulus set
    RatPoly sf = RatPoly::div_exact(p, poly_gcd(p, p.derivative())).monic();
    const long m = sf.degree();
    if (m == 1) {
        v.kind = ModulusVerdict::Kind::AllEqual;
        Rat r = sf.coeff(0);
        v.q_sq = r * r;
        return v;
    }
    RatPoly ratios = detail::ratio_poly(sf);
    CircleProfile pr = circle_profile(ratios, Rat(1));
    if (pr.on != ratios.degree()) {
        v.kind = ModulusVerdict::Kind::NotAllEqual;
        return v;
    }
    // common modulus q satisfies q^(2m) = c0^2
    Rat c0 = sf.coeff(0);
    Rat q_sq;
    if (rational_kth_root(c0 * c0, static_cast<unsigned>(m), q_sq)) {
        v.kind = ModulusVerdict::Kind::AllEqual;
        v.q_sq = q_sq;
    } else {
        v.kind = ModulusVerdict::Kind::AllEqualIrrational;
    }
    return v;
}

bool is_diagonalizable(const RatMatrix& A) {
    if (!A.square()) throw NonSquareError();
    return is_squarefree(min_poly(A));
}

}  // namespace intamp
