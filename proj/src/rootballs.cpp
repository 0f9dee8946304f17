#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "intamp/rootloc.hpp"

namespace intamp {
namespace {

// ---- approximate complex arithmetic on dyadics (heuristic phase only) ----

struct CD {
    Dyadic re{};
    Dyadic im{};
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

CD cd_round(const CD& a, unsigned wp) { return {dyadic_round(a.re, wp), dyadic_round(a.im, wp)}; }
CD cd_add(const CD& a, const CD& b, unsigned wp) { return cd_round({a.re + b.re, a.im + b.im}, wp); }
CD cd_sub(const CD& a, const CD& b, unsigned wp) { return cd_round({a.re - b.re, a.im - b.im}, wp); }
CD cd_mul(const CD& a, const CD& b, unsigned wp) {
    return cd_round({a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}, wp);
}

Dyadic dyadic_from_rat_rel(const Rat& x, unsigned wp) {
    if (x == 0) return Dyadic();
    long p2 = static_cast<long>(wp) - floor_log2(x);
    if (p2 < 1) p2 = 1;
    return dyadic_round(dyadic_from_rat(x, static_cast<unsigned>(p2), 0), wp);
}

CD cd_from_gauss(const GaussRat& z, unsigned wp) {
    return {dyadic_from_rat_rel(z.re, wp), dyadic_from_rat_rel(z.im, wp)};
}

GaussRat cd_to_gauss(const CD& a) { return {a.re.to_rat(), a.im.to_rat()}; }

CD cd_div(const CD& a, const CD& b, unsigned wp) {
    GaussRat q = cd_to_gauss(a) / cd_to_gauss(b);
    return cd_from_gauss(q, wp);
}

Rat cd_norm(const CD& a) {
    Rat r = a.re.to_rat(), i = a.im.to_rat();
    return r * r + i * i;
}

Dyadic dyadic_from_double(double v) {
    if (v == 0.0 || !std::isfinite(v)) return Dyadic();
    int e = 0;
    double m = std::frexp(v, &e);
    auto man = static_cast<long long>(std::llround(m * 9007199254740992.0));  // 2^53
    return Dyadic(Int(man), e - 53);
}

CD cd_eval(const std::vector<CD>& coeffs, const CD& z, unsigned wp) {
    CD acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = cd_add(cd_mul(acc, z, wp), *it, wp);
    return acc;
}

std::vector<CD> cd_coeffs(const RatPoly& p, unsigned wp) {
    std::vector<CD> out;
    out.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) out.push_back({dyadic_from_rat_rel(c, wp), Dyadic()});
    return out;
}

// Aberth-Ehrlich sweeps; purely heuristic, certification is exact.
void aberth(const RatPoly& q, std::vector<CD>& z, unsigned wp, int max_sweeps, long tol_prec) {
    const size_t k = z.size();
    const auto pc = cd_coeffs(q, wp);
    const auto dc = cd_coeffs(q.derivative(), wp);
    const Rat tol = Rat(1, Int(1) << static_cast<unsigned>(2 * tol_prec));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Rat worst(0);
        for (size_t i = 0; i < k; ++i) {
            CD pv = cd_eval(pc, z[i], wp);
            if (pv.is_zero()) continue;
            CD pd = cd_eval(dc, z[i], wp);
            if (pd.is_zero()) {
                z[i].re = z[i].re + dyadic_pow2(-static_cast<long>(wp) / 2);
                continue;
            }
            CD w = cd_div(pv, pd, wp);
            CD s{};
            bool clash = false;
            for (size_t j = 0; j < k && !clash; ++j) {
                if (j == i) continue;
                CD diff = cd_sub(z[i], z[j], wp);
                if (diff.is_zero()) {
                    clash = true;
                    break;
                }
                s = cd_add(s, cd_div(CD{Dyadic(1), Dyadic()}, diff, wp), wp);
            }
            if (clash) {
                z[i].im = z[i].im + dyadic_pow2(-static_cast<long>(wp) / 3);
                continue;
            }
            CD denom = cd_sub(CD{Dyadic(1), Dyadic()}, cd_mul(w, s, wp), wp);
            CD corr = denom.is_zero() ? w : cd_div(w, denom, wp);
            z[i] = cd_sub(z[i], corr, wp);
            Rat scale = cd_norm(z[i]);
            if (scale < 1) scale = 1;
            Rat rel = cd_norm(corr) / scale;
            if (rel > worst) worst = rel;
        }
        if (worst <= tol) break;
    }
}

// Exact certificate: with W_i = q(z_i) / prod_{j != i} (z_i - z_j) the roots of
// monic q lie in the union of the disks D(z_i, k * |W_i|) (Gerschgorin on the
// companion-like matrix diag(z) - W * 1^T); if the disks are pairwise disjoint,
// each holds exactly one root.
std::optional<std::vector<ComplexBall>> certify(const RatPoly& q, const std::vector<CD>& z,
                                                unsigned wp) {
    const size_t k = z.size();
    std::vector<ComplexBall> balls;
    balls.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        GaussRat zi = cd_to_gauss(z[i]);
        GaussRat denom{Rat(1), Rat(0)};
        for (size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            GaussRat d = zi - cd_to_gauss(z[j]);
            if (d.is_zero()) return std::nullopt;
            denom = denom * d;
        }
        GaussRat w = q.eval(zi) / denom;
        Rat rad_sq = Rat(static_cast<long>(k) * static_cast<long>(k)) * w.norm();
        balls.emplace_back(z[i].re, z[i].im, dyadic_sqrt_upper(rad_sq, wp));
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (!cb_disjoint(balls[i], balls[j])) return std::nullopt;
    return balls;
}

bool radius_ok(const ComplexBall& b, unsigned prec) {
    // rad <= 2^(1-prec) * max(1, |center|), squared to stay rational
    Rat scale = b.center_norm();
    if (scale < 1) scale = 1;
    Rat r = b.rad.to_rat();
    Rat bound = scale;
    long e = 2 * (static_cast<long>(prec) - 1);
    bound /= Rat(Int(1) << static_cast<unsigned>(e));
    return r * r <= bound;
}

/** Disjoint certified enclosures of the roots of a monic squarefree q. */
std::vector<ComplexBall> isolate_squarefree(const RatPoly& q, unsigned prec) {
    const long k = q.degree();
    if (k <= 0) return {};
    if (k == 1) return {cb_from_rat(-q.coeff(0), Rat(0), prec + 8)};

    std::vector<CD> z(static_cast<size_t>(k));
    double bound = 1.0;
    try {
        bound = root_bound(q).convert_to<double>();
    } catch (...) {
        bound = 1.0;
    }
    if (!std::isfinite(bound) || bound <= 0) bound = 1e6;
    const double r0 = 0.7 * bound + 0.125;
    for (long i = 0; i < k; ++i) {
        double ang = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.3) / static_cast<double>(k) + 0.4;
        z[static_cast<size_t>(i)] = {dyadic_from_double(r0 * std::cos(ang)),
                                     dyadic_from_double(r0 * std::sin(ang))};
    }

    unsigned wp = std::max(64u, prec + 16);
    for (int attempt = 0; attempt < 24; ++attempt) {
        aberth(q, z, wp, 120, static_cast<long>(prec) + 8);
        if (auto balls = certify(q, z, wp)) {
            bool tight = true;
            for (const auto& b : *balls) tight = tight && radius_ok(b, prec);
            if (tight) return *balls;
        }
        wp *= 2;
    }
    throw MathError("root isolation did not converge");
}

}  // namespace

namespace detail {

std::pair<long, long> ball_counts_off_circle(const RatPoly& p) {
    long inside = 0, outside = 0;
    for (const auto& [q, mult] : squarefree_decomposition(p.monic())) {
        unsigned prec = 32;
        for (;;) {
            bool decided = true;
            long in_q = 0, out_q = 0;
            for (const ComplexBall& b : isolate_squarefree(q, prec)) {
                if (b.abs_upper(prec) < 1) {
                    ++in_q;
                } else if (b.abs_lower(prec) > 1) {
                    ++out_q;
                } else {
                    decided = false;
                    break;
                }
            }
            if (decided) {
                inside += mult * in_q;
                outside += mult * out_q;
                break;
            }
            if (prec > 1u << 16) throw MathError("off-circle counting: a root sits on the circle?");
            prec *= 2;
        }
    }
    return {inside, outside};
}

}  // namespace detail

std::vector<RootBall> root_balls(const RatPoly& p, unsigned prec) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.degree() == 0) return {};
    auto factors = squarefree_decomposition(p.monic());
    unsigned work = prec;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<RootBall> out;
        for (const auto& [q, mult] : factors)
            for (ComplexBall& b : isolate_squarefree(q, work))
                out.push_back({std::move(b), mult});
        bool ok = true;
        for (size_t i = 0; i < out.size() && ok; ++i)
            for (size_t j = i + 1; j < out.size() && ok; ++j)
                ok = cb_disjoint(out[i].ball, out[j].ball);
        if (ok) return out;
        work *= 2;
    }
    throw MathError("root isolation did not converge");
}

}  // namespace intamp
