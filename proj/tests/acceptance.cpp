// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>

#include "intamp/examples_corpus.hpp"
#include "intamp/json_io.hpp"

using namespace intamp;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "criterion " << id << " [" << name << "]: " << (ok ? "pass" : "FAIL") << " ("
              << ms << " ms)";
    if (!err.empty()) std::cout << " exception: " << err;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

QuadMatrix int_matrix(long n, long d, const std::vector<long>& v) {
    QuadMatrix M(n, d);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) M.at(i, j) = QuadElem::from_rat(Rat(v[i * n + j]), d);
    return M;
}

RatPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return RatPoly(std::move(c));
}

PolyCone orthant(long n) {
    std::vector<std::vector<Rat>> g;
    for (long i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        g.push_back(std::move(e));
    }
    return {n, std::move(g)};
}

// nonnegative integer monomial matrix (one entry >= 2 per row/column): maps
// the orthant onto itself, and every eigenvalue modulus is a geometric mean
// of entries along a permutation cycle, hence > 1. This is the subfamily of
// nonnegative integer matrices with row sums >= 2 for which phi(C) = C holds
// exactly, which is what the cone statements assume.
RatMatrix random_orthant_instance(std::mt19937& rng, long n) {
    std::uniform_int_distribution<long> entry(2, 5);
    std::vector<long> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMatrix A(n, n);
    for (long i = 0; i < n; ++i) A.at(i, perm[i]) = Rat(entry(rng));
    return A;
}

bool criterion_1() {
    CMEndo e = example_endo("9.1");
    EndoAction act = ns_pullback(e);
    ClassificationReport c = classify(act);
    RatPoly q = RatPoly::linear_root(Rat(4));
    return c.int_amplified && !c.diagonalizable && char_poly(act.mat) == q * q * q * q &&
           !is_squarefree(min_poly(act.mat));
}

bool criterion_2() {
    auto cf = classify(ns_pullback(example_endo("9.4-f")));
    auto cg = classify(ns_pullback(example_endo("9.4-g")));
    CMEndo h = example_endo("9.4-h");
    auto ch = classify(ns_pullback(h));
    bool pol = cf.polarized_profile == ClassificationReport::Polarized::Yes && cf.q_sq == 36 &&
               cg.polarized_profile == ClassificationReport::Polarized::Yes && cg.q_sq == 36;
    CircleProfile pr = circle_profile(h11_charpoly(h), Rat(1));
    return pol && !ch.int_amplified && pr.inside >= 1;
}

bool criterion_3() {
    auto c = classify(ns_pullback(example_endo("9.2")));
    return c.amplified_sufficient == ClassificationReport::Sufficient::Yes && !c.int_amplified;
}

bool criterion_4() {
    EndoAction f = ns_pullback(example_endo("9.4-f"));
    EndoAction g = ns_pullback(example_endo("9.4-g"));
    CompositionReport rep = compose_min_power(f, g);
    // frozen regression values (brute-force oracle, fixed before the build):
    // i_norm_bound = 5; direct test first passes at i = 3 (passing set {0, 3, 4})
    if (rep.i_norm_bound != 5) return false;
    if (rep.passing_below_bound != std::vector<long>{0, 3, 4}) return false;
    long least_passing_positive = 3;
    bool found = false;
    for (long i : rep.passing_below_bound)
        if (i >= 1 && !found) {
            found = true;
            if (i != least_passing_positive) return false;
        }
    if (!found) return false;
    for (long i = rep.i_norm_bound; i <= rep.i_norm_bound + 3; ++i) {
        EndoAction comp;
        comp.mat = g.mat * mat_pow(f.mat, static_cast<unsigned long>(i));
        if (!classify(comp).int_amplified) return false;
    }
    return true;
}

bool criterion_5() {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<long> coef(-9, 9), deg(0, 4), mult(0, 2);
    const std::vector<RatPoly> planted = {P({1, 0, 1}), P({-1, 1}), P({1, 1})};
    int done = 0;
    while (done < 200) {
        RatPoly p = RatPoly::constant(Rat(1));
        for (const RatPoly& f : planted)
            for (long m = mult(rng); m > 0; --m) p = p * f;
        long n = deg(rng);
        std::vector<Rat> c(static_cast<size_t>(n) + 1);
        for (auto& x : c) x = Rat(coef(rng));
        RatPoly r(std::move(c));
        if (r.is_zero()) continue;
        p = p * r;
        if (p.degree() < 1 || p.degree() > 8) continue;
        ++done;

        CircleProfile pr = circle_profile(p, Rat(1));
        // strip zero roots before isolating; they count as inside
        long zero_roots = 0;
        RatPoly q = p;
        while (q.degree() > 0 && q.coeff(0) == 0) {
            q = q.shift_down(1);
            ++zero_roots;
        }
        unsigned prec = 64;
        for (;;) {
            long in = zero_roots, on_cand = 0, out = 0;
            if (q.degree() > 0)
                for (const RootBall& rb : root_balls(q, prec)) {
                    if (rb.ball.abs_upper(prec) < 1)
                        in += rb.multiplicity;
                    else if (rb.ball.abs_lower(prec) > 1)
                        out += rb.multiplicity;
                    else
                        on_cand += rb.multiplicity;
                }
            if (in == pr.inside && out == pr.outside && on_cand == pr.on) break;
            // undecided balls must shrink onto the circle_profile verdict
            if (on_cand < pr.on || prec > 4096) return false;
            prec *= 2;
        }
    }
    return true;
}

bool criterion_6() {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> dim(2, 4), ev(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        long n = dim(rng);
        RatMatrix phi = random_orthant_instance(rng, n);
        RatPoly cp = char_poly(phi);
        CircleProfile pr = circle_profile(cp, Rat(1));
        if (!(pr.inside == 0 && pr.on == 0)) return false;  // family guarantees this
        std::vector<Rat> e(n);
        bool nonzero = false;
        for (auto& x : e) {
            x = Rat(ev(rng));
            nonzero = nonzero || x != 0;
        }
        if (!nonzero) e[0] = 1;
        // v = (phi - id)^(-1) e must lie back in the orthant (Prop 3.2 shape)
        RatMatrix shifted = phi - RatMatrix::identity(n);
        std::vector<Rat> v = inverse(shifted).apply(e);
        if (!cone_contains(orthant(n), v, false).member) return false;
        ConeWitnessReport w = orbit_cone_witness(phi, v, 64);
        if (!w.least_m.has_value() || *w.least_m > 64) return false;
    }
    return true;
}

bool criterion_7() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> dim(2, 4);
    for (int trial = 0; trial < 100; ++trial) {
        long n = dim(rng);
        RatMatrix phi = random_orthant_instance(rng, n);
        ConeWitnessReport rep = verify_pf_lemma(phi, orthant(n));
        if (!rep.premise_ok || !rep.spectral_ok) return false;
    }
    return true;
}

bool criterion_8() {
    for (const char* id : {"9.1", "9.4-f", "9.4-g"}) {
        DegreeBoundReport rep = verify_spectrum_below_degree(example_endo(id));
        if (!rep.ok || rep.degree <= 1) return false;
    }
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> coin(-3, 3), pick(0, 1);
    int done = 0;
    while (done < 50) {
        long d = pick(rng) ? -1 : -3;
        QuadMatrix M(2, d);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j) M.at(i, j) = QuadElem(Rat(coin(rng)), Rat(coin(rng)), d);
        if (M.det().is_zero()) continue;
        CMEndo e{M, true};
        if (!classify(ns_pullback(e)).int_amplified) continue;
        ++done;
        DegreeBoundReport rep = verify_spectrum_below_degree(e);
        if (!rep.ok || rep.degree <= 1) return false;
    }
    return true;
}

bool criterion_9() {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<long> coin(-3, 3), dim(2, 3);
    int done = 0;
    while (done < 100) {
        long n = dim(rng);
        QuadMatrix A(n, -1), B(n, -1);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                A.at(i, j) = QuadElem(Rat(coin(rng)), Rat(coin(rng)), -1);
                B.at(i, j) = QuadElem(Rat(coin(rng)), Rat(coin(rng)), -1);
            }
        if (A.det().is_zero() || B.det().is_zero()) continue;
        ++done;
        CMEndo ea{A, true}, eb{B, true}, eab{A * B, true};
        if (h11_charpoly(ea) != char_poly(ns_pullback(ea).mat)) return false;
        if (ns_pullback(eab).mat != ns_pullback(eb).mat * ns_pullback(ea).mat) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "Example 9.1 reproduction", criterion_1);
    criterion(2, "Example 9.4 reproduction", criterion_2);
    criterion(3, "Example 9.2 reproduction (pinned power)", criterion_3);
    criterion(4, "Theorem 1.3 certificate with frozen regression values", criterion_4);
    criterion(5, "circle_profile vs validated root balls", criterion_5);
    criterion(6, "Proposition 3.2 orthant property suite", criterion_6);
    criterion(7, "Lemma 3.1 verifier consistency", criterion_7);
    criterion(8, "Lemma 3.9/3.10 degree bound verifier", criterion_8);
    criterion(9, "structural consistency of ns_pullback", criterion_9);
    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
