#include "intamp/nspullback.hpp"

#include <utility>

namespace intamp {
namespace {

void validate(const CMEndo& e) {
    const long n = e.M.size();
    if (n < 1) throw InputError("endomorphism matrix must be nonempty");
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const QuadElem& x = e.M.at(i, j);
            if (!e.cm && x.b != 0)
                throw RingMismatchError("cm = false requires rational integer entries");
            if (!x.is_integral()) throw RingMismatchError("entry does not lie in the order");
        }
}

QuadElem nonzero_det(const CMEndo& e) {
    QuadElem d = e.M.det();
    if (d.is_zero()) throw SingularEndoError();
    return d;
}

// ---- polynomial arithmetic over the quadratic field (local helper) ----

using QPoly = std::vector<QuadElem>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long qdeg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

QPoly qmod(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    const long db = qdeg(b);
    while (qdeg(r) >= db) {
        QuadElem f = r.back() / b.back();
        long shift = qdeg(r) - db;
        for (long i = 0; i <= db; ++i)
            r[static_cast<size_t>(i + shift)] = r[static_cast<size_t>(i + shift)] - f * b[static_cast<size_t>(i)];
        r.pop_back();
        qtrim(r);
    }
    return r;
}

QuadElem qres(QPoly A, QPoly B, long d) {
    qtrim(A);
    qtrim(B);
    QuadElem acc = QuadElem::from_rat(Rat(1), d);
    if (A.empty() || B.empty()) return QuadElem::from_rat(Rat(0), d);
    for (;;) {
        if (qdeg(B) == 0) {
            QuadElem r = QuadElem::from_rat(Rat(1), d);
            for (long i = 0; i < qdeg(A); ++i) r = r * B.back();
            return acc * r;
        }
        QPoly R = qmod(A, B);
        if (R.empty()) return QuadElem::from_rat(Rat(0), d);
        long da = qdeg(A), db = qdeg(B), dr = qdeg(R);
        QuadElem f = QuadElem::from_rat(Rat(1), d);
        for (long i = 0; i < da - dr; ++i) f = f * B.back();
        if ((da * db) % 2 == 1) f = -f;
        acc = acc * f;
        A = std::move(B);
        B = std::move(R);
    }
}

Rat rat_pow(const Rat& x, long k) {
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= x;
    return r;
}

// (-1)^n c(sqrt(x)) c(-sqrt(x)): monic, roots are the squared roots of c
RatPoly graeffe(const RatPoly& c) {
    const long n = c.degree();
    std::vector<Rat> ev, od;
    for (long i = 0; i <= n; ++i)
        (i % 2 == 0 ? ev : od).push_back(c.coeff(i));
    RatPoly E{std::vector<Rat>(ev)}, O{std::vector<Rat>(od)};
    RatPoly g = E * E - RatPoly::x() * O * O;
    return n % 2 == 1 ? -g : g;
}

}  // namespace

EndoAction ns_pullback(const CMEndo& e) {
    validate(e);
    nonzero_det(e);
    const long n = e.M.size();
    const long d = e.M.ring();
    const QuadElem omega(Rat(0), Rat(1), d);

    std::vector<QuadMatrix> basis;
    for (long k = 0; k < n; ++k) {
        QuadMatrix Ekk(n, d);
        Ekk.at(k, k) = QuadElem::from_rat(Rat(1), d);
        basis.push_back(std::move(Ekk));
    }
    std::vector<std::pair<long, long>> pairs;
    for (long k = 0; k < n; ++k)
        for (long l = k + 1; l < n; ++l) {
            pairs.emplace_back(k, l);
            QuadMatrix S(n, d);
            S.at(k, l) = QuadElem::from_rat(Rat(1), d);
            S.at(l, k) = QuadElem::from_rat(Rat(1), d);
            basis.push_back(S);
            if (e.cm) {
                QuadMatrix A(n, d);
                A.at(k, l) = omega;
                A.at(l, k) = omega.conj();
                basis.push_back(std::move(A));
            }
        }

    const long N = static_cast<long>(basis.size());
    const QuadMatrix Mct = e.M.conj_transpose();
    RatMatrix out(N, N);
    for (long j = 0; j < N; ++j) {
        QuadMatrix T = Mct * basis[static_cast<size_t>(j)] * e.M;
        long row = 0;
        for (long k = 0; k < n; ++k) {
            if (T.at(k, k).b != 0) throw MathError("image is not Hermitian");
            out.at(row++, j) = T.at(k, k).a;
        }
        for (const auto& [k, l] : pairs) {
            out.at(row++, j) = T.at(k, l).a;
            if (e.cm) {
                out.at(row++, j) = T.at(k, l).b;
            } else if (T.at(k, l).b != 0) {
                throw MathError("image is not symmetric over Z");
            }
        }
    }

    EndoAction act;
    act.mat = std::move(out);
    act.degree = endo_degree(e);
    act.provenance = "ns_pullback(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                     (e.cm ? ",cm)" : ",Z)");
    return act;
}

RatPoly h11_charpoly(const CMEndo& e) {
    validate(e);
    nonzero_det(e);
    const long n = e.M.size();
    const long d = e.M.ring();
    const QPoly c = e.M.char_poly();  // monic, degree n

    // full product polynomial: roots lambda_i * conj(lambda_j), degree n^2,
    // as Res_y(c(y), sum_k conj(c_k) x^k y^(n-k)) evaluated and interpolated
    const long dz = n * n;
    std::vector<std::pair<Rat, Rat>> points;
    points.reserve(dz + 1);
    Rat x(0);
    while (static_cast<long>(points.size()) <= dz) {
        x += 1;
        QPoly D(static_cast<size_t>(n) + 1);
        for (long j = 0; j <= n; ++j)
            D[static_cast<size_t>(j)] =
                c[static_cast<size_t>(n - j)].conj() * QuadElem::from_rat(rat_pow(x, n - j), d);
        QuadElem v = qres(c, D, d);
        if (v.b != 0) throw MathError("resultant left the rationals");
        points.emplace_back(x, v.a);
    }
    RatPoly full = lagrange_interpolate(points).monic();

    if (e.cm) return full;

    // symmetric model: keep one copy of each pair product and the squares
    std::vector<Rat> cr(c.size());
    for (size_t i = 0; i < c.size(); ++i) cr[i] = c[i].a;
    RatPoly G = graeffe(RatPoly(std::move(cr)));         // roots lambda_i^2
    RatPoly A = poly_sqrt_exact(RatPoly::div_exact(full, G).monic());  // i < j part
    return (A * G).monic();
}

Int endo_degree(const CMEndo& e) {
    validate(e);
    QuadElem det = nonzero_det(e);
    if (!det.is_integral()) throw NonIntegralDegreeError();
    Rat nrm = det.norm();
    if (!is_integer(nrm) || nrm <= 0) throw NonIntegralDegreeError();
    return num(nrm);
}

}  // namespace intamp
