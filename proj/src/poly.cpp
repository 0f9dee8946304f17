#include "intamp/poly.hpp"

#include <algorithm>

namespace intamp {

Rat RatPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

GaussRat RatPoly::eval(const GaussRat& z) const {
    GaussRat r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + GaussRat(*it, Rat(0));
    return r;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(i) * c_[i];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw ZeroPolynomialError("monic of zero polynomial");
    if (c_.back() == 1) return *this;
    std::vector<Rat> d(c_);
    for (auto& v : d) v /= c_.back();
    return RatPoly(std::move(d));
}

RatPoly RatPoly::reversed() const {
    std::vector<Rat> d(c_.rbegin(), c_.rend());
    return RatPoly(std::move(d));
}

RatPoly RatPoly::scale_arg(const Rat& s) const {
    std::vector<Rat> d(c_);
    Rat f(1);
    for (size_t i = 1; i < d.size(); ++i) {
        f *= s;
        d[i] *= f;
    }
    return RatPoly(std::move(d));
}

RatPoly RatPoly::compose_x2() const {
    if (is_zero()) return RatPoly();
    std::vector<Rat> d(2 * c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) d[2 * i] = c_[i];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::shift_down(long k) const {
    for (long i = 0; i < k; ++i) {
        if (coeff(i) != 0) throw MathError("shift_down: not divisible by x^k");
    }
    if (static_cast<long>(c_.size()) <= k) return RatPoly();
    return RatPoly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
    std::vector<Rat> d(std::max(p.c_.size(), q.c_.size()), Rat(0));
    for (size_t i = 0; i < p.c_.size(); ++i) d[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) d[i] += q.c_[i];
    return RatPoly(std::move(d));
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) { return p + (-q); }

RatPoly operator-(const RatPoly& p) {
    std::vector<Rat> d(p.c_);
    for (auto& v : d) v = -v;
    return RatPoly(std::move(d));
}

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return RatPoly();
    std::vector<Rat> d(p.c_.size() + q.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) d[i + j] += p.c_[i] * q.c_[j];
    }
    return RatPoly(std::move(d));
}

RatPoly operator*(const Rat& s, const RatPoly& p) {
    std::vector<Rat> d(p.c_);
    for (auto& v : d) v *= s;
    return RatPoly(std::move(d));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
    if (p.degree() < q.degree()) return {RatPoly(), p};
    std::vector<Rat> rem(p.c_);
    std::vector<Rat> quo(p.c_.size() - q.c_.size() + 1, Rat(0));
    const long dq = q.degree();
    for (long i = static_cast<long>(rem.size()) - 1; i >= dq; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / q.lc();
        quo[i - dq] = f;
        for (long j = 0; j <= dq; ++j) rem[i - dq + j] -= f * q.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::div_exact(const RatPoly& p, const RatPoly& q) {
    auto [quo, rem] = divmod(p, q);
    if (!rem.is_zero()) throw MathError("inexact polynomial division");
    return quo;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = RatPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

bool is_squarefree(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = p.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm
    RatPoly fp = f.derivative();
    RatPoly a = poly_gcd(f, fp);
    RatPoly b = RatPoly::div_exact(f, a);
    RatPoly c = RatPoly::div_exact(fp, a);
    RatPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPoly g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = RatPoly::div_exact(b, g);
        c = RatPoly::div_exact(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Sturm chain of the squarefree part
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly f = RatPoly::div_exact(p.monic(), poly_gcd(p, p.derivative()));
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero()) {
        RatPoly r = RatPoly::divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

long variations(const std::vector<RatPoly>& chain, const Rat& x) {
    long v = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = sgn(f.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
    }
    return v;
}

long variations_at_inf(const std::vector<RatPoly>& chain, int dir) {
    long v = 0;
    int prev = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sgn(f.lc());
        if (dir < 0 && (f.degree() % 2) == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

long sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    if (chain[0].eval(a) == 0 || chain[0].eval(b) == 0)
        throw MathError("sturm_count: endpoint is a root");
    return variations(chain, a) - variations(chain, b);
}

long sturm_count_all(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

Rat root_bound(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    Rat m(0);
    for (long i = 0; i < p.degree(); ++i) m = std::max(m, rat_abs(p.coeff(i) / p.lc()));
    return Rat(1) + m;
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton's divided differences
    const size_t n = points.size();
    std::vector<Rat> coef(n);
    std::vector<Rat> f(n);
    for (size_t i = 0; i < n; ++i) f[i] = points[i].second;
    coef[0] = f[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i)
            f[i] = (f[i + 1] - f[i]) / (points[i + k].first - points[i].first);
        coef[k] = f[0];
    }
    RatPoly result = RatPoly::constant(coef[n - 1]);
    for (size_t k = n - 1; k-- > 0;) {
        result = result * RatPoly::linear_root(points[k].first) + RatPoly::constant(coef[k]);
    }
    return result;
}

RatPoly poly_sqrt_exact(const RatPoly& p) {
    if (p.is_zero()) return RatPoly();
    if (p.degree() % 2 != 0 || !p.is_monic()) throw MathError("poly_sqrt_exact: not a monic square");
    long m = p.degree() / 2;
    // long division from the top: determine coefficients of q, q^2 = p
    std::vector<Rat> q(m + 1, Rat(0));
    q[m] = 1;
    for (long k = m - 1; k >= 0; --k) {
        // coefficient of x^(m+k) in q^2 equals p[m+k]
        Rat s(0);
        for (long i = k + 1; i <= m - 1; ++i) {
            long j = m + k - i;
            if (j > m || j < 0 || j <= k) continue;
            s += q[i] * q[j];
        }
        q[k] = (p.coeff(m + k) - s) / 2;  // 2*q[m]*q[k] term, q[m] = 1
    }
    RatPoly root{std::vector<Rat>(q)};
    if (!(root * root == p)) throw MathError("poly_sqrt_exact: input is not a perfect square");
    return root;
}

RatPoly poly_lcm(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    return RatPoly::div_exact(a * b, poly_gcd(a, b)).monic();
}

}  // namespace intamp
