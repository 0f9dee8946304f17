#include "intamp/matrix.hpp"

#include <algorithm>

namespace intamp {

RatMatrix::RatMatrix(long rows, long cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (static_cast<long>(e_.size()) != rows_ * cols_)
        throw DimensionMismatchError("entry count does not match shape");
}

RatMatrix RatMatrix::identity(long n) {
    RatMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError();
    RatMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError();
    RatMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError();
    RatMatrix c(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long k = 0; k < a.cols_; ++k) {
            const Rat& v = a.at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < b.cols_; ++j) c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
    RatMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
    return c;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw DimensionMismatchError();
    std::vector<Rat> r(rows_, Rat(0));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatPoly char_poly(const RatMatrix& A) {
    if (!A.square()) throw NonSquareError();
    const long n = A.rows();
    // Faddeev-LeVerrier: M_0 = I, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_{k-1} ...)/k
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix M = RatMatrix::identity(n);
    for (long k = 1; k <= n; ++k) {
        M = A * M;
        Rat tr(0);
        for (long i = 0; i < n; ++i) tr += M.at(i, i);
        c[n - k] = -tr / Rat(k);
        for (long i = 0; i < n; ++i) M.at(i, i) += c[n - k];
    }
    return RatPoly(std::move(c));
}

namespace {

// Gauss-Jordan on [A | B]; returns false when A is singular.
bool gauss_solve(RatMatrix A, RatMatrix& B) {
    const long n = A.rows();
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != col) {
            for (long j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            for (long j = 0; j < B.cols(); ++j) std::swap(B.at(piv, j), B.at(col, j));
        }
        Rat inv = Rat(1) / A.at(col, col);
        for (long j = 0; j < n; ++j) A.at(col, j) *= inv;
        for (long j = 0; j < B.cols(); ++j) B.at(col, j) *= inv;
        for (long r = 0; r < n; ++r) {
            if (r == col || A.at(r, col) == 0) continue;
            Rat f = A.at(r, col);
            for (long j = 0; j < n; ++j) A.at(r, j) -= f * A.at(col, j);
            for (long j = 0; j < B.cols(); ++j) B.at(r, j) -= f * B.at(col, j);
        }
    }
    return true;
}

// minimal monic annihilator of the Krylov sequence of v
RatPoly vector_min_poly(const RatMatrix& A, std::vector<Rat> v) {
    const long n = A.rows();
    std::vector<std::vector<Rat>> krylov;  // iterates v, Av, A^2 v, ...
    krylov.push_back(v);
    for (long k = 1;; ++k) {
        v = A.apply(v);
        krylov.push_back(v);
        // solve: is krylov[k] a combination of krylov[0..k-1]?  Gaussian elimination.
        long rows = n, cols = k;
        RatMatrix M(rows, cols);
        for (long j = 0; j < cols; ++j)
            for (long i = 0; i < rows; ++i) M.at(i, j) = krylov[j][i];
        std::vector<Rat> rhs = krylov[k];
        // least-degree relation: row reduce [M | rhs]
        std::vector<long> pivot_col(rows, -1);
        long rank = 0;
        for (long col = 0; col < cols && rank < rows; ++col) {
            long piv = -1;
            for (long r = rank; r < rows; ++r)
                if (M.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            if (piv != rank) {
                for (long j = 0; j < cols; ++j) std::swap(M.at(piv, j), M.at(rank, j));
                std::swap(rhs[piv], rhs[rank]);
            }
            Rat inv = Rat(1) / M.at(rank, col);
            for (long j = 0; j < cols; ++j) M.at(rank, j) *= inv;
            rhs[rank] *= inv;
            for (long r = 0; r < rows; ++r) {
                if (r == rank || M.at(r, col) == 0) continue;
                Rat f = M.at(r, col);
                for (long j = 0; j < cols; ++j) M.at(r, j) -= f * M.at(rank, j);
                rhs[r] -= f * rhs[rank];
            }
            pivot_col[rank] = col;
            ++rank;
        }
        bool consistent = true;
        for (long r = rank; r < rows; ++r)
            if (rhs[r] != 0) consistent = false;
        if (!consistent) continue;  // independent, extend Krylov space
        // rhs expressed in terms of iterates: A^k v = sum coeffs[j] A^j v
        std::vector<Rat> coeffs(cols, Rat(0));
        for (long r = 0; r < rank; ++r) coeffs[pivot_col[r]] = rhs[r];
        std::vector<Rat> poly(k + 1, Rat(0));
        poly[k] = 1;
        for (long j = 0; j < cols; ++j) poly[j] = -coeffs[j];
        return RatPoly(std::move(poly));
    }
}

}  // namespace

RatPoly min_poly(const RatMatrix& A) {
    if (!A.square()) throw NonSquareError();
    const long n = A.rows();
    RatPoly m = RatPoly::constant(Rat(1));
    for (long i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        m = poly_lcm(m, vector_min_poly(A, std::move(e)));
        if (m.degree() == n) break;  // cannot exceed char poly degree
    }
    return m.monic();
}

RatMatrix inverse(const RatMatrix& A) {
    if (!A.square()) throw NonSquareError();
    RatMatrix B = RatMatrix::identity(A.rows());
    if (!gauss_solve(A, B)) throw SingularMatrixError();
    return B;
}

Rat det(const RatMatrix& A) {
    if (!A.square()) throw NonSquareError();
    RatPoly p = char_poly(A);
    Rat c = p.constant_term();
    return (A.rows() % 2 == 0) ? c : -c;
}

Rat inf_norm(const RatMatrix& A) {
    Rat best(0);
    for (long i = 0; i < A.rows(); ++i) {
        Rat s(0);
        for (long j = 0; j < A.cols(); ++j) s += rat_abs(A.at(i, j));
        best = std::max(best, s);
    }
    return best;
}

RatMatrix kron(const RatMatrix& A, const RatMatrix& B) {
    RatMatrix c(A.rows() * B.rows(), A.cols() * B.cols());
    for (long i = 0; i < A.rows(); ++i)
        for (long j = 0; j < A.cols(); ++j) {
            if (A.at(i, j) == 0) continue;
            for (long k = 0; k < B.rows(); ++k)
                for (long l = 0; l < B.cols(); ++l)
                    c.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
        }
    return c;
}

RatMatrix mat_pow(const RatMatrix& A, unsigned long k) {
    if (!A.square()) throw NonSquareError();
    RatMatrix r = RatMatrix::identity(A.rows());
    RatMatrix base = A;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

QuadMatrix::QuadMatrix(long n, long d) : n_(n), d_(d), e_(n * n, QuadElem(Rat(0), Rat(0), d)) {}

QuadMatrix::QuadMatrix(long n, long d, std::vector<QuadElem> entries)
    : n_(n), d_(d), e_(std::move(entries)) {
    if (static_cast<long>(e_.size()) != n_ * n_) throw DimensionMismatchError();
    for (const auto& x : e_)
        if (x.d != d_) throw RingMismatchError();
}

QuadMatrix QuadMatrix::identity(long n, long d) {
    QuadMatrix m(n, d);
    for (long i = 0; i < n; ++i) m.at(i, i) = QuadElem(Rat(1), Rat(0), d);
    return m;
}

QuadMatrix QuadMatrix::conj_transpose() const {
    QuadMatrix t(n_, d_);
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j) t.at(j, i) = at(i, j).conj();
    return t;
}

QuadMatrix operator*(const QuadMatrix& a, const QuadMatrix& b) {
    if (a.n_ != b.n_) throw DimensionMismatchError();
    if (a.d_ != b.d_) throw RingMismatchError();
    QuadMatrix c(a.n_, a.d_);
    for (long i = 0; i < a.n_; ++i)
        for (long k = 0; k < a.n_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (long j = 0; j < a.n_; ++j)
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return c;
}

QuadElem QuadMatrix::det() const {
    // Gaussian elimination over the field
    QuadMatrix m = *this;
    QuadElem result(Rat(1), Rat(0), d_);
    for (long col = 0; col < n_; ++col) {
        long piv = -1;
        for (long r = col; r < n_; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return QuadElem(Rat(0), Rat(0), d_);
        if (piv != col) {
            for (long j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            result = -result;
        }
        result = result * m.at(col, col);
        QuadElem inv = m.at(col, col).inverse();
        for (long r = col + 1; r < n_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            QuadElem f = m.at(r, col) * inv;
            for (long j = col; j < n_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return result;
}

std::vector<QuadElem> QuadMatrix::char_poly() const {
    const long n = n_;
    const QuadElem zero(Rat(0), Rat(0), d_);
    const QuadElem one(Rat(1), Rat(0), d_);
    std::vector<QuadElem> c(n + 1, zero);
    c[n] = one;
    QuadMatrix M = QuadMatrix::identity(n, d_);
    for (long k = 1; k <= n; ++k) {
        M = *this * M;
        QuadElem tr = zero;
        for (long i = 0; i < n; ++i) tr = tr + M.at(i, i);
        QuadElem ck = QuadElem(-tr.a / k, -tr.b / k, d_);
        c[n - k] = ck;
        for (long i = 0; i < n; ++i) M.at(i, i) = M.at(i, i) + ck;
    }
    return c;
}

QuadMatrix kron(const QuadMatrix& A, const QuadMatrix& B) {
    if (A.ring() != B.ring()) throw RingMismatchError();
    QuadMatrix c(A.size() * B.size(), A.ring());
    for (long i = 0; i < A.size(); ++i)
        for (long j = 0; j < A.size(); ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (long k = 0; k < B.size(); ++k)
                for (long l = 0; l < B.size(); ++l)
                    c.at(i * B.size() + k, j * B.size() + l) = A.at(i, j) * B.at(k, l);
        }
    return c;
}

}  // namespace intamp
