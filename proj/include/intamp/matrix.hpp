#ifndef INTAMP_MATRIX_HPP
#define INTAMP_MATRIX_HPP

#include <vector>

#include "intamp/poly.hpp"
#include "intamp/quad.hpp"

namespace intamp {

/** Dense matrix over Q, row major. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    RatMatrix(long rows, long cols, std::vector<Rat> entries);

    static RatMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    Rat& at(long i, long j) { return e_[i * cols_ + j]; }
    const Rat& at(long i, long j) const { return e_[i * cols_ + j]; }
    const std::vector<Rat>& entries() const { return e_; }

    RatMatrix transpose() const;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rat& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    long rows_{0}, cols_{0};
    std::vector<Rat> e_;
};

/** Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier. */
RatPoly char_poly(const RatMatrix& A);

/** Monic minimal polynomial via per-basis-vector Krylov relations. */
RatPoly min_poly(const RatMatrix& A);

RatMatrix inverse(const RatMatrix& A);
Rat det(const RatMatrix& A);

/** Max row sum of absolute entries. */
Rat inf_norm(const RatMatrix& A);

RatMatrix kron(const RatMatrix& A, const RatMatrix& B);

RatMatrix mat_pow(const RatMatrix& A, unsigned long k);

/** n x n matrix over the order of discriminant tag d. */
class QuadMatrix {
public:
    QuadMatrix() = default;
    QuadMatrix(long n, long d);
    QuadMatrix(long n, long d, std::vector<QuadElem> entries);

    static QuadMatrix identity(long n, long d);

    long size() const { return n_; }
    long ring() const { return d_; }
    QuadElem& at(long i, long j) { return e_[i * n_ + j]; }
    const QuadElem& at(long i, long j) const { return e_[i * n_ + j]; }

    QuadMatrix conj_transpose() const;

    friend QuadMatrix operator*(const QuadMatrix& a, const QuadMatrix& b);

    QuadElem det() const;

    /** Monic characteristic polynomial over the field, low degree first. */
    std::vector<QuadElem> char_poly() const;

private:
    long n_{0};
    long d_{-1};
    std::vector<QuadElem> e_;
};

/** kron for matrices over the order (eigenvalues multiply). */
QuadMatrix kron(const QuadMatrix& A, const QuadMatrix& B);

}  // namespace intamp

#endif  // INTAMP_MATRIX_HPP
