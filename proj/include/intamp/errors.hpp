#ifndef INTAMP_ERRORS_HPP
#define INTAMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace intamp {

/** Base class for all mathematical errors raised by the library. */
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

class NonSquareError : public MathError {
public:
    explicit NonSquareError(const std::string& what = "matrix is not square") : MathError(what) {}
};

class SingularMatrixError : public MathError {
public:
    explicit SingularMatrixError(const std::string& what = "matrix is singular") : MathError(what) {}
};

class DimensionMismatchError : public MathError {
public:
    explicit DimensionMismatchError(const std::string& what = "dimension mismatch") : MathError(what) {}
};

class ZeroPolynomialError : public MathError {
public:
    explicit ZeroPolynomialError(const std::string& what = "zero polynomial") : MathError(what) {}
};

class RingMismatchError : public MathError {
public:
    explicit RingMismatchError(const std::string& what = "ring tags differ") : MathError(what) {}
};

class SingularEndoError : public MathError {
public:
    explicit SingularEndoError(const std::string& what = "endomorphism matrix is singular") : MathError(what) {}
};

class NonIntegralDegreeError : public MathError {
public:
    explicit NonIntegralDegreeError(const std::string& what = "determinant is not integral in the order")
        : MathError(what) {}
};

class NotInvariantError : public MathError {
public:
    explicit NotInvariantError(const std::string& what = "cone is not invariant under the action")
        : MathError(what) {}
};

class ConeDegenerateError : public MathError {
public:
    explicit ConeDegenerateError(const std::string& what = "cone is degenerate") : MathError(what) {}
};

class SpectrumNotExpandingError : public MathError {
public:
    explicit SpectrumNotExpandingError(const std::string& what = "some eigenvalue has modulus <= 1")
        : MathError(what) {}
};

class NotIntAmplifiedError : public MathError {
public:
    explicit NotIntAmplifiedError(const std::string& what = "action is not int-amplified")
        : MathError(what) {}
};

class HypothesisNotMetError : public MathError {
public:
    explicit HypothesisNotMetError(const std::string& what = "hypothesis of the verifier is not met")
        : MathError(what) {}
};

/** Malformed external input (JSON schema violations, bad flags). */
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace intamp

#endif  // INTAMP_ERRORS_HPP
