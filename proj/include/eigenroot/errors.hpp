// Exception types shared across the library.
#ifndef EIGENROOT_ERRORS_HPP
#define EIGENROOT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigenroot {

// Thrown by the eigenpolynomial solver when lambda_m == lambda_n for some
// m < n, i.e. the triangular system is singular and the monic degree-n
// eigenpolynomial is not unique (or does not exist) at this degree.
class SpectralCollision : public std::runtime_error {
public:
    SpectralCollision(long m, long n)
        : std::runtime_error("spectral collision: lambda_" + std::to_string(m) +
                             " == lambda_" + std::to_string(n)),
          m_(m), n_(n) {}
    long colliding_degree() const noexcept { return m_; }
    long requested_degree() const noexcept { return n_; }

private:
    long m_;
    long n_;
};

// Root finder gave up after reaching the precision ceiling.
class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(long bits)
        : std::runtime_error("root finder did not converge at precision ceiling (" +
                             std::to_string(bits) + " bits)"),
          bits_(bits) {}
    long precision_bits() const noexcept { return bits_; }

private:
    long bits_;
};

// Evaluation point too close to an atom of a discrete measure.
class PoleProximity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Branch continuation target too close to the discriminant locus.
class NearDiscriminant : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Continuation step size underflowed before Newton stabilised.
class ContinuationStall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Not enough usable records for an estimate.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operator DSL syntax error. position() is the byte offset of the first
// offending character in the original input.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : std::runtime_error("syntax error at byte " + std::to_string(position) +
                             ": expected " + expected),
          position_(position), expected_(expected) {}
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// Operator parsed but violates the exactly-solvable shape conditions.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eigenroot

#endif
