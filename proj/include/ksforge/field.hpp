#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ksforge {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number with 64-bit numerator and denominator.
/// Always stored reduced with positive denominator; arithmetic throws
/// FieldError on overflow instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// "5", "-1/2"
    std::string str() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

/// Element of the rational field extended by sqrt(2) and sqrt(3):
///
///     a + b*sqrt2 + c*sqrt3 + d*sqrt6
///
/// with exact rational coefficients. This field contains every vector
/// component used by the shipped ray tables (1/sqrt2, sqrt3/2, sqrt6/4, ...),
/// so orthogonality is decided exactly, never numerically.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(long long n) : a_(n) {}
    AlgebraicNumber(const Rational& a) : a_(a) {}
    AlgebraicNumber(Rational a, Rational b, Rational c, Rational d)
        : a_(a), b_(b), c_(c), d_(d) {}

    static AlgebraicNumber sqrt2() { return {0, 1, 0, 0}; }
    static AlgebraicNumber sqrt3() { return {0, 0, 1, 0}; }
    static AlgebraicNumber sqrt6() { return {0, 0, 0, 1}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    const Rational& sqrt3_part() const { return c_; }
    const Rational& sqrt6_part() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_rational() const {
        return b_.is_zero() && c_.is_zero() && d_.is_zero();
    }

    AlgebraicNumber operator-() const { return {-a_, -b_, -c_, -d_}; }
    AlgebraicNumber operator+(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-(const AlgebraicNumber& o) const;
    AlgebraicNumber operator*(const AlgebraicNumber& o) const;
    AlgebraicNumber operator/(const AlgebraicNumber& o) const;

    /// Multiplicative inverse via the four Galois conjugates.
    /// Throws FieldError for zero.
    AlgebraicNumber inverse() const;

    bool operator==(const AlgebraicNumber& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

    /// Exact text form over integers, r2, r3, r6 and '/':
    /// "0", "1", "-1/2", "r6/4", "1/2+r6/4", "3r2/4".
    std::string str() const;

    /// Parses the str() syntax. Throws FieldError on malformed input.
    static AlgebraicNumber parse(const std::string& text);

private:
    Rational a_, b_, c_, d_;
};

}  // namespace ksforge
