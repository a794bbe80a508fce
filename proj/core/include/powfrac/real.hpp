#ifndef POWFRAC_REAL_HPP
#define POWFRAC_REAL_HPP

// Thin RAII layer over MPFR: a variable-precision real with round-to-nearest
// operators, and a closed interval whose endpoints are always rounded outward.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace powfrac::mp {

using Bits = mpfr_prec_t;

class Real {
public:
    explicit Real(Bits precision = 64);
    Real(double value, Bits precision);
    Real(const mpz_class& value, Bits precision, mpfr_rnd_t rnd = MPFR_RNDN);
    Real(const mpq_class& value, Bits precision, mpfr_rnd_t rnd = MPFR_RNDN);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    Bits precision() const noexcept { return mpfr_get_prec(value_); }
    /// Re-rounds the stored value to a new precision in the given direction.
    void set_precision(Bits precision, mpfr_rnd_t rnd = MPFR_RNDN);

    mpfr_ptr raw() noexcept { return value_; }
    mpfr_srcptr raw() const noexcept { return value_; }

    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    int sign() const noexcept { return mpfr_sgn(value_); }
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

    mpz_class floor() const;
    /// Exact value of the binary float as a rational.
    mpq_class to_rational() const;
    /// Fixed-point decimal with `digits` fractional digits (round to nearest).
    std::string to_fixed(int digits) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

private:
    mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real acos(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, unsigned long n);
Real pi(Bits precision);

/// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
public:
    explicit Interval(Bits precision = 64);
    Interval(Real lo, Real hi);

    static Interval point(const mpz_class& value, Bits precision);
    static Interval point(const mpq_class& value, Bits precision);
    static Interval hull(const mpq_class& lo, const mpq_class& hi, Bits precision);

    const Real& lo() const noexcept { return lo_; }
    const Real& hi() const noexcept { return hi_; }
    Bits precision() const noexcept { return lo_.precision(); }

    /// Raises (never lowers) the working precision; exact, keeps the enclosure.
    void raise_precision(Bits precision);

    bool is_point() const noexcept { return mpfr_equal_p(lo_.raw(), hi_.raw()) != 0; }
    bool strictly_positive() const noexcept { return lo_.sign() > 0; }
    Real width() const;
    Real midpoint() const;
    /// Largest binary exponent among the endpoints (0 for the zero interval).
    long magnitude_exponent() const;

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    Interval& operator*=(const Interval& rhs);
    Interval& operator*=(const mpz_class& rhs);
    /// Division by a positive integer.
    Interval& operator/=(const mpz_class& rhs);

private:
    Real lo_;
    Real hi_;
};

Interval operator+(Interval a, const Interval& b);
Interval operator-(Interval a, const Interval& b);
Interval operator*(Interval a, const Interval& b);
/// x^n for an interval with non-negative lower endpoint.
Interval pow(const Interval& x, unsigned long n);

}  // namespace powfrac::mp

#endif  // POWFRAC_REAL_HPP
