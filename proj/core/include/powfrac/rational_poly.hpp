#ifndef POWFRAC_RATIONAL_POLY_HPP
#define POWFRAC_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <vector>

#include "powfrac/int_polynomial.hpp"

namespace powfrac::poly {

/// Dense polynomial over Q, ascending coefficients, never stores a zero
/// leading coefficient. Used internally for gcds, Sturm chains and the
/// reductions behind root counting.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> ascending);
    explicit QPoly(const IntPolynomial& p);

    static QPoly monomial(const mpq_class& c, int k);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    mpq_class coeff(int i) const;
    const mpq_class& leading() const { return c_.back(); }

    QPoly derivative() const;
    /// z^k p(1/z) for k = degree().
    QPoly reciprocal() const;
    /// p(rho z).
    QPoly scaled_argument(const mpq_class& rho) const;
    QPoly monic() const;
    /// Same polynomial times a positive rational so that all coefficients are
    /// coprime integers (signs preserved).
    std::vector<mpz_class> primitive_integer_coeffs() const;

    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const;
    /// Sign as x -> +inf (direction > 0) or -inf (direction < 0).
    int sign_at_infinity(int direction) const;

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const mpq_class& rhs);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const mpq_class& b) { return a *= b; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

struct DivMod {
    QPoly quotient;
    QPoly remainder;
};

DivMod divmod(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
QPoly gcd(QPoly a, QPoly b);
/// Exact quotient; throws Internal if b does not divide a.
QPoly exact_quotient(const QPoly& a, const QPoly& b);

/// Canonical Sturm chain p, p', -rem(...), ... . Counts distinct real roots.
class SturmSequence {
public:
    explicit SturmSequence(const QPoly& p);

    int variations_at(const mpq_class& x) const;
    int variations_at_infinity(int direction) const;
    /// Number of distinct real roots in the half-open interval (a, b].
    int count(const mpq_class& a, const mpq_class& b) const;
    /// Number of distinct real roots in (a, +inf).
    int count_above(const mpq_class& a) const;
    int count_all() const;

private:
    std::vector<QPoly> chain_;
};

struct RationalInterval {
    mpq_class lo;
    mpq_class hi;

    bool is_point() const { return lo == hi; }
    mpq_class width() const { return hi - lo; }
};

/// 1 + max |a_i / a_d|: every complex root has modulus below this.
mpq_class cauchy_bound(const QPoly& p);

/// Isolating intervals (lo, hi] for the distinct real roots of p in (a, b],
/// ascending. A root hit exactly by bisection comes back as a point interval.
std::vector<RationalInterval> isolate_real_roots(const QPoly& p, const mpq_class& a, const mpq_class& b);

/// Shrinks an interval isolating a simple root of p to width <= max_width by
/// exact bisection. Endpoints stay dyadic refinements of the input.
RationalInterval refine_root(const QPoly& p, RationalInterval iv, const mpq_class& max_width);

}  // namespace powfrac::poly

#endif  // POWFRAC_RATIONAL_POLY_HPP
