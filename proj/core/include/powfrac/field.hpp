#ifndef POWFRAC_FIELD_HPP
#define POWFRAC_FIELD_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powfrac/int_polynomial.hpp"
#include "powfrac/poly_algebra.hpp"
#include "powfrac/real.hpp"

namespace powfrac::field {

/// (e_0 + e_1 alpha + ... + e_{d-1} alpha^{d-1}) / L in Q(alpha), kept in
/// lowest terms with L > 0. The base field is identified by its minimal
/// polynomial.
class FieldElement {
public:
    /// Coefficients beyond degree d-1 are reduced modulo the minimal polynomial.
    FieldElement(poly::IntPolynomial modulus, std::vector<mpz_class> e, mpz_class L = 1);

    static FieldElement from_rational(poly::IntPolynomial modulus, const mpq_class& value);
    static FieldElement from_coefficients(poly::IntPolynomial modulus, const std::vector<mpq_class>& c);
    /// alpha itself.
    static FieldElement generator(poly::IntPolynomial modulus);

    /// "(e0,e1,...)/L", "(e0,e1,...)", an integer, "p/q", or a decimal such as
    /// "0.125" (converted exactly).
    static FieldElement parse(std::string_view text, const poly::IntPolynomial& modulus);

    const poly::IntPolynomial& modulus() const noexcept { return modulus_; }
    const std::vector<mpz_class>& e() const noexcept { return e_; }
    const mpz_class& L() const noexcept { return L_; }
    int degree() const noexcept { return modulus_.degree(); }

    std::vector<mpq_class> coefficients() const;
    bool is_zero() const;
    std::optional<mpq_class> rational_value() const;

    /// Enclosure of the value for a given enclosure of alpha.
    mp::Interval evaluate(const mp::Interval& alpha) const;

    std::string to_string() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.modulus_ == b.modulus_ && a.e_ == b.e_ && a.L_ == b.L_;
    }

private:
    void normalize();

    poly::IntPolynomial modulus_;
    std::vector<mpz_class> e_;
    mpz_class L_;
};

/// Integer, "p/q" or decimal literal as an exact rational.
mpq_class parse_rational(std::string_view text);

enum class FieldOp { Add, Sub, Mul };

/// Exact ring operation in Q(alpha). Throws BaseMismatch for different fields.
FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return field_arith(x, y, FieldOp::Add); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return field_arith(x, y, FieldOp::Sub); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return field_arith(x, y, FieldOp::Mul); }

FieldElement pow(const FieldElement& x, unsigned long n);

/// Exact sign of the element evaluated at the designated root.
int sign(const FieldElement& x, const poly::AlgebraicNumber& a);

/// Tr(alpha^0), ..., Tr(alpha^N).
std::vector<mpq_class> power_sums(const poly::IntPolynomial& p, long N);
inline std::vector<mpq_class> power_sums(const poly::AlgebraicNumber& a, long N) { return power_sums(a.minpoly(), N); }

mpq_class trace(const FieldElement& x);

/// b_1, ..., b_N with b_n = Tr(L xi alpha^n). Needs a monic minimal
/// polynomial; the recurrence sum a_i b_{n+i} = 0 is checked on the output.
std::vector<mpz_class> trace_sequence(const FieldElement& xi, long N);

}  // namespace powfrac::field

#endif  // POWFRAC_FIELD_HPP
