#ifndef POWFRAC_INT_POLYNOMIAL_HPP
#define POWFRAC_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace powfrac::poly {

/// Exact integer polynomial a_0 + a_1 z + ... + a_d z^d, the carrier of a
/// minimal polynomial.
///
/// Stored primitive (content 1) with a positive leading coefficient; neither
/// normalisation moves the roots.
class IntPolynomial {
public:
    /// Coefficients in ascending degree. Throws BadInput for the zero polynomial
    /// or a constant.
    explicit IntPolynomial(std::vector<mpz_class> ascending);

    /// Accepts an ascending list "[-1,-1,0,1]" or a symbolic form "z^3-z-1"
    /// (variable z or x, optional '*', arbitrary spacing).
    static IntPolynomial parse(std::string_view text);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    const mpz_class& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const mpz_class& leading() const noexcept { return coeffs_.back(); }
    const mpz_class& constant() const noexcept { return coeffs_.front(); }

    bool is_monic() const noexcept { return coeffs_.back() == 1; }
    /// Coefficient palindrome: a_i = a_{d-i}.
    bool is_self_reciprocal() const noexcept;

    /// Symbolic form, highest degree first, e.g. "z^3-z-1".
    std::string to_string() const;
    /// Ascending list form, e.g. "[-1,-1,0,1]".
    std::string to_list_string() const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

/// L(p) = |a_0| + ... + |a_d|.
mpz_class length(const IntPolynomial& p);

}  // namespace powfrac::poly

#endif  // POWFRAC_INT_POLYNOMIAL_HPP
