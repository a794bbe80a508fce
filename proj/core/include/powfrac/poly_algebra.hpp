#ifndef POWFRAC_POLY_ALGEBRA_HPP
#define POWFRAC_POLY_ALGEBRA_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "powfrac/int_polynomial.hpp"
#include "powfrac/rational_poly.hpp"
#include "powfrac/real.hpp"

namespace powfrac::poly {

inline constexpr mp::Bits kDefaultPrecision = 128;
inline constexpr mp::Bits kDefaultPrecisionCap = 4096;

struct UnitCircleCounts {
    int inside = 0;
    int on = 0;
    int outside = 0;

    friend bool operator==(const UnitCircleCounts&, const UnitCircleCounts&) = default;
};

/// Certified root counts of a squarefree polynomial relative to |z| = 1.
///
/// Roots on the circle are read off the self-reciprocal factor
/// g = gcd(p, z^d p(1/z)): after removing z = +-1, g(z) = z^k h(z + 1/z) and
/// the circle roots are exactly the real roots of h in (-2, 2). Off-circle roots
/// of g pair up as (z, 1/z). The cofactor p / g is free of circle roots and of
/// reciprocal pairs; its disc count comes from an exact Schur-Cohn recursion,
/// falling back to the sandwich |z| < 1 - 2^-k versus |z| < 1 + 2^-k when the
/// recursion hits a singular step. `precision` bounds k.
UnitCircleCounts unit_circle_counts(const IntPolynomial& p, mp::Bits precision = kDefaultPrecision);

/// Number of roots of q strictly inside |z| < 1 by the Schur-Cohn transform
/// T q = q(0) q - a_n q*. Empty when a step is singular (|q(0)| = |a_n|).
std::optional<int> schur_cohn_inside(const QPoly& q);

/// h with g(z) = z^k h(z + 1/z) for a palindromic g of even degree 2k.
QPoly chebyshev_transform(const QPoly& palindromic);

enum class Classification { PV, Salem, Neither };
enum class Irreducibility { Proved, Unverified };

std::string_view to_string(Classification c) noexcept;
std::string_view to_string(Irreducibility s) noexcept;

/// Numerical enclosure of one conjugate: a disc of the given radius around
/// (re, im) that provably contains exactly one root, up to the rounding of the
/// radius computation itself at `precision` bits.
struct ConjugateBox {
    mp::Real re;
    mp::Real im;
    mp::Real radius;
    bool designated = false;
};

/// The designated real root alpha > 1 of a (checked) minimal polynomial.
class AlgebraicNumber {
public:
    const IntPolynomial& minpoly() const noexcept { return minpoly_; }
    int degree() const noexcept { return minpoly_.degree(); }
    const RationalInterval& alpha_interval() const noexcept { return alpha_interval_; }
    Classification classification() const noexcept { return classification_; }
    Irreducibility irreducibility() const noexcept { return irreducibility_; }
    /// Prime p with p irreducible modulo p, when one was found.
    std::optional<long> irreducibility_witness() const noexcept { return witness_prime_; }
    const UnitCircleCounts& counts() const noexcept { return counts_; }
    const std::vector<ConjugateBox>& conjugates() const noexcept { return conjugates_; }
    mp::Bits conjugate_precision() const noexcept { return conjugate_bits_; }

    bool is_algebraic_integer() const noexcept { return minpoly_.is_monic(); }
    /// alpha itself when the degree is 1.
    std::optional<mpq_class> rational_value() const;

    /// Interval of absolute width <= 2^-bits containing alpha (Newton with
    /// exact sign verification at dyadic endpoints).
    mp::Interval enclosure(mp::Bits bits) const;
    double approx() const;

    /// Upper bound on max |alpha_j| over the non-designated conjugates.
    double max_conjugate_modulus() const;

private:
    friend AlgebraicNumber classify(const IntPolynomial&, mp::Bits);
    explicit AlgebraicNumber(IntPolynomial p) : minpoly_(std::move(p)) {}

    IntPolynomial minpoly_;
    RationalInterval alpha_interval_;
    Classification classification_ = Classification::Neither;
    Irreducibility irreducibility_ = Irreducibility::Unverified;
    std::optional<long> witness_prime_;
    UnitCircleCounts counts_;
    std::vector<ConjugateBox> conjugates_;
    mp::Bits conjugate_bits_ = 0;
};

/// PV iff monic, d-1 roots strictly inside and none on the circle. Salem iff
/// monic, self-reciprocal, at least one root on the circle, exactly one
/// outside and the rest inside. Neither otherwise (including non-monic).
AlgebraicNumber classify(const IntPolynomial& p, mp::Bits precision = kDefaultPrecision);

/// True when p is irreducible over F_prime (p not vanishing mod prime in its
/// leading coefficient). Ben-Or test.
bool irreducible_mod_prime(const IntPolynomial& p, long prime);

/// Complex roots with certified inclusion discs.
std::vector<ConjugateBox> complex_roots(const IntPolynomial& p, mp::Bits precision);

/// Narrow an isolating interval of a simple root to width <= 2^-bits.
RationalInterval refine_root_to_bits(const IntPolynomial& p, const RationalInterval& iv, mp::Bits bits);

struct AngleEnclosure {
    mp::Real lo;
    mp::Real hi;

    mp::Real mid() const;
};

/// Arguments phi_1 < ... < phi_m in (0, pi) of the upper-half-plane
/// unit-circle conjugates of a Salem number, each of width <= 2^-precision.
/// Throws NotSalem otherwise.
std::vector<AngleEnclosure> conjugate_arguments(const AlgebraicNumber& a, mp::Bits precision);

}  // namespace powfrac::poly

#endif  // POWFRAC_POLY_ALGEBRA_HPP
