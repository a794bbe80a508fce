#ifndef POWFRAC_ORBIT_HPP
#define POWFRAC_ORBIT_HPP

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "powfrac/field.hpp"
#include "powfrac/poly_algebra.hpp"

namespace powfrac::orbit {

struct OrbitConfig {
    long horizon = 100;
    /// Bits of y_n that are certified.
    mp::Bits resolution = 64;
    /// Raised automatically to resolution + N log2(alpha) + guard when lower.
    mp::Bits precision_cap = poly::kDefaultPrecisionCap;
    /// The multiplier L applied to xi.
    mpz_class scale = 1;
    /// Use the interval engine even for rational alpha.
    bool force_adaptive = false;
};

/// x_n = floor(L xi alpha^n) and y_n = {L xi alpha^n}.
struct OrbitSample {
    long n = 0;
    mpz_class x;
    /// floor(2^resolution * y_n), always certified.
    mpz_class y_fixed;
    mp::Bits resolution = 0;
    /// Set when y_n is known exactly (rational path or symbolic check).
    std::optional<mpq_class> y_exact;
    mp::Bits bits_used = 0;
    bool exact = false;

    /// y_exact when present, y_fixed / 2^resolution otherwise.
    mpq_class y() const;
    double y_double() const { return y().get_d(); }
    /// Exact fraction, or fixed-point decimal carrying the resolution.
    std::string y_string() const;
};

using SampleSink = std::function<void(const OrbitSample&)>;

/// Precision cap actually used for a configuration.
mp::Bits effective_cap(const OrbitConfig& cfg, const poly::AlgebraicNumber& a);

/// Samples n = 1..horizon in order. Throws PrecisionExhausted when a floor
/// cannot be certified below the cap.
void iterate(const field::FieldElement& xi, const poly::AlgebraicNumber& a, const OrbitConfig& cfg,
             const SampleSink& sink);
std::vector<OrbitSample> iterate(const field::FieldElement& xi, const poly::AlgebraicNumber& a,
                                 const OrbitConfig& cfg);

struct SValue {
    long n = 0;
    mpz_class s;
};

/// s_n = -(a_0 x_n + ... + a_d x_{n+d}) for every n with a full window.
/// The y-side a_0 y_n + ... + a_d y_{n+d} must agree within L(p) 2^-resolution.
std::vector<SValue> s_sequence(const std::vector<OrbitSample>& samples, const poly::IntPolynomial& p);

struct SmallnessReport {
    bool holds = true;
    std::optional<long> first_violation;
    mpq_class sup_norm = 0;
};

/// ||y|| = min(y, 1 - y).
mpq_class circle_norm(const mpq_class& y);

/// Whether ||L xi alpha^n|| < 1 / L(p) on every sample.
SmallnessReport smallness_check(const std::vector<OrbitSample>& samples, const poly::IntPolynomial& p);

/// Truncated decimal expansion with the given number of fractional digits.
std::string fixed_decimal(const mpq_class& value, int digits);

}  // namespace powfrac::orbit

#endif  // POWFRAC_ORBIT_HPP
