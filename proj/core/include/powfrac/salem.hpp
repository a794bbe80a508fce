#ifndef POWFRAC_SALEM_HPP
#define POWFRAC_SALEM_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "powfrac/field.hpp"
#include "powfrac/orbit.hpp"
#include "powfrac/poly_algebra.hpp"
#include "powfrac/real.hpp"

namespace powfrac::salem {

struct SalemContext {
    poly::AlgebraicNumber a;
    field::FieldElement xi;
    /// Working precision of phi, U, V and H.
    mp::Bits precision = 0;
    std::vector<mp::Real> phi;
    std::vector<mp::Real> U;
    std::vector<mp::Real> V;
    /// sqrt(U^2 + V^2) per angle.
    std::vector<mp::Real> amplitude;
    mp::Real H;
    long q = 1;
    long ell_residue = 0;

    int m() const noexcept { return static_cast<int>(phi.size()); }
    const mpz_class& L() const noexcept { return xi.L(); }
};

/// Angles at 2 * precision + 64 bits, U and V at the angles, H, the pure
/// period q of b_n mod L and b_q mod L. Throws NotSalem.
SalemContext build_context(const poly::AlgebraicNumber& a, const field::FieldElement& xi, mp::Bits precision);

/// sum_j U(phi_j) cos(k phi_j) - V(phi_j) sin(k phi_j).
mp::Real cosine_sum(const SalemContext& ctx, long k);

/// R_n = cosine_sum at k = q n.
inline mp::Real residual_R(const SalemContext& ctx, long n) { return cosine_sum(ctx, ctx.q * n); }

struct NearIntegerReport {
    long checked = 0;
    long tail_start = 0;
    double max_tail_distance = 0;
    /// Max distance over the second half of the tail is no larger than over the first half.
    bool envelope_nonincreasing = true;
    /// Every nearest integer is congruent to ell_residue mod L.
    bool residues_consistent = true;
    /// Observed nearest integers over the tail with multiplicities.
    std::map<long, long> observed;
};

/// v_n = L y_{qn} + 2 R_n for the samples whose index is a multiple of q.
/// The samples must come from the orbit of xi itself (scale 1).
NearIntegerReport near_integer_check(const SalemContext& ctx, const std::vector<orbit::OrbitSample>& samples,
                                     long tail_start);

struct KroneckerResult {
    std::optional<long> n;
    long scanned = 0;
};

/// Smallest n <= n_max with |U_j cos(q n phi_j) - V_j sin(q n phi_j) - theta_j A_j| <= tol A_j
/// for every j. Phases are exact 128-bit turn fractions; a hit is confirmed
/// in MPFR before it is returned.
KroneckerResult kronecker_search(const SalemContext& ctx, const std::vector<double>& targets, double tol, long n_max);

struct DensityReport {
    double lo = 0;
    double hi = 0;
    int run_bins = 0;
    double max_gap = 0;
    long horizon = 0;
    std::vector<long> histogram;

    double length() const { return hi - lo; }
};

/// Histogram of the values over [0, 1); the longest run of consecutive
/// non-empty bins is the empirical interval, max_gap the largest spacing of
/// values inside it.
DensityReport density_scan(const std::vector<double>& values, int bins);

/// b_n - L x_n - L y_n - (e_0 + ... + e_{d-1} alpha^{1-d}) alpha^{-n} - 2 cosine_sum(n)
/// for a sample of the xi orbit (scale 1).
mp::Real trace_closure_residual(const SalemContext& ctx, const orbit::OrbitSample& sample, const mpz_class& b_n);

}  // namespace powfrac::salem

#endif  // POWFRAC_SALEM_HPP
