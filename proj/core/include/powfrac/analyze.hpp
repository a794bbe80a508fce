#ifndef POWFRAC_ANALYZE_HPP
#define POWFRAC_ANALYZE_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "powfrac/field.hpp"
#include "powfrac/orbit.hpp"
#include "powfrac/poly_algebra.hpp"

namespace powfrac::analyze {

struct Cluster {
    mpq_class center;
    long population = 0;
    mpq_class max_deviation;
};

/// Desk proxy of the limit set: clusters of y_n for warmup < n <= horizon,
/// sorted by center.
struct LimitPointReport {
    std::vector<Cluster> clusters;
    mpq_class epsilon;
    long warmup = 0;
    long horizon = 0;

    std::vector<mpq_class> centers() const;
};

/// Online leader clustering on R/Z in input order: a value joins the nearest
/// anchor within epsilon (circle distance) or founds a new one. Reported
/// centers are lower medians of the members, so a member may sit up to
/// 2 epsilon from its center. The cluster anchored near 0 = 1 is reported as
/// two clusters, one per side of 1/2.
LimitPointReport cluster_limit_points(const std::vector<mpq_class>& y, const mpq_class& epsilon, long warmup);
LimitPointReport cluster_limit_points(const std::vector<orbit::OrbitSample>& samples, const mpq_class& epsilon,
                                      long warmup);

/// Every center within tol of some k/L, k = 0..L.
bool pv_verify(const LimitPointReport& report, const mpz_class& L, const mpq_class& tol);

struct ProjectionReport {
    /// {0} u {frac(L c)} u {1} over the base centers, sorted.
    std::vector<mpq_class> targets;
    LimitPointReport scaled;
    mpq_class max_miss;
};

/// Checks that the clusters of the L-scaled orbit sit within tol of the
/// projected base centers. Throws ToleranceViolation otherwise.
ProjectionReport scale_and_project(const LimitPointReport& base, const LimitPointReport& scaled, const mpz_class& L,
                                   const mpq_class& tol);

/// p/q with the smallest q <= den_max such that |x - p/q| <= tol.
std::optional<mpq_class> detect_rational(const mpq_class& x, const mpq_class& tol, long den_max);

struct DifferenceStructure {
    /// mu_i - mu_j >= 0 over the centers, sorted and deduplicated.
    std::vector<mpq_class> differences;
    /// lcm of the detected rational denominators in S u D(S).
    mpz_class L_common = 1;
    /// {frac(L_common mu)} over the irrational centers.
    std::vector<mpq_class> scaled_irrational;
    /// min ||a_d (eta - eta')|| over S_L* u {0, 1}, eta > eta', (eta, eta') != (1, 0).
    std::optional<mpq_class> tau;
    /// tau comes from cluster centers, not the true limit set.
    bool tau_is_proxy = true;
    bool tau_in_range = true;
};

DifferenceStructure difference_structure(const LimitPointReport& report, const mpz_class& a_d, const mpq_class& rat_tol,
                                         long den_max = 64);

struct EtaAssignment {
    /// First sample index n that was assigned.
    long first_n = 0;
    /// Index into the center list for each n >= first_n.
    std::vector<int> ids;
    std::vector<mpq_class> centers;
};

/// Nearest center (linear distance on [0, 1]) for each y_n with n > warmup.
/// Throws EtaAssignment when some y_n is farther than `radius` from all centers.
EtaAssignment assign_eta(const std::vector<orbit::OrbitSample>& samples, const LimitPointReport& report,
                         const mpq_class& radius);

struct Collision {
    long m = 0;
    long r = 0;
};

/// Lexicographically smallest (m, r), m > r, with equal windows
/// (eta_h, ..., eta_{h+d}). Throws NoCollision, quoting the (g+2)^(d+1) bound.
Collision find_vector_collision(const EtaAssignment& eta, int d, long g);

struct ContractionReport {
    field::FieldElement xi_prime;
    bool holds = false;
    mpq_class max_norm;
    std::optional<long> first_violation;
    /// 2 epsilon < 1 / L(p).
    bool gate = false;
};

/// Orbit of xi' = L xi (alpha^m - alpha^r) for warmup < n <= horizon against 2 epsilon.
ContractionReport verify_contraction(const field::FieldElement& xi, const poly::AlgebraicNumber& a, const mpz_class& L,
                                     long m, long r, const mpq_class& epsilon, long horizon, long warmup = 0,
                                     mp::Bits resolution = 64);

struct PeriodReport {
    bool pure = false;
    long period = 0;
    long preperiod = 0;
    long modulus = 1;
    /// gcd(A_0, L) = 1 yet a preperiod was found.
    bool lemma_violation = false;
};

/// State-window period of b_{k+d} + A_{d-1} b_{k+d-1} + ... + A_0 b_k = 0
/// modulo L, with A given as A_0, ..., A_{d-1} and init b_0, ..., b_{d-1}.
PeriodReport pure_period_mod(const std::vector<mpz_class>& A, const std::vector<mpz_class>& init, long L, long scan);

struct UltimatePeriod {
    long period = 0;
    /// 1-based index where the periodic tail starts.
    long start = 1;
};

/// Smallest t <= max_t, then smallest n0, with seq[n + t] = seq[n] for all
/// n >= n0 in the window; the tail must cover at least half the window.
std::optional<UltimatePeriod> ultimate_period_scan(const std::vector<mpz_class>& seq, long max_t);

}  // namespace powfrac::analyze

#endif  // POWFRAC_ANALYZE_HPP
