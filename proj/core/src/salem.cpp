#include "powfrac/salem.hpp"

#include <algorithm>
#include <cmath>

#include "powfrac/analyze.hpp"
#include "powfrac/error.hpp"

namespace powfrac::salem {

namespace {

using mp::Bits;
using mp::Real;

constexpr std::string_view kModule = "salem";
constexpr long kMaxPeriodScan = 20'000'000;

__extension__ typedef unsigned __int128 u128;

u128 turn_fraction(const Real& phi) {
    // phi / (2 pi) as a 128-bit fixed-point fraction.
    const Bits prec = std::max<Bits>(phi.precision(), 256);
    Real t(prec);
    Real two_pi = mp::pi(prec);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);
    mpfr_div(t.raw(), phi.raw(), two_pi.raw(), MPFR_RNDN);
    mpfr_mul_2ui(t.raw(), t.raw(), 128, MPFR_RNDN);
    const mpz_class f = t.floor();
    mpz_class hi, lo;
    mpz_fdiv_q_2exp(hi.get_mpz_t(), f.get_mpz_t(), 64);
    mpz_fdiv_r_2exp(lo.get_mpz_t(), f.get_mpz_t(), 64);
    return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
}

double turn_to_radians(u128 phase) {
    return static_cast<double>(static_cast<std::uint64_t>(phase >> 64)) * 0x1p-64 * 2.0 * M_PI;
}

bool within(const SalemContext& ctx, const std::vector<double>& targets, double tol, long n) {
    for (int j = 0; j < ctx.m(); ++j) {
        const auto jj = static_cast<std::size_t>(j);
        Real k = ctx.phi[jj];
        mpfr_mul_si(k.raw(), k.raw(), ctx.q * n, MPFR_RNDN);
        const Real v = ctx.U[jj] * mp::cos(k) - ctx.V[jj] * mp::sin(k);
        const double a = ctx.amplitude[jj].to_double();
        if (std::fabs(v.to_double() - targets[jj] * a) > tol * a) return false;
    }
    return true;
}

}  // namespace

SalemContext build_context(const poly::AlgebraicNumber& a, const field::FieldElement& xi, Bits precision) {
    const Bits bits = 2 * precision + 64;
    auto angles = poly::conjugate_arguments(a, bits);
    const auto& p = a.minpoly();
    if (p.constant() != 1 || p.leading() != 1) {
        throw Error(ErrorKind::NotSalem, kModule, "a Salem minimal polynomial has a_0 = a_d = 1");
    }
    if (!(xi.modulus() == p)) throw Error(ErrorKind::BaseMismatch, kModule, "xi lives in a different field");

    SalemContext ctx{a, xi, bits, {}, {}, {}, {}, Real(bits), 1, 0};
    for (auto& e : angles) {
        Real phi = e.mid();
        phi.set_precision(bits);
        Real u(bits), v(bits);
        for (std::size_t k = 0; k < xi.e().size(); ++k) {
            if (xi.e()[k] == 0) continue;
            Real kphi = phi;
            mpfr_mul_ui(kphi.raw(), kphi.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
            const Real coeff(xi.e()[k], bits);
            u += coeff * mp::cos(kphi);
            v += coeff * mp::sin(kphi);
        }
        ctx.amplitude.push_back(mp::sqrt(u * u + v * v));
        ctx.H += ctx.amplitude.back();
        ctx.phi.push_back(std::move(phi));
        ctx.U.push_back(std::move(u));
        ctx.V.push_back(std::move(v));
    }
    Real floor_value(bits);
    mpfr_set_ui_2exp(floor_value.raw(), 1, -static_cast<mpfr_exp_t>(precision), MPFR_RNDN);
    if (!(ctx.H > floor_value)) {
        throw Error(ErrorKind::Internal, kModule, "H vanished numerically; xi cannot be a valid field element");
    }

    const long L = xi.L().get_si();
    const int d = p.degree();
    if (!xi.L().fits_slong_p() || L > (1L << 31)) throw Error(ErrorKind::BadInput, kModule, "L too large");
    const auto b = field::trace_sequence(xi, d);
    std::vector<mpz_class> A(p.coeffs().begin(), p.coeffs().end() - 1);
    const auto period = analyze::pure_period_mod(A, b, L, kMaxPeriodScan);
    if (!period.pure) throw Error(ErrorKind::Internal, kModule, "b_n mod L is not purely periodic");
    ctx.q = period.period;
    const auto bq = field::trace_sequence(xi, ctx.q);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), bq.back().get_mpz_t(), static_cast<unsigned long>(L));
    ctx.ell_residue = r.get_si();
    return ctx;
}

Real cosine_sum(const SalemContext& ctx, long k) {
    Real sum(ctx.precision);
    for (int j = 0; j < ctx.m(); ++j) {
        const auto jj = static_cast<std::size_t>(j);
        Real kphi = ctx.phi[jj];
        mpfr_mul_si(kphi.raw(), kphi.raw(), k, MPFR_RNDN);
        sum += ctx.U[jj] * mp::cos(kphi) - ctx.V[jj] * mp::sin(kphi);
    }
    return sum;
}

NearIntegerReport near_integer_check(const SalemContext& ctx, const std::vector<orbit::OrbitSample>& samples,
                                     long tail_start) {
    NearIntegerReport rep;
    rep.tail_start = tail_start;
    const long L = ctx.L().get_si();
    std::vector<double> tail;
    for (const auto& s : samples) {
        if (s.n % ctx.q != 0) continue;
        const long n = s.n / ctx.q;
        ++rep.checked;
        Real v(s.y() * mpq_class(ctx.L()), ctx.precision);
        Real r = residual_R(ctx, n);
        mpfr_mul_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
        v += r;
        Real rounded(ctx.precision);
        mpfr_round(rounded.raw(), v.raw());
        const double dist = mp::abs(v - rounded).to_double();
        if (n < tail_start) continue;
        const long integer = rounded.floor().get_si();
        tail.push_back(dist);
        rep.max_tail_distance = std::max(rep.max_tail_distance, dist);
        ++rep.observed[integer];
        if (((integer % L) + L) % L != ctx.ell_residue) rep.residues_consistent = false;
    }
    const std::size_t half = tail.size() / 2;
    if (half > 0) {
        const double first = *std::max_element(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(half));
        const double second = *std::max_element(tail.begin() + static_cast<std::ptrdiff_t>(half), tail.end());
        rep.envelope_nonincreasing = second <= first;
    }
    return rep;
}

KroneckerResult kronecker_search(const SalemContext& ctx, const std::vector<double>& targets, double tol, long n_max) {
    if (static_cast<int>(targets.size()) != ctx.m()) {
        throw Error(ErrorKind::BadInput, kModule, "need one target per angle");
    }
    if (!(tol > 0)) throw Error(ErrorKind::BadInput, kModule, "tol must be positive");
    const auto m = static_cast<std::size_t>(ctx.m());
    std::vector<u128> step(m), phase(m, 0);
    std::vector<double> u(m), v(m), amp(m);
    for (std::size_t j = 0; j < m; ++j) {
        step[j] = turn_fraction(ctx.phi[j]) * static_cast<u128>(ctx.q);
        u[j] = ctx.U[j].to_double();
        v[j] = ctx.V[j].to_double();
        amp[j] = ctx.amplitude[j].to_double();
    }
    KroneckerResult res;
    for (long n = 1; n <= n_max; ++n) {
        res.scanned = n;
        bool hit = true;
        for (std::size_t j = 0; j < m; ++j) {
            phase[j] += step[j];
            if (!hit) continue;
            const double t = turn_to_radians(phase[j]);
            const double val = u[j] * std::cos(t) - v[j] * std::sin(t);
            // A small slack lets the exact check decide borderline cases.
            if (std::fabs(val - targets[j] * amp[j]) > tol * amp[j] + 1e-9) hit = false;
        }
        if (hit && within(ctx, targets, tol, n)) {
            res.n = n;
            return res;
        }
    }
    return res;
}

DensityReport density_scan(const std::vector<double>& values, int bins) {
    if (bins < 1) throw Error(ErrorKind::BadInput, kModule, "need at least one bin");
    DensityReport rep;
    rep.horizon = static_cast<long>(values.size());
    rep.histogram.assign(static_cast<std::size_t>(bins), 0);
    for (double y : values) {
        auto b = static_cast<long>(std::floor(y * bins));
        b = std::clamp<long>(b, 0, bins - 1);
        ++rep.histogram[static_cast<std::size_t>(b)];
    }
    int best_start = 0, best_len = 0;
    for (int i = 0; i < bins;) {
        if (rep.histogram[static_cast<std::size_t>(i)] == 0) {
            ++i;
            continue;
        }
        int j = i;
        while (j < bins && rep.histogram[static_cast<std::size_t>(j)] > 0) ++j;
        if (j - i > best_len) {
            best_len = j - i;
            best_start = i;
        }
        i = j;
    }
    rep.run_bins = best_len;
    rep.lo = static_cast<double>(best_start) / bins;
    rep.hi = static_cast<double>(best_start + best_len) / bins;
    std::vector<double> inside;
    for (double y : values) {
        if (y >= rep.lo && y < rep.hi) inside.push_back(y);
    }
    std::sort(inside.begin(), inside.end());
    if (!inside.empty()) {
        rep.max_gap = std::max(inside.front() - rep.lo, rep.hi - inside.back());
        for (std::size_t i = 1; i < inside.size(); ++i) rep.max_gap = std::max(rep.max_gap, inside[i] - inside[i - 1]);
    }
    return rep;
}

Real trace_closure_residual(const SalemContext& ctx, const orbit::OrbitSample& sample, const mpz_class& b_n) {
    const Bits prec = ctx.precision;
    const auto& e = ctx.xi.e();
    const mp::Interval alpha_iv = ctx.a.enclosure(prec);
    Real alpha = alpha_iv.midpoint();
    alpha.set_precision(prec);
    Real inv(prec);
    mpfr_ui_div(inv.raw(), 1, alpha.raw(), MPFR_RNDN);
    // Lxi evaluated at the conjugate 1/alpha, times alpha^-n.
    Real conj(prec);
    for (auto it = e.rbegin(); it != e.rend(); ++it) conj = conj * inv + Real(*it, prec);
    conj *= mp::pow(inv, static_cast<unsigned long>(sample.n));

    Real r(b_n, prec);
    r -= Real(mpq_class(ctx.L() * sample.x) + mpq_class(ctx.L()) * sample.y(), prec);
    r -= conj;
    Real cs = cosine_sum(ctx, sample.n);
    mpfr_mul_2ui(cs.raw(), cs.raw(), 1, MPFR_RNDN);
    r -= cs;
    return r;
}

}  // namespace powfrac::salem
