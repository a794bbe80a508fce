#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "powfrac/error.hpp"
#include "powfrac/poly_algebra.hpp"

namespace powfrac::poly {

namespace {

using mp::Bits;
using mp::Real;

constexpr std::string_view kModule = "poly_algebra";

mpq_class pow2(long e) {
    mpz_class v = 1;
    if (e >= 0) {
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return mpq_class(v);
    }
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return mpq_class(1, v);
}

// ---- polynomials over F_p, ascending coefficients, trimmed ----

using Fp = std::vector<std::int64_t>;

void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2, b = a % p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Fp fp_mod(Fp a, const Fp& m, std::int64_t p) {
    const std::int64_t inv = fp_inv(m.back(), p);
    fp_trim(a);
    while (a.size() >= m.size()) {
        const std::int64_t q = a.back() * inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = ((a[shift + i] - q * m[i]) % p + p) % p;
        }
        fp_trim(a);
    }
    return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return fp_mod(std::move(r), m, p);
}

Fp fp_powmod(Fp base, std::int64_t e, const Fp& m, std::int64_t p) {
    Fp r{1};
    base = fp_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Fp fp_gcd(Fp a, Fp b, std::int64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Fp fp_divexact(Fp a, const Fp& b, std::int64_t p) {
    const std::int64_t inv = fp_inv(b.back(), p);
    fp_trim(a);
    if (a.size() < b.size()) return {};
    Fp q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        const std::int64_t c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        fp_trim(a);
    }
    return q;
}

Fp fp_reduce(const IntPolynomial& poly, std::int64_t p) {
    Fp f;
    for (const auto& c : poly.coeffs()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        f.push_back(static_cast<std::int64_t>(r.get_si()));
    }
    fp_trim(f);
    return f;
}

// Degrees of the irreducible factors of a squarefree f over F_p (distinct-degree factorization).
std::optional<std::vector<int>> factor_degrees(const IntPolynomial& poly, std::int64_t p) {
    Fp f = fp_reduce(poly, p);
    if (static_cast<int>(f.size()) - 1 != poly.degree()) return std::nullopt;
    Fp df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(static_cast<std::int64_t>(i) % p * f[i] % p);
    fp_trim(df);
    if (df.empty() || fp_gcd(f, df, p).size() != 1) return std::nullopt;
    std::vector<int> degrees;
    Fp h{0, 1};
    for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
        h = fp_powmod(h, p, f, p);
        Fp diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        fp_trim(diff);
        const Fp g = fp_gcd(f, diff, p);
        const int gd = static_cast<int>(g.size()) - 1;
        for (int k = 0; k < gd / i; ++k) degrees.push_back(i);
        if (gd > 0) {
            f = fp_divexact(f, g, p);
            h = fp_mod(h, f, p);
        }
    }
    if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
    return degrees;
}

std::vector<bool> subset_sums(const std::vector<int>& degrees, int d) {
    std::vector<bool> reach(static_cast<std::size_t>(d) + 1, false);
    reach[0] = true;
    for (int k : degrees) {
        for (int s = d; s >= k; --s) {
            if (reach[static_cast<std::size_t>(s - k)]) reach[static_cast<std::size_t>(s)] = true;
        }
    }
    return reach;
}

bool has_rational_root(const IntPolynomial& p) {
    const QPoly q(p);
    const mpq_class bound = cauchy_bound(q);
    const mpz_class lead = abs(p.leading());
    std::vector<mpz_class> denominators;
    if (lead > 10'000'000) {
        throw Error(ErrorKind::BadInput, kModule, "leading coefficient too large for the rational-root test");
    }
    for (unsigned long v = 1; v <= lead.get_ui(); ++v) {
        if (mpz_divisible_ui_p(lead.get_mpz_t(), v)) denominators.emplace_back(v);
    }
    // Distinct fractions with denominators dividing a_d are >= 1/a_d^2 apart.
    const mpq_class width(1, 4 * lead * lead);
    for (auto iv : isolate_real_roots(q, -bound, bound)) {
        iv = refine_root(q, iv, width);
        if (iv.is_point()) return true;
        for (const auto& v : denominators) {
            for (const mpq_class& anchor : {iv.lo, iv.hi}) {
                mpz_class u;
                mpz_fdiv_q(u.get_mpz_t(), mpz_class(anchor.get_num() * v).get_mpz_t(), anchor.get_den().get_mpz_t());
                for (int k = 0; k <= 1; ++k) {
                    const mpq_class cand(u + k, v);
                    if (cand >= iv.lo && cand <= iv.hi && q.sign_at(cand) == 0) return true;
                }
            }
        }
    }
    return false;
}

// p(x) in MPFR by Horner, returns (p, p').
std::pair<Real, Real> horner(const std::vector<mpz_class>& c, const Real& x) {
    const Bits prec = x.precision();
    Real v(prec), dv(prec);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dv = dv * x + v;
        v = v * x + Real(*it, prec);
    }
    return {std::move(v), std::move(dv)};
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
    switch (c) {
    case Classification::PV: return "PV";
    case Classification::Salem: return "Salem";
    case Classification::Neither: return "Neither";
    }
    return "Neither";
}

std::string_view to_string(Irreducibility s) noexcept {
    return s == Irreducibility::Proved ? "Proved" : "Unverified";
}

bool irreducible_mod_prime(const IntPolynomial& poly, long prime) {
    const std::int64_t p = prime;
    const Fp f = fp_reduce(poly, p);
    const int d = poly.degree();
    if (static_cast<int>(f.size()) - 1 != d) return false;
    if (d == 1) return true;
    const Fp x{0, 1};
    Fp h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = fp_powmod(h, p, f, p);
        Fp diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        fp_trim(diff);
        const Fp g = fp_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

RationalInterval refine_root_to_bits(const IntPolynomial& p, const RationalInterval& iv, Bits bits) {
    const mpq_class target = pow2(-bits);
    if (iv.is_point() || iv.width() <= target) return iv;
    const QPoly q(p);
    RationalInterval start = refine_root(q, iv, pow2(-24));
    if (start.is_point() || start.width() <= target) return start;

    Real x((start.lo + start.hi) / 2, 64);
    for (Bits prec = 64; prec < bits + 40; prec *= 2) {
        x.set_precision(std::min<Bits>(2 * prec, bits + 64));
        for (int k = 0; k < 2; ++k) {
            auto [v, dv] = horner(p.coeffs(), x);
            if (dv.is_zero()) break;
            x -= v / dv;
        }
    }
    const mpq_class center = x.to_rational();
    const mpq_class half = target / 2;
    RationalInterval cand{std::max<mpq_class>(start.lo, center - half), std::min<mpq_class>(start.hi, center + half)};
    if (cand.lo < cand.hi) {
        const int s_lo = q.sign_at(cand.lo);
        const int s_hi = q.sign_at(cand.hi);
        if (s_lo == 0) return {cand.lo, cand.lo};
        if (s_hi == 0) return {cand.hi, cand.hi};
        if (s_lo != s_hi) return cand;
    }
    return refine_root(q, start, target);
}

std::optional<mpq_class> AlgebraicNumber::rational_value() const {
    if (degree() != 1) return std::nullopt;
    return mpq_class(-minpoly_.constant(), minpoly_.leading());
}

mp::Interval AlgebraicNumber::enclosure(Bits bits) const {
    const Bits prec = bits + 64;
    if (auto r = rational_value()) return mp::Interval::point(*r, prec);
    const RationalInterval iv = refine_root_to_bits(minpoly_, alpha_interval_, bits);
    return mp::Interval::hull(iv.lo, iv.hi, prec);
}

double AlgebraicNumber::approx() const { return mpq_class((alpha_interval_.lo + alpha_interval_.hi) / 2).get_d(); }

double AlgebraicNumber::max_conjugate_modulus() const {
    double m = 0;
    for (const auto& box : conjugates_) {
        if (box.designated) continue;
        const double mod = std::hypot(box.re.to_double(), box.im.to_double()) + box.radius.to_double();
        m = std::max(m, mod);
    }
    return m;
}

AlgebraicNumber classify(const IntPolynomial& p, Bits precision) {
    AlgebraicNumber a(p);
    const QPoly q(p);
    const int d = p.degree();
    if (gcd(q, q.derivative()).degree() > 0) {
        throw Error(ErrorKind::NotSquarefree, kModule, p.to_string() + " has a repeated factor");
    }
    const SturmSequence sturm(q);
    const int above = sturm.count_above(1);
    if (above == 0) throw Error(ErrorKind::NoRootAboveOne, kModule, p.to_string() + " has no real root > 1");
    if (above > 1) {
        throw Error(ErrorKind::AmbiguousRoot, kModule,
                    p.to_string() + " has " + std::to_string(above) + " real roots > 1 (reducible)");
    }
    if (d >= 2 && has_rational_root(p)) {
        throw Error(ErrorKind::Reducible, kModule, p.to_string() + " has a rational root");
    }

    if (d == 1) {
        a.irreducibility_ = Irreducibility::Proved;
    } else {
        std::vector<bool> possible(static_cast<std::size_t>(d) + 1, true);
        for (long prime : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L, 59L, 61L, 67L,
                           71L, 73L, 79L, 83L, 89L, 97L}) {
            if (mpz_divisible_ui_p(p.leading().get_mpz_t(), static_cast<unsigned long>(prime))) continue;
            if (irreducible_mod_prime(p, prime)) {
                a.irreducibility_ = Irreducibility::Proved;
                a.witness_prime_ = prime;
                break;
            }
            // A rational factor of degree k needs a sub-multiset of degree k mod every good prime.
            if (auto degrees = factor_degrees(p, prime)) {
                const auto reach = subset_sums(*degrees, d);
                for (int k = 1; k < d; ++k) possible[static_cast<std::size_t>(k)] = possible[static_cast<std::size_t>(k)] && reach[static_cast<std::size_t>(k)];
                if (std::none_of(possible.begin() + 1, possible.end() - 1, [](bool b) { return b; })) {
                    a.irreducibility_ = Irreducibility::Proved;
                    break;
                }
            }
        }
    }

    a.counts_ = unit_circle_counts(p, precision);
    const auto& c = a.counts_;
    if (p.is_monic() && c.inside == d - 1 && c.on == 0) {
        a.classification_ = Classification::PV;
    } else if (p.is_monic() && p.is_self_reciprocal() && c.on >= 1 && c.outside == 1 && c.inside + c.on == d - 1) {
        a.classification_ = Classification::Salem;
    } else {
        a.classification_ = Classification::Neither;
    }

    const auto iso = isolate_real_roots(q, 1, cauchy_bound(q));
    if (iso.size() != 1) throw Error(ErrorKind::Internal, kModule, "root isolation disagrees with Sturm count");
    a.alpha_interval_ = refine_root(q, iso.front(), pow2(-precision));

    a.conjugates_ = complex_roots(p, precision);
    a.conjugate_bits_ = precision;
    const Real alpha_mid(mpq_class((a.alpha_interval_.lo + a.alpha_interval_.hi) / 2), precision + 32);
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.conjugates_.size(); ++i) {
        if (mp::abs(a.conjugates_[i].re - alpha_mid) + mp::abs(a.conjugates_[i].im) <
            mp::abs(a.conjugates_[best].re - alpha_mid) + mp::abs(a.conjugates_[best].im)) {
            best = i;
        }
    }
    a.conjugates_[best].designated = true;
    if (static_cast<int>(a.conjugates_.size()) != d) {
        throw Error(ErrorKind::Internal, kModule, "conjugate count differs from the degree");
    }
    return a;
}

mp::Real AngleEnclosure::mid() const {
    Real m = lo + hi;
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

std::vector<AngleEnclosure> conjugate_arguments(const AlgebraicNumber& a, Bits precision) {
    if (a.classification() != Classification::Salem) {
        throw Error(ErrorKind::NotSalem, kModule, a.minpoly().to_string() + " is not a Salem number");
    }
    const QPoly h = chebyshev_transform(QPoly(a.minpoly()));
    const Bits work = precision + 32;
    const mpq_class target = pow2(-precision);
    std::vector<AngleEnclosure> out;
    for (auto iv : isolate_real_roots(h, -2, 2)) {
        if (iv.is_point() && (iv.lo == 2 || iv.lo == -2)) continue;
        mpq_class width = pow2(-(precision + 2));
        for (;;) {
            iv = refine_root(h, iv, width);
            // arccos is decreasing: the upper x bound gives the lower angle.
            Real hi_half(mpq_class(iv.hi / 2), work, MPFR_RNDU);
            Real lo_half(mpq_class(iv.lo / 2), work, MPFR_RNDD);
            AngleEnclosure e{mp::acos(hi_half, MPFR_RNDD), mp::acos(lo_half, MPFR_RNDU)};
            Real w(work);
            mpfr_sub(w.raw(), e.hi.raw(), e.lo.raw(), MPFR_RNDU);
            if (w.to_rational() <= target) {
                out.push_back(std::move(e));
                break;
            }
            width /= 4;
        }
    }
    std::sort(out.begin(), out.end(), [](const AngleEnclosure& x, const AngleEnclosure& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace powfrac::poly
