#include "powfrac/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "powfrac/error.hpp"

namespace powfrac::mp {

namespace {

Bits max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(Bits precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, Bits precision) {
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Bits precision, mpfr_rnd_t rnd) {
    mpfr_init2(value_, precision);
    mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

Real::Real(const mpq_class& value, Bits precision, mpfr_rnd_t rnd) {
    mpfr_init2(value_, precision);
    mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::set_precision(Bits precision, mpfr_rnd_t rnd) { mpfr_prec_round(value_, precision, rnd); }

mpz_class Real::floor() const {
    if (!mpfr_number_p(value_)) {
        throw Error(ErrorKind::Internal, "real", "floor of a non-finite value");
    }
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
    return out;
}

mpq_class Real::to_rational() const {
    if (mpfr_zero_p(value_)) return 0;
    mpz_class mant;
    const mpfr_exp_t exp = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
    mpq_class out(mant);
    if (exp >= 0) {
        mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
        mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    out.canonicalize();
    return out;
}

std::string Real::to_fixed(int digits) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rf", digits, value_) < 0) {
        throw Error(ErrorKind::Internal, "real", "formatting failed");
    }
    std::unique_ptr<char, decltype(&mpfr_free_str)> guard(buf, &mpfr_free_str);
    std::string out(buf);
    // "-0.000" and "0.000" must print identically for byte-stable reports.
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

Real& Real::operator+=(const Real& rhs) {
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& rhs) {
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& rhs) {
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& rhs) {
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

Real operator+(const Real& a, const Real& b) {
    Real out(max_prec(a, b));
    mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}
Real operator-(const Real& a, const Real& b) {
    Real out(max_prec(a, b));
    mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}
Real operator*(const Real& a, const Real& b) {
    Real out(max_prec(a, b));
    mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}
Real operator/(const Real& a, const Real& b) {
    Real out(max_prec(a, b));
    mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

Real abs(const Real& x) {
    Real out(x.precision());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}
Real sqrt(const Real& x) {
    Real out(x.precision());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}
Real cos(const Real& x) {
    Real out(x.precision());
    mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}
Real sin(const Real& x) {
    Real out(x.precision());
    mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}
Real acos(const Real& x, mpfr_rnd_t rnd) {
    Real out(x.precision());
    mpfr_acos(out.raw(), x.raw(), rnd);
    return out;
}
Real atan2(const Real& y, const Real& x) {
    Real out(max_prec(y, x));
    mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return out;
}
Real pow(const Real& x, unsigned long n) {
    Real out(x.precision());
    mpfr_pow_ui(out.raw(), x.raw(), n, MPFR_RNDN);
    return out;
}
Real pi(Bits precision) {
    Real out(precision);
    mpfr_const_pi(out.raw(), MPFR_RNDN);
    return out;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(Bits precision) : lo_(precision), hi_(precision) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    const Bits p = std::max(lo_.precision(), hi_.precision());
    lo_.set_precision(p, MPFR_RNDD);
    hi_.set_precision(p, MPFR_RNDU);
}

Interval Interval::point(const mpz_class& value, Bits precision) {
    return Interval(Real(value, precision, MPFR_RNDD), Real(value, precision, MPFR_RNDU));
}

Interval Interval::point(const mpq_class& value, Bits precision) {
    return Interval(Real(value, precision, MPFR_RNDD), Real(value, precision, MPFR_RNDU));
}

Interval Interval::hull(const mpq_class& lo, const mpq_class& hi, Bits precision) {
    return Interval(Real(lo, precision, MPFR_RNDD), Real(hi, precision, MPFR_RNDU));
}

void Interval::raise_precision(Bits precision) {
    if (precision <= this->precision()) return;
    lo_.set_precision(precision, MPFR_RNDD);
    hi_.set_precision(precision, MPFR_RNDU);
}

Real Interval::width() const {
    Real out(precision());
    mpfr_sub(out.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return out;
}

Real Interval::midpoint() const {
    Real out(precision() + 1);
    mpfr_add(out.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(out.raw(), out.raw(), 1, MPFR_RNDN);
    return out;
}

long Interval::magnitude_exponent() const {
    long e = 0;
    if (!lo_.is_zero()) e = std::max(e, static_cast<long>(mpfr_get_exp(lo_.raw())));
    if (!hi_.is_zero()) e = std::max(e, static_cast<long>(mpfr_get_exp(hi_.raw())));
    return e;
}

Interval& Interval::operator+=(const Interval& rhs) {
    mpfr_add(lo_.raw(), lo_.raw(), rhs.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi_.raw(), hi_.raw(), rhs.hi_.raw(), MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
    Real lo(precision());
    mpfr_sub(lo.raw(), lo_.raw(), rhs.hi_.raw(), MPFR_RNDD);
    mpfr_sub(hi_.raw(), hi_.raw(), rhs.lo_.raw(), MPFR_RNDU);
    lo_ = std::move(lo);
    return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
    const Bits p = precision();
    if (lo_.sign() >= 0 && rhs.lo_.sign() >= 0) {
        mpfr_mul(lo_.raw(), lo_.raw(), rhs.lo_.raw(), MPFR_RNDD);
        mpfr_mul(hi_.raw(), hi_.raw(), rhs.hi_.raw(), MPFR_RNDU);
        return *this;
    }
    const mpfr_srcptr a[2] = {lo_.raw(), hi_.raw()};
    const mpfr_srcptr b[2] = {rhs.lo_.raw(), rhs.hi_.raw()};
    Real lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : a) {
        for (auto y : b) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    }
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

Interval& Interval::operator*=(const mpz_class& rhs) {
    if (sgn(rhs) >= 0) {
        mpfr_mul_z(lo_.raw(), lo_.raw(), rhs.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi_.raw(), hi_.raw(), rhs.get_mpz_t(), MPFR_RNDU);
    } else {
        Real lo(precision());
        mpfr_mul_z(lo.raw(), hi_.raw(), rhs.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi_.raw(), lo_.raw(), rhs.get_mpz_t(), MPFR_RNDU);
        lo_ = std::move(lo);
    }
    return *this;
}

Interval& Interval::operator/=(const mpz_class& rhs) {
    if (sgn(rhs) <= 0) throw Error(ErrorKind::Internal, "real", "interval division by non-positive integer");
    mpfr_div_z(lo_.raw(), lo_.raw(), rhs.get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(hi_.raw(), hi_.raw(), rhs.get_mpz_t(), MPFR_RNDU);
    return *this;
}

Interval operator+(Interval a, const Interval& b) { return a += b; }
Interval operator-(Interval a, const Interval& b) { return a -= b; }
Interval operator*(Interval a, const Interval& b) { return a *= b; }

Interval pow(const Interval& x, unsigned long n) {
    if (x.lo().sign() < 0) throw Error(ErrorKind::Internal, "real", "interval power of a sign-changing interval");
    Real lo(x.precision()), hi(x.precision());
    mpfr_pow_ui(lo.raw(), x.lo().raw(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.raw(), x.hi().raw(), n, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace powfrac::mp
