#include "powfrac/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "powfrac/error.hpp"

namespace powfrac::orbit {

namespace {

using field::FieldElement;
using mp::Bits;
using mp::Interval;

constexpr std::string_view kModule = "orbit";
constexpr Bits kGuard = 64;

mpz_class pow2z(Bits e) {
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return v;
}

Bits bit_length(long n) {
    Bits b = 0;
    while (n > 0) {
        ++b;
        n >>= 1;
    }
    return b;
}

OrbitSample exact_sample(long n, const mpq_class& v, Bits resolution, Bits bits_used) {
    OrbitSample s;
    s.n = n;
    mpz_fdiv_q(s.x.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    mpq_class y = v - mpq_class(s.x);
    mpz_class scaled = y.get_num() * pow2z(resolution);
    mpz_fdiv_q(s.y_fixed.get_mpz_t(), scaled.get_mpz_t(), y.get_den_mpz_t());
    s.resolution = resolution;
    s.y_exact = std::move(y);
    s.bits_used = bits_used;
    s.exact = true;
    return s;
}

void validate(const FieldElement& xi, const poly::AlgebraicNumber& a, const OrbitConfig& cfg) {
    if (cfg.horizon < 1) throw Error(ErrorKind::BadInput, kModule, "horizon must be at least 1");
    if (cfg.resolution < 16) throw Error(ErrorKind::BadInput, kModule, "resolution must be at least 16 bits");
    if (cfg.scale < 1) throw Error(ErrorKind::BadInput, kModule, "L must be a positive integer");
    if (!(xi.modulus() == a.minpoly())) {
        throw Error(ErrorKind::BaseMismatch, kModule, "xi lives in a different field than alpha");
    }
    if (field::sign(xi, a) <= 0) throw Error(ErrorKind::BadInput, kModule, "xi must be positive");
}

}  // namespace

mpq_class OrbitSample::y() const {
    if (y_exact) return *y_exact;
    mpq_class q(y_fixed, pow2z(resolution));
    q.canonicalize();
    return q;
}

std::string OrbitSample::y_string() const {
    if (y_exact) return y_exact->get_str();
    const int digits = static_cast<int>(std::ceil(static_cast<double>(resolution) * std::log10(2.0)));
    return fixed_decimal(y(), digits);
}

std::string fixed_decimal(const mpq_class& value, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const bool negative = value < 0;
    const mpq_class mag = negative ? mpq_class(-value) : value;
    mpz_class t = mag.get_num() * scale;
    mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), mag.get_den_mpz_t());
    mpz_class whole, frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), t.get_mpz_t(), scale.get_mpz_t());
    std::string f = frac.get_str();
    f.insert(0, static_cast<std::size_t>(digits) - std::min<std::size_t>(f.size(), static_cast<std::size_t>(digits)), '0');
    std::string out = (negative && t != 0 ? "-" : "") + whole.get_str();
    if (digits > 0) out += "." + f;
    return out;
}

Bits effective_cap(const OrbitConfig& cfg, const poly::AlgebraicNumber& a) {
    double growth = static_cast<double>(cfg.horizon) * std::log2(a.approx());
    // PV orbits approach integers like rho^n; separating y_n from the grid costs those bits too.
    const double rho = a.degree() > 1 ? a.max_conjugate_modulus() : 1.0;
    if (rho > 0 && rho < 1) growth -= static_cast<double>(cfg.horizon) * std::log2(rho);
    const Bits needed = cfg.resolution + static_cast<Bits>(std::ceil(growth)) + 2 * kGuard +
                        static_cast<Bits>(mpz_sizeinbase(cfg.scale.get_mpz_t(), 2)) + 2 * bit_length(cfg.horizon);
    return std::max(cfg.precision_cap, needed);
}

void iterate(const FieldElement& xi, const poly::AlgebraicNumber& a, const OrbitConfig& cfg, const SampleSink& sink) {
    validate(xi, a, cfg);
    const FieldElement seed = xi * FieldElement::from_rational(xi.modulus(), mpq_class(cfg.scale));
    const Bits res = cfg.resolution;

    if (a.degree() == 1 && !cfg.force_adaptive) {
        const mpq_class alpha = *a.rational_value();
        mpq_class v = *seed.rational_value();
        for (long n = 1; n <= cfg.horizon; ++n) {
            v *= alpha;
            sink(exact_sample(n, v, res, 0));
        }
        return;
    }

    const Bits cap = effective_cap(cfg, a);
    const double log2a = std::log2(a.approx());
    const Interval seed_probe = seed.evaluate(a.enclosure(64));
    const double log2_seed = std::max(0.0, static_cast<double>(seed_probe.magnitude_exponent()));
    const FieldElement generator = FieldElement::generator(xi.modulus());
    const mpz_class scale = pow2z(res);

    Bits prec = 0;
    Interval alpha, value;
    auto rebuild = [&](long n, Bits bits) {
        prec = bits;
        alpha = a.enclosure(prec);
        alpha.raise_precision(prec);
        value = seed.evaluate(alpha) * mp::pow(alpha, static_cast<unsigned long>(n));
    };

    for (long n = 1; n <= cfg.horizon; ++n) {
        const Bits required = res + static_cast<Bits>(std::ceil(static_cast<double>(n) * log2a + log2_seed)) + kGuard +
                              bit_length(n);
        if (required > prec) {
            rebuild(n, std::min(cap, std::max<Bits>(2 * required, 128)));
        } else {
            value *= alpha;
        }
        for (;;) {
            Interval w = value;
            w *= scale;
            const mpz_class f_lo = w.lo().floor();
            const mpz_class f_hi = w.hi().floor();
            if (f_lo == f_hi) {
                OrbitSample s;
                s.n = n;
                mpz_fdiv_q_2exp(s.x.get_mpz_t(), f_lo.get_mpz_t(), static_cast<mp_bitcnt_t>(res));
                mpz_fdiv_r_2exp(s.y_fixed.get_mpz_t(), f_lo.get_mpz_t(), static_cast<mp_bitcnt_t>(res));
                s.resolution = res;
                s.bits_used = prec;
                sink(s);
                break;
            }
            const FieldElement exact = seed * field::pow(generator, static_cast<unsigned long>(n));
            if (auto r = exact.rational_value()) {
                sink(exact_sample(n, *r, res, prec));
                break;
            }
            if (prec >= cap) {
                throw Error(ErrorKind::PrecisionExhausted, kModule,
                            "floor of L xi alpha^" + std::to_string(n) + " not certified at " + std::to_string(cap) +
                                " bits");
            }
            rebuild(n, std::min(cap, 2 * prec));
        }
    }
}

std::vector<OrbitSample> iterate(const FieldElement& xi, const poly::AlgebraicNumber& a, const OrbitConfig& cfg) {
    std::vector<OrbitSample> out;
    out.reserve(static_cast<std::size_t>(std::max<long>(cfg.horizon, 0)));
    iterate(xi, a, cfg, [&out](const OrbitSample& s) { out.push_back(s); });
    return out;
}

std::vector<SValue> s_sequence(const std::vector<OrbitSample>& samples, const poly::IntPolynomial& p) {
    const int d = p.degree();
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].n != samples[i - 1].n + 1) {
            throw Error(ErrorKind::BadInput, kModule, "s_sequence needs consecutive samples");
        }
    }
    const mpz_class len = poly::length(p);
    std::vector<SValue> out;
    for (std::size_t i = 0; i + static_cast<std::size_t>(d) < samples.size(); ++i) {
        mpz_class s = 0;
        mpq_class ys = 0;
        Bits res = samples[i].resolution;
        bool all_exact = true;
        for (int k = 0; k <= d; ++k) {
            const OrbitSample& smp = samples[i + static_cast<std::size_t>(k)];
            s -= p[k] * smp.x;
            ys += p[k] * smp.y();
            res = std::min(res, smp.resolution);
            all_exact = all_exact && smp.y_exact.has_value();
        }
        const mpq_class tol = all_exact ? mpq_class(0) : mpq_class(len, pow2z(res));
        if (abs(ys - s) > tol) {
            throw Error(ErrorKind::InconsistentSample, kModule,
                        "s_" + std::to_string(samples[i].n) + ": integer side " + s.get_str() + " vs fractional side " +
                            std::to_string(ys.get_d()));
        }
        if (abs(s) > len - 1) {
            throw Error(ErrorKind::InconsistentSample, kModule, "|s_" + std::to_string(samples[i].n) + "| exceeds L(p) - 1");
        }
        out.push_back({samples[i].n, std::move(s)});
    }
    return out;
}

mpq_class circle_norm(const mpq_class& y) {
    const mpq_class other = 1 - y;
    return y < other ? y : other;
}

SmallnessReport smallness_check(const std::vector<OrbitSample>& samples, const poly::IntPolynomial& p) {
    SmallnessReport r;
    const mpq_class bound(1, poly::length(p));
    for (const auto& s : samples) {
        const mpq_class norm = circle_norm(s.y());
        if (norm > r.sup_norm) r.sup_norm = norm;
        if (norm >= bound && r.holds) {
            r.holds = false;
            r.first_violation = s.n;
        }
    }
    return r;
}

}  // namespace powfrac::orbit
