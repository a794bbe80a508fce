#include <algorithm>
#include <cmath>
#include <complex>

#include "powfrac/error.hpp"
#include "powfrac/poly_algebra.hpp"

namespace powfrac::poly {

namespace {

using mp::Bits;
using mp::Real;

constexpr std::string_view kModule = "poly_algebra";

struct Cx {
    Real re;
    Real im;

    explicit Cx(Bits p) : re(p), im(p) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Cx mul(const Cx& a, const Cx& b) {
    return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Cx sub(const Cx& a, const Cx& b) { return Cx(a.re - b.re, a.im - b.im); }

Cx div(const Cx& a, const Cx& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return Cx((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
}

Real modulus(const Cx& a) { return mp::sqrt(a.re * a.re + a.im * a.im); }

// p(z) and p'(z) by Horner.
std::pair<Cx, Cx> eval_with_derivative(const std::vector<mpz_class>& c, const Cx& z, Bits p) {
    Cx v(p), dv(p);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dv = mul(dv, z);
        dv.re += v.re;
        dv.im += v.im;
        v = mul(v, z);
        v.re += Real(*it, p);
    }
    return {std::move(v), std::move(dv)};
}

std::vector<std::complex<long double>> aberth(const std::vector<mpz_class>& c) {
    using C = std::complex<long double>;
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<long double> a(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) a[i] = static_cast<long double>(c[i].get_d());
    long double bound = 0;
    for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(i)] / a.back()));
    const long double radius = std::min<long double>(1 + bound, 4);
    std::vector<C> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const long double t = 2 * M_PIl * k / d + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius, t);
    }
    for (int iter = 0; iter < 500; ++iter) {
        long double worst = 0;
        for (int i = 0; i < d; ++i) {
            C v = 0, dv = 0;
            const C zi = z[static_cast<std::size_t>(i)];
            for (int k = d; k >= 0; --k) {
                dv = dv * zi + v;
                v = v * zi + a[static_cast<std::size_t>(k)];
            }
            if (v == C(0)) continue;
            const C ratio = v / dv;
            C s = 0;
            for (int j = 0; j < d; ++j) {
                if (j != i) s += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
            }
            const C step = ratio / (1.0L - ratio * s);
            z[static_cast<std::size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(zi)));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

}  // namespace

std::vector<ConjugateBox> complex_roots(const IntPolynomial& poly, mp::Bits precision) {
    const auto& c = poly.coeffs();
    const int d = poly.degree();
    const Bits work = precision + 32;
    std::vector<Cx> roots;
    roots.reserve(static_cast<std::size_t>(d));
    if (d == 1) {
        roots.emplace_back(Real(mpq_class(-c[0], c[1]), work), Real(work));
    } else {
        for (const auto& z0 : aberth(c)) {
            Cx z(Real(static_cast<double>(z0.real()), work), Real(static_cast<double>(z0.imag()), work));
            // Newton polish: quadratic convergence from ~60 correct bits.
            for (Bits bits = 60; bits < 2 * work; bits *= 2) {
                auto [v, dv] = eval_with_derivative(c, z, work);
                if (v.re.is_zero() && v.im.is_zero()) break;
                z = sub(z, div(v, dv));
            }
            auto [v, dv] = eval_with_derivative(c, z, work);
            z = sub(z, div(v, dv));
            roots.push_back(std::move(z));
        }
    }

    // Weierstrass inclusion discs: r_i = d |p(z_i)| / (|a_d| prod_{j != i} |z_i - z_j|).
    std::vector<ConjugateBox> out;
    out.reserve(roots.size());
    const Real lead = mp::abs(Real(poly.leading(), work));
    const Real slack = Real(std::ldexp(1.0, -static_cast<int>(std::min<Bits>(work / 2, 1000))), work);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Real radius(work);
        if (d > 1) {
            auto [v, dv] = eval_with_derivative(c, roots[i], work);
            Real denom = lead;
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (j != i) denom *= modulus(sub(roots[i], roots[j]));
            }
            radius = modulus(v) / denom * Real(2.0 * d, work) + slack * slack;
        }
        out.push_back(ConjugateBox{roots[i].re, roots[i].im, radius, false});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            const Real gap = modulus(sub(roots[i], roots[j]));
            if (gap <= out[i].radius + out[j].radius) {
                throw Error(ErrorKind::PrecisionExhausted, kModule,
                            "inclusion discs overlap for " + poly.to_string());
            }
        }
    }
    // A lone disc meeting the real axis holds a real root: its conjugate lies in
    // the mirrored disc, which overlaps no other disc.
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (mp::abs(out[i].im) > out[i].radius) continue;
        bool lone = true;
        for (std::size_t j = 0; j < out.size() && lone; ++j) {
            if (j == i) continue;
            const Real dr = out[i].re - out[j].re;
            const Real di = out[i].im + out[j].im;
            lone = mp::sqrt(dr * dr + di * di) > out[i].radius + out[j].radius;
        }
        if (lone) out[i].im = Real(work);
    }
    std::sort(out.begin(), out.end(), [](const ConjugateBox& a, const ConjugateBox& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return out;
}

}  // namespace powfrac::poly
