#include <algorithm>

#include "powfrac/error.hpp"
#include "powfrac/poly_algebra.hpp"

namespace powfrac::poly {

namespace {

constexpr std::string_view kModule = "poly_algebra";

QPoly linear(const mpq_class& root) { return QPoly({-root, 1}); }

// Removes every factor (z - root); returns how many were removed.
int strip_root(QPoly& q, const mpq_class& root) {
    int k = 0;
    while (q.degree() >= 1 && q.sign_at(root) == 0) {
        q = exact_quotient(q, linear(root));
        ++k;
    }
    return k;
}

}  // namespace

std::optional<int> schur_cohn_inside(const QPoly& input) {
    QPoly q = input;
    int zeros = 0;
    while (q.degree() >= 1 && q.coeff(0) == 0) {
        q = exact_quotient(q, QPoly::monomial(1, 1));
        ++zeros;
    }
    int n = q.degree();
    if (n <= 0) return zeros;

    // Each frame records (degree, sign of delta) for the unwinding pass.
    struct Frame {
        int degree;
        bool positive;
    };
    std::vector<Frame> frames;
    while (n > 0) {
        const mpq_class a0 = q.coeff(0);
        const mpq_class an = q.leading();
        const mpq_class delta = a0 * a0 - an * an;
        if (delta == 0) return std::nullopt;
        QPoly t = q * a0 - q.reciprocal() * an;
        frames.push_back({n, delta > 0});
        q = std::move(t);
        n = q.degree();
        if (n >= 0 && q.coeff(0) != delta) {
            throw Error(ErrorKind::Internal, kModule, "Schur-Cohn transform lost its constant term");
        }
        // Keep coefficient size in check: scaling by a positive constant is harmless.
        if (!q.is_zero()) q = q * mpq_class(1 / abs(q.leading()));
    }
    int inside = 0;
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        inside = it->positive ? inside : it->degree - inside;
    }
    return zeros + inside;
}

QPoly chebyshev_transform(const QPoly& g) {
    const int deg = g.degree();
    if (deg < 0 || deg % 2 != 0) throw Error(ErrorKind::Internal, kModule, "Chebyshev transform needs even degree");
    const int k = deg / 2;
    // D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}; z^j + z^-j = D_j(z + 1/z).
    const QPoly x = QPoly::monomial(1, 1);
    QPoly prev = QPoly({2});
    QPoly cur = x;
    QPoly h = QPoly({g.coeff(k)});
    for (int j = 1; j <= k; ++j) {
        h += cur * g.coeff(k + j);
        QPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return h;
}

UnitCircleCounts unit_circle_counts(const IntPolynomial& p, mp::Bits precision) {
    QPoly q(p);
    const int d = q.degree();
    if (gcd(q, q.derivative()).degree() > 0) {
        throw Error(ErrorKind::NotSquarefree, kModule, p.to_string() + " has a repeated factor");
    }
    UnitCircleCounts out;
    while (q.degree() >= 1 && q.coeff(0) == 0) {
        q = exact_quotient(q, QPoly::monomial(1, 1));
        ++out.inside;
    }

    const QPoly g = gcd(q, q.reciprocal());
    QPoly g_core = g;
    out.on += strip_root(g_core, 1);
    out.on += strip_root(g_core, -1);
    if (g_core.degree() % 2 != 0 || !(g_core.reciprocal().monic() == g_core.monic())) {
        throw Error(ErrorKind::Internal, kModule, "reciprocal factor is not palindromic");
    }
    int pairs = 0;
    if (g_core.degree() >= 2) {
        const QPoly h = chebyshev_transform(g_core.monic());
        const SturmSequence s(h);
        int circle = s.count(-2, 2);
        if (h.sign_at(2) == 0) --circle;
        out.on += 2 * circle;
        pairs = (g_core.degree() - 2 * circle) / 2;
    }
    out.inside += pairs;
    out.outside += pairs;

    const QPoly f = exact_quotient(q, g);
    int f_inside = 0;
    if (f.degree() >= 1) {
        if (auto direct = schur_cohn_inside(f)) {
            f_inside = *direct;
        } else {
            bool done = false;
            for (mp::Bits k = 8; k <= std::max<mp::Bits>(precision, 8) && !done; k *= 2) {
                // Two nearby radii per side so an unlucky singular radius can be skipped.
                for (const mpq_class& offset : {mpq_class(1), mpq_class(3, 4)}) {
                    mpq_class step = offset;
                    mpz_class den = 1;
                    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
                    step /= den;
                    const auto lower = schur_cohn_inside(f.scaled_argument(1 - step));
                    const auto upper = schur_cohn_inside(f.scaled_argument(1 + step));
                    if (lower && upper) {
                        if (*lower == *upper) {
                            f_inside = *lower;
                            done = true;
                        }
                        break;
                    }
                }
            }
            if (!done) {
                throw Error(ErrorKind::PrecisionExhausted, kModule,
                            "could not separate roots of " + p.to_string() + " from the unit circle within " +
                                std::to_string(precision) + " bits");
            }
        }
    }
    out.inside += f_inside;
    out.outside += f.degree() - f_inside;
    if (out.inside + out.on + out.outside != d) {
        throw Error(ErrorKind::Internal, kModule, "unit circle counts do not sum to the degree");
    }
    return out;
}

}  // namespace powfrac::poly
