#include "powfrac/field.hpp"

#include <algorithm>
#include <cctype>

#include "powfrac/error.hpp"
#include "powfrac/rational_poly.hpp"

namespace powfrac::field {

namespace {

constexpr std::string_view kModule = "field";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    mpz_class v;
    const std::string text(s);
    if (text.empty() || v.set_str(text, 10) != 0) {
        throw Error(ErrorKind::Parse, kModule, "bad integer '" + text + "'");
    }
    return v;
}

mpq_class parse_scalar(std::string_view s) {
    s = trim(s);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const mpz_class den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::Parse, kModule, "zero denominator");
        mpq_class q(parse_integer(s.substr(0, slash)), den);
        q.canonicalize();
        return q;
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        std::string_view whole = s.substr(0, dot);
        const bool negative = !whole.empty() && whole.front() == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole = "0";
        if (frac.empty() || !std::all_of(frac.begin(), frac.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw Error(ErrorKind::Parse, kModule, "bad decimal '" + std::string(s) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class num = abs(parse_integer(whole)) * scale + parse_integer(frac);
        if (negative) num = -num;
        mpq_class q(num, scale);
        q.canonicalize();
        return q;
    }
    return mpq_class(parse_integer(s));
}

std::vector<mpq_class> reduce(std::vector<mpq_class> c, const poly::IntPolynomial& m) {
    const int d = m.degree();
    for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
        const mpq_class t = c[static_cast<std::size_t>(k)] / mpq_class(m.leading());
        if (t == 0) continue;
        for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(k - d + i)] -= t * m[i];
    }
    c.resize(static_cast<std::size_t>(d));
    return c;
}

}  // namespace

mpq_class parse_rational(std::string_view text) { return parse_scalar(text); }

FieldElement::FieldElement(poly::IntPolynomial modulus, std::vector<mpz_class> e, mpz_class L)
    : modulus_(std::move(modulus)), e_(std::move(e)), L_(std::move(L)) {
    if (L_ == 0) throw Error(ErrorKind::BadInput, kModule, "zero denominator");
    normalize();
}

void FieldElement::normalize() {
    const auto d = static_cast<std::size_t>(modulus_.degree());
    if (e_.size() > d) {
        std::vector<mpq_class> c(e_.begin(), e_.end());
        for (auto& v : c) v /= L_;
        *this = from_coefficients(modulus_, c);
        return;
    }
    e_.resize(d, 0);
    if (L_ < 0) {
        L_ = -L_;
        for (auto& v : e_) v = -v;
    }
    mpz_class g = L_;
    for (const auto& v : e_) g = gcd(g, v);
    if (g > 1) {
        L_ /= g;
        for (auto& v : e_) v /= g;
    }
}

FieldElement FieldElement::from_rational(poly::IntPolynomial modulus, const mpq_class& value) {
    return FieldElement(std::move(modulus), {value.get_num()}, value.get_den());
}

FieldElement FieldElement::from_coefficients(poly::IntPolynomial modulus, const std::vector<mpq_class>& c) {
    const std::vector<mpq_class> r = reduce(c, modulus);
    mpz_class L = 1;
    for (const auto& v : r) L = lcm(L, v.get_den());
    std::vector<mpz_class> e;
    e.reserve(r.size());
    for (const auto& v : r) e.emplace_back(v.get_num() * (L / v.get_den()));
    return FieldElement(std::move(modulus), std::move(e), std::move(L));
}

FieldElement FieldElement::generator(poly::IntPolynomial modulus) {
    if (modulus.degree() == 1) {
        return from_rational(modulus, mpq_class(-modulus.constant(), modulus.leading()));
    }
    return FieldElement(std::move(modulus), {0, 1}, 1);
}

FieldElement FieldElement::parse(std::string_view text, const poly::IntPolynomial& modulus) {
    text = trim(text);
    if (text.empty()) throw Error(ErrorKind::Parse, kModule, "empty field element");
    if (text.front() != '(') return from_rational(modulus, parse_scalar(text));
    const auto close = text.find(')');
    if (close == std::string_view::npos) throw Error(ErrorKind::Parse, kModule, "missing ')'");
    std::vector<mpz_class> e;
    std::string_view body = text.substr(1, close - 1);
    while (true) {
        const auto comma = body.find(',');
        e.push_back(parse_integer(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    mpz_class L = 1;
    std::string_view rest = trim(text.substr(close + 1));
    if (!rest.empty()) {
        if (rest.front() != '/') throw Error(ErrorKind::Parse, kModule, "expected '/L' after ')'");
        L = parse_integer(rest.substr(1));
        if (L <= 0) throw Error(ErrorKind::Parse, kModule, "L must be positive");
    }
    return FieldElement(modulus, std::move(e), std::move(L));
}

std::vector<mpq_class> FieldElement::coefficients() const {
    std::vector<mpq_class> c;
    c.reserve(e_.size());
    for (const auto& v : e_) {
        mpq_class q(v, L_);
        q.canonicalize();
        c.push_back(q);
    }
    return c;
}

bool FieldElement::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const mpz_class& v) { return v == 0; });
}

std::optional<mpq_class> FieldElement::rational_value() const {
    if (!std::all_of(e_.begin() + 1, e_.end(), [](const mpz_class& v) { return v == 0; })) return std::nullopt;
    mpq_class q(e_.front(), L_);
    q.canonicalize();
    return q;
}

mp::Interval FieldElement::evaluate(const mp::Interval& alpha) const {
    const mp::Bits prec = alpha.precision();
    mp::Interval acc = mp::Interval::point(e_.back(), prec);
    for (auto it = e_.rbegin() + 1; it != e_.rend(); ++it) {
        acc *= alpha;
        acc += mp::Interval::point(*it, prec);
    }
    acc /= L_;
    return acc;
}

std::string FieldElement::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ',';
        s += e_[i].get_str();
    }
    return s + ")/" + L_.get_str();
}

FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op) {
    if (!(x.modulus() == y.modulus())) {
        throw Error(ErrorKind::BaseMismatch, kModule,
                    "elements of Q(alpha) for " + x.modulus().to_string() + " and " + y.modulus().to_string());
    }
    const auto d = static_cast<std::size_t>(x.degree());
    const mpz_class& Lx = x.L();
    const mpz_class& Ly = y.L();
    if (op == FieldOp::Mul) {
        std::vector<mpz_class> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (x.e()[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += x.e()[i] * y.e()[j];
        }
        const mpz_class L = Lx * Ly;
        if (x.modulus().is_monic()) {
            const auto& m = x.modulus();
            for (std::size_t k = prod.size(); k-- > d;) {
                const mpz_class t = prod[k];
                if (t == 0) continue;
                for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] -= t * m[static_cast<int>(i)];
            }
            prod.resize(d);
            return FieldElement(x.modulus(), std::move(prod), L);
        }
        std::vector<mpq_class> c;
        c.reserve(prod.size());
        for (const auto& v : prod) {
            mpq_class q(v, L);
            q.canonicalize();
            c.push_back(q);
        }
        return FieldElement::from_coefficients(x.modulus(), c);
    }
    const mpz_class L = lcm(Lx, Ly);
    const mpz_class fx = L / Lx;
    const mpz_class fy = L / Ly;
    std::vector<mpz_class> e(d);
    for (std::size_t i = 0; i < d; ++i) {
        e[i] = x.e()[i] * fx;
        if (op == FieldOp::Add) e[i] += y.e()[i] * fy;
        else e[i] -= y.e()[i] * fy;
    }
    return FieldElement(x.modulus(), std::move(e), L);
}

FieldElement pow(const FieldElement& x, unsigned long n) {
    FieldElement result = FieldElement::from_rational(x.modulus(), 1);
    FieldElement base = x;
    while (n > 0) {
        if (n & 1UL) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

int sign(const FieldElement& x, const poly::AlgebraicNumber& a) {
    if (!(x.modulus() == a.minpoly())) throw Error(ErrorKind::BaseMismatch, kModule, "element of a different field");
    if (x.is_zero()) return 0;
    if (auto r = x.rational_value()) return sgn(*r);
    const poly::QPoly s(std::vector<mpq_class>(x.e().begin(), x.e().end()));
    const poly::QPoly q(a.minpoly());
    poly::RationalInterval iv = a.alpha_interval();
    if (iv.is_point()) return s.sign_at(iv.lo);
    const poly::SturmSequence sturm(s);
    // s and the minimal polynomial share no root, so a narrow enough interval excludes every root of s.
    while (sturm.count(iv.lo, iv.hi) != 0) iv = poly::refine_root(q, iv, iv.width() / 4);
    return s.sign_at(iv.hi);
}

std::vector<mpq_class> power_sums(const poly::IntPolynomial& p, long N) {
    if (N < 0) throw Error(ErrorKind::BadInput, kModule, "N must be non-negative");
    const int d = p.degree();
    std::vector<mpq_class> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = mpq_class(p[i], p.leading());
        c[static_cast<std::size_t>(i)].canonicalize();
    }
    std::vector<mpq_class> s(static_cast<std::size_t>(N) + 1);
    s[0] = d;
    for (long k = 1; k <= N; ++k) {
        mpq_class v = 0;
        const long lim = std::min<long>(k - 1, d);
        for (long i = 1; i <= lim; ++i) v -= c[static_cast<std::size_t>(d - i)] * s[static_cast<std::size_t>(k - i)];
        if (k <= d) v -= k * c[static_cast<std::size_t>(d - k)];
        s[static_cast<std::size_t>(k)] = v;
    }
    return s;
}

mpq_class trace(const FieldElement& x) {
    const auto s = power_sums(x.modulus(), x.degree() - 1);
    mpq_class t = 0;
    for (std::size_t k = 0; k < x.e().size(); ++k) t += x.e()[k] * s[k];
    t /= x.L();
    return t;
}

std::vector<mpz_class> trace_sequence(const FieldElement& xi, long N) {
    const auto& p = xi.modulus();
    if (!p.is_monic()) {
        throw Error(ErrorKind::NotAlgebraicInteger, kModule, p.to_string() + " is not monic");
    }
    if (N < 1) throw Error(ErrorKind::BadInput, kModule, "N must be at least 1");
    const int d = p.degree();
    const auto s = power_sums(p, N + d - 1);
    std::vector<mpz_class> b(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) {
        mpz_class v = 0;
        for (int k = 0; k < d; ++k) {
            v += xi.e()[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n + k)].get_num();
        }
        b[static_cast<std::size_t>(n - 1)] = v;
    }
    for (long n = 0; n + d < N; ++n) {
        mpz_class r = 0;
        for (int i = 0; i <= d; ++i) r += p[i] * b[static_cast<std::size_t>(n + i)];
        if (r != 0) throw Error(ErrorKind::Internal, kModule, "trace sequence breaks the recurrence");
    }
    return b;
}

}  // namespace powfrac::field
