#include "powfrac/rational_poly.hpp"

#include <algorithm>

#include "powfrac/error.hpp"

namespace powfrac::poly {

namespace {

int sgn_q(const mpq_class& q) { return sgn(q); }

int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

QPoly::QPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) { trim(); }

QPoly::QPoly(const IntPolynomial& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c_.emplace_back(a);
    trim();
}

QPoly QPoly::monomial(const mpq_class& c, int k) {
    std::vector<mpq_class> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

QPoly QPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return QPoly(std::move(d));
}

QPoly QPoly::reciprocal() const {
    std::vector<mpq_class> r(c_.rbegin(), c_.rend());
    return QPoly(std::move(r));
}

QPoly QPoly::scaled_argument(const mpq_class& rho) const {
    std::vector<mpq_class> r(c_.size());
    mpq_class power = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * power;
        power *= rho;
    }
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    QPoly out = *this;
    const mpq_class lc = leading();
    for (auto& c : out.c_) c /= lc;
    return out;
}

std::vector<mpz_class> QPoly::primitive_integer_coeffs() const {
    mpz_class den = 1;
    for (const auto& c : c_) den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> out;
    out.reserve(c_.size());
    mpz_class content = 0;
    for (const auto& c : c_) {
        mpz_class v = c.get_num() * (den / c.get_den());
        content = ::gcd(content, v);
        out.push_back(v);
    }
    if (content > 1) {
        for (auto& v : out) v /= content;
    }
    return out;
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int QPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // Horner over integers: p(n/m) * m^d has the sign of p(n/m).
    const mpz_class& n = x.get_num();
    const mpz_class& m = x.get_den();
    const auto ints = primitive_integer_coeffs();
    mpz_class acc = 0;
    mpz_class mpow = 1;
    // acc = sum a_i n^i m^(d-i), evaluated as Horner in n with m-powers.
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) {
        acc = acc * n + *it * mpow;
        mpow *= m;
    }
    return sgn(acc);
}

int QPoly::sign_at_infinity(int direction) const {
    if (is_zero()) return 0;
    const int lc = sgn_q(leading());
    if (direction > 0 || degree() % 2 == 0) return lc;
    return -lc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const mpq_class& rhs) {
    for (auto& c : c_) c *= rhs;
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

DivMod divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::Internal, "poly_algebra", "polynomial division by zero");
    std::vector<mpq_class> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {QPoly{}, a};
    std::vector<mpq_class> quo(static_cast<std::size_t>(da - db) + 1, 0);
    const mpq_class& lb = b.leading();
    for (int k = da - db; k >= 0; --k) {
        const mpq_class q = rem[static_cast<std::size_t>(k + db)] / lb;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::Internal, "poly_algebra", "inexact polynomial quotient");
    return q;
}

// ---------------------------------------------------------------------------

SturmSequence::SturmSequence(const QPoly& p) {
    if (p.is_zero()) return;
    chain_.push_back(p.monic());
    QPoly d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(d.monic());
    for (;;) {
        const QPoly& a = chain_[chain_.size() - 2];
        const QPoly& b = chain_.back();
        QPoly r = divmod(a, b).remainder;
        if (r.is_zero()) break;
        // -rem, scaled by a positive constant (monic of -r keeps sign of -r's lc).
        QPoly neg = r * mpq_class(-1);
        const mpq_class scale = abs(neg.leading());
        chain_.push_back(neg * mpq_class(1 / scale));
    }
}

int SturmSequence::variations_at(const mpq_class& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.sign_at(x));
    return sign_variations(signs);
}

int SturmSequence::variations_at_infinity(int direction) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.sign_at_infinity(direction));
    return sign_variations(signs);
}

int SturmSequence::count(const mpq_class& a, const mpq_class& b) const {
    if (chain_.empty() || b <= a) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_above(const mpq_class& a) const {
    if (chain_.empty()) return 0;
    return variations_at(a) - variations_at_infinity(+1);
}

int SturmSequence::count_all() const {
    if (chain_.empty()) return 0;
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

// ---------------------------------------------------------------------------

mpq_class cauchy_bound(const QPoly& p) {
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p.coeff(i) / p.leading())));
    return m + 1;
}

namespace {

void isolate(const QPoly& p, const SturmSequence& s, const mpq_class& a, const mpq_class& b, int k,
             std::vector<RationalInterval>& out) {
    if (k == 0) return;
    if (k == 1) {
        if (p.sign_at(b) == 0) {
            out.push_back({b, b});
        } else {
            out.push_back({a, b});
        }
        return;
    }
    const mpq_class mid = (a + b) / 2;
    const int left = s.count(a, mid);
    isolate(p, s, a, mid, left, out);
    isolate(p, s, mid, b, k - left, out);
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const QPoly& p, const mpq_class& a, const mpq_class& b) {
    std::vector<RationalInterval> out;
    if (p.degree() < 1) return out;
    const SturmSequence s(p);
    isolate(p, s, a, b, s.count(a, b), out);
    return out;
}

RationalInterval refine_root(const QPoly& p, RationalInterval iv, const mpq_class& max_width) {
    if (iv.is_point()) return iv;
    if (p.sign_at(iv.hi) == 0) return {iv.hi, iv.hi};
    // The isolating interval is half-open; move lo off a neighbouring root.
    if (p.sign_at(iv.lo) == 0) {
        const SturmSequence s(p);
        mpq_class lo = iv.lo;
        mpq_class step = iv.width() / 2;
        while (s.count(lo + step, iv.hi) != 1 || p.sign_at(lo + step) == 0) step /= 2;
        iv.lo = lo + step;
    }
    const int s_lo = p.sign_at(iv.lo);
    while (iv.width() > max_width) {
        const mpq_class mid = (iv.lo + iv.hi) / 2;
        const int s_mid = p.sign_at(mid);
        if (s_mid == 0) return {mid, mid};
        if (s_mid == s_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace powfrac::poly
