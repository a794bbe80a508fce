#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "powfrac/analyze.hpp"
#include "powfrac/error.hpp"

using namespace powfrac;
using field::FieldElement;
using poly::IntPolynomial;

namespace {

std::vector<orbit::OrbitSample> run(const IntPolynomial& base, const FieldElement& xi, long N,
                                    const mpz_class& scale = 1) {
    orbit::OrbitConfig cfg;
    cfg.horizon = N;
    cfg.scale = scale;
    return orbit::iterate(xi, poly::classify(base), cfg);
}

struct Brute {
    long preperiod;
    long period;
};

Brute brute_period(const std::vector<long>& A, const std::vector<long>& init, long L) {
    const std::size_t d = init.size();
    std::map<std::vector<long>, long> seen;
    std::vector<long> state(d);
    for (std::size_t i = 0; i < d; ++i) state[i] = ((init[i] % L) + L) % L;
    for (long k = 0;; ++k) {
        const auto [it, fresh] = seen.emplace(state, k);
        if (!fresh) return {it->second, k - it->second};
        long next = 0;
        for (std::size_t i = 0; i < d; ++i) next -= A[i] * state[i];
        next = ((next % L) + L) % L;
        state.erase(state.begin());
        state.push_back(next);
    }
}

std::vector<mpz_class> to_mpz(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("leader clustering on R/Z") {
    const std::vector<mpq_class> y = {mpq_class(1, 2), mpq_class(1, 100), mpq_class(99, 100), mpq_class(101, 200),
                                      mpq_class(1, 1000), mpq_class(999, 1000), mpq_class(51, 100)};
    const auto r = analyze::cluster_limit_points(y, mpq_class(1, 20), 0);
    REQUIRE(r.clusters.size() == 3);
    long total = 0;
    for (const auto& c : r.clusters) total += c.population;
    CHECK(total == 7);
    CHECK_THROWS_AS(analyze::cluster_limit_points(y, mpq_class(1, 2), 0), Error);
    CHECK_THROWS_AS(analyze::cluster_limit_points(y, mpq_class(1, 20), 7), Error);
}

TEST_CASE("golden ratio limit points are 0 and 1") {
    const auto base = IntPolynomial::parse("z^2-z-1");
    const auto r = analyze::cluster_limit_points(run(base, FieldElement::from_rational(base, 1), 200), mpq_class(1, 100), 10);
    REQUIRE(r.clusters.size() == 2);
    for (const auto& c : r.centers()) CHECK(orbit::circle_norm(c) < mpq_class(1, 1000000000));
    CHECK(analyze::pv_verify(r, 1, mpq_class(1, 100)));
}

TEST_CASE("scaled limit points project onto multiples of 1/L") {
    const auto base = IntPolynomial::parse("z^2-z-1");
    const auto xi = FieldElement::parse("(1,1)/3", base);
    const auto plain = analyze::cluster_limit_points(run(base, xi, 200), mpq_class(1, 100), 10);
    for (const auto& c : plain.centers()) {
        const mpq_class t = c * 3;
        CHECK(std::abs(t.get_d() - std::round(t.get_d())) < 3e-6);
    }
    const auto scaled = analyze::cluster_limit_points(run(base, xi, 200, 3), mpq_class(1, 100), 10);
    const auto proj = analyze::scale_and_project(plain, scaled, 3, mpq_class(1, 10));
    CHECK(proj.max_miss < mpq_class(1, 10));
}

TEST_CASE("rational detection") {
    CHECK(analyze::detect_rational(mpq_class(333334, 1000000), mpq_class(1, 10000), 64) == mpq_class(1, 3));
    CHECK_FALSE(analyze::detect_rational(mpq_class(314159, 1000000), mpq_class(1, 1000000), 64).has_value());
}

TEST_CASE("difference structure of a rational limit set") {
    analyze::LimitPointReport r;
    r.epsilon = mpq_class(1, 100);
    for (int k = 0; k < 3; ++k) r.clusters.push_back({mpq_class(k, 3), 10, 0});
    const auto ds = analyze::difference_structure(r, 1, mpq_class(1, 1000000));
    CHECK(ds.L_common == 3);
}

TEST_CASE("vector collision and contraction on the golden orbit") {
    const auto base = IntPolynomial::parse("z^2-z-1");
    const auto a = poly::classify(base);
    const auto xi = FieldElement::from_rational(base, 1);
    const mpq_class eps(1, 1000);
    const auto samples = run(base, xi, 100);
    const auto report = analyze::cluster_limit_points(samples, eps, 10);
    const auto eta = analyze::assign_eta(samples, report, 2 * eps);
    const auto col = analyze::find_vector_collision(eta, 2, static_cast<long>(report.clusters.size()));
    CHECK(col.m > col.r);
    CHECK(col.m - col.r <= 6);
    const auto c = analyze::verify_contraction(xi, a, 1, col.m, col.r, eps, 100);
    CHECK(c.holds);
    CHECK(c.max_norm < 2 * eps);
}

TEST_CASE("contraction fails for 3/2") {
    const auto base = IntPolynomial::parse("2z-3");
    const auto a = poly::classify(base);
    // tests/oracles/rational_orbit.py: xi' = 9/4 - 3/2 violates at n = 1
    const auto c = analyze::verify_contraction(FieldElement::from_rational(base, 1), a, 1, 2, 1, mpq_class(1, 1000), 50);
    CHECK_FALSE(c.holds);
    CHECK(c.first_violation == 1);
}

TEST_CASE("PV envelope C rho^n for seeds in Z[alpha]") {
    const auto base = IntPolynomial::parse("z^2-z-1");
    const double beta = (1.0 - std::sqrt(5.0)) / 2.0;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int trial = 0; trial < 30; ++trial) {
        long e0 = coef(rng), e1 = coef(rng);
        const double xi_val = e0 + e1 * (1.0 + std::sqrt(5.0)) / 2.0;
        if (xi_val <= 0) continue;
        const double C = std::abs(e0 + e1 * beta);
        const auto s = run(base, FieldElement(base, {e0, e1}), 60);
        for (const auto& v : s) {
            const double env = C * std::pow(std::abs(beta), static_cast<double>(v.n));
            if (env < 0.5) CHECK(orbit::circle_norm(v.y()).get_d() <= env * (1 + 1e-9) + 1e-15);
        }
    }
}

TEST_CASE("pure periodicity on named recurrences") {
    // tests/oracles/recurrences.py
    const auto fib = analyze::pure_period_mod(to_mpz({-1, -1}), to_mpz({1, 1}), 10, 1000);
    CHECK(fib.pure);
    CHECK(fib.period == 60);
    const auto lucas = analyze::pure_period_mod(to_mpz({-1, -1}), to_mpz({2, 1}), 3, 1000);
    CHECK(lucas.pure);
    CHECK(lucas.period == 8);
    const auto dbl = analyze::pure_period_mod(to_mpz({-2}), to_mpz({1}), 4, 100);
    CHECK_FALSE(dbl.pure);
    CHECK(dbl.preperiod == 2);
    CHECK(dbl.period == 1);
    CHECK_FALSE(dbl.lemma_violation);
}

TEST_CASE("random coprime recurrences are purely periodic") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> deg(1, 3);
    std::uniform_int_distribution<long> mod(2, 30);
    std::uniform_int_distribution<long> coef(-10, 10);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = deg(rng);
        const long L = mod(rng);
        std::vector<long> A(d), init(d);
        do {
            for (auto& v : A) v = coef(rng);
        } while (A[0] == 0 || std::gcd(std::abs(A[0]), L) != 1);
        for (auto& v : init) v = coef(rng);
        const auto r = analyze::pure_period_mod(to_mpz(A), to_mpz(init), L, 100000);
        const auto b = brute_period(A, init, L);
        CHECK(r.preperiod == 0);
        CHECK(r.preperiod == b.preperiod);
        CHECK(r.period == b.period);
        CHECK_FALSE(r.lemma_violation);
    }
}

TEST_CASE("ultimate period scan") {
    std::vector<mpz_class> seq = {5, 9, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3};
    const auto r = analyze::ultimate_period_scan(seq, 5);
    REQUIRE(r.has_value());
    CHECK(r->period == 3);
    CHECK(r->start == 3);
    std::vector<mpz_class> noise = {1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9};
    CHECK_FALSE(analyze::ultimate_period_scan(noise, 4).has_value());
}
