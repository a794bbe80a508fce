#include <random>

#include "doctest.h"
#include "powfrac/error.hpp"
#include "powfrac/field.hpp"

using namespace powfrac;
using field::FieldElement;
using poly::IntPolynomial;

namespace {

const IntPolynomial kGolden = IntPolynomial::parse("z^2-z-1");
const IntPolynomial kCubic = IntPolynomial::parse("z^3-z-1");

}  // namespace

TEST_CASE("normal form") {
    const FieldElement x(kGolden, {2, 4}, 6);
    CHECK(x.e() == std::vector<mpz_class>{1, 2});
    CHECK(x.L() == 3);
    CHECK(x.to_string() == "(1,2)/3");
    const FieldElement y(kGolden, {1, 0}, -2);
    CHECK(y.L() == 2);
    CHECK(y.e() == std::vector<mpz_class>{-1, 0});
    CHECK(FieldElement(kGolden, {0, 0, 1}) == FieldElement(kGolden, {1, 1}));
}

TEST_CASE("parsing") {
    CHECK(FieldElement::parse("(1,1)/3", kGolden) == FieldElement(kGolden, {1, 1}, 3));
    CHECK(FieldElement::parse("(0,1)", kGolden) == FieldElement::generator(kGolden));
    CHECK(FieldElement::parse("3/4", kGolden).rational_value() == mpq_class(3, 4));
    CHECK(FieldElement::parse("0.25", kGolden).rational_value() == mpq_class(1, 4));
    CHECK(FieldElement::parse("7", kGolden).rational_value() == mpq_class(7));
    CHECK(field::parse_rational("-5/10") == mpq_class(-1, 2));
    CHECK_THROWS_AS(FieldElement::parse("(1,2", kGolden), Error);
}

TEST_CASE("ring arithmetic reduces modulo the minimal polynomial") {
    const auto a = FieldElement::generator(kGolden);
    CHECK(a * a == FieldElement(kGolden, {1, 1}));
    CHECK(field::pow(a, 10) == FieldElement(kGolden, {34, 55}));
    const auto c = FieldElement::generator(kCubic);
    CHECK(field::pow(c, 3) == FieldElement(kCubic, {1, 1, 0}));
    CHECK((a + a - a) == a);
    CHECK_THROWS_AS(a + c, Error);
}

TEST_CASE("non-monic base keeps rational coordinates") {
    const auto base = IntPolynomial::parse("2z-3");
    const auto g = FieldElement::generator(base);
    CHECK(g.rational_value() == mpq_class(3, 2));
    CHECK(field::pow(g, 5).rational_value() == mpq_class(243, 32));
}

TEST_CASE("exact sign at alpha") {
    const auto golden = poly::classify(kGolden);
    CHECK(field::sign(FieldElement(kGolden, {1, -1}), golden) == -1);  // 1 - alpha
    CHECK(field::sign(FieldElement(kGolden, {-1, 1}), golden) == 1);
    CHECK(field::sign(FieldElement(kGolden, {0, 0}), golden) == 0);
    // alpha^20 - 15127 = -beta^20 < 0, a near-cancellation.
    CHECK(field::sign(field::pow(FieldElement::generator(kGolden), 20) - FieldElement(kGolden, {15127, 0}), golden) ==
          -1);
}

TEST_CASE("power sums agree with the symbolic oracle") {
    // tests/oracles/golden_orbit.py, tests/oracles/recurrences.py
    CHECK(field::power_sums(kGolden, 5) == std::vector<mpq_class>{2, 1, 3, 4, 7, 11});
    CHECK(field::power_sums(kCubic, 4) == std::vector<mpq_class>{3, 0, 2, 3, 2});
    CHECK(field::power_sums(IntPolynomial::parse("z-2"), 3) == std::vector<mpq_class>{1, 2, 4, 8});
}

TEST_CASE("trace sequences") {
    const auto xi = FieldElement(kGolden, {1, 1});
    const auto b = field::trace_sequence(xi, 4);
    CHECK(b == std::vector<mpz_class>{4, 7, 11, 18});  // b[n-1] = Tr(xi alpha^n)
    const auto lehmer = IntPolynomial::parse("z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1");
    const auto t = field::trace_sequence(FieldElement::from_rational(lehmer, 1), 500);
    // tests/oracles/lehmer.py
    CHECK(t[0] == -1);
    CHECK(t[1] == 1);
    CHECK(t[2] == 2);
    CHECK(t[9] == 6);
    CHECK(t[99] == mpz_class("11248676"));
    CHECK(t[499] == mpz_class("180097421505804024757718060662084801"));
    CHECK_THROWS_AS(field::trace_sequence(FieldElement::generator(IntPolynomial::parse("2z-3")), 3), Error);
}

TEST_CASE("trace is Q-linear") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const FieldElement x(kCubic, {coef(rng), coef(rng), coef(rng)}, den(rng));
        const FieldElement y(kCubic, {coef(rng), coef(rng), coef(rng)}, den(rng));
        const long k = coef(rng);
        CHECK(field::trace(x + y) == field::trace(x) + field::trace(y));
        CHECK(field::trace(FieldElement::from_rational(kCubic, k) * x) == k * field::trace(x));
    }
}
