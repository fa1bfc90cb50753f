#include <doctest.h>

#include <complex>
#include <random>

#include "cyq/cyclotomic.hpp"

using cyq::Cyclotomic;
using cyq::Integer;
using cyq::Rational;

namespace {

Cyclotomic make(unsigned long n, std::vector<long> coeffs) {
    std::vector<Rational> rs;
    for (long c : coeffs) rs.emplace_back(c);
    return Cyclotomic::from_coeffs(n, rs);
}

bool embed_close(const Cyclotomic& z, std::complex<double> expected, double tol = 1e-9) {
    return std::abs(z.embed() - expected) < tol;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Cyclotomic random_cyclotomic(std::mt19937& rng, unsigned long n) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> coeffs;
    for (unsigned long i = 0; i < cyq::totient(n); ++i)
        coeffs.push_back(cyq::make_rational(num(rng), den(rng)));
    return Cyclotomic::from_coeffs(n, coeffs);
}

}  // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
    CHECK(cyq::cyclotomic_polynomial(1).coeffs == std::vector<Integer>{-1, 1});
    CHECK(cyq::cyclotomic_polynomial(2).coeffs == std::vector<Integer>{1, 1});
    CHECK(cyq::cyclotomic_polynomial(5).coeffs == std::vector<Integer>{1, 1, 1, 1, 1});
    CHECK(cyq::cyclotomic_polynomial(6).coeffs == std::vector<Integer>{1, -1, 1});

    // Independent oracle: the product of Phi_d over d | 6 is x^6 - 1.
    std::vector<Integer> product{1};
    for (unsigned long d : {1, 2, 3, 6})
        product = poly_mul(product, cyq::cyclotomic_polynomial(d).coeffs);
    std::vector<Integer> expected(7, Integer(0));
    expected[0] = -1;
    expected[6] = 1;
    CHECK(product == expected);

    for (unsigned long n : {7, 9, 12, 105})
        CHECK(cyq::cyclotomic_polynomial(n).degree() == cyq::totient(n));
}

TEST_CASE("roots of unity reduce to the power basis") {
    CHECK(Cyclotomic::root_of_unity(2, 1) == make(2, {-1}));
    CHECK(Cyclotomic::root_of_unity(3, 3) == Cyclotomic::one(3));
    CHECK(Cyclotomic::root_of_unity(3, 2) == make(3, {-1, -1}));
    CHECK(Cyclotomic::root_of_unity(5, 7) == Cyclotomic::root_of_unity(5, 2));
    CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
}

TEST_CASE("field arithmetic") {
    Cyclotomic one3 = Cyclotomic::one(3);
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic z3sq = Cyclotomic::root_of_unity(3, 2);

    CHECK((one3 - z3) * (one3 - z3sq) == Cyclotomic::from_rational(3, Rational(3)));
    CHECK(z3 * z3sq == one3);

    Cyclotomic cube = (one3 - z3) * (one3 - z3) * (one3 - z3);
    CHECK(cube == make(3, {-3, -6}));
    CHECK(embed_close(cube, std::pow(std::complex<double>(1.0, 0.0) -
                                         std::exp(std::complex<double>(0, 2 * M_PI / 3)),
                                     3)));

    CHECK_THROWS_AS(z3 + Cyclotomic::root_of_unity(5, 1), std::invalid_argument);
}

TEST_CASE("exact inversion") {
    Cyclotomic two = Cyclotomic::from_rational(3, Rational(2));
    CHECK(two.inverse() == Cyclotomic::from_rational(3, cyq::make_rational(1, 2)));

    Cyclotomic a = Cyclotomic::one(3) - Cyclotomic::root_of_unity(3, 1);
    Cyclotomic inv = a.inverse();
    CHECK(inv == Cyclotomic::from_coeffs(3, {cyq::make_rational(2, 3), cyq::make_rational(1, 3)}));
    CHECK(a * inv == Cyclotomic::one(3));

    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), std::domain_error);
}

TEST_CASE("galois action") {
    Cyclotomic a = make(3, {1, 2});  // 1 + 2*z
    CHECK(a.galois(1) == a);
    CHECK(a.galois(2) == make(3, {-1, -2}));
    CHECK(Cyclotomic::from_rational(3, Rational(7)).galois(2) ==
          Cyclotomic::from_rational(3, Rational(7)));
    CHECK_THROWS_AS(a.galois(3), std::invalid_argument);
}

TEST_CASE("rationality detection") {
    Cyclotomic one3 = Cyclotomic::one(3);
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    auto r = ((one3 - z3) * (one3 - z3.galois(2))).as_rational();
    REQUIRE(r.has_value());
    CHECK(*r == 3);
    CHECK(!Cyclotomic::root_of_unity(5, 1).as_rational().has_value());
    auto minus_one = Cyclotomic::root_of_unity(2, 1).as_rational();
    REQUIRE(minus_one.has_value());
    CHECK(*minus_one == -1);
}

TEST_CASE("floating embedding is display-grade accurate") {
    CHECK(embed_close(Cyclotomic::root_of_unity(3, 1),
                      std::exp(std::complex<double>(0, 2 * M_PI / 3))));
    CHECK(embed_close(Cyclotomic::root_of_unity(2, 1), {-1.0, 0.0}));
    // (1 + 2z)/9 in Q(zeta_3) is i*sqrt(3)/9.
    Cyclotomic x1 = Cyclotomic::from_coeffs(
        3, {cyq::make_rational(1, 9), cyq::make_rational(2, 9)});
    CHECK(embed_close(x1, {0.0, std::sqrt(3.0) / 9.0}));
}

TEST_CASE("vanishing sums of all n-th roots") {
    for (unsigned long n = 2; n <= 15; ++n) {
        Cyclotomic sum = Cyclotomic::zero(n);
        for (unsigned long k = 0; k < n; ++k)
            sum += Cyclotomic::root_of_unity(n, static_cast<long>(k));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("inverse of 1 - zeta^a as a weighted root sum") {
    for (unsigned long p : {2, 3, 5, 7, 11, 13}) {
        for (unsigned long a = 1; a < p; ++a) {
            Cyclotomic lhs =
                (Cyclotomic::one(p) - Cyclotomic::root_of_unity(p, static_cast<long>(a)))
                    .inverse();
            Cyclotomic rhs = Cyclotomic::zero(p);
            for (unsigned long k = 1; k < p; ++k)
                rhs += Cyclotomic::from_rational(p, Rational(static_cast<long>(k))) *
                       Cyclotomic::root_of_unity(p, static_cast<long>(k * a));
            rhs = -(rhs * Cyclotomic::from_rational(p, cyq::make_rational(1, static_cast<long>(p))));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("algebraic properties on random inputs") {
    std::mt19937 rng(20240811);
    for (unsigned long n : {3, 5, 8, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            Cyclotomic a = random_cyclotomic(rng, n);
            Cyclotomic b = random_cyclotomic(rng, n);
            Cyclotomic c = random_cyclotomic(rng, n);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic::one(n));
                CHECK(a.inverse() * a == Cyclotomic::one(n));
            }
            // The embedding is a ring homomorphism: an independent numeric check.
            CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-6);
            CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-6);

            for (long k = 1; k < static_cast<long>(n); ++k) {
                if (std::gcd(k, static_cast<long>(n)) != 1) continue;
                CHECK(a.galois(k) * b.galois(k) == (a * b).galois(k));
                CHECK(a.galois(k) + b.galois(k) == (a + b).galois(k));
                for (long k2 = 1; k2 < static_cast<long>(n); ++k2) {
                    if (std::gcd(k2, static_cast<long>(n)) != 1) continue;
                    CHECK(a.galois(k).galois(k2) == a.galois(k * k2 % static_cast<long>(n)));
                }
            }
        }
    }
}

TEST_CASE("reduction is idempotent and degree-stable") {
    std::vector<Rational> coeffs{Rational(2), Rational(-1), Rational(0), Rational(5),
                                 Rational(1), Rational(1),  Rational(7)};
    CHECK(Cyclotomic::from_coeffs(5, coeffs) == Cyclotomic::from_coeffs(5, coeffs));
    // x^7 = x^2 in Q(zeta_5).
    std::vector<Rational> x7(8, Rational(0));
    x7[7] = Rational(1);
    CHECK(Cyclotomic::from_coeffs(5, x7) == Cyclotomic::root_of_unity(5, 2));
    for (const auto& z : {Cyclotomic::from_coeffs(5, coeffs), Cyclotomic::zero(7)})
        CHECK(z.coeffs().size() == cyq::totient(z.order()));
}

TEST_CASE("explicit lift into a larger field") {
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    CHECK(z3.lift(2) == Cyclotomic::root_of_unity(6, 2));
    CHECK(z3.lift(1) == z3);
    Cyclotomic q = Cyclotomic::from_rational(3, cyq::make_rational(5, 7));
    auto lifted = q.lift(4).as_rational();
    REQUIRE(lifted.has_value());
    CHECK(*lifted == cyq::make_rational(5, 7));
    CHECK(std::abs(z3.lift(5).embed() - z3.embed()) < 1e-9);
}
