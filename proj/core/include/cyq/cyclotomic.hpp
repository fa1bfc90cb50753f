#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq {

// The n-th cyclotomic polynomial Phi_n, monic with integer coefficients,
// stored low degree first.
struct CyclotomicPolynomial {
    unsigned long order = 1;
    std::vector<Integer> coeffs;

    unsigned long degree() const { return coeffs.size() - 1; }
};

// Computed by recursive exact division Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
// and memoized process-wide.
const CyclotomicPolynomial& cyclotomic_polynomial(unsigned long n);

/*
 * An element of Q(zeta_n), zeta_n = exp(2*pi*i/n), represented on the power
 * basis 1, zeta, ..., zeta^(phi(n)-1) modulo Phi_n. The representation is a
 * normal form: two values are equal iff their orders and coefficient vectors
 * are equal. Arithmetic never changes the order; embedding into a larger
 * cyclotomic field is the explicit lift() below.
 */
class Cyclotomic {
  public:
    Cyclotomic() : Cyclotomic(zero(1)) {}

    static Cyclotomic zero(unsigned long n);
    static Cyclotomic one(unsigned long n);
    static Cyclotomic from_rational(unsigned long n, const Rational& value);
    // zeta_n^k, k taken mod n.
    static Cyclotomic root_of_unity(unsigned long n, long k);
    // Reduces an arbitrary-degree polynomial in zeta_n mod Phi_n.
    static Cyclotomic from_coeffs(unsigned long n, std::vector<Rational> poly);

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    // Exact inverse via the extended Euclidean algorithm against Phi_n.
    Cyclotomic inverse() const;

    // The Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
    Cyclotomic galois(long k) const;
    Cyclotomic conjugate() const { return galois(static_cast<long>(order_) - 1); }

    // Embeds Q(zeta_n) into Q(zeta_{n*m}) by zeta_n -> zeta_{n*m}^m.
    Cyclotomic lift(unsigned long m) const;

    // Floating approximation; display only, never part of exact logic.
    std::complex<double> embed() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    std::string to_string() const;  // e.g. "(2 + z)/1" style human form

  private:
    Cyclotomic(unsigned long order, std::vector<Rational> reduced)
        : order_(order), coeffs_(std::move(reduced)) {}

    unsigned long order_;
    std::vector<Rational> coeffs_;  // size phi(order)
};

}  // namespace cyq
