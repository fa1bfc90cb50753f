#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq {

/*
 * Local linearization data of a fixed point of a prime-order automorphism of
 * a threefold: the differential diagonalizes as diag(w^a1, w^a2, w^a3) with
 * w = exp(2*pi*i/p). Exponents are defined up to permutation, so they are
 * kept in non-increasing canonical order; equality and ordering are on the
 * canonical form.
 */
class LocalType {
  public:
    LocalType(unsigned p, std::array<unsigned, 3> exps);

    unsigned prime() const { return p_; }
    const std::array<unsigned, 3>& exponents() const { return exps_; }

    // (a1 + a2 + a3) mod p, the determinant exponent.
    unsigned s() const;

    bool isolated() const;          // all exponents nonzero
    bool quasi_reflection() const;  // exactly one exponent nonzero
    bool gorenstein() const;        // determinant 1, i.e. s == 0

    // Age with respect to the primitive root w^{u^{-1}}: sum of
    // ((u*a_i) mod p) / p. Zero exponents contribute zero.
    Rational age(unsigned unit) const;

    // Determinant criterion: s mod p appears among the exponents.
    bool terminal() const;
    // Age criterion: age > 1 for every unit mod p.
    bool terminal_by_age() const;
    // Age criterion: age >= 1 for every unit mod p.
    bool canonical() const;

    auto operator<=>(const LocalType&) const = default;

  private:
    unsigned p_;
    std::array<unsigned, 3> exps_;  // non-increasing
};

struct SingularityClassification {
    bool isolated = false;
    bool quasi_reflection = false;
    bool gorenstein = false;
    std::optional<bool> canonical;  // meaningful for isolated types only
    std::optional<bool> terminal;
    unsigned s = 0;
    std::map<unsigned, Rational> ages;  // unit mod p -> age
};

SingularityClassification classify(const LocalType& t);

// All canonical exponent multisets from [1, p-1]^3; exactly C(p+1, 3) of them,
// sorted in the canonical LocalType order.
std::vector<LocalType> enumerate_isolated_types(unsigned p);

// The three-way split of the 20 isolated types of order 5: terminal types,
// non-terminal non-symplectic types, and types with determinant 1.
struct Order5Partition {
    std::vector<LocalType> terminal;
    std::vector<LocalType> non_terminal;
    std::vector<LocalType> symplectic;
};

Order5Partition partition_order5();

}  // namespace cyq
