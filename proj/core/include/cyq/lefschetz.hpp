#pragma once

#include <optional>
#include <vector>

#include "cyq/cyclotomic.hpp"
#include "cyq/local_type.hpp"

namespace cyq {

// S_n of a type: the sum of k1*k2*k3 over 0 <= k_i <= p-1 with
// a1*k1 + a2*k2 + a3*k3 = n mod p. Always computed by the defining O(p^3)
// loop; the closed form below is a cross-check for terminal types only.
Integer congruence_sum(const LocalType& t, unsigned n);

// Sum of S_n over all n; equals (p(p-1)/2)^3 for every isolated type.
Integer congruence_sum_total(const LocalType& t);

// S_0 of any terminal type: (p/2) * [p^2(p-1)^2/4 - p(p-1)(2p-1)/6].
Rational terminal_s0_value(unsigned p);

// 1 / prod_i (1 - zeta_p^{a_i}), the local term of the fixed-point identity.
Cyclotomic contribution(const LocalType& t);

struct PointMultiplicity {
    LocalType type;
    unsigned multiplicity = 0;

    auto operator<=>(const PointMultiplicity&) const = default;
};

/*
 * A candidate fixed-point configuration of a prime-order automorphism: the
 * trace exponent r (the action on the holomorphic 3-form is w^r) and a
 * multiset of isolated local types. Every point must carry the same
 * determinant exponent s = -r mod p; an empty multiset forces r = 0.
 */
class FixedConfig {
  public:
    FixedConfig(unsigned p, unsigned r, std::vector<PointMultiplicity> points);

    unsigned prime() const { return p_; }
    unsigned trace_exponent() const { return r_; }
    const std::vector<PointMultiplicity>& points() const { return points_; }
    unsigned total_points() const;

    bool operator==(const FixedConfig&) const = default;

  private:
    unsigned p_;
    unsigned r_;
    std::vector<PointMultiplicity> points_;  // canonical order, multiplicities merged
};

struct ContiCheck {
    Integer lhs;  // sum over points of p^3(p-1)^3/8 - p*S_0
    Integer rhs;  // p^4 if r != 0 else 0
    bool ok = false;
};

struct PointReport {
    LocalType type;
    unsigned multiplicity = 0;
    SingularityClassification classification;
    Integer s0;
};

struct Order3Counts {
    unsigned n1 = 0;  // points of type (1,1,1)
    unsigned n2 = 0;  // points of type (2,2,2)
    unsigned total = 0;
    bool all_terminal = false;
    bool consistent = false;  // the constraint implied by validity holds
};

struct Order5Counts {
    unsigned n = 0;   // points with S_0 = 175
    unsigned q1 = 0;  // points with S_0 = 200
    unsigned q2 = 0;  // points with S_0 = 225
    unsigned total = 0;
    bool consistent = false;  // n == 5 + q2 and total == 5 + q1 + 2*q2
};

struct ConfigReport {
    Cyclotomic lhs;  // sum of contributions
    Cyclotomic rhs;  // 1 - zeta^r
    bool valid = false;
    ContiCheck conti;
    std::vector<PointReport> points;
    std::optional<Order3Counts> order3;  // p == 3, r == 0
    std::optional<Order5Counts> order5;  // p == 5, r != 0
};

ConfigReport verify_config(const FixedConfig& c);
ContiCheck conti_check(const FixedConfig& c);

Order3Counts order3_analysis(const FixedConfig& c);
Order5Counts order5_analysis(const FixedConfig& c);

struct AdmissiblePrime {
    unsigned p = 0;
    unsigned q = 0;  // fixed-point count, q = 24p/(p^2-1)

    bool operator==(const AdmissiblePrime&) const = default;
};

// Primes p <= p_max for which 24p/(p^2-1) is a positive integer.
std::vector<AdmissiblePrime> admissible_primes(unsigned long p_max);

/*
 Exhaustive exact search for all multisets of isolated types (with the forced
 determinant exponent) whose contributions sum to 1 - zeta^r, up to max_points
 points. Contributions are written as integer vectors over the power basis of
 Q(zeta_p) after clearing denominators; a depth-first scan of multiplicity
 vectors prunes branches whose remaining target leaves the reachable
 coordinate box. Complete by construction; results are in canonical order.
*/
std::vector<FixedConfig> solve_configs(unsigned p, unsigned r, unsigned max_points = 64);

enum class InvolutionFixKind { Empty, Isolated, Curve };

struct InvolutionClassification {
    InvolutionFixKind kind;
    bool symplectic = false;
    bool quotient_smooth = false;
    bool quotient_calabi_yau = false;       // quotient is a (possibly singular) Calabi-Yau
    unsigned terminal_points = 0;           // isolated case
    bool singular_locus_dimension_1 = false;  // curve case
    bool consistent = false;  // isolated counts other than 16 contradict the identity
};

InvolutionClassification involution_classify(InvolutionFixKind kind, unsigned isolated_count = 0);

}  // namespace cyq
