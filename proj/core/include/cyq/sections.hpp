#pragma once

#include <vector>

#include "cyq/cyclotomic.hpp"
#include "cyq/fixed_locus.hpp"
#include "cyq/monomial.hpp"

namespace cyq {

// A multihomogeneous monomial on a product of projective spaces: one exponent
// vector per factor.
struct MultiMonomial {
    std::vector<std::vector<unsigned>> exps;

    auto operator<=>(const MultiMonomial&) const = default;
};

struct SectionTerm {
    MultiMonomial monomial;
    unsigned long coeff_exp = 0;  // coefficient zeta^coeff_exp

    bool operator==(const SectionTerm&) const = default;
};

// A multihomogeneous polynomial whose coefficients are roots of unity; the
// invariant basis elements below are cocycle-weighted orbit sums of monomials.
struct Section {
    unsigned long root_order = 1;
    std::vector<SectionTerm> terms;  // sorted by monomial
};

// All monomials of the given multidegree, in lexicographic order.
std::vector<MultiMonomial> enumerate_monomials(const Ambient& amb,
                                               const std::vector<unsigned>& multidegree);

// Image of a section under the substitution action (g.s)(x) = s(g^{-1}.x).
Section apply_to_section(const MonomialAutomorphism& g, const Section& s);

bool sections_equal(const Section& a, const Section& b);

/*
 * Basis of the strictly invariant multihomogeneous polynomials of the given
 * multidegree: monomial orbits under the group, one cocycle-weighted orbit
 * sum per orbit whose stabilizer cocycle is trivial. Empty when some group
 * element permutes the factors without preserving the multidegree.
 */
std::vector<Section> invariant_sections(const FiniteActionGroup& group,
                                        const std::vector<unsigned>& multidegree);

// Exact value of a section at a coordinate point (nonzero coordinates are 1).
Cyclotomic evaluate_section(const Section& s, const CoordinatePoint& point);

// True iff some basis element is nonzero at the point, so the generic
// invariant divisor misses it. The point must have exactly one nonzero
// coordinate per factor.
bool base_point_check(const std::vector<Section>& basis, const CoordinatePoint& point);

// True iff some basis element has a nonzero restriction to the component, so
// the generic invariant divisor does not contain it. Exact: the restriction
// is collected as a polynomial in the component's parameters with cyclotomic
// coefficients.
bool restricts_nonzero_on(const std::vector<Section>& basis, const FixedComponent& component);

}  // namespace cyq
