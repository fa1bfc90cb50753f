#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyq/monomial.hpp"

namespace cyq {

// Value of one ambient coordinate on a parametrized fixed component: zero, or
// zeta^exp times one of the component's projective parameters.
struct ComponentValue {
    int param = -1;  // -1: the coordinate vanishes identically on the component
    unsigned long exp = 0;

    bool is_zero() const { return param < 0; }
    bool operator==(const ComponentValue&) const = default;
};

// One eigenvalue choice of the composite matrix around a sigma-cycle.
struct EigenChoice {
    std::vector<unsigned> factors;  // the cycle, base factor first
    unsigned long eig_order = 1;
    unsigned long eig_exp = 0;
    unsigned dim = 0;  // eigenspace dimension
};

/*
 * An irreducible component of the fixed locus of a monomial automorphism:
 * a product of projectivized eigenspaces, one per sigma-cycle, with diagonal
 * identification along each cycle. The component is stored as an exact
 * parametrization: every ambient coordinate is either identically zero or a
 * root of unity times one of the projective parameters (t_0 : ... : t_k).
 */
class FixedComponent {
  public:
    FixedComponent(Ambient amb, unsigned long root_order,
                   std::vector<std::vector<ComponentValue>> values,
                   std::vector<EigenChoice> choices = {});

    const Ambient& ambient() const { return amb_; }
    unsigned long root_order() const { return root_order_; }
    const std::vector<std::vector<ComponentValue>>& values() const { return values_; }
    const ComponentValue& value(unsigned factor, unsigned coord) const {
        return values_[factor][coord];
    }
    unsigned parameters() const { return num_params_; }
    unsigned dimension() const { return dimension_; }
    const std::vector<EigenChoice>& choices() const { return choices_; }

    // Degree against each factor's hyperplane class; defined for dimension <= 1.
    std::optional<std::vector<unsigned>> multidegree() const;

    bool is_point() const { return dimension_ == 0; }
    bool is_coordinate_point() const;
    CoordinatePoint as_coordinate_point() const;

    // Image under a monomial automorphism; a component of Fix(b g b^{-1})
    // whenever this is a component of Fix(g).
    FixedComponent apply(const MonomialAutomorphism& b) const;

    // Gauge-fixed, order-reduced form; equal keys <=> equal subvarieties.
    std::string canonical_key() const;

  private:
    Ambient amb_;
    unsigned long root_order_;
    std::vector<std::vector<ComponentValue>> values_;
    std::vector<EigenChoice> choices_;
    unsigned num_params_ = 0;
    unsigned dimension_ = 0;
};

// The full decomposition of Fix(g), canonically ordered.
std::vector<FixedComponent> fixed_components(const MonomialAutomorphism& g);

// (n_1 + 1, ..., n_m + 1).
std::vector<unsigned> anticanonical_multidegree(const Ambient& amb);

// Intersection number of a curve component with a divisor of the given
// multidegree: the pairing of the multidegrees.
Integer intersect_curve_divisor(const FixedComponent& curve, const std::vector<unsigned>& divisor);

struct TaggedComponent {
    unsigned element = 0;  // index into the group's element list
    FixedComponent component;
};

// Number of orbits of the group acting on the given component set via
// b(Fix(a)) = Fix(b a b^{-1}). The tags must cover a conjugation-closed
// family of elements and each element's full component list.
unsigned component_orbits(const FiniteActionGroup& group,
                          const std::vector<TaggedComponent>& components);

}  // namespace cyq
