#include "cyq/sections.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyq {

namespace {

void enumerate_factor(unsigned coords, unsigned degree, std::vector<unsigned>& current,
                      std::vector<std::vector<unsigned>>& out) {
    if (current.size() + 1 == coords) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        current.push_back(e);
        enumerate_factor(coords, degree - e, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<MultiMonomial> enumerate_monomials(const Ambient& amb,
                                               const std::vector<unsigned>& multidegree) {
    amb.validate();
    if (multidegree.size() != amb.dims.size())
        throw std::invalid_argument("enumerate_monomials: multidegree size mismatch");
    std::vector<std::vector<std::vector<unsigned>>> per_factor(amb.dims.size());
    for (size_t i = 0; i < amb.dims.size(); ++i) {
        std::vector<unsigned> current;
        enumerate_factor(amb.dims[i] + 1, multidegree[i], current, per_factor[i]);
    }
    std::vector<MultiMonomial> out;
    std::vector<size_t> idx(amb.dims.size(), 0);
    while (true) {
        MultiMonomial mono;
        for (size_t i = 0; i < idx.size(); ++i) mono.exps.push_back(per_factor[i][idx[i]]);
        out.push_back(std::move(mono));
        bool wrapped = true;
        for (size_t k = idx.size(); k-- > 0;) {
            if (++idx[k] < per_factor[k].size()) {
                wrapped = false;
                break;
            }
            idx[k] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

namespace {

struct MonomialImage {
    MultiMonomial monomial;
    unsigned long coeff_exp = 0;
    unsigned long coeff_order = 1;
};

// With h = g^{-1}, g sends the monomial x^mono to zeta^c x^{mono'} under the
// substitution action (g.s)(x) = s(h.x): the exponent at (i, a) moves to
// (sigma_h^{-1}(i), col_i(a)) and contributes its multiple of h's entry
// exponent to the coefficient.
MonomialImage act_with_inverse(const MonomialAutomorphism& h, const MultiMonomial& mono) {
    const unsigned m = h.ambient().factors();
    MonomialImage out;
    out.coeff_order = h.root_order();
    out.monomial.exps.assign(m, {});
    unsigned long coeff = 0;
    for (unsigned i = 0; i < m; ++i) {
        const unsigned dest = h.sigma_inv_of(i);
        const GenPermMatrix& mat = h.matrix(i);
        std::vector<unsigned> row(mat.size(), 0);
        for (unsigned a = 0; a < mat.size(); ++a) {
            row[mat.col(a)] = mono.exps[i][a];
            coeff += static_cast<unsigned long>(mono.exps[i][a]) * mat.exp(a);
        }
        out.monomial.exps[dest] = std::move(row);
    }
    out.coeff_exp = coeff % out.coeff_order;
    return out;
}

Section lift_section(const Section& s, unsigned long order) {
    Section out;
    out.root_order = order;
    unsigned long scale = order / s.root_order;
    out.terms = s.terms;
    for (auto& t : out.terms) t.coeff_exp = t.coeff_exp * scale % order;
    return out;
}

void sort_terms(Section& s) {
    std::sort(s.terms.begin(), s.terms.end(),
              [](const SectionTerm& a, const SectionTerm& b) { return a.monomial < b.monomial; });
}

}  // namespace

Section apply_to_section(const MonomialAutomorphism& g, const Section& s) {
    const MonomialAutomorphism h = inverse(g);
    unsigned long order = std::lcm(s.root_order, h.root_order());
    Section out;
    out.root_order = order;
    for (const SectionTerm& term : s.terms) {
        MonomialImage img = act_with_inverse(h, term.monomial);
        SectionTerm image;
        image.monomial = std::move(img.monomial);
        image.coeff_exp = (term.coeff_exp * (order / s.root_order) +
                           img.coeff_exp * (order / img.coeff_order)) %
                          order;
        out.terms.push_back(std::move(image));
    }
    sort_terms(out);
    return out;
}

bool sections_equal(const Section& a, const Section& b) {
    unsigned long order = std::lcm(a.root_order, b.root_order);
    Section la = lift_section(a, order), lb = lift_section(b, order);
    sort_terms(la);
    sort_terms(lb);
    return la.terms == lb.terms;
}

std::vector<Section> invariant_sections(const FiniteActionGroup& group,
                                        const std::vector<unsigned>& multidegree) {
    if (group.elements.empty()) throw std::invalid_argument("invariant_sections: empty group");
    const Ambient& amb = group.elements.front().ambient();
    if (multidegree.size() != amb.dims.size())
        throw std::invalid_argument("invariant_sections: multidegree size mismatch");

    // A factor permutation that moves the multidegree kills all invariants.
    for (const auto& g : group.elements)
        for (unsigned i = 0; i < amb.factors(); ++i)
            if (multidegree[g.sigma_of(i)] != multidegree[i]) return {};

    std::vector<MonomialAutomorphism> inverses;
    inverses.reserve(group.elements.size());
    unsigned long order = 1;
    for (const auto& g : group.elements) {
        inverses.push_back(inverse(g));
        order = std::lcm(order, inverses.back().root_order());
    }

    const std::vector<MultiMonomial> monomials = enumerate_monomials(amb, multidegree);
    std::map<MultiMonomial, size_t> index;
    for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

    std::vector<bool> visited(monomials.size(), false);
    std::vector<Section> basis;
    for (size_t i0 = 0; i0 < monomials.size(); ++i0) {
        if (visited[i0]) continue;
        std::map<size_t, unsigned long> orbit;  // monomial index -> coefficient exponent
        bool consistent = true;
        for (const auto& h : inverses) {
            MonomialImage img = act_with_inverse(h, monomials[i0]);
            unsigned long lifted = img.coeff_exp * (order / img.coeff_order) % order;
            auto it = index.find(img.monomial);
            if (it == index.end()) throw std::logic_error("invariant_sections: degree not preserved");
            visited[it->second] = true;
            auto [pos, inserted] = orbit.emplace(it->second, lifted);
            if (!inserted && pos->second != lifted) consistent = false;
        }
        if (!consistent) continue;  // stabilizer cocycle obstructs the orbit sum
        Section s;
        s.root_order = order;
        for (const auto& [idx, c] : orbit) s.terms.push_back({monomials[idx], c});
        sort_terms(s);
        basis.push_back(std::move(s));
    }
    return basis;
}

Cyclotomic evaluate_section(const Section& s, const CoordinatePoint& point) {
    Cyclotomic total = Cyclotomic::zero(s.root_order);
    for (const SectionTerm& term : s.terms) {
        bool supported = true;
        for (size_t i = 0; i < term.monomial.exps.size() && supported; ++i)
            for (size_t a = 0; a < term.monomial.exps[i].size() && supported; ++a)
                if (term.monomial.exps[i][a] > 0 && a != point.coord[i]) supported = false;
        if (supported)
            total += Cyclotomic::root_of_unity(s.root_order,
                                               static_cast<long>(term.coeff_exp));
    }
    return total;
}

bool base_point_check(const std::vector<Section>& basis, const CoordinatePoint& point) {
    for (const Section& s : basis) {
        for (size_t i = 0; i < point.coord.size(); ++i)
            if (!s.terms.empty() && point.coord[i] >= s.terms.front().monomial.exps[i].size())
                throw std::invalid_argument("base_point_check: malformed point");
        if (!evaluate_section(s, point).is_zero()) return true;
    }
    return false;
}

bool restricts_nonzero_on(const std::vector<Section>& basis, const FixedComponent& component) {
    for (const Section& s : basis) {
        const unsigned long order = std::lcm(s.root_order, component.root_order());
        // Collect the restriction as a polynomial in the component parameters.
        std::map<std::vector<unsigned>, Cyclotomic> poly;
        for (const SectionTerm& term : s.terms) {
            std::vector<unsigned> tdeg(component.parameters(), 0);
            unsigned long exp = term.coeff_exp * (order / s.root_order) % order;
            bool alive = true;
            for (size_t i = 0; i < term.monomial.exps.size() && alive; ++i) {
                for (size_t a = 0; a < term.monomial.exps[i].size() && alive; ++a) {
                    unsigned e = term.monomial.exps[i][a];
                    if (e == 0) continue;
                    const ComponentValue& v =
                        component.value(static_cast<unsigned>(i), static_cast<unsigned>(a));
                    if (v.is_zero()) {
                        alive = false;
                        break;
                    }
                    tdeg[v.param] += e;
                    exp = (exp + e * (v.exp * (order / component.root_order()))) % order;
                }
            }
            if (!alive) continue;
            auto [it, inserted] = poly.try_emplace(tdeg, Cyclotomic::zero(order));
            it->second += Cyclotomic::root_of_unity(order, static_cast<long>(exp));
        }
        for (const auto& [tdeg, coeff] : poly)
            if (!coeff.is_zero()) return true;
    }
    return false;
}

}  // namespace cyq
