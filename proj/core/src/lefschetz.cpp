#include "cyq/lefschetz.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyq {

Integer congruence_sum(const LocalType& t, unsigned n) {
    if (!t.isolated()) throw std::invalid_argument("congruence_sum: type is not isolated");
    const unsigned p = t.prime();
    if (n >= p) throw std::invalid_argument("congruence_sum: n out of range [0, p-1]");
    const auto& a = t.exponents();
    Integer total = 0;
    for (unsigned k1 = 0; k1 < p; ++k1)
        for (unsigned k2 = 0; k2 < p; ++k2) {
            unsigned partial = (a[0] * k1 + a[1] * k2) % p;
            for (unsigned k3 = 0; k3 < p; ++k3) {
                if ((partial + a[2] * k3) % p == n)
                    total += static_cast<unsigned long>(k1) * k2 * k3;
            }
        }
    return total;
}

Integer congruence_sum_total(const LocalType& t) {
    Integer total = 0;
    for (unsigned n = 0; n < t.prime(); ++n) total += congruence_sum(t, n);
    return total;
}

Rational terminal_s0_value(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("terminal_s0_value: p must be prime");
    Integer pp = p;
    Rational square = make_rational(pp * pp * (pp - 1) * (pp - 1), Integer(4));
    Rational cube = make_rational(pp * (pp - 1) * (2 * pp - 1), Integer(6));
    return make_rational(pp, Integer(2)) * (square - cube);
}

Cyclotomic contribution(const LocalType& t) {
    if (!t.isolated()) throw std::invalid_argument("contribution: determinant factor vanishes");
    const unsigned p = t.prime();
    Cyclotomic det = Cyclotomic::one(p);
    for (unsigned a : t.exponents())
        det *= Cyclotomic::one(p) - Cyclotomic::root_of_unity(p, static_cast<long>(a));
    return det.inverse();
}

FixedConfig::FixedConfig(unsigned p, unsigned r, std::vector<PointMultiplicity> points)
    : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("FixedConfig: p must be prime");
    if (r >= p) throw std::invalid_argument("FixedConfig: r out of range [0, p-1]");
    const unsigned forced_s = (p - r % p) % p;
    std::map<LocalType, unsigned long> merged;
    for (const auto& pm : points) {
        if (pm.multiplicity == 0) continue;
        if (pm.type.prime() != p) throw std::invalid_argument("FixedConfig: mixed primes");
        if (!pm.type.isolated()) throw std::invalid_argument("FixedConfig: non-isolated type");
        if (pm.type.s() != forced_s)
            throw std::invalid_argument("FixedConfig: determinant-inhomogeneous multiset");
        merged[pm.type] += pm.multiplicity;
    }
    if (merged.empty() && r != 0)
        throw std::invalid_argument("FixedConfig: empty fixed locus forces r = 0");
    for (const auto& [type, mult] : merged)
        points_.push_back({type, static_cast<unsigned>(mult)});
}

unsigned FixedConfig::total_points() const {
    unsigned total = 0;
    for (const auto& pm : points_) total += pm.multiplicity;
    return total;
}

namespace {

bool lefschetz_valid(const FixedConfig& c) {
    const unsigned p = c.prime();
    Cyclotomic lhs = Cyclotomic::zero(p);
    for (const auto& pm : c.points())
        lhs += Cyclotomic::from_rational(p, Rational(pm.multiplicity)) * contribution(pm.type);
    Cyclotomic rhs =
        Cyclotomic::one(p) - Cyclotomic::root_of_unity(p, static_cast<long>(c.trace_exponent()));
    return lhs == rhs;
}

}  // namespace

ContiCheck conti_check(const FixedConfig& c) {
    const Integer p = c.prime();
    const Integer full = p * p * p * (p - 1) * (p - 1) * (p - 1) / 8;
    ContiCheck out;
    out.lhs = 0;
    for (const auto& pm : c.points())
        out.lhs += pm.multiplicity * (full - p * congruence_sum(pm.type, 0));
    out.rhs = c.trace_exponent() != 0 ? p * p * p * p : Integer(0);
    out.ok = out.lhs == out.rhs;
    return out;
}

ConfigReport verify_config(const FixedConfig& c) {
    const unsigned p = c.prime();
    ConfigReport report{Cyclotomic::zero(p), Cyclotomic::zero(p)};
    for (const auto& pm : c.points()) {
        Cyclotomic term = contribution(pm.type);
        report.lhs += Cyclotomic::from_rational(p, Rational(pm.multiplicity)) * term;
        report.points.push_back(
            {pm.type, pm.multiplicity, classify(pm.type), congruence_sum(pm.type, 0)});
    }
    report.rhs = Cyclotomic::one(p) -
                 Cyclotomic::root_of_unity(p, static_cast<long>(c.trace_exponent()));
    report.valid = report.lhs == report.rhs;
    report.conti = conti_check(c);
    if (p == 3 && c.trace_exponent() == 0) report.order3 = order3_analysis(c);
    if (p == 5 && c.trace_exponent() != 0) report.order5 = order5_analysis(c);
    return report;
}

Order3Counts order3_analysis(const FixedConfig& c) {
    if (c.prime() != 3) throw std::invalid_argument("order3_analysis: p must be 3");
    Order3Counts out;
    out.total = c.total_points();
    out.all_terminal = true;
    for (const auto& pm : c.points()) {
        const auto& e = pm.type.exponents();
        if (e == std::array<unsigned, 3>{1, 1, 1}) out.n1 += pm.multiplicity;
        if (e == std::array<unsigned, 3>{2, 2, 2}) out.n2 += pm.multiplicity;
        if (!pm.type.terminal()) out.all_terminal = false;
    }
    bool valid = lefschetz_valid(c);
    if (c.trace_exponent() == 0)
        out.consistent = !valid || out.n1 == out.n2;
    else
        out.consistent = !valid || (out.total == 9 && out.all_terminal);
    return out;
}

Order5Counts order5_analysis(const FixedConfig& c) {
    if (c.prime() != 5) throw std::invalid_argument("order5_analysis: p must be 5");
    if (c.trace_exponent() == 0)
        throw std::invalid_argument("order5_analysis: covers the non-symplectic case only");
    Order5Counts out;
    out.total = c.total_points();
    for (const auto& pm : c.points()) {
        Integer s0 = congruence_sum(pm.type, 0);
        if (s0 == 175) out.n += pm.multiplicity;
        else if (s0 == 200) out.q1 += pm.multiplicity;
        else if (s0 == 225) out.q2 += pm.multiplicity;
        else throw std::logic_error("order5_analysis: unexpected S_0 value");
    }
    bool valid = lefschetz_valid(c);
    out.consistent = !valid || (out.n == 5 + out.q2 && out.total == 5 + out.q1 + 2 * out.q2);
    return out;
}

std::vector<AdmissiblePrime> admissible_primes(unsigned long p_max) {
    if (p_max < 2) return {};
    std::vector<AdmissiblePrime> out;
    for (unsigned long p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        unsigned long denom = p * p - 1;
        if ((24 * p) % denom == 0)
            out.push_back({static_cast<unsigned>(p), static_cast<unsigned>(24 * p / denom)});
    }
    return out;
}

namespace {

// Coordinates of a cyclotomic value as integers after multiplying by `scale`.
std::vector<Integer> scaled_coords(const Cyclotomic& v, const Integer& scale) {
    std::vector<Integer> out;
    out.reserve(v.coeffs().size());
    for (const Rational& c : v.coeffs()) {
        Rational scaled = c * Rational(scale);
        if (scaled.get_den() != 1) throw std::logic_error("scaled_coords: scale insufficient");
        out.push_back(scaled.get_num());
    }
    return out;
}

struct SolverState {
    std::vector<LocalType> types;
    std::vector<std::vector<Integer>> weights;   // per type, integer coordinates
    std::vector<std::vector<Integer>> max_pos;   // suffix max of positive entries
    std::vector<std::vector<Integer>> min_neg;   // suffix min of negative entries
    size_t dim = 0;
    std::vector<unsigned> mults;
    std::vector<std::vector<unsigned>> solutions;

    bool reachable(size_t level, const std::vector<Integer>& target, unsigned budget) const {
        for (size_t c = 0; c < dim; ++c) {
            if (target[c] > budget * max_pos[level][c]) return false;
            if (target[c] < budget * min_neg[level][c]) return false;
        }
        return true;
    }

    void search(size_t level, std::vector<Integer>& target, unsigned budget) {
        if (level == types.size()) {
            for (const Integer& c : target)
                if (c != 0) return;
            solutions.push_back(mults);
            return;
        }
        if (!reachable(level, target, budget)) return;
        for (unsigned m = 0; m <= budget; ++m) {
            mults[level] = m;
            search(level + 1, target, budget - m);
            for (size_t c = 0; c < dim; ++c) target[c] -= weights[level][c];
        }
        for (size_t c = 0; c < dim; ++c) target[c] += (budget + 1) * weights[level][c];
        mults[level] = 0;
    }
};

}  // namespace

std::vector<FixedConfig> solve_configs(unsigned p, unsigned r, unsigned max_points) {
    if (!is_prime(p)) throw std::invalid_argument("solve_configs: p must be prime");
    if (r >= p) throw std::invalid_argument("solve_configs: r out of range [0, p-1]");

    const unsigned forced_s = (p - r) % p;
    SolverState st;
    for (const LocalType& t : enumerate_isolated_types(p))
        if (t.s() == forced_s) st.types.push_back(t);

    // Common denominator: every contribution has denominator dividing the
    // field norm of det(I - dg), a divisor of p^3; use p^3 * p for headroom.
    Integer scale = Integer(p) * p * p * p;
    Cyclotomic target_value = Cyclotomic::one(p) -
                              Cyclotomic::root_of_unity(p, static_cast<long>(r));
    std::vector<Integer> target = scaled_coords(target_value, scale);
    st.dim = target.size();
    for (const LocalType& t : st.types) st.weights.push_back(scaled_coords(contribution(t), scale));

    const size_t k = st.types.size();
    st.max_pos.assign(k + 1, std::vector<Integer>(st.dim, Integer(0)));
    st.min_neg.assign(k + 1, std::vector<Integer>(st.dim, Integer(0)));
    for (size_t i = k; i-- > 0;) {
        for (size_t c = 0; c < st.dim; ++c) {
            st.max_pos[i][c] = std::max(st.max_pos[i + 1][c], st.weights[i][c]);
            st.min_neg[i][c] = std::min(st.min_neg[i + 1][c], st.weights[i][c]);
        }
    }
    st.mults.assign(k, 0);
    st.search(0, target, max_points);

    std::vector<FixedConfig> out;
    for (const auto& mults : st.solutions) {
        std::vector<PointMultiplicity> points;
        for (size_t i = 0; i < k; ++i)
            if (mults[i] > 0) points.push_back({st.types[i], mults[i]});
        if (points.empty() && r != 0) continue;  // cannot happen: target != 0 when r != 0
        out.emplace_back(p, r, std::move(points));
    }
    return out;
}

InvolutionClassification involution_classify(InvolutionFixKind kind, unsigned isolated_count) {
    InvolutionClassification out;
    out.kind = kind;
    switch (kind) {
        case InvolutionFixKind::Empty:
            out.symplectic = true;
            out.quotient_smooth = true;
            out.quotient_calabi_yau = true;
            out.consistent = true;
            break;
        case InvolutionFixKind::Isolated:
            out.symplectic = false;
            out.quotient_smooth = false;
            out.quotient_calabi_yau = false;
            out.terminal_points = isolated_count;
            // The identity pins the count: the unique order-2 solution has 16 points.
            out.consistent = isolated_count == 16;
            break;
        case InvolutionFixKind::Curve:
            out.symplectic = true;
            out.quotient_smooth = false;
            out.quotient_calabi_yau = true;
            out.singular_locus_dimension_1 = true;
            out.consistent = true;
            break;
    }
    return out;
}

}  // namespace cyq
