#include "cyq/fixed_locus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyq {

FixedComponent::FixedComponent(Ambient amb, unsigned long root_order,
                               std::vector<std::vector<ComponentValue>> values,
                               std::vector<EigenChoice> choices)
    : amb_(std::move(amb)), root_order_(root_order), values_(std::move(values)),
      choices_(std::move(choices)) {
    amb_.validate();
    if (root_order_ < 1) throw std::invalid_argument("FixedComponent: root order must be >= 1");
    if (values_.size() != amb_.dims.size())
        throw std::invalid_argument("FixedComponent: one value row per factor required");

    int max_param = -1;
    for (unsigned i = 0; i < values_.size(); ++i) {
        if (values_[i].size() != amb_.dims[i] + 1)
            throw std::invalid_argument("FixedComponent: coordinate count mismatch");
        bool has_support = false;
        for (const auto& v : values_[i]) {
            if (v.is_zero()) continue;
            has_support = true;
            if (v.exp >= root_order_)
                throw std::invalid_argument("FixedComponent: exponent out of range");
            max_param = std::max(max_param, v.param);
        }
        if (!has_support)
            throw std::invalid_argument("FixedComponent: a factor vanishes identically");
    }
    num_params_ = static_cast<unsigned>(max_param + 1);
    if (num_params_ == 0) throw std::invalid_argument("FixedComponent: no parameters");

    // Parameters co-occurring in a factor belong to the same projective block;
    // the dimension is (#parameters) - (#blocks).
    std::vector<unsigned> find(num_params_);
    std::iota(find.begin(), find.end(), 0u);
    auto root = [&](unsigned x) {
        while (find[x] != x) x = find[x] = find[find[x]];
        return x;
    };
    std::vector<bool> seen(num_params_, false);
    for (const auto& row : values_) {
        int first = -1;
        for (const auto& v : row) {
            if (v.is_zero()) continue;
            seen[v.param] = true;
            if (first < 0)
                first = v.param;
            else
                find[root(static_cast<unsigned>(first))] = root(static_cast<unsigned>(v.param));
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("FixedComponent: unused parameter index");
    std::set<unsigned> blocks;
    for (unsigned k = 0; k < num_params_; ++k) blocks.insert(root(k));
    dimension_ = num_params_ - static_cast<unsigned>(blocks.size());
}

std::optional<std::vector<unsigned>> FixedComponent::multidegree() const {
    if (dimension_ > 1) return std::nullopt;
    std::vector<unsigned> md;
    md.reserve(values_.size());
    for (const auto& row : values_) {
        std::set<int> params;
        for (const auto& v : row)
            if (!v.is_zero()) params.insert(v.param);
        md.push_back(static_cast<unsigned>(params.size()) - 1);
    }
    return md;
}

bool FixedComponent::is_coordinate_point() const {
    for (const auto& row : values_) {
        unsigned nonzero = 0;
        for (const auto& v : row)
            if (!v.is_zero()) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

CoordinatePoint FixedComponent::as_coordinate_point() const {
    if (!is_coordinate_point())
        throw std::invalid_argument("FixedComponent: not a coordinate point");
    CoordinatePoint point;
    for (const auto& row : values_)
        for (unsigned a = 0; a < row.size(); ++a)
            if (!row[a].is_zero()) point.coord.push_back(a);
    return point;
}

FixedComponent FixedComponent::apply(const MonomialAutomorphism& b) const {
    if (!(b.ambient() == amb_)) throw std::invalid_argument("FixedComponent::apply: ambient mismatch");
    unsigned long order = std::lcm(root_order_, b.root_order());
    unsigned long self_scale = order / root_order_;
    unsigned long b_scale = order / b.root_order();
    std::vector<std::vector<ComponentValue>> out(values_.size());
    for (unsigned i = 0; i < values_.size(); ++i) {
        const unsigned src_factor = b.sigma_inv_of(i);
        const GenPermMatrix& mat = b.matrix(i);
        out[i].resize(values_[i].size());
        for (unsigned r = 0; r < out[i].size(); ++r) {
            const ComponentValue& v = values_[src_factor][mat.col(r)];
            if (v.is_zero()) continue;
            out[i][r].param = v.param;
            out[i][r].exp = (v.exp * self_scale + mat.exp(r) * b_scale) % order;
        }
    }
    return FixedComponent(amb_, order, std::move(out));
}

std::string FixedComponent::canonical_key() const {
    // Relabel parameters by first appearance in factor-major scan order.
    std::vector<int> relabel(num_params_, -1);
    unsigned next = 0;
    for (const auto& row : values_)
        for (const auto& v : row)
            if (!v.is_zero() && relabel[v.param] < 0) relabel[v.param] = static_cast<int>(next++);

    /*
     * Gauge freedom: the subvariety is unchanged by scaling any factor's
     * coordinates by a common root of unity and by scaling any parameter.
     * Fix it greedily along the scan: the first occurrence involving a fresh
     * factor or fresh parameter is normalized to exponent 0; fully
     * constrained occurrences keep their gauge-invariant residue.
     */
    const long N = static_cast<long>(root_order_);
    std::vector<std::optional<long>> phi(values_.size());     // per factor
    std::vector<std::optional<long>> psi(num_params_);        // per relabeled parameter
    std::vector<std::vector<long>> residue(values_.size());
    for (unsigned i = 0; i < values_.size(); ++i) {
        residue[i].assign(values_[i].size(), -1);
        for (unsigned a = 0; a < values_[i].size(); ++a) {
            const ComponentValue& v = values_[i][a];
            if (v.is_zero()) continue;
            unsigned k = static_cast<unsigned>(relabel[v.param]);
            long w = static_cast<long>(v.exp);
            if (!phi[i] && !psi[k]) {
                phi[i] = 0;
                psi[k] = (N - w % N) % N;
            } else if (phi[i] && !psi[k]) {
                psi[k] = ((N - w - *phi[i]) % N + N) % N;
            } else if (!phi[i] && psi[k]) {
                phi[i] = ((N - w - *psi[k]) % N + N) % N;
            }
            residue[i][a] = ((w + *phi[i] + *psi[k]) % N + N) % N;
        }
    }

    // Reduce to the minimal root order.
    unsigned long g = root_order_;
    for (const auto& row : residue)
        for (long w : row)
            if (w > 0) g = std::gcd(g, static_cast<unsigned long>(w));
    unsigned long reduced_order = root_order_ / g;

    std::ostringstream os;
    os << reduced_order << '|';
    for (unsigned i = 0; i < values_.size(); ++i) {
        for (unsigned a = 0; a < values_[i].size(); ++a) {
            if (residue[i][a] < 0)
                os << "z,";
            else
                os << relabel[values_[i][a].param] << ':'
                   << static_cast<unsigned long>(residue[i][a]) / g << ',';
        }
        os << ';';
    }
    return os.str();
}

namespace {

struct CoordinateCycle {
    std::vector<unsigned> coords;  // orbit of col(.) starting at the least coordinate
    unsigned long exp_sum = 0;     // sum of row exponents along the orbit
};

std::vector<CoordinateCycle> coordinate_cycles(const GenPermMatrix& mat) {
    std::vector<CoordinateCycle> out;
    std::vector<bool> seen(mat.size(), false);
    for (unsigned c0 = 0; c0 < mat.size(); ++c0) {
        if (seen[c0]) continue;
        CoordinateCycle cyc;
        unsigned c = c0;
        do {
            seen[c] = true;
            cyc.coords.push_back(c);
            cyc.exp_sum += mat.exp(c);
            c = mat.col(c);
        } while (c != c0);
        out.push_back(std::move(cyc));
    }
    return out;
}

// One candidate eigenvalue of the composite matrix restricted to the span of
// a coordinate cycle, with its eigenvector in exponent form.
struct EigenVectorData {
    std::vector<unsigned> coords;
    std::vector<unsigned long> exps;  // over the sigma-cycle's lifted order
};

}  // namespace

std::vector<FixedComponent> fixed_components(const MonomialAutomorphism& g) {
    const Ambient& amb = g.ambient();
    const unsigned m = amb.factors();
    const unsigned long N = g.root_order();

    // sigma-cycles, each listed base(-least factor) first.
    std::vector<std::vector<unsigned>> cycles;
    {
        std::vector<bool> seen(m, false);
        for (unsigned f0 = 0; f0 < m; ++f0) {
            if (seen[f0]) continue;
            std::vector<unsigned> cyc;
            unsigned f = f0;
            do {
                seen[f] = true;
                cyc.push_back(f);
                f = g.sigma_of(f);
            } while (f != f0);
            cycles.push_back(std::move(cyc));
        }
    }

    struct CycleChoices {
        std::vector<unsigned> factors;
        unsigned long lifted_order;  // N * lcm of coordinate-cycle lengths
        // eigenvalue exponent -> eigenvectors of the admitting coordinate cycles
        std::vector<std::pair<unsigned long, std::vector<EigenVectorData>>> eigen;
    };

    std::vector<CycleChoices> per_cycle;
    for (const auto& cyc : cycles) {
        const unsigned base = cyc.front();
        const unsigned len = static_cast<unsigned>(cyc.size());

        // Composite matrix around the cycle: x_base must be an eigenvector of
        // M = A_{f0} A_{f_{l-1}} ... A_{f1}.
        GenPermMatrix composite = g.matrix(base);
        for (unsigned t = len; t-- > 1;) {
            // multiply on the right by A_{f_t}
            const GenPermMatrix& at = g.matrix(cyc[t]);
            std::vector<unsigned> col(composite.size()), exp(composite.size());
            for (unsigned r = 0; r < composite.size(); ++r) {
                col[r] = at.col(composite.col(r));
                exp[r] = static_cast<unsigned>(
                    (static_cast<unsigned long>(composite.exp(r)) + at.exp(composite.col(r))) % N);
            }
            composite = GenPermMatrix(std::move(col), std::move(exp));
        }

        auto ccycles = coordinate_cycles(composite);
        unsigned long lcm_len = 1;
        for (const auto& cc : ccycles) lcm_len = std::lcm(lcm_len, (unsigned long)cc.coords.size());
        const unsigned long lifted = N * lcm_len;

        // Eigenvalues of the restriction to a coordinate cycle of length L and
        // exponent sum E are the L-th roots of zeta_N^E: exponents (E + j*N)
        // over N*L. The eigenvector over N*L has component exponents
        // u*(E + j*N) - L*S_u at the u-th coordinate, S_u the prefix sum.
        std::map<unsigned long, std::vector<EigenVectorData>> eigen;
        for (const auto& cc : ccycles) {
            const unsigned long L = cc.coords.size();
            const unsigned long local_order = N * L;
            const unsigned long to_lifted = lifted / local_order;
            unsigned long prefix = 0;
            std::vector<unsigned long> prefixes(L);
            for (unsigned long u = 0; u < L; ++u) {
                prefixes[u] = prefix;
                prefix += composite.exp(cc.coords[u]);
            }
            for (unsigned long j = 0; j < L; ++j) {
                const unsigned long x = (cc.exp_sum + j * N) % local_order;
                EigenVectorData ev;
                ev.coords = cc.coords;
                ev.exps.resize(L);
                for (unsigned long u = 0; u < L; ++u) {
                    long long e = static_cast<long long>(u * x) -
                                  static_cast<long long>(L * prefixes[u]);
                    long long mod = static_cast<long long>(local_order);
                    e = ((e % mod) + mod) % mod;
                    ev.exps[u] = static_cast<unsigned long>(e) * to_lifted;
                }
                eigen[x * to_lifted].push_back(std::move(ev));
            }
        }

        CycleChoices cs;
        cs.factors = cyc;
        cs.lifted_order = lifted;
        for (auto& [x, vecs] : eigen) cs.eigen.emplace_back(x, std::move(vecs));
        per_cycle.push_back(std::move(cs));
    }

    unsigned long comp_order = 1;
    for (const auto& cs : per_cycle) comp_order = std::lcm(comp_order, cs.lifted_order);

    // Cartesian product of eigenvalue choices, one per sigma-cycle.
    std::vector<FixedComponent> out;
    std::vector<size_t> choice(per_cycle.size(), 0);
    while (true) {
        std::vector<std::vector<ComponentValue>> values(m);
        for (unsigned i = 0; i < m; ++i) values[i].assign(amb.dims[i] + 1, ComponentValue{});
        std::vector<EigenChoice> choices;
        unsigned param_base = 0;

        for (size_t c = 0; c < per_cycle.size(); ++c) {
            const auto& cs = per_cycle[c];
            const auto& [eig_exp, vecs] = cs.eigen[choice[c]];
            const unsigned long to_comp = comp_order / cs.lifted_order;
            const unsigned base = cs.factors.front();

            EigenChoice ec;
            ec.factors = cs.factors;
            ec.eig_order = cs.lifted_order;
            ec.eig_exp = eig_exp;
            ec.dim = static_cast<unsigned>(vecs.size());
            choices.push_back(ec);

            // Base factor: the chosen eigenspace, one parameter per eigenvector.
            for (size_t v = 0; v < vecs.size(); ++v)
                for (size_t u = 0; u < vecs[v].coords.size(); ++u)
                    values[base][vecs[v].coords[u]] =
                        ComponentValue{static_cast<int>(param_base + v),
                                       vecs[v].exps[u] * to_comp % comp_order};

            // Propagate along the cycle: x_{f_t} = A_{f_t} x_{f_{t-1}}.
            for (size_t t = 1; t < cs.factors.size(); ++t) {
                const unsigned prev = cs.factors[t - 1];
                const unsigned cur = cs.factors[t];
                const GenPermMatrix& mat = g.matrix(cur);
                const unsigned long mat_scale = comp_order / N;
                for (unsigned r = 0; r < mat.size(); ++r) {
                    const ComponentValue& src = values[prev][mat.col(r)];
                    if (src.is_zero()) continue;
                    values[cur][r] = ComponentValue{
                        src.param, (src.exp + mat.exp(r) * mat_scale) % comp_order};
                }
            }
            param_base += static_cast<unsigned>(vecs.size());
        }

        out.emplace_back(amb, comp_order, std::move(values), std::move(choices));

        size_t k = per_cycle.size();
        bool wrapped = true;
        while (k-- > 0) {
            if (++choice[k] < per_cycle[k].eigen.size()) {
                wrapped = false;
                break;
            }
            choice[k] = 0;
        }
        if (wrapped) break;
    }

    std::sort(out.begin(), out.end(), [](const FixedComponent& a, const FixedComponent& b) {
        if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
        return a.canonical_key() < b.canonical_key();
    });
    return out;
}

std::vector<unsigned> anticanonical_multidegree(const Ambient& amb) {
    amb.validate();
    std::vector<unsigned> out;
    out.reserve(amb.dims.size());
    for (unsigned n : amb.dims) out.push_back(n + 1);
    return out;
}

Integer intersect_curve_divisor(const FixedComponent& curve, const std::vector<unsigned>& divisor) {
    if (curve.dimension() != 1)
        throw std::invalid_argument("intersect_curve_divisor: component is not a curve");
    if (divisor.size() != curve.ambient().dims.size())
        throw std::invalid_argument("intersect_curve_divisor: multidegree size mismatch");
    auto md = curve.multidegree();
    Integer total = 0;
    for (size_t i = 0; i < divisor.size(); ++i)
        total += Integer(divisor[i]) * Integer((*md)[i]);
    return total;
}

unsigned component_orbits(const FiniteActionGroup& group,
                          const std::vector<TaggedComponent>& components) {
    if (components.empty()) return 0;

    std::map<unsigned, std::set<std::string>> keys_by_element;
    std::map<std::string, unsigned> key_id;
    std::vector<std::string> id_key;
    for (const auto& tc : components) {
        if (tc.element >= group.size())
            throw std::invalid_argument("component_orbits: element tag out of range");
        std::string key = tc.component.canonical_key();
        keys_by_element[tc.element].insert(key);
        if (!key_id.count(key)) {
            key_id.emplace(key, static_cast<unsigned>(id_key.size()));
            id_key.push_back(key);
        }
    }

    std::vector<unsigned> find(id_key.size());
    std::iota(find.begin(), find.end(), 0u);
    auto root = [&](unsigned x) {
        while (find[x] != x) x = find[x] = find[find[x]];
        return x;
    };

    for (unsigned b = 0; b < group.size(); ++b) {
        for (const auto& tc : components) {
            const unsigned conj = group.table[group.table[b][tc.element]][group.inverse[b]];
            auto family = keys_by_element.find(conj);
            if (family == keys_by_element.end())
                throw std::invalid_argument("component_orbits: family is not conjugation-closed");
            std::string image = tc.component.apply(group.elements[b]).canonical_key();
            if (!family->second.count(image))
                throw std::logic_error("component_orbits: image component missing");
            find[root(key_id.at(tc.component.canonical_key()))] = root(key_id.at(image));
        }
    }

    std::set<unsigned> roots;
    for (unsigned i = 0; i < find.size(); ++i) roots.insert(root(i));
    return static_cast<unsigned>(roots.size());
}

}  // namespace cyq
