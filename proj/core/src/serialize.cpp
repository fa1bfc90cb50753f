#include "cyq/serialize.hpp"

#include <stdexcept>

namespace cyq {

json to_json(const Integer& z) { return z.get_str(); }

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("integer_from_json: expected integer or string");
}

json to_json(const Rational& q) {
    return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational_from_json: expected [num, den]");
    return make_rational(integer_from_json(j[0]), integer_from_json(j[1]));
}

json to_json(const Cyclotomic& z) {
    json coeffs = json::array();
    for (const Rational& c : z.coeffs()) coeffs.push_back(to_json(c));
    return json{{"order", z.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    unsigned long order = j.at("order").get<unsigned long>();
    std::vector<Rational> coeffs;
    for (const json& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

json to_json(const LocalType& t) {
    return json{{"p", t.prime()},
                {"exps", json::array({t.exponents()[0], t.exponents()[1], t.exponents()[2]})}};
}

LocalType local_type_from_json(const json& j) {
    const json& e = j.at("exps");
    if (!e.is_array() || e.size() != 3)
        throw std::invalid_argument("local_type_from_json: exps must have 3 entries");
    return LocalType(j.at("p").get<unsigned>(),
                     {e[0].get<unsigned>(), e[1].get<unsigned>(), e[2].get<unsigned>()});
}

json to_json(const SingularityClassification& c) {
    json ages = json::object();
    for (const auto& [unit, age] : c.ages) ages[std::to_string(unit)] = to_json(age);
    json out{{"isolated", c.isolated},
             {"quasi_reflection", c.quasi_reflection},
             {"gorenstein", c.gorenstein},
             {"s", c.s},
             {"ages", ages}};
    if (c.canonical) out["canonical"] = *c.canonical;
    if (c.terminal) out["terminal"] = *c.terminal;
    return out;
}

json to_json(const FixedConfig& c) {
    json points = json::array();
    for (const auto& pm : c.points()) {
        const auto& e = pm.type.exponents();
        points.push_back(json{{"exps", json::array({e[0], e[1], e[2]})},
                              {"multiplicity", pm.multiplicity}});
    }
    return json{{"p", c.prime()}, {"r", c.trace_exponent()}, {"points", points}};
}

FixedConfig fixed_config_from_json(const json& j) {
    unsigned p = j.at("p").get<unsigned>();
    unsigned r = j.at("r").get<unsigned>();
    std::vector<PointMultiplicity> points;
    for (const json& pj : j.at("points")) {
        const json& e = pj.at("exps");
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("fixed_config_from_json: exps must have 3 entries");
        LocalType t(p, {e[0].get<unsigned>(), e[1].get<unsigned>(), e[2].get<unsigned>()});
        points.push_back({t, pj.at("multiplicity").get<unsigned>()});
    }
    return FixedConfig(p, r, std::move(points));
}

json to_json(const ContiCheck& c) {
    return json{{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"ok", c.ok}};
}

json to_json(const Order3Counts& c) {
    return json{{"n1", c.n1},
                {"n2", c.n2},
                {"total", c.total},
                {"all_terminal", c.all_terminal},
                {"consistent", c.consistent}};
}

json to_json(const Order5Counts& c) {
    return json{{"n", c.n},
                {"q1", c.q1},
                {"q2", c.q2},
                {"total", c.total},
                {"consistent", c.consistent}};
}

json to_json(const ConfigReport& r) {
    json points = json::array();
    for (const auto& pr : r.points) {
        points.push_back(json{{"type", to_json(pr.type)},
                              {"multiplicity", pr.multiplicity},
                              {"classification", to_json(pr.classification)},
                              {"s0", to_json(pr.s0)}});
    }
    json out{{"lhs", to_json(r.lhs)},
             {"rhs", to_json(r.rhs)},
             {"valid", r.valid},
             {"conti", to_json(r.conti)},
             {"points", points}};
    if (r.order3) out["order3"] = to_json(*r.order3);
    if (r.order5) out["order5"] = to_json(*r.order5);
    return out;
}

json to_json(const AdmissiblePrime& a) { return json{{"p", a.p}, {"q", a.q}}; }

json to_json(const InvolutionClassification& c) {
    json out{{"symplectic", c.symplectic},
             {"quotient_smooth", c.quotient_smooth},
             {"quotient_calabi_yau", c.quotient_calabi_yau},
             {"consistent", c.consistent}};
    switch (c.kind) {
        case InvolutionFixKind::Empty: out["fixed_locus"] = "empty"; break;
        case InvolutionFixKind::Isolated:
            out["fixed_locus"] = "isolated";
            out["terminal_points"] = c.terminal_points;
            break;
        case InvolutionFixKind::Curve:
            out["fixed_locus"] = "curve";
            out["singular_locus_dimension_1"] = c.singular_locus_dimension_1;
            break;
    }
    return out;
}

json to_json(const Ambient& amb) { return json{{"dims", amb.dims}}; }

Ambient ambient_from_json(const json& j) {
    Ambient amb;
    if (j.is_array())
        amb.dims = j.get<std::vector<unsigned>>();
    else
        amb.dims = j.at("dims").get<std::vector<unsigned>>();
    amb.validate();
    return amb;
}

json to_json(const MonomialAutomorphism& g) {
    json mats = json::array();
    for (unsigned i = 0; i < g.ambient().factors(); ++i) {
        const GenPermMatrix& mat = g.matrix(i);
        json entries = json::array();
        for (unsigned r = 0; r < mat.size(); ++r)
            entries.push_back(json::array({r, mat.col(r), mat.exp(r)}));
        mats.push_back(json{{"size", mat.size()},
                            {"root_order", g.root_order()},
                            {"entries", entries}});
    }
    return json{{"dims", g.ambient().dims}, {"sigma", g.sigma()}, {"mats", mats}};
}

MonomialAutomorphism automorphism_from_json(const json& j) {
    Ambient amb;
    amb.dims = j.at("dims").get<std::vector<unsigned>>();
    std::vector<unsigned> sigma = j.at("sigma").get<std::vector<unsigned>>();

    const json& mats_json = j.at("mats");
    unsigned long order = 1;
    for (const json& mj : mats_json)
        order = std::lcm(order, mj.at("root_order").get<unsigned long>());

    std::vector<GenPermMatrix> mats;
    for (const json& mj : mats_json) {
        unsigned size = mj.at("size").get<unsigned>();
        unsigned long local_order = mj.at("root_order").get<unsigned long>();
        unsigned long scale = order / local_order;
        std::vector<unsigned> col(size, size);  // size = sentinel for "unset"
        std::vector<unsigned> exp(size, 0);
        for (const json& entry : mj.at("entries")) {
            if (!entry.is_array() || entry.size() != 3)
                throw std::invalid_argument("automorphism_from_json: entry must be [row, col, exp]");
            unsigned r = entry[0].get<unsigned>();
            if (r >= size || col[r] != size)
                throw std::invalid_argument("automorphism_from_json: bad or duplicate row");
            col[r] = entry[1].get<unsigned>();
            exp[r] = static_cast<unsigned>(entry[2].get<unsigned long>() % local_order * scale);
        }
        for (unsigned c : col)
            if (c == size)
                throw std::invalid_argument("automorphism_from_json: missing row entry");
        mats.emplace_back(std::move(col), std::move(exp));
    }
    return MonomialAutomorphism(std::move(amb), std::move(sigma), order, std::move(mats));
}

json to_json(const FixedComponent& c) {
    json values = json::array();
    for (const auto& row : c.values()) {
        json factor = json::array();
        for (const auto& v : row) {
            if (v.is_zero())
                factor.push_back(nullptr);
            else
                factor.push_back(json{{"param", v.param}, {"exp", v.exp}});
        }
        values.push_back(factor);
    }
    json choices = json::array();
    for (const auto& ch : c.choices()) {
        choices.push_back(json{{"factors", ch.factors},
                               {"eig_order", ch.eig_order},
                               {"eig_exp", ch.eig_exp},
                               {"dim", ch.dim}});
    }
    json out{{"dims", c.ambient().dims},
             {"root_order", c.root_order()},
             {"dimension", c.dimension()},
             {"values", values},
             {"choices", choices}};
    if (auto md = c.multidegree()) out["multidegree"] = *md;
    return out;
}

json to_json(const Section& s) {
    json terms = json::array();
    for (const SectionTerm& t : s.terms)
        terms.push_back(json{{"exps", t.monomial.exps}, {"coeff_exp", t.coeff_exp}});
    return json{{"root_order", s.root_order}, {"terms", terms}};
}

}  // namespace cyq
