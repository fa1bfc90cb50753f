#include "cyq/examples.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyq {

namespace {

using Status = CheckLine::Status;

void pass_fail(ExampleReport& rep, bool ok, const std::string& name, const std::string& detail) {
    rep.lines.push_back({ok ? Status::Pass : Status::Fail, name, detail});
}

void info(ExampleReport& rep, const std::string& name, const std::string& detail) {
    rep.lines.push_back({Status::Info, name, detail});
}

struct Setup {
    Ambient amb;
    NamedGenerators gens;
    FiniteActionGroup group;
    std::vector<unsigned> anticanonical;
};

Setup build_setup(ExampleReport& rep, const json& data) {
    Setup s;
    s.amb = ambient_from_json(data.at("ambient"));
    for (const auto& [name, gj] : data.at("generators").items()) {
        MonomialAutomorphism g = automorphism_from_json(gj);
        if (!(g.ambient() == s.amb))
            throw std::invalid_argument("example: generator ambient mismatch");
        s.gens.emplace(name, std::move(g));
    }
    std::vector<MonomialAutomorphism> gen_list;
    for (const auto& [name, g] : s.gens) gen_list.push_back(g);
    unsigned cap = data.value("group_cap", 512u);
    s.group = generate_group(gen_list, cap);
    s.anticanonical = anticanonical_multidegree(s.amb);

    if (data.contains("expect") && data["expect"].contains("group_order")) {
        unsigned expect = data["expect"]["group_order"].get<unsigned>();
        pass_fail(rep, s.group.size() == expect, "group order",
                  "generated group has " + std::to_string(s.group.size()) + " elements (expected " +
                      std::to_string(expect) + ")");
    } else {
        info(rep, "group order", std::to_string(s.group.size()) + " elements");
    }

    if (data.contains("relations")) {
        std::vector<std::string> relations = data["relations"].get<std::vector<std::string>>();
        bool ok = verify_relations(s.group, s.gens, relations);
        pass_fail(rep, ok, "relations",
                  std::to_string(relations.size()) + " defining relations verified");
    }
    return s;
}

std::string multidegree_string(const std::vector<unsigned>& md) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < md.size(); ++i) os << (i ? "," : "") << md[i];
    os << ")";
    return os.str();
}

json component_summary(const std::vector<FixedComponent>& comps) {
    json out = json::array();
    for (const auto& c : comps) out.push_back(to_json(c));
    return out;
}

// True iff the generic invariant divisor misses every 0-dimensional component
// and contains no 1-dimensional component.
struct DivisorChecks {
    bool points_excluded = true;
    bool curves_not_contained = true;
    Integer points_on_divisor = 0;
    unsigned isolated = 0;
    unsigned curves = 0;
    unsigned higher = 0;
};

DivisorChecks check_against_divisor(const std::vector<Section>& basis,
                                    const std::vector<FixedComponent>& comps,
                                    const std::vector<unsigned>& divisor) {
    DivisorChecks out;
    for (const auto& c : comps) {
        if (c.dimension() == 0) {
            ++out.isolated;
            if (restricts_nonzero_on(basis, c) == false) out.points_excluded = false;
        } else if (c.dimension() == 1) {
            ++out.curves;
            if (restricts_nonzero_on(basis, c))
                out.points_on_divisor += intersect_curve_divisor(c, divisor);
            else
                out.curves_not_contained = false;
        } else {
            ++out.higher;
        }
    }
    return out;
}

ExampleReport run_cyclic_terminal(const json& data) {
    ExampleReport rep;
    rep.name = data.at("name").get<std::string>();
    rep.title = data.value("title", "");
    Setup s = build_setup(rep, data);
    const json& expect = data.at("expect");

    MonomialAutomorphism a = evaluate_word(s.amb, s.gens, data.at("analyze").get<std::string>());
    std::vector<FixedComponent> comps = fixed_components(a);
    rep.details["components"] = component_summary(comps);

    unsigned expect_components = expect.at("components").get<unsigned>();
    unsigned expect_curves = expect.at("curves").get<unsigned>();
    pass_fail(rep, comps.size() == expect_components, "fixed components",
              std::to_string(comps.size()) + " irreducible components on the ambient (expected " +
                  std::to_string(expect_components) + ")");

    std::vector<FixedComponent> curves;
    for (const auto& c : comps)
        if (c.dimension() == 1) curves.push_back(c);
    pass_fail(rep, curves.size() == expect_curves, "curve components",
              std::to_string(curves.size()) + " components are rational curves (expected " +
                  std::to_string(expect_curves) + ")");

    std::vector<Integer> inters;
    for (const auto& c : curves) inters.push_back(intersect_curve_divisor(c, s.anticanonical));
    std::vector<long> got, want;
    for (const auto& v : inters) got.push_back(v.get_si());
    for (const auto& v : expect.at("curve_intersections")) want.push_back(v.get<long>());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    std::ostringstream os;
    os << "anticanonical degrees of the fixed curves:";
    for (long v : got) os << " " << v;
    pass_fail(rep, got == want, "curve intersections", os.str());

    std::vector<Section> basis = invariant_sections(s.group, s.anticanonical);
    info(rep, "invariant sections",
         std::to_string(basis.size()) + " basis elements of multidegree " +
             multidegree_string(s.anticanonical));

    if (data.contains("expect_basis_contains")) {
        bool all = true;
        unsigned count = 0;
        for (const json& mj : data["expect_basis_contains"]) {
            MultiMonomial mono{mj.get<std::vector<std::vector<unsigned>>>()};
            bool found = false;
            for (const Section& sct : basis)
                if (sct.terms.size() == 1 && sct.terms.front().monomial == mono &&
                    sct.terms.front().coeff_exp == 0)
                    found = true;
            all = all && found;
            ++count;
        }
        pass_fail(rep, all, "invariant monomials",
                  std::to_string(count) + " prescribed monomials appear as invariant basis elements");
    }

    DivisorChecks dc = check_against_divisor(basis, comps, s.anticanonical);
    pass_fail(rep, dc.points_excluded, "base point check",
              std::to_string(dc.isolated) +
                  " isolated ambient fixed points all avoid the generic invariant divisor");
    pass_fail(rep, dc.curves_not_contained, "restriction check",
              "no fixed curve lies inside the generic invariant divisor");

    long predicted = expect.at("points_on_divisor").get<long>();
    pass_fail(rep, dc.points_on_divisor == predicted, "points on the divisor",
              "the fixed locus meets the generic invariant divisor in " +
                  dc.points_on_divisor.get_str() + " points (expected " +
                  std::to_string(predicted) + ")");
    rep.details["points_on_divisor"] = dc.points_on_divisor.get_str();

    // Cross-check against the fixed-point identity: for every nonzero trace
    // exponent, the minimal admissible configuration has exactly this many
    // points, all terminal.
    unsigned p = data.at("lefschetz_prime").get<unsigned>();
    unsigned max_points = data.value("solver_max_points", 64u);
    bool cross = true;
    for (unsigned r = 1; r < p; ++r) {
        auto sols = solve_configs(p, r, max_points);
        if (sols.empty()) {
            cross = false;
            continue;
        }
        unsigned best = max_points + 1;
        const FixedConfig* minimal = nullptr;
        unsigned minimal_count = 0;
        for (const auto& sol : sols) {
            if (sol.total_points() < best) {
                best = sol.total_points();
                minimal = &sol;
                minimal_count = 1;
            } else if (sol.total_points() == best) {
                ++minimal_count;
            }
        }
        bool all_terminal = true;
        for (const auto& pm : minimal->points())
            if (!pm.type.terminal()) all_terminal = false;
        if (best != static_cast<unsigned>(predicted) || minimal_count != 1 || !all_terminal)
            cross = false;
    }
    pass_fail(rep, cross, "fixed point identity",
              "for every nonzero trace exponent the unique minimal configuration has " +
                  std::to_string(predicted) + " points, all terminal");
    return rep;
}

ExampleReport run_klein(const json& data) {
    ExampleReport rep;
    rep.name = data.at("name").get<std::string>();
    rep.title = data.value("title", "");
    Setup s = build_setup(rep, data);
    const json& expect = data.at("expect");

    std::vector<std::string> involutions = data.at("involutions").get<std::vector<std::string>>();
    std::string product_word = data.at("product").get<std::string>();
    long per_curve = expect.at("curve_intersection").get<long>();

    std::vector<Section> basis = invariant_sections(s.group, s.anticanonical);
    info(rep, "invariant sections",
         std::to_string(basis.size()) + " basis elements of multidegree " +
             multidegree_string(s.anticanonical));

    std::vector<Integer> fix_sizes(s.group.size(), Integer(-1));
    fix_sizes[0] = 0;  // identity entry filled below from the disjoint pieces

    bool curves_ok = true, restriction_ok = true;
    for (const std::string& name : involutions) {
        MonomialAutomorphism a = evaluate_word(s.amb, s.gens, name);
        auto comps = fixed_components(a);
        unsigned curves = 0;
        Integer on_divisor = 0;
        for (const auto& c : comps) {
            if (c.dimension() != 1) {
                curves_ok = false;
                continue;
            }
            ++curves;
            if (restricts_nonzero_on(basis, c))
                on_divisor += intersect_curve_divisor(c, s.anticanonical);
            else
                restriction_ok = false;
        }
        if (curves != 4) curves_ok = false;
        if (on_divisor != 4 * per_curve) curves_ok = false;
        unsigned idx = *s.group.index_of(a);
        fix_sizes[idx] = on_divisor;
        fix_sizes[0] += on_divisor;
        rep.details["fix_on_divisor"][name] = on_divisor.get_str();
        info(rep, "fixed locus of " + name,
             std::to_string(curves) + " rational curves, each of anticanonical degree " +
                 std::to_string(per_curve) + "; " + on_divisor.get_str() +
                 " points on the generic invariant divisor");
    }
    pass_fail(rep, curves_ok, "involution fixed curves",
              "each involution fixes 4 rational curves meeting the generic divisor in 4 points");
    pass_fail(rep, restriction_ok, "restriction check",
              "no fixed curve lies inside the generic invariant divisor");

    // Common fixed points of the two involutions: they must avoid the generic
    // divisor, so the two fixed loci are disjoint on it.
    MonomialAutomorphism a0 = evaluate_word(s.amb, s.gens, involutions.at(0));
    MonomialAutomorphism a1 = evaluate_word(s.amb, s.gens, involutions.at(1));
    auto pts0 = fixed_coordinate_points(a0);
    auto pts1 = fixed_coordinate_points(a1);
    std::vector<CoordinatePoint> common;
    for (const auto& pt : pts0)
        if (std::find(pts1.begin(), pts1.end(), pt) != pts1.end()) common.push_back(pt);
    bool common_excluded = true;
    for (const auto& pt : common)
        if (!base_point_check(basis, pt)) common_excluded = false;
    pass_fail(rep, common.size() == 4 && common_excluded, "common fixed points",
              std::to_string(common.size()) +
                  " common fixed points of the involutions, none a base point of the invariant "
                  "system");

    // The product element: its coordinate fixed points are excluded from the
    // generic divisor. Its full ambient fixed locus is reported as computed.
    MonomialAutomorphism prod = evaluate_word(s.amb, s.gens, product_word);
    auto prod_pts = fixed_coordinate_points(prod);
    bool prod_excluded = true;
    for (const auto& pt : prod_pts)
        if (!base_point_check(basis, pt)) prod_excluded = false;
    pass_fail(rep, prod_excluded, "product fixed points",
              std::to_string(prod_pts.size()) + " coordinate fixed points of " + product_word +
                  ", none a base point of the invariant system");
    auto prod_comps = fixed_components(prod);
    {
        std::ostringstream os;
        os << prod_comps.size() << " ambient component(s) of dimension";
        for (const auto& c : prod_comps) os << " " << c.dimension();
        info(rep, "ambient fixed locus of " + product_word, os.str());
        rep.details["product_component_dimensions"] = json::array();
        for (const auto& c : prod_comps)
            rep.details["product_component_dimensions"].push_back(c.dimension());
    }

    // Burnside count: the involutions' counts are computed above; the product
    // element's count on the divisor is the construction's declared value.
    if (data.contains("declared_fix_sizes")) {
        for (const auto& [word, value] : data["declared_fix_sizes"].items()) {
            MonomialAutomorphism e = evaluate_word(s.amb, s.gens, word);
            unsigned idx = *s.group.index_of(e);
            fix_sizes[idx] = Integer(value.get<long>());
            fix_sizes[0] += fix_sizes[idx];
            info(rep, "declared fix size",
                 "|Fix(" + word + ")| on the generic divisor taken as " +
                     fix_sizes[idx].get_str() + " (declared in the data file)");
        }
    }
    bool sizes_complete = std::all_of(fix_sizes.begin(), fix_sizes.end(),
                                      [](const Integer& v) { return v >= 0; });
    long expect_burnside = expect.at("burnside").get<long>();
    if (!sizes_complete) {
        pass_fail(rep, false, "burnside count", "missing fix sizes for some group elements");
    } else {
        Integer count = burnside_count(s.group, fix_sizes);
        std::ostringstream os;
        os << "(1/" << s.group.size() << ")(";
        for (unsigned i = 0; i < fix_sizes.size(); ++i) os << (i ? "+" : "") << fix_sizes[i];
        os << ") = " << count;
        pass_fail(rep, count == expect_burnside, "burnside count", os.str());
        rep.details["burnside"] = count.get_str();
    }

    // Cross-check against the fixed-point identity for involutions.
    auto sols = solve_configs(2, 1, 64);
    bool unique16 = sols.size() == 1 && sols.front().total_points() == 16;
    pass_fail(rep, unique16, "fixed point identity",
              "the unique order-2 configuration has 16 points");
    InvolutionClassification cls = involution_classify(InvolutionFixKind::Isolated, 16);
    pass_fail(rep, cls.consistent && !cls.symplectic, "involution classification",
              "16 isolated fixed points: non-symplectic, 16 terminal quotient points");

    // Orbits of the first involution's fixed curves under the whole group.
    {
        MonomialAutomorphism a = evaluate_word(s.amb, s.gens, involutions.at(0));
        unsigned idx = *s.group.index_of(a);
        std::vector<TaggedComponent> tagged;
        for (const auto& c : fixed_components(a)) tagged.push_back({idx, c});
        unsigned orbits = component_orbits(s.group, tagged);
        info(rep, "curve orbits",
             "the 4 fixed curves of " + involutions.at(0) + " fall into " +
                 std::to_string(orbits) + " orbits under the group");
        rep.details["curve_orbits"] = orbits;
    }
    return rep;
}

ExampleReport run_coset_orbit(const json& data) {
    ExampleReport rep;
    rep.name = data.at("name").get<std::string>();
    rep.title = data.value("title", "");
    Setup s = build_setup(rep, data);
    const json& expect = data.at("expect");

    if (expect.contains("orders")) {
        bool ok = true;
        std::ostringstream os;
        for (const auto& [name, oj] : expect["orders"].items()) {
            unsigned got = order_of(s.gens.at(name), 2 * s.group.size());
            unsigned want = oj.get<unsigned>();
            os << name << "^" << got << "=1 ";
            if (got != want) ok = false;
        }
        pass_fail(rep, ok, "generator orders", os.str());
    }

    // Conjugation closure of the seed elements.
    std::vector<std::string> seeds = data.at("family_seeds").get<std::vector<std::string>>();
    std::set<unsigned> family;
    for (const std::string& word : seeds) {
        MonomialAutomorphism e = evaluate_word(s.amb, s.gens, word);
        auto idx = s.group.index_of(e);
        if (!idx) throw std::invalid_argument("example: seed element not in group");
        family.insert(*idx);
    }
    while (true) {
        std::set<unsigned> next = family;
        for (unsigned b = 0; b < s.group.size(); ++b)
            for (unsigned a : family)
                next.insert(s.group.table[s.group.table[b][a]][s.group.inverse[b]]);
        if (next == family) break;
        family = std::move(next);
    }
    info(rep, "conjugation family",
         std::to_string(family.size()) + " elements in the conjugation closure of the seeds");
    rep.details["family_size"] = family.size();

    // The family's fixed loci are positive-dimensional (so they meet every
    // ample divisor); every other nontrivial element has a finite fixed locus.
    bool family_positive = true, others_dim0 = true, others_excluded = true;
    std::vector<TaggedComponent> tagged;
    std::map<unsigned, unsigned> dim_histogram;
    std::vector<Section> basis = invariant_sections(s.group, s.anticanonical);
    std::set<std::string> component_keys;
    for (unsigned i = 1; i < s.group.size(); ++i) {
        auto comps = fixed_components(s.group.elements[i]);
        if (family.count(i)) {
            for (const auto& c : comps) {
                if (c.dimension() == 0) family_positive = false;
                ++dim_histogram[c.dimension()];
                tagged.push_back({i, c});
                component_keys.insert(c.canonical_key());
            }
        } else {
            for (const auto& c : comps) {
                if (c.dimension() != 0) others_dim0 = false;
                else if (!restricts_nonzero_on(basis, c)) others_excluded = false;
            }
        }
    }
    pass_fail(rep, family_positive, "family fixed loci",
              "every element of the conjugation family has positive-dimensional fixed locus");
    {
        std::ostringstream os;
        for (const auto& [dim, count] : dim_histogram)
            os << count << " of dimension " << dim << "; ";
        info(rep, "family component dimensions", os.str());
        for (const auto& [dim, count] : dim_histogram)
            rep.details["family_dimension_histogram"][std::to_string(dim)] = count;
    }
    pass_fail(rep, others_dim0, "complement fixed loci",
              "every other nontrivial element has a finite fixed locus");
    pass_fail(rep, others_excluded, "complement base point check",
              "all finite fixed loci avoid the generic invariant divisor");
    info(rep, "family components",
         std::to_string(component_keys.size()) + " distinct components among " +
             std::to_string(tagged.size()) + " tagged ones");
    rep.details["distinct_components"] = component_keys.size();

    unsigned orbits = component_orbits(s.group, tagged);
    unsigned min_orbits = expect.at("min_orbits").get<unsigned>();
    pass_fail(rep, orbits >= min_orbits, "component orbits",
              std::to_string(orbits) + " orbits of fixed components under the group (expected >= " +
                  std::to_string(min_orbits) + ")");
    rep.details["component_orbits"] = orbits;

    info(rep, "invariant sections",
         std::to_string(basis.size()) + " basis elements of multidegree " +
             multidegree_string(s.anticanonical));
    return rep;
}

}  // namespace

ExampleReport run_example(const json& data) {
    std::string pipeline = data.at("pipeline").get<std::string>();
    if (pipeline == "cyclic-terminal") return run_cyclic_terminal(data);
    if (pipeline == "klein") return run_klein(data);
    if (pipeline == "coset-orbit") return run_coset_orbit(data);
    throw std::invalid_argument("run_example: unknown pipeline '" + pipeline + "'");
}

}  // namespace cyq
