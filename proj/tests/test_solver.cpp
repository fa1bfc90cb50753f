#include <doctest.h>

#include "cyq/lefschetz.hpp"

using cyq::Cyclotomic;
using cyq::FixedConfig;
using cyq::LocalType;

namespace {

LocalType lt(unsigned p, unsigned a, unsigned b, unsigned c) { return LocalType(p, {a, b, c}); }

}  // namespace

TEST_CASE("order two: the unique sixteen-point solution") {
    auto sols = cyq::solve_configs(2, 1, 64);
    REQUIRE(sols.size() == 1);
    CHECK(sols.front().total_points() == 16);
    CHECK(sols.front().points().front().type == lt(2, 1, 1, 1));

    // Independent completeness oracle: the only candidate type contributes
    // 1/8, so m/8 = 2 has the single solution m = 16 in 0..64.
    Cyclotomic target = Cyclotomic::one(2) - Cyclotomic::root_of_unity(2, 1);
    Cyclotomic contrib = cyq::contribution(lt(2, 1, 1, 1));
    std::vector<unsigned> matches;
    for (unsigned m = 0; m <= 64; ++m) {
        Cyclotomic sum = Cyclotomic::from_rational(2, cyq::Rational(m)) * contrib;
        if (sum == target) matches.push_back(m);
    }
    CHECK(matches == std::vector<unsigned>{16});
}

TEST_CASE("order three, nonzero trace exponent: nine terminal points") {
    for (unsigned r : {1u, 2u}) {
        auto sols = cyq::solve_configs(3, r, 64);
        REQUIRE(sols.size() == 1);
        const FixedConfig& c = sols.front();
        CHECK(c.total_points() == 9);
        for (const auto& pm : c.points()) CHECK(pm.type.terminal());
    }
    CHECK(cyq::solve_configs(3, 2, 64).front().points().front().type == lt(3, 2, 1, 1));
    CHECK(cyq::solve_configs(3, 1, 64).front().points().front().type == lt(3, 2, 2, 1));
}

TEST_CASE("order three, symplectic: paired configurations") {
    auto sols = cyq::solve_configs(3, 0, 6);
    REQUIRE(sols.size() == 4);
    for (const auto& c : sols) {
        cyq::Order3Counts counts = cyq::order3_analysis(c);
        CHECK(counts.n1 == counts.n2);
        CHECK(counts.n1 + counts.n2 == c.total_points());
    }
    CHECK(sols.front().total_points() == 0);

    std::set<unsigned> totals;
    for (const auto& c : sols) totals.insert(c.total_points());
    CHECK(totals == std::set<unsigned>{0, 2, 4, 6});
}

TEST_CASE("order five: twenty solutions within fifteen points") {
    auto sols = cyq::solve_configs(5, 4, 15);
    CHECK(sols.size() == 20);

    unsigned minimal = 100;
    const FixedConfig* best = nullptr;
    for (const auto& c : sols)
        if (c.total_points() < minimal) {
            minimal = c.total_points();
            best = &c;
        }
    REQUIRE(best != nullptr);
    CHECK(minimal == 5);
    REQUIRE(best->points().size() == 1);
    CHECK(best->points().front().type == lt(5, 3, 2, 1));

    // The five-point all-(4,1,1) candidate is absent: it fails the identity.
    for (const auto& c : sols)
        CHECK(!(c.total_points() == 5 && c.points().front().type == lt(5, 4, 1, 1)));

    for (const auto& c : sols) {
        cyq::Order5Counts counts = cyq::order5_analysis(c);
        CHECK(counts.n == 5 + counts.q2);
        CHECK(counts.total == 5 + counts.q1 + 2 * counts.q2);
    }
}

TEST_CASE("solver soundness and scalar consequence") {
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned r = 0; r < p; ++r)
            for (const auto& c : cyq::solve_configs(p, r, 12)) {
                cyq::ConfigReport rep = verify_config(c);
                CHECK(rep.valid);
                CHECK(rep.conti.ok);
                unsigned forced = (p - r) % p;
                for (const auto& pm : c.points()) CHECK(pm.type.s() == forced);
            }
}

TEST_CASE("relabeling the root of unity permutes valid configurations") {
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned r = 0; r < p; ++r)
            for (const auto& c : cyq::solve_configs(p, r, 10))
                for (unsigned k = 1; k < p; ++k) {
                    std::vector<cyq::PointMultiplicity> scaled;
                    for (const auto& pm : c.points()) {
                        const auto& e = pm.type.exponents();
                        scaled.push_back(
                            {LocalType(p,
                                       {static_cast<unsigned>(e[0] * k % p),
                                        static_cast<unsigned>(e[1] * k % p),
                                        static_cast<unsigned>(e[2] * k % p)}),
                             pm.multiplicity});
                    }
                    FixedConfig relabeled(p, r * k % p, std::move(scaled));
                    cyq::ConfigReport orig = verify_config(c);
                    cyq::ConfigReport moved = verify_config(relabeled);
                    CHECK(moved.valid);
                    CHECK(orig.lhs.galois(static_cast<long>(k)) == moved.lhs);
                }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(cyq::solve_configs(4, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(cyq::solve_configs(3, 3, 8), std::invalid_argument);
    CHECK(cyq::solve_configs(2, 1, 8).empty());  // sixteen points do not fit
}
