#include <doctest.h>

#include <set>

#include "cyq/cyclotomic.hpp"
#include "cyq/local_type.hpp"

using cyq::LocalType;
using cyq::Rational;

namespace {

LocalType lt(unsigned p, unsigned a, unsigned b, unsigned c) { return LocalType(p, {a, b, c}); }

std::set<std::array<unsigned, 3>> exponent_set(const std::vector<LocalType>& list) {
    std::set<std::array<unsigned, 3>> out;
    for (const auto& t : list) out.insert(t.exponents());
    return out;
}

unsigned long choose3(unsigned long n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
    CHECK(lt(3, 2, 1, 1).exponents() == std::array<unsigned, 3>{2, 1, 1});
    CHECK(lt(3, 1, 2, 1).exponents() == std::array<unsigned, 3>{2, 1, 1});
    CHECK(lt(3, 1, 2, 1) == lt(3, 2, 1, 1));
    CHECK_THROWS_AS(lt(4, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lt(5, 5, 1, 1), std::invalid_argument);
}

TEST_CASE("determinant exponent") {
    CHECK(lt(5, 4, 1, 1).s() == 1);
    CHECK(lt(2, 1, 1, 1).s() == 1);
    CHECK(lt(3, 1, 1, 1).s() == 0);
}

TEST_CASE("age") {
    CHECK(lt(3, 1, 1, 2).age(1) == cyq::make_rational(4, 3));
    CHECK(lt(3, 1, 1, 1).age(2) == Rational(2));
    CHECK(lt(5, 2, 2, 2).age(3) == cyq::make_rational(3, 5));
    CHECK_THROWS_AS(lt(5, 1, 1, 1).age(0), std::invalid_argument);
    CHECK_THROWS_AS(lt(5, 1, 1, 1).age(5), std::invalid_argument);
}

TEST_CASE("quasi-reflections") {
    CHECK(lt(3, 1, 0, 0).quasi_reflection());
    CHECK(!lt(3, 1, 1, 2).quasi_reflection());
    CHECK(!lt(2, 0, 0, 0).quasi_reflection());
}

TEST_CASE("gorenstein") {
    CHECK(lt(3, 1, 1, 1).gorenstein());
    CHECK(!lt(5, 4, 1, 1).gorenstein());
    CHECK(lt(2, 1, 1, 0).gorenstein());
}

TEST_CASE("terminal by the determinant criterion") {
    CHECK(lt(2, 1, 1, 1).terminal());
    CHECK(lt(3, 1, 1, 2).terminal());
    CHECK(!lt(5, 2, 2, 2).terminal());
    CHECK_THROWS_AS(lt(3, 1, 1, 0).terminal(), std::invalid_argument);
}

TEST_CASE("terminal and canonical by the age criterion") {
    CHECK(lt(2, 1, 1, 1).terminal_by_age());
    CHECK(lt(5, 4, 1, 1).terminal_by_age());
    CHECK(!lt(5, 1, 1, 1).terminal_by_age());

    CHECK(lt(3, 1, 1, 1).canonical());
    CHECK(!lt(5, 2, 2, 2).canonical());
    CHECK(lt(2, 1, 1, 1).canonical());
    CHECK_THROWS_AS(lt(3, 1, 1, 0).canonical(), std::invalid_argument);
}

TEST_CASE("classification records") {
    cyq::SingularityClassification c = classify(lt(3, 1, 1, 2));
    CHECK(c.isolated);
    CHECK(!c.quasi_reflection);
    CHECK(!c.gorenstein);
    REQUIRE(c.canonical.has_value());
    REQUIRE(c.terminal.has_value());
    CHECK(*c.canonical);
    CHECK(*c.terminal);
    CHECK(c.s == 1);
    CHECK(c.ages.size() == 2);

    cyq::SingularityClassification g = classify(lt(3, 1, 1, 1));
    CHECK(g.gorenstein);
    CHECK(*g.canonical);
    CHECK(!*g.terminal);
    CHECK(g.s == 0);

    cyq::SingularityClassification q = classify(lt(3, 1, 0, 0));
    CHECK(!q.isolated);
    CHECK(q.quasi_reflection);
    CHECK(!q.terminal.has_value());
    CHECK(!q.canonical.has_value());
}

TEST_CASE("enumeration of isolated types") {
    auto p2 = cyq::enumerate_isolated_types(2);
    REQUIRE(p2.size() == 1);
    CHECK(p2.front() == lt(2, 1, 1, 1));

    auto p3 = cyq::enumerate_isolated_types(3);
    CHECK(exponent_set(p3) == std::set<std::array<unsigned, 3>>{
                                  {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}});

    CHECK(cyq::enumerate_isolated_types(5).size() == 20);
    for (unsigned p : {2, 3, 5, 7, 11, 13}) {
        auto types = cyq::enumerate_isolated_types(p);
        CHECK(types.size() == choose3(p + 1));
        std::set<std::array<unsigned, 3>> distinct = exponent_set(types);
        CHECK(distinct.size() == types.size());
        for (const auto& t : types) {
            CHECK(t.isolated());
            CHECK(t.exponents()[0] >= t.exponents()[1]);
            CHECK(t.exponents()[1] >= t.exponents()[2]);
        }
    }
}

TEST_CASE("order-5 partition matches the known exponent lists") {
    auto part = cyq::partition_order5();
    CHECK(exponent_set(part.terminal) ==
          std::set<std::array<unsigned, 3>>{{4, 1, 1},
                                            {3, 2, 1},
                                            {4, 2, 1},
                                            {3, 2, 2},
                                            {4, 3, 1},
                                            {3, 3, 2},
                                            {4, 4, 1},
                                            {4, 3, 2}});
    CHECK(exponent_set(part.non_terminal) ==
          std::set<std::array<unsigned, 3>>{{2, 2, 2},
                                            {4, 4, 3},
                                            {3, 3, 1},
                                            {4, 4, 4},
                                            {1, 1, 1},
                                            {4, 2, 2},
                                            {2, 1, 1},
                                            {3, 3, 3}});
    CHECK(exponent_set(part.symplectic) ==
          std::set<std::array<unsigned, 3>>{{3, 1, 1}, {2, 2, 1}, {4, 4, 2}, {4, 3, 3}});
    CHECK(part.terminal.size() + part.non_terminal.size() + part.symplectic.size() == 20);
}

TEST_CASE("the two terminal criteria agree on every isolated type") {
    for (unsigned p : {2, 3, 5, 7, 11, 13})
        for (const auto& t : cyq::enumerate_isolated_types(p)) {
            CHECK(t.terminal() == t.terminal_by_age());
            if (t.terminal()) CHECK(t.canonical());
        }
}

TEST_CASE("unit rescaling of exponents preserves the predicates") {
    for (unsigned p : {2, 3, 5, 7, 11, 13})
        for (const auto& t : cyq::enumerate_isolated_types(p))
            for (unsigned m = 1; m < p; ++m) {
                const auto& e = t.exponents();
                LocalType scaled(
                    p, {static_cast<unsigned>(e[0] * m % p), static_cast<unsigned>(e[1] * m % p),
                        static_cast<unsigned>(e[2] * m % p)});
                CHECK(scaled.terminal() == t.terminal());
                CHECK(scaled.canonical() == t.canonical());
                CHECK(scaled.gorenstein() == t.gorenstein());
            }
}

TEST_CASE("gorenstein coincides with a trivial determinant root") {
    for (unsigned p : {2, 3, 5, 7})
        for (const auto& t : cyq::enumerate_isolated_types(p)) {
            cyq::Cyclotomic det =
                cyq::Cyclotomic::root_of_unity(p, static_cast<long>(t.s()));
            CHECK(t.gorenstein() == (det == cyq::Cyclotomic::one(p)));
        }
}
