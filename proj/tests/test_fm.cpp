#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>

#include "fanocone/fm.hpp"
#include "oracles.hpp"

using namespace fanocone;
using oracle::RandomSystems;
using oracle::grid_oracle;

namespace {

std::set<LinIneq> normalized_rows(const LinIneqSystem& sys) {
    std::set<LinIneq> out;
    for (const auto& r : sys.rows()) out.insert(r.normalized());
    return out;
}

}  // namespace

TEST_CASE("eliminate: 0 < x < 1 projects to a true constant row") {
    LinIneqSystem sys({"x"}, {less({{"x", Rat(1)}}, Rat(1)), less({{"x", Rat(-1)}}, Rat(0))});
    const auto out = fm::eliminate(sys, "x");
    CHECK(out.vars().empty());
    REQUIRE(out.rows().size() == 1);
    CHECK(out.rows()[0] == LinIneq({}, Rat(-1), Relation::Less));
    CHECK(fm::feasible(sys));
}

TEST_CASE("eliminate: x < 0 < x gives 0 < 0") {
    LinIneqSystem sys({"x"}, {less({{"x", Rat(1)}}, Rat(0)), less({{"x", Rat(-1)}}, Rat(0))});
    const auto out = fm::eliminate(sys, "x");
    REQUIRE(out.rows().size() == 1);
    CHECK(out.rows()[0] == LinIneq({}, Rat(0), Relation::Less));
    CHECK_FALSE(out.rows()[0].holds_trivially());
    CHECK_FALSE(fm::feasible(sys));
}

TEST_CASE("eliminate: projection of a 2-D region onto x") {
    // x - y < 0, y - 1 <= 0, -x < 0; the region is 0 < x < y <= 1, so its
    // shadow on the x-axis is 0 < x < 1.
    LinIneqSystem sys({"x", "y"}, {
                                      less({{"x", Rat(1)}, {"y", Rat(-1)}}, Rat(0)),
                                      less_eq({{"y", Rat(1)}}, Rat(1)),
                                      less({{"x", Rat(-1)}}, Rat(0)),
                                  });
    const auto out = fm::eliminate(sys, "y");
    CHECK(out.vars() == std::vector<std::string>{"x"});
    const std::set<LinIneq> expected{less({{"x", Rat(1)}}, Rat(1)), less({{"x", Rat(-1)}}, Rat(0))};
    CHECK(normalized_rows(out) == expected);
}

TEST_CASE("eliminate rejects unknown variables") {
    LinIneqSystem sys({"x"}, {less({{"x", Rat(1)}}, Rat(0))});
    CHECK_THROWS_AS(fm::eliminate(sys, "y"), std::invalid_argument);
}

TEST_CASE("system rejects rows with undeclared variables") {
    LinIneqSystem sys({"x"});
    CHECK_THROWS_AS(sys.add(less({{"y", Rat(1)}}, Rat(0))), std::invalid_argument);
    CHECK_THROWS_AS(LinIneqSystem({"x", "x"}), std::invalid_argument);
}

TEST_CASE("feasible: small cases") {
    CHECK(fm::feasible(LinIneqSystem{}));
    CHECK(fm::feasible(LinIneqSystem({"x", "y"})));
    CHECK_FALSE(fm::feasible(LinIneqSystem({"x"}, {less({{"x", Rat(1)}}, Rat(0)), less_eq({{"x", Rat(-1)}}, Rat(0))})));
    // x <= 0 and -x <= 0 pins x = 0
    CHECK(fm::feasible(LinIneqSystem({"x"}, {less_eq({{"x", Rat(1)}}, Rat(0)), less_eq({{"x", Rat(-1)}}, Rat(0))})));
}

TEST_CASE("find_witness: interval selection rule") {
    SUBCASE("bounded open interval gives the midpoint") {
        LinIneqSystem sys({"x"}, {less({{"x", Rat(-1)}}, Rat(0)), less({{"x", Rat(1)}}, Rat(1))});
        auto w = fm::find_witness(sys);
        REQUIRE(w);
        CHECK(w->at("x") == Rat(1, 2));
    }
    SUBCASE("empty interval gives nothing") {
        LinIneqSystem sys({"x"}, {less({{"x", Rat(1)}}, Rat(0)), less({{"x", Rat(-1)}}, Rat(0))});
        CHECK_FALSE(fm::find_witness(sys));
    }
    SUBCASE("half-infinite intervals step one unit inside") {
        LinIneqSystem lo({"x"}, {less({{"x", Rat(-1)}}, Rat(-3))});  // x > 3
        CHECK(fm::find_witness(lo)->at("x") == Rat(4));
        LinIneqSystem hi({"x"}, {less_eq({{"x", Rat(1)}}, Rat(-3))});  // x <= -3
        CHECK(fm::find_witness(hi)->at("x") == Rat(-4));
    }
    SUBCASE("unconstrained variable is zero") {
        LinIneqSystem sys({"x", "y"}, {less({{"y", Rat(1)}}, Rat(5))});
        auto w = fm::find_witness(sys);
        REQUIRE(w);
        CHECK(w->at("x") == Rat(0));
        CHECK(w->at("y") == Rat(4));
    }
    SUBCASE("degenerate closed interval gives the point") {
        LinIneqSystem sys({"x"}, {less_eq({{"x", Rat(2)}}, Rat(3)), less_eq({{"x", Rat(-2)}}, Rat(-3))});
        CHECK(fm::find_witness(sys)->at("x") == Rat(3, 2));
    }
}

TEST_CASE("strictness propagation") {
    RandomSystems gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        LinIneqSystem sys = gen.make(false);
        for (const Relation rel : {Relation::LessEq, Relation::Less}) {
            LinIneqSystem uniform_sys(sys.vars());
            for (const auto& r : sys.rows()) uniform_sys.add(LinIneq(r.coeffs(), r.constant(), rel));
            const auto out = fm::eliminate(uniform_sys, uniform_sys.vars().front());
            for (const auto& r : out.rows()) CHECK(r.relation() == rel);
        }
    }

    // one strict parent is enough
    LinIneqSystem mixed({"x", "y"}, {
                                        less({{"x", Rat(1)}}, Rat(1)),
                                        less_eq({{"x", Rat(-1)}, {"y", Rat(1)}}, Rat(0)),
                                        less_eq({{"y", Rat(-1)}}, Rat(0)),
                                    });
    const auto out = fm::eliminate(mixed, "x");
    const std::set<LinIneq> expected{less({{"y", Rat(1)}}, Rat(1)), less_eq({{"y", Rat(-1)}}, Rat(0))};
    CHECK(normalized_rows(out) == expected);
}

TEST_CASE("FM agrees with the grid oracle and witnesses re-verify") {
    RandomSystems gen(2024);
    int decided = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const LinIneqSystem sys = gen.make(trial % 2 == 0);
        const bool fm_says = fm::feasible(sys);
        const auto w = fm::find_witness(sys);
        CHECK(fm_says == w.has_value());
        if (w) CHECK(satisfies(sys, *w));

        const bool oracle = grid_oracle(sys);
        if (oracle) {
            ++decided;
            CHECK(fm_says);
        }
        if (!fm_says) {
            ++infeasible;
            CHECK_FALSE(oracle);
        }
    }
    CHECK(decided >= 150);
    CHECK(infeasible >= 20);
}
