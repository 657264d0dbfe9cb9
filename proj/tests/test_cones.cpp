#include <doctest.h>

#include <algorithm>
#include <random>

#include "fanocone/cones.hpp"
#include "fanocone/positivity.hpp"
#include "oracles.hpp"

using namespace fanocone;
using oracle::parametric_effective;

namespace {

DivClass div(long h, long l, long e, long f) { return {Rat(h), Rat(l), Rat(e), Rat(f)}; }

}  // namespace

TEST_CASE("nef basis is dual to the named curves") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 2; k <= n - 1; ++k)
            for (int d = 1; d <= 6; ++d) {
                const Geometry g(n, k, d);
                const auto N = nef_basis(g).as_array();
                const auto c = named_curves(g);
                const std::array<CurveClass, 4> curves{c.l0, c.h0, c.e0, c.f};
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) CHECK(pair(N[i], curves[j]) == Rat(i == j ? 1 : 0));
            }
}

TEST_CASE("nef coordinates") {
    const Geometry g(4, 2, 1);
    CHECK(nef_coords(nef_basis(g).N4, g) == NefCoords{Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(nef_coords(div(3, 3, -2, -1), g) == NefCoords{Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(nef_coords(DivClass{}, g) == NefCoords{});
}

TEST_CASE("nef coordinates reconstruct the class") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    std::uniform_int_distribution<int> dd(1, 6);
    auto r = [&] { return Rat(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        const Geometry g(7, 3, dd(rng));
        const DivClass D{r(), r(), r(), r()};
        const auto c = nef_coords(D, g);
        const auto N = nef_basis(g).as_array();
        CHECK(c[0] * N[0] + c[1] * N[1] + c[2] * N[2] + c[3] * N[3] == D);
    }
}

TEST_CASE("nef and ample") {
    const Geometry g(4, 2, 1);
    CHECK(is_nef(DivClass::H(), g));
    CHECK_FALSE(is_ample(DivClass::H(), g));
    CHECK(is_nef(DivClass::H() + DivClass::L(), g));
    CHECK_FALSE(is_ample(DivClass::H() + DivClass::L(), g));
    CHECK(is_ample(anticanonical(g), g));
    CHECK_FALSE(is_nef(DivClass::E(), g));
}

TEST_CASE("effective membership") {
    const Geometry g(5, 3, 2);
    const auto gens = effective_generators(g);

    const auto cert = effective_membership(named_divisors(g).D, g);
    REQUIRE(cert);
    CHECK(combine(*cert, gens) == named_divisors(g).D);

    CHECK_FALSE(effective_membership(-DivClass::E(), g));

    const DivClass B = big_decomposition(g).B;
    CHECK(B == DivClass{Rat(2), Rat(11, 4), Rat(-3, 2), Rat(-7, 4)});
    // n-k+1/2-1/d = 2 at (5,3,2)
    const EffCertificate expected{Rat(2), Rat(11, 4), Rat(1, 2), Rat(1), Rat(0)};
    CHECK(combine(expected, gens) == B);
    const auto bcert = effective_membership(B, g);
    REQUIRE(bcert);
    CHECK(combine(*bcert, gens) == B);
}

TEST_CASE("effective membership agrees with the parametric oracle") {
    int effective = 0;
    int total = 0;
    for (int d = 1; d <= 3; ++d) {
        const Geometry g(5, 2, d);
        const auto gens = effective_generators(g);
        // every integer class in [-3,3]^4 minus a stride, > 200 per d
        for (int h = -3; h <= 3; ++h)
            for (int l = -3; l <= 3; ++l)
                for (int e = -3; e <= 3; e += 2)
                    for (int f = -3; f <= 3; f += 2) {
                        const DivClass D = div(h, l, e, f);
                        const auto cert = effective_membership(D, g);
                        CHECK(cert.has_value() == parametric_effective(D, d));
                        if (cert) {
                            ++effective;
                            CHECK(combine(*cert, gens) == D);
                            CHECK(std::all_of(cert->begin(), cert->end(), [](const Rat& r) { return r.sign() >= 0; }));
                        }
                        ++total;
                    }
    }
    CHECK(total >= 600);
    CHECK(effective >= 50);
}

TEST_CASE("effective generators that are nef are effective") {
    for (int d = 1; d <= 4; ++d) {
        const Geometry g(6, 3, d);
        for (const auto& gen : effective_generators(g))
            if (is_nef(gen, g)) CHECK(effective_membership(gen, g).has_value());
        for (const auto& N : nef_basis(g).as_array()) CHECK(effective_membership(N, g).has_value());
    }
}

TEST_CASE("d = 1 makes L0 redundant among the effective generators") {
    const Geometry g(4, 2, 1);
    const auto nd = named_divisors(g);
    CHECK(nd.L0 == nd.D + DivClass::E());
    // for d >= 2, D lies outside the cone of the other four
    const Geometry g2(4, 2, 2);
    const auto nd2 = named_divisors(g2);
    CHECK(nd2.D == Rat(2) * nd2.L0 - DivClass::E() + DivClass::F());
}

TEST_CASE("bigness as interior of the effective cone") {
    const Geometry g(4, 2, 1);
    CHECK_FALSE(is_big(DivClass::E(), g));
    const auto gens = effective_generators(g);
    DivClass sum{};
    for (const auto& x : gens) sum += x;
    CHECK(is_big(sum, g));
    CHECK_FALSE(is_big(-DivClass::E(), g));
    CHECK_FALSE(is_big(DivClass{}, g));

    const Geometry g5(3, 2, 5);
    CHECK(is_big(anticanonical(g5), g5));
}
