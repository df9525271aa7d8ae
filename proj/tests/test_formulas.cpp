#include "torusgrowth/formulas.hpp"

#include "torusgrowth/series.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torusgrowth;

TEST_CASE("cyclic growth polynomials") {
    CHECK(cyclic_growth_poly(3) == Polynomial{1, 2});
    CHECK(cyclic_growth_poly(2) == Polynomial{1, 1});
    CHECK(cyclic_growth_poly(6) == Polynomial{1, 2, 2, 1});
    CHECK_THROWS_AS(cyclic_growth_poly(1), std::invalid_argument);
    for (int n = 2; n <= 20; ++n) CHECK(evaluate(cyclic_growth_poly(n), Int(1)) == n);
}

TEST_CASE("infinite cyclic growth") {
    RationalFunction c = infinite_cyclic_growth();
    CHECK(c == RationalFunction(Polynomial{1, 1}, Polynomial{1, -1}));
    CHECK(series_prefix(c, 3) == std::vector<Int>{1, 2, 2, 2});
    CHECK(c.num().coeff(0) == 1);
}

TEST_CASE("half powers") {
    CHECK(half_power(2) == Polynomial{0, 1});
    CHECK(half_power(3).is_zero());
    CHECK(half_power(6) == Polynomial{0, 0, 0, 1});
}

TEST_CASE("denominator polynomial g") {
    CHECK(denominator_g({2, 3}) == Polynomial{-1, 0, 2});
    CHECK(denominator_g({2, 2}) == Polynomial{-1, 0, 1});
    CHECK(denominator_g({4, 5}) == Polynomial{-1, 0, 4, 6, 2});
}

TEST_CASE("denominator identity against the theorem's denominator") {
    for (int p = 2; p <= 20; ++p) {
        for (int q = 2; q <= 20; ++q) {
            Polynomial cp = cyclic_growth_poly(p);
            Polynomial cq = cyclic_growth_poly(q);
            CHECK(cp + cq - cp * cq == -denominator_g({p, q}));
        }
    }
}

TEST_CASE("main growth function closed cases") {
    CHECK(main_growth_function({2, 2}) == RationalFunction(Polynomial{1, 4, 1}, Polynomial{1, -2, 1}));

    // (2,3): the two displayed summands, assembled independently
    RationalFunction first(Polynomial{1, 1} * Polynomial{1, 1} * Polynomial{1, 2},
                           Polynomial{1, -1} * Polynomial{1, 0, -2});
    RationalFunction second(Polynomial{0, 1} * Polynomial{1, 2} * Polynomial{1, 2},
                            Polynomial{1, 0, -2} * Polynomial{1, 0, -2});
    CHECK(main_growth_function({2, 3}) == first + second);

    CHECK(series_prefix(main_growth_function({3, 3}), 8) ==
          std::vector<Int>{1, 6, 18, 42, 90, 186, 378, 762, 1530});
}

TEST_CASE("main growth function is symmetric in p and q") {
    for (int p = 2; p <= 10; ++p)
        for (int q = p; q <= 10; ++q) CHECK(main_growth_function({p, q}) == main_growth_function({q, p}));
}

TEST_CASE("amalgam combination") {
    RationalFunction b(Polynomial{1, 3}, Polynomial{1, -1});
    CHECK(fpa_combine(b, b, b) == b);

    RationalFunction cinf = infinite_cyclic_growth();
    RationalFunction bb = cinf * RationalFunction(cyclic_growth_poly(3));
    RationalFunction cc = cinf * RationalFunction(cyclic_growth_poly(5));
    Polynomial c3 = cyclic_growth_poly(3);
    Polynomial c5 = cyclic_growth_poly(5);
    RationalFunction expected = cinf * RationalFunction(c3 * c5, c3 + c5 - c3 * c5);
    CHECK(fpa_combine(bb, cc, cinf) == expected);

    CHECK_THROWS_AS(fpa_combine(RationalFunction(Polynomial{2}), RationalFunction(Polynomial{2}),
                                RationalFunction(Polynomial{1})),
                    std::domain_error);
    CHECK_THROWS_AS(fpa_combine(RationalFunction(), b, b), std::invalid_argument);
}

TEST_CASE("odd-odd amalgam route equals the theorem") {
    CHECK(growth_odd_odd({3, 3}) == main_growth_function({3, 3}));
    CHECK(growth_odd_odd({3, 5}) == main_growth_function({3, 5}));
    CHECK_THROWS_AS(growth_odd_odd({2, 3}), std::invalid_argument);
}

TEST_CASE("D and E split of C_p - 1") {
    CHECK(de_polys(2) == std::pair{Polynomial{}, Polynomial{0, 1}});
    CHECK(de_polys(4) == std::pair{Polynomial{0, 2}, Polynomial{0, 0, 1}});
    CHECK(de_polys(6) == std::pair{Polynomial{0, 2, 2}, Polynomial{0, 0, 0, 1}});
    CHECK_THROWS_AS(de_polys(5), std::invalid_argument);
    for (int p = 2; p <= 12; p += 2) {
        auto [d, e] = de_polys(p);
        CHECK(d + e == cyclic_growth_poly(p) - Polynomial{1});
    }
}

TEST_CASE("F polynomials, direct and closed form") {
    CHECK(f_direct(4, 0) == Polynomial{1});
    CHECK(f_direct(2, 1) == Polynomial{0, 2});
    CHECK(f_direct(4, 1) == Polynomial{0, 2, 2});
    CHECK(f_closed(6, 0) == Polynomial{1});
    CHECK(f_closed(2, 1) == Polynomial{0, 2});
    for (int p = 2; p <= 12; p += 2)
        for (int r = 0; r <= 8; ++r) CHECK(f_direct(p, r) == f_closed(p, r));
}

TEST_CASE("even-odd components") {
    EvenOddComponents comps = components_even_odd({2, 3});
    RationalFunction a1_expected = RationalFunction(Polynomial{0, 1}, Polynomial{1, -1}) *
                                   RationalFunction(Polynomial{1, 1} * Polynomial{1, 2}, Polynomial{1, 0, -2});
    CHECK(comps.a1 == a1_expected);
    CHECK(comps.a1 == comps.a2);
    CHECK(comps.total() == main_growth_function({2, 3}));
    CHECK_THROWS_AS(components_even_odd({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(components_even_odd({2, 4}), std::invalid_argument);
}

TEST_CASE("even-even components") {
    EvenEvenComponents comps = components_even_even({2, 2});
    CHECK(comps.a_gamma == RationalFunction(Polynomial{1, 1}, Polynomial{1, -1}));
    CHECK(comps.total() == RationalFunction(Polynomial{1, 4, 1}, Polynomial{1, -2, 1}));

    EvenEvenComponents square = components_even_even({4, 4});
    CHECK(square.a_alpha == square.a_beta);
    CHECK_THROWS_AS(components_even_even({2, 3}), std::invalid_argument);
}

TEST_CASE("route equivalence across the parity cases") {
    for (int p = 2; p <= 9; ++p) {
        for (int q = p; q <= 9; ++q) {
            RationalFunction expected = main_growth_function({p, q});
            if (p % 2 == 1 && q % 2 == 1)
                CHECK(growth_odd_odd({p, q}) == expected);
            else if (p % 2 == 0 && q % 2 == 0)
                CHECK(components_even_even({p, q}).total() == expected);
            else {
                TorusParams oriented = p % 2 == 0 ? TorusParams{p, q} : TorusParams{q, p};
                CHECK(components_even_odd(oriented).total() == expected);
            }
        }
    }
}

TEST_CASE("series coefficients stay positive far out") {
    for (int p = 2; p <= 12; ++p) {
        for (int q = p; q <= 12; ++q) {
            auto prefix = series_prefix(main_growth_function({p, q}), 200);
            for (const Int& a : prefix) REQUIRE(a >= 1);
        }
    }
}

TEST_CASE("generalized all-odd growth") {
    CHECK(growth_generalized_odd(std::vector<int>{3}) == infinite_cyclic_growth() * RationalFunction(cyclic_growth_poly(3)));
    CHECK(growth_generalized_odd(std::vector<int>{3, 5}) == main_growth_function({3, 5}));
    CHECK(growth_generalized_odd(std::vector<int>{5, 3}) == main_growth_function({3, 5}));
    CHECK_THROWS_AS(growth_generalized_odd(std::vector<int>{3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(growth_generalized_odd(std::vector<int>{1}), std::invalid_argument);
    CHECK_THROWS_AS(growth_generalized_odd(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(TorusParams(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(TorusParams(3, 0), std::invalid_argument);
}
