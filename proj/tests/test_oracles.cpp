#include "torusgrowth/oracles.hpp"

#include "torusgrowth/grammar.hpp"
#include "torusgrowth/series.hpp"
#include "support/free_product_count.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torusgrowth;

TEST_CASE("BFS sphere counts on closed cases") {
    CHECK(sphere_counts_bfs({2, 2}, 3).counts == std::vector<Int>{1, 6, 12, 18});
    CHECK(sphere_counts_bfs({2, 3}, 1).counts == std::vector<Int>{1, 6});
    CHECK(sphere_counts_bfs({2, 3}, 8).counts ==
          std::vector<Int>{1, 6, 16, 30, 52, 84, 132, 204, 308});
    CHECK(sphere_counts_bfs({5, 5}, 0).counts == std::vector<Int>{1});
}

TEST_CASE("first sphere has six elements for every pair") {
    for (int p = 2; p <= 6; ++p)
        for (int q = p; q <= 6; ++q) CHECK(sphere_counts_bfs({p, q}, 1).counts[1] == 6);
}

TEST_CASE("grammar enumeration matches BFS on a small grid") {
    for (int p = 2; p <= 4; ++p) {
        for (int q = p; q <= 4; ++q) {
            SphereCounts bfs = sphere_counts_bfs({p, q}, 8);
            SphereCounts grammar = sphere_counts_grammar({p, q}, 8);
            INFO("p=" << p << " q=" << q);
            CHECK(grammar.counts == bfs.counts);
        }
    }
    CHECK(sphere_counts_grammar({3, 4}, 8).counts == sphere_counts_bfs({3, 4}, 8).counts);
    CHECK(sphere_counts_grammar({2, 5}, 8).counts == sphere_counts_bfs({2, 5}, 8).counts);
}

TEST_CASE("grammar enumeration matches the theorem at (4,4)") {
    CHECK(sphere_counts_grammar({4, 4}, 10).counts == series_prefix(main_growth_function({4, 4}), 10));
    CHECK(sphere_counts_grammar({4, 4}, 10).counts ==
          std::vector<Int>{1, 6, 22, 62, 164, 422, 1074, 2718, 6856, 17254, 43342});
}

TEST_CASE("grammar depth zero counts only the identity") {
    for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {3, 3}, {4, 6}}) {
        CHECK(sphere_counts_grammar({p, q}, 0).counts == std::vector<Int>{1});
    }
}

TEST_CASE("quotient sphere counts match a free-product normal-form count") {
    CHECK(quotient_sphere_counts({2, 3}, 8).counts ==
          std::vector<Int>{1, 3, 4, 6, 8, 12, 16, 24, 32});
    for (int p = 2; p <= 5; ++p) {
        for (int q = p; q <= 5; ++q) {
            INFO("p=" << p << " q=" << q);
            CHECK(quotient_sphere_counts({p, q}, 8).counts ==
                  testsupport::free_product_sphere_counts(p, q, 8));
        }
    }
    for (const Int& a : quotient_sphere_counts({2, 2}, 8).counts) CHECK(a >= 1);
}

TEST_CASE("generalized three-letter sphere counts") {
    CHECK(cayley_sphere_sizes(Presentation(std::vector<int>{3, 3, 3}), 4) ==
          std::vector<Int>{1, 8, 38, 158, 638});
}

TEST_CASE("resource limits surface as errors, never as wrong counts") {
    CHECK_THROWS_AS(sphere_counts_bfs({3, 3}, 8, 10), std::runtime_error);
    CHECK_THROWS_AS(quotient_sphere_counts({3, 3}, 8, 5), std::runtime_error);
    CHECK_THROWS_AS(sphere_counts_bfs({2, 2}, -1), std::invalid_argument);
}

TEST_CASE("wide visited-set keys handle large exponents") {
    // p = 17 forces the non-compact codec; layer 1 still has six generators
    SphereCounts counts = sphere_counts_bfs({17, 19}, 2);
    CHECK(counts.counts[0] == 1);
    CHECK(counts.counts[1] == 6);
    CHECK(counts.counts == sphere_counts_grammar({17, 19}, 2).counts);
}
