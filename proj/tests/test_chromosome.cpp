#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mwroute/chromosome.hpp"
#include "mwroute/ga.hpp"
#include "test_util.hpp"

using namespace mwroute;

TEST_CASE("the nine-site three-vehicle example decodes and renders") {
    // separators for N=9, H=3 are the tokens 10 and 11
    const Chromosome c{{7, 1, 4, 10, 2, 6, 3, 5, 11, 9, 8}};
    REQUIRE(is_valid_permutation(c, 9, 3));

    const auto routes = split_routes(c, 9, 3);
    REQUIRE(routes.size() == 3);
    CHECK(routes[0] == std::vector<int>{7, 1, 4});
    CHECK(routes[1] == std::vector<int>{2, 6, 3, 5});
    CHECK(routes[2] == std::vector<int>{9, 8});

    CHECK(render(c, 9, 29) == "29-7-1-4-29-2-6-3-5-29-9-8-29");
    const auto tokens = rendered_tokens(c, 9, 29);
    CHECK(tokens.size() == 13); // H + N + 1
    int depot_count = 0;
    for (int t : tokens) depot_count += t == 29;
    CHECK(depot_count == 4); // H + 1
}

TEST_CASE("leading separators leave the first vehicles unused") {
    const Chromosome c{{10, 11, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
    const auto routes = split_routes(c, 9, 3);
    REQUIRE(routes.size() == 3);
    CHECK(routes[0].empty());
    CHECK(routes[1].empty());
    CHECK(routes[2] == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("decode(encode(routes)) reproduces the routes") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const int h = 1 + static_cast<int>(rng() % 3);
        const Chromosome c = random_chromosome(n, h, rng);
        const auto routes = split_routes(c, n, h);
        const Chromosome back = encode(routes, n, h);
        CHECK(split_routes(back, n, h) == routes);
        CHECK(is_valid_permutation(back, n, h));
    }
}

TEST_CASE("encode rejects more routes than vehicles") {
    CHECK_THROWS_AS(encode({{1}, {2}, {3}}, 3, 2), Error);
}

TEST_CASE("permutation validity catches the usual corruptions") {
    CHECK(is_valid_permutation(Chromosome{{1, 2, 3}}, 3, 1));
    CHECK_FALSE(is_valid_permutation(Chromosome{{1, 2, 2}}, 3, 1));  // duplicate
    CHECK_FALSE(is_valid_permutation(Chromosome{{1, 2, 9}}, 3, 1));  // out of range
    CHECK_FALSE(is_valid_permutation(Chromosome{{1, 2}}, 3, 1));     // wrong length
    CHECK_FALSE(is_valid_permutation(Chromosome{{0, 1, 2}}, 3, 1));  // zero token
}

TEST_CASE("decode schedules each split route") {
    const ProblemInstance inst = testutil::random_instance(5, 2, 61);
    const Chromosome c{{3, 1, 6, 4, 2, 5}}; // separator token is 6
    const RoutePlan plan = decode(c, inst);
    REQUIRE(plan.routes.size() == 2);
    CHECK(plan.routes[0] == std::vector<int>{3, 1});
    CHECK(plan.routes[1] == std::vector<int>{4, 2, 5});
    CHECK(plan.schedules[0].arrivals.size() == 2);
    CHECK(plan.schedules[1].arrivals.size() == 3);
}

TEST_CASE("split_routes rejects a foreign separator count") {
    // three separators can't fit two vehicles
    CHECK_THROWS_AS(split_routes(Chromosome{{1, 4, 5, 2, 3, 6}}, 3, 2), Error);
}
