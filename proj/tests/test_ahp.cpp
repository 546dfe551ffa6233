#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "mwroute/ahp.hpp"

using namespace mwroute;
using Catch::Approx;

TEST_CASE("default comparison matrix reproduces the published weighting") {
    const AhpResult r = derive_weights(default_pcm());
    REQUIRE(r.weights.size() == 4);
    CHECK(r.weights[0] == Approx(0.5267).margin(1e-3));
    CHECK(r.weights[1] == Approx(0.3005).margin(1e-3));
    CHECK(r.weights[2] == Approx(0.0630).margin(1e-3));
    CHECK(r.weights[3] == Approx(0.1098).margin(1e-3));
    CHECK(r.lambda_max == Approx(4.0201).margin(1e-3));
    CHECK(r.consistency_index == Approx(0.0067).margin(1e-3));
    CHECK(r.consistent);
    // CR is informational: CI / RI(4)
    CHECK(r.consistency_ratio == Approx(r.consistency_index / 0.90).margin(1e-12));
}

TEST_CASE("all-ones matrix is perfectly consistent") {
    const auto pcm = PairwiseMatrix::from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
    const AhpResult r = derive_weights(pcm);
    for (double w : r.weights) CHECK(w == Approx(0.25).margin(1e-12));
    CHECK(r.lambda_max == Approx(4.0).margin(1e-9));
    CHECK(r.consistency_index == Approx(0.0).margin(1e-9));
    CHECK(r.consistent);
}

TEST_CASE("any reciprocal 2x2 matrix is consistent") {
    const auto pcm = PairwiseMatrix::from_rows({{1.0, 3.0}, {1.0 / 3.0, 1.0}});
    const AhpResult r = derive_weights(pcm);
    CHECK(r.weights[0] == Approx(0.75).margin(1e-9));
    CHECK(r.weights[1] == Approx(0.25).margin(1e-9));
    CHECK(r.lambda_max == Approx(2.0).margin(1e-9));
    CHECK(r.consistency_index == Approx(0.0).margin(1e-9));
    CHECK(r.consistency_ratio == 0.0);
}

TEST_CASE("reciprocity is enforced") {
    CHECK_THROWS_AS(derive_weights(PairwiseMatrix::from_rows({{1, 2}, {2, 1}})),
                    NonReciprocalMatrix);
    CHECK_THROWS_AS(derive_weights(PairwiseMatrix::from_rows({{2, 1}, {1, 1}})),
                    NonReciprocalMatrix);
    CHECK_THROWS_AS(derive_weights(PairwiseMatrix::from_rows({{1, 0.0}, {0.0, 1}})),
                    NonReciprocalMatrix);
    CHECK_THROWS_AS(PairwiseMatrix(1, {1.0}), ValidationError);
    CHECK_THROWS_AS(PairwiseMatrix(3, {1.0, 2.0}), ValidationError);
}

TEST_CASE("row/column scaling of a consistent matrix keeps the other ranks") {
    // perfectly consistent matrix from an importance vector
    const std::vector<double> w{5.0, 3.0, 2.0, 1.0};
    auto entry = [&](std::size_t i, std::size_t j, double row_scale, std::size_t scaled) {
        double v = w[i] / w[j];
        if (i == scaled && j != scaled) v *= row_scale;
        if (j == scaled && i != scaled) v /= row_scale;
        return v;
    };
    auto build = [&](double row_scale, std::size_t scaled) {
        std::vector<double> flat;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) flat.push_back(entry(i, j, row_scale, scaled));
        return PairwiseMatrix(4, std::move(flat));
    };
    const AhpResult before = derive_weights(build(1.0, 2));
    const AhpResult after = derive_weights(build(3.0, 2));
    // untouched criteria 0, 1, 3 keep their relative order
    CHECK(before.weights[0] > before.weights[1]);
    CHECK(before.weights[1] > before.weights[3]);
    CHECK(after.weights[0] > after.weights[1]);
    CHECK(after.weights[1] > after.weights[3]);
}

TEST_CASE("consistency index is never meaningfully negative") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> score(0.2, 5.0);
    std::uniform_int_distribution<std::size_t> order(3, 6);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = order(rng);
        std::vector<double> flat(n * n, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double v = score(rng);
                flat[i * n + j] = v;
                flat[j * n + i] = 1.0 / v;
            }
        }
        const AhpResult r = derive_weights(PairwiseMatrix(n, std::move(flat)));
        CHECK(r.consistency_index >= -1e-9);
        CHECK(r.lambda_max >= static_cast<double>(n) - 1e-9);
        double sum = 0.0;
        for (double wi : r.weights) {
            CHECK(wi > 0.0);
            sum += wi;
        }
        CHECK(sum == Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("derive_weights is deterministic") {
    const AhpResult a = derive_weights(default_pcm());
    const AhpResult b = derive_weights(default_pcm());
    CHECK(a.weights == b.weights);
    CHECK(a.lambda_max == b.lambda_max);
    CHECK(a.consistency_index == b.consistency_index);
}
