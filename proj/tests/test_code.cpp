#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mincode/code.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "support.hpp"

using namespace mincode;

TEST_CASE("building codes") {
    const auto F3 = Field::of_order(3);
    const auto C = build_code(monomial_zero_set(F3, 4, 3));
    CHECK(C.n() == 56);
    CHECK(C.dim() == 4);
    CHECK(C.k_ambient() == 4);

    const auto L = build_code(VectorMultiset::from_vectors(F3, 2, {GFVector{1, 0}, GFVector{2, 0}}));
    CHECK(L.n() == 2);
    CHECK(L.dim() == 1);

    const auto low = weight_range_set(F3, 6, WeightBound::at_most, 2);
    const auto lifted = build_code(lift(low, low).set);
    CHECK(lifted.n() == 144);
    CHECK(lifted.dim() == 7);

    CHECK_THROWS_AS(build_code(VectorMultiset(F3, 3)), Error);
}

TEST_CASE("codewords") {
    const auto F3 = Field::of_order(3);
    const auto C = build_code(monomial_zero_set(F3, 4, 3));
    CHECK(codeword_of(GFVector(4), C).is_zero());
    CHECK(weight_support(codeword_of(GFVector::unit(4, 0), C)).weight == 30);
    const GFVector v{1, 2, 0, 1};
    CHECK(codeword_of(scale(F3, Element{2}, v), C) == scale(F3, Element{2}, codeword_of(v, C)));
    CHECK_THROWS_AS(codeword_of(GFVector{1, 0, 0}, C), Error);

    // wt(c_v) + #{i : <v, g_i> = 0} = n for every message.
    for (const auto& m : all_vectors(F3, 4)) {
        const auto c = codeword_of(m, C);
        std::size_t zeros = 0;
        for (const auto& g : C.columns()) zeros += dot(F3, m, g).value == 0 ? 1 : 0;
        REQUIRE(weight_support(c).weight + zeros == C.n());
    }
}

TEST_CASE("weight distribution examples") {
    const auto F3 = Field::of_order(3);
    const auto wd = weight_distribution(build_code(monomial_zero_set(F3, 4, 3)));
    CHECK(wd == WeightDistribution({{30, 6}, {36, 8}, {38, 54}, {42, 12}}));
    CHECK(wd.total() == 81);
    CHECK(wd[0] == 1);
    CHECK(wd.w_min() == 30);
    CHECK(wd.w_max() == 42);
    CHECK(weight_distribution(build_code(monomial_plus_sum_set(F3, 4, 3))) ==
          WeightDistribution({{36, 8}, {42, 66}, {48, 6}}));
    CHECK_THROWS_AS(weight_distribution(build_code(monomial_zero_set(F3, 4, 3)), 80), Error);
}

TEST_CASE("weight distribution and minimality agree with brute force on random multisets") {
    std::mt19937_64 rng(2024);
    int minimal_count = 0;
    int non_minimal_count = 0;
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto F = Field::of_order(q);
        for (std::size_t k = 2; k <= 4; ++k) {
            if (q == 4 && k == 4) continue;
            for (int trial = 0; trial < 12; ++trial) {
                const std::size_t size = 1 + static_cast<std::size_t>(rng() % (3 * k + 6));
                const auto D = oracle::random_multiset(F, k, size, rng);
                const auto C = build_code(D);
                REQUIRE(C.dim() == oracle::dimension(D));
                const auto wd = weight_distribution(C, kDefaultSpaceLimit, Exec::serial);
                REQUIRE(wd.counts() == oracle::weight_distribution(D));
                std::uint64_t qd = 1;
                for (std::size_t i = 0; i < C.dim(); ++i) qd *= q;
                REQUIRE(wd.total() == qd);

                const auto report = is_minimal_exhaustive(C);
                REQUIRE(report.is_minimal == oracle::minimal(D));
                REQUIRE(report.witness.has_value() == !report.is_minimal);
                if (report.witness) REQUIRE(verify_witness(C, *report.witness));
                if (ab_condition(q, wd)) REQUIRE(report.is_minimal);
                (report.is_minimal ? minimal_count : non_minimal_count)++;
            }
        }
    }
    CHECK(minimal_count > 10);
    CHECK(non_minimal_count > 10);
}

TEST_CASE("minimality examples") {
    const auto F3 = Field::of_order(3);
    CHECK(is_minimal_exhaustive(build_code(monomial_zero_set(F3, 4, 3))).is_minimal);

    const std::vector<GFVector> S{GFVector{1, 0, 0, 0}, GFVector{0, 1, 0, 0}};
    const auto C = build_code(hyperplane_union(F3, 4, S).set);
    const auto report = is_minimal_exhaustive(C);
    CHECK_FALSE(report.is_minimal);
    REQUIRE(report.witness);
    CHECK(verify_witness(C, *report.witness));
    CHECK_FALSE(verify_witness(C, MinimalityWitness{GFVector{1, 0, 0, 0}, GFVector{2, 0, 0, 0}}));

    // One representative per point of PG(2, 3): all nonzero codewords have weight q^(k-1).
    const auto simplex = build_code(VectorMultiset::from_vectors(F3, 3, projective_points(F3, 3)));
    CHECK(is_minimal_exhaustive(simplex).is_minimal);
    CHECK(weight_distribution(simplex) == WeightDistribution({{9, 26}, {0, 0}}));
}

TEST_CASE("weight-ratio condition") {
    CHECK(ab_condition(3, WeightDistribution({{30, 6}, {36, 8}, {38, 54}, {42, 12}})));
    CHECK_FALSE(ab_condition(4, WeightDistribution({{84, 9}, {108, 27}, {111, 192}, {120, 27}})));
    CHECK(ab_condition(5, WeightDistribution({{7, 3}, {0, 0}})));
    // Equality is not enough: 2/3 is not strictly above 2/3.
    CHECK_FALSE(ab_condition(3, WeightDistribution({{2, 1}, {3, 1}})));
}

TEST_CASE("projectivity") {
    const auto F3 = Field::of_order(3);
    const auto D = monomial_zero_set(F3, 4, 3);
    CHECK_FALSE(is_projective(build_code(D)));
    CHECK(is_projective(build_code(project_multiset(D))));
    CHECK_FALSE(is_projective(build_code(VectorMultiset::from_vectors(F3, 2, {GFVector{1, 0}, GFVector{1, 0}}))));
}

TEST_CASE("column scaling and reordering keep the weight distribution") {
    std::mt19937_64 rng(5);
    const auto F = Field::of_order(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto D = oracle::random_multiset(F, 3, 12, rng);
        std::vector<GFVector> scaled;
        for (const auto& v : D.expanded()) scaled.push_back(scale(F, Element{1 + static_cast<std::uint32_t>(rng() % 3)}, v));
        const auto E = VectorMultiset::from_vectors(F, 3, scaled);
        REQUIRE(weight_distribution(build_code(D)) == weight_distribution(build_code(E)));
    }
}

TEST_CASE("supersets of minimal sets with the same span stay minimal") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto F = Field::of_order(q);
        for (std::size_t k = 3; k <= 4; ++k) {
            REQUIRE(is_minimal_exhaustive(build_code(weight_range_set(F, k, WeightBound::at_most, 2))).is_minimal);
            for (std::size_t h = 3; h <= k; ++h) {
                REQUIRE(is_minimal_exhaustive(build_code(weight_range_set(F, k, WeightBound::at_most, h))).is_minimal);
            }
        }
    }
}

TEST_CASE("codes of smaller dimension than the ambient space") {
    const auto F = Field::of_order(3);
    // Every column lies in x_3 = 0; the code lives in a 2-dimensional span.
    const auto D = VectorMultiset::from_vectors(F, 3, {GFVector{1, 0, 0}, GFVector{0, 1, 0}, GFVector{1, 1, 0},
                                                       GFVector{1, 2, 0}});
    const auto C = build_code(D);
    CHECK(C.dim() == 2);
    CHECK(weight_distribution(C).total() == 9);
    const auto report = is_minimal_exhaustive(C);
    CHECK(report.is_minimal == oracle::minimal(D));
}
