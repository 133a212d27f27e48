#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mincode/blocking.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "support.hpp"

using namespace mincode;

namespace {

VectorMultiset all_points(const Field& F, std::size_t k) {
    return VectorMultiset::from_vectors(F, k, projective_points(F, k));
}

}  // namespace

TEST_CASE("theta and Gaussian binomials") {
    CHECK(theta(0, 7) == 1);
    CHECK(theta(2, 2) == 7);
    CHECK(theta(1, 4) == 5);
    CHECK(gaussian_binomial(4, 1, 3) == 40);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 0, 5) == 1);
    CHECK(gaussian_binomial(2, 3, 5) == 0);

    // The echelon enumeration lists each subspace once: compare with distinct spans of
    // all pairs and triples of points.
    for (std::uint32_t q : {2u, 3u}) {
        const auto F = Field::of_order(q);
        for (std::size_t k = 2; k <= 4; ++k) {
            for (std::size_t s = 1; s <= k; ++s) {
                const auto subspaces = echelon_subspaces(F, k, s);
                REQUIRE(subspaces.size() == gaussian_binomial(k, s, q));
                std::set<std::set<oracle::Word>> spans;
                for (const auto& basis : subspaces) {
                    REQUIRE(span_dim(F, basis) == s);
                    std::set<oracle::Word> span;
                    for (const auto& x : all_vectors(F, k)) {
                        // x lies in the row space iff adding it keeps the rank.
                        auto extended = basis;
                        extended.push_back(x);
                        if (span_dim(F, extended) == s) span.insert(x.values());
                    }
                    spans.insert(span);
                }
                REQUIRE(spans.size() == subspaces.size());
            }
        }
    }
    CHECK_THROWS_AS(echelon_subspaces(Field::of_order(5), 8, 4), Error);
}

TEST_CASE("fold multiplicity examples") {
    const auto F3 = Field::of_order(3);
    // The four points of a line in PG(2, 3).
    const auto line = VectorMultiset::from_vectors(
        F3, 3, {GFVector{0, 1, 0}, GFVector{1, 0, 0}, GFVector{1, 1, 0}, GFVector{1, 2, 0}});
    CHECK(fold_multiplicity(line, 1).fold == 1);

    const auto projected = project_multiset(monomial_zero_set(F3, 4, 3));
    CHECK(fold_multiplicity(projected, 1).fold >= 3);

    const auto F2 = Field::of_order(2);
    CHECK(fold_multiplicity(all_points(F2, 3), 1).fold == 3);
    CHECK(fold_multiplicity(all_points(F3, 4), 1).fold == theta(2, 3));

    const auto report = fold_multiplicity(all_points(F3, 3), 3);
    CHECK(report.fold == 0);
    CHECK_FALSE(report.is_blocking);
    CHECK_THROWS_AS(fold_multiplicity(line, 0), Error);
    CHECK_THROWS_AS(fold_multiplicity(line, 4), Error);
}

TEST_CASE("fold multiplicity agrees with brute force") {
    std::mt19937_64 rng(8);
    for (std::uint32_t q : {2u, 3u}) {
        const auto F = Field::of_order(q);
        for (std::size_t k = 2; k <= 4; ++k) {
            for (int trial = 0; trial < 6; ++trial) {
                const auto D = oracle::random_multiset(F, k, 2 + rng() % 15, rng);
                for (std::size_t s = 1; s <= std::min<std::size_t>(k, 2); ++s) {
                    const auto report = fold_multiplicity(D, s, kDefaultSubspaceLimit, Exec::serial);
                    REQUIRE(report.fold == oracle::fold(D, s));
                    REQUIRE(report.is_blocking == (report.fold >= 1));
                    REQUIRE(report.witness_subspace.size() == s);
                    std::size_t count = 0;
                    for (const auto& x : D.expanded()) {
                        bool in = true;
                        for (const auto& a : report.witness_subspace) in = in && dot(F, a, x).value == 0;
                        count += in ? 1 : 0;
                    }
                    REQUIRE(count == report.fold);
                }
            }
        }
    }
}

TEST_CASE("cutting examples") {
    const auto F3 = Field::of_order(3);
    const std::vector<GFVector> basis3{GFVector{1, 0, 0, 0}, GFVector{0, 1, 0, 0}, GFVector{0, 0, 1, 0}};
    const auto DS = hyperplane_union(F3, 4, basis3).set;
    CHECK(is_cutting_definition(DS).is_cutting);

    const std::vector<GFVector> one{GFVector{1, 0, 0, 0}};
    const auto H = hyperplane_union(F3, 4, one).set;
    const auto report = is_cutting_definition(H);
    CHECK_FALSE(report.is_cutting);
    CHECK(verify_cutting_witness(H, report));
    CHECK(report.witness_pair.has_value());

    const std::vector<GFVector> flat{GFVector{1, 0, 0, 0}, GFVector{0, 1, 0, 0}, GFVector{1, 1, 0, 0}};
    const auto span_report = is_cutting_span(project_multiset(hyperplane_union(F3, 4, flat).set));
    CHECK_FALSE(span_report.is_cutting);
    CHECK(verify_cutting_witness(project_multiset(hyperplane_union(F3, 4, flat).set), span_report));

    const auto F2 = Field::of_order(2);
    CHECK(is_cutting_definition(all_points(F2, 3)).is_cutting);
    CHECK(is_cutting_span(all_points(F3, 4)).is_cutting);

    CHECK_THROWS_AS(is_cutting_span(DS), Error);
    CHECK_THROWS_AS(is_cutting_span(VectorMultiset::from_vectors(F3, 1, {GFVector{1}})), Error);
}

TEST_CASE("both cutting routes agree with brute force on random projective sets") {
    std::mt19937_64 rng(31);
    int cutting = 0;
    int not_cutting = 0;
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto F = Field::of_order(q);
        for (std::size_t k = 2; k <= 4; ++k) {
            if (q == 4 && k == 4) continue;
            const auto total = projective_points(F, k).size();
            for (int trial = 0; trial < 10; ++trial) {
                const auto D = oracle::random_projective(F, k, k + rng() % (total - k + 1), rng);
                const bool expected = oracle::cutting(D);
                const auto def = is_cutting_definition(D, kDefaultSubspaceLimit, Exec::serial);
                const auto span = is_cutting_span(D, kDefaultSubspaceLimit, Exec::serial);
                REQUIRE(def.is_cutting == expected);
                REQUIRE(span.is_cutting == expected);
                REQUIRE(verify_cutting_witness(D, def));
                REQUIRE(verify_cutting_witness(D, span));
                REQUIRE(is_cutting(D) == expected);
                (expected ? cutting : not_cutting)++;
            }
        }
    }
    CHECK(cutting > 5);
    CHECK(not_cutting > 5);
}

TEST_CASE("cutting is preserved by adding points") {
    std::mt19937_64 rng(4);
    const auto F = Field::of_order(3);
    const auto points = projective_points(F, 3);
    for (int trial = 0; trial < 20; ++trial) {
        auto D = oracle::random_projective(F, 3, 7, rng);
        if (!is_cutting(D)) continue;
        auto vs = D.distinct();
        for (const auto& p : points) {
            if (!D.contains(p)) {
                vs.push_back(p);
                break;
            }
        }
        REQUIRE(is_cutting(VectorMultiset::from_vectors(F, 3, vs)));
    }
}

TEST_CASE("minimality through the cutting property") {
    const auto F3 = Field::of_order(3);
    CHECK(is_minimal_cutting(build_code(monomial_zero_set(F3, 4, 3))).is_minimal);
    CHECK(is_minimal_cutting(build_code(monomial_plus_sum_set(F3, 4, 3))).is_minimal);

    const std::vector<GFVector> S{GFVector{1, 0, 0, 0}, GFVector{0, 1, 0, 0}};
    const auto C = build_code(hyperplane_union(F3, 4, S).set);
    const auto report = is_minimal_cutting(C);
    CHECK_FALSE(report.is_minimal);
    REQUIRE(report.witness);
    CHECK(verify_witness(C, *report.witness));
    CHECK(report.method == Method::cutting);

    const auto line = build_code(VectorMultiset::from_vectors(F3, 2, {GFVector{1, 1}, GFVector{2, 2}}));
    CHECK(line.dim() == 1);
    CHECK(is_minimal_cutting(line).is_minimal);
    CHECK(is_minimal_exhaustive(line).is_minimal);
}

TEST_CASE("blocking sets of PG(2, q) have at least theta_1 points") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto F = Field::of_order(q);
        const auto points = projective_points(F, 3);
        const std::size_t P = points.size();
        for (std::uint32_t mask = 1; mask < (1u << P); ++mask) {
            if (q == 3 && __builtin_popcount(mask) > 5) continue;
            std::vector<GFVector> vs;
            for (std::size_t i = 0; i < P; ++i) {
                if (mask >> i & 1U) vs.push_back(points[i]);
            }
            const auto D = VectorMultiset::from_vectors(F, 3, vs);
            if (fold_multiplicity(D, 1).is_blocking) REQUIRE(D.size() >= theta(1, q));
        }
    }
}

TEST_CASE("affine blocking sets") {
    const auto F3 = Field::of_order(3);
    const auto B = scaled_basis_set(F3, 4);
    CHECK(is_affine_blocking(B));
    auto vs = B.expanded();
    vs.erase(vs.begin());  // drop the zero vector
    const auto punctured = VectorMultiset::from_vectors(F3, 3, vs);
    const auto gap = affine_blocking_gap(punctured);
    REQUIRE(gap);
    for (const auto& x : punctured.distinct()) CHECK(dot(F3, gap->first, x) != gap->second);
}
