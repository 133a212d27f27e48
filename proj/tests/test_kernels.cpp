#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mincode/blocking.hpp"
#include "mincode/kernels.hpp"
#include "support.hpp"

using namespace mincode;
using namespace mincode::kernels;

namespace {

struct Instance {
    Field field;
    std::size_t k;
    VectorBlock messages;
    VectorBlock columns;
};

Instance random_instance(std::uint32_t q, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    const auto F = Field::of_order(q);
    std::vector<GFVector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(oracle::random_nonzero(F, k, rng));
    const auto msgs = projective_points(F, k);
    return Instance{F, k, VectorBlock(msgs, k), VectorBlock(cols, k)};
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(77);
    const int default_threads = parallel::max_threads();
    for (int threads : {1, 2, 3, 4}) {
        parallel::set_threads(threads);
        for (auto [q, k] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {2, 7}, {3, 3}, {4, 3}, {5, 3}}) {
            for (std::size_t n : {std::size_t{3}, std::size_t{20}, std::size_t{70}, std::size_t{130}}) {
                const auto in = random_instance(q, k, n, rng);
                INFO("q=" << q << " k=" << k << " n=" << n << " threads=" << threads);
                REQUIRE(serial::weights(in.field, in.messages, in.columns) ==
                        parallel::weights(in.field, in.messages, in.columns));
                const auto ts = serial::supports(in.field, in.messages, in.columns);
                const auto tp = parallel::supports(in.field, in.messages, in.columns);
                REQUIRE(ts.bits == tp.bits);
                REQUIRE(ts.weights == tp.weights);
                REQUIRE(serial::first_contained_pair(ts) == parallel::first_contained_pair(tp));
                REQUIRE(serial::first_deficient_hyperplane(in.field, in.messages, in.columns, k - 1) ==
                        parallel::first_deficient_hyperplane(in.field, in.messages, in.columns, k - 1));
                REQUIRE(serial::min_common_zeros(in.field, in.messages, 1, in.columns) ==
                        parallel::min_common_zeros(in.field, in.messages, 1, in.columns));
            }
        }
    }
    parallel::set_threads(default_threads);
}

TEST_CASE("support tables match direct evaluation") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto in = random_instance(q, 3, 90, rng);
        const auto t = serial::supports(in.field, in.messages, in.columns);
        REQUIRE(t.rows == in.messages.size());
        for (std::size_t i = 0; i < t.rows; ++i) {
            std::uint32_t w = 0;
            for (std::size_t c = 0; c < in.columns.size(); ++c) {
                const bool nz = dot(in.field, in.messages.row(i), in.columns.row(c)).value != 0;
                REQUIRE(t.test(i, c) == nz);
                w += nz ? 1 : 0;
            }
            REQUIRE(t.weights[i] == w);
        }
    }
}

TEST_CASE("first contained pair is the lexicographically first") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto in = random_instance(3, 3, 4 + trial % 6, rng);
        const auto t = serial::supports(in.field, in.messages, in.columns);
        std::optional<ContainedPair> expected;
        for (std::size_t a = 0; a < t.rows && !expected; ++a) {
            for (std::size_t b = 0; b < t.rows && !expected; ++b) {
                if (a == b) continue;
                bool inside = true;
                for (std::size_t c = 0; c < t.columns; ++c) inside = inside && (!t.test(b, c) || t.test(a, c));
                if (inside) expected = ContainedPair{a, b};
            }
        }
        REQUIRE(serial::first_contained_pair(t) == expected);
        REQUIRE(parallel::first_contained_pair(t) == expected);
    }
}

TEST_CASE("multi-dimensional common zeros agree") {
    std::mt19937_64 rng(21);
    const auto F = Field::of_order(3);
    std::vector<GFVector> pts;
    for (int i = 0; i < 25; ++i) pts.push_back(oracle::random_nonzero(F, 4, rng));
    const VectorBlock points(pts, 4);
    VectorBlock duals(4);
    for (const auto& basis : echelon_subspaces(F, 4, 2)) {
        for (const auto& row : basis) duals.push(row.coords());
    }
    REQUIRE(serial::min_common_zeros(F, duals, 2, points) == parallel::min_common_zeros(F, duals, 2, points));
}
