#pragma once

// Exhaustive-scan kernels. Each kernel exists twice with identical signatures:
// `serial` is the reference implementation, `parallel` distributes the outer loop
// with OpenMP. Both return identical results for every input, including which
// witness is reported (always the first one in row order).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mincode/gf.hpp"
#include "mincode/linalg.hpp"

namespace mincode::kernels {

/// Row-major block of equal-width vectors.
class VectorBlock {
public:
    explicit VectorBlock(std::size_t width) : width_(width) {}
    VectorBlock(std::span<const GFVector> rows, std::size_t width);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return rows_; }
    std::span<const Element> row(std::size_t i) const noexcept { return {data_.data() + i * width_, width_}; }
    void push(std::span<const Element> r);

private:
    std::size_t width_ = 0;
    std::size_t rows_ = 0;
    std::vector<Element> data_;
};

/// Packed supports: row i holds bit c iff <message_i, column_c> != 0.
struct SupportTable {
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;
    std::vector<std::uint32_t> weights;

    std::span<const std::uint64_t> row(std::size_t i) const noexcept { return {bits.data() + i * words, words}; }
    bool test(std::size_t i, std::size_t column) const noexcept {
        return (bits[i * words + column / 64] >> (column % 64)) & 1U;
    }
};

/// supp(inner) is a subset of supp(outer) and outer != inner.
struct ContainedPair {
    std::size_t outer = 0;
    std::size_t inner = 0;
    friend bool operator==(const ContainedPair&, const ContainedPair&) = default;
};

struct MinCount {
    std::size_t count = 0;
    std::size_t index = 0;
    friend bool operator==(const MinCount&, const MinCount&) = default;
};

namespace serial {

/// Hamming weight of <message, column> over all columns, per message.
std::vector<std::uint32_t> weights(const Field& F, const VectorBlock& messages, const VectorBlock& columns);

SupportTable supports(const Field& F, const VectorBlock& messages, const VectorBlock& columns);

/// First (outer, inner) in lexicographic order with supp(inner) inside supp(outer).
std::optional<ContainedPair> first_contained_pair(const SupportTable& table);

/// First dual vector a whose hyperplane meets `points` in a set of rank below `target_rank`.
std::optional<std::size_t> first_deficient_hyperplane(const Field& F, const VectorBlock& duals,
                                                      const VectorBlock& points, std::size_t target_rank);

/// `duals` holds consecutive groups of `s` rows, each group spanning a dual subspace.
/// Returns the smallest number of points orthogonal to a whole group and the first
/// group attaining it.
MinCount min_common_zeros(const Field& F, const VectorBlock& duals, std::size_t s, const VectorBlock& points);

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> weights(const Field& F, const VectorBlock& messages, const VectorBlock& columns);
SupportTable supports(const Field& F, const VectorBlock& messages, const VectorBlock& columns);
std::optional<ContainedPair> first_contained_pair(const SupportTable& table);
std::optional<std::size_t> first_deficient_hyperplane(const Field& F, const VectorBlock& duals,
                                                      const VectorBlock& points, std::size_t target_rank);
MinCount min_common_zeros(const Field& F, const VectorBlock& duals, std::size_t s, const VectorBlock& points);

/// Sets the OpenMP worker count; 0 keeps the runtime default.
void set_threads(int n);
int max_threads();

}  // namespace parallel

}  // namespace mincode::kernels
