#pragma once

// Per-row building blocks shared by the serial and parallel kernels.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "mincode/kernels.hpp"

namespace mincode::kernels::detail {

inline bool use_gf2_masks(const Field& F, std::size_t width) { return F.q() == 2 && width <= 64; }

inline std::vector<std::uint64_t> gf2_masks(const VectorBlock& block) {
    std::vector<std::uint64_t> masks(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
        std::uint64_t m = 0;
        auto r = block.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j].value != 0) m |= std::uint64_t{1} << j;
        }
        masks[i] = m;
    }
    return masks;
}

inline bool gf2_dot(std::uint64_t a, std::uint64_t b) { return (std::popcount(a & b) & 1) != 0; }

inline std::uint32_t row_weight(const Field& F, std::span<const Element> message, const VectorBlock& columns) {
    std::uint32_t w = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (dot(F, message, columns.row(c)).value != 0) ++w;
    }
    return w;
}

inline std::uint32_t row_support(const Field& F, std::span<const Element> message, const VectorBlock& columns,
                                 std::uint64_t* out) {
    std::uint32_t w = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (dot(F, message, columns.row(c)).value != 0) {
            out[c / 64] |= std::uint64_t{1} << (c % 64);
            ++w;
        }
    }
    return w;
}

inline std::uint32_t row_support_gf2(std::uint64_t message, std::span<const std::uint64_t> columns,
                                     std::uint64_t* out) {
    std::uint32_t w = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (gf2_dot(message, columns[c])) {
            out[c / 64] |= std::uint64_t{1} << (c % 64);
            ++w;
        }
    }
    return w;
}

inline bool subset_of(std::span<const std::uint64_t> inner, std::span<const std::uint64_t> outer) {
    for (std::size_t w = 0; w < inner.size(); ++w) {
        if ((inner[w] & ~outer[w]) != 0) return false;
    }
    return true;
}

/// First inner != outer with supp(inner) inside supp(outer), scanning inner upward.
inline std::optional<std::size_t> first_inner(const SupportTable& t, std::size_t outer) {
    const auto outer_row = t.row(outer);
    const auto outer_weight = t.weights[outer];
    for (std::size_t inner = 0; inner < t.rows; ++inner) {
        if (inner == outer || t.weights[inner] > outer_weight) continue;
        if (subset_of(t.row(inner), outer_row)) return inner;
    }
    return std::nullopt;
}

/// Incremental rank of the points lying on hyperplane `dual`, stopping at `target`.
inline std::size_t hyperplane_rank(const Field& F, std::span<const Element> dual, const VectorBlock& points,
                                   std::size_t target) {
    const std::size_t width = points.width();
    std::vector<std::vector<Element>> basis;  // echelon rows, leading one at pivot[r]
    std::vector<std::size_t> pivot;
    std::vector<Element> work(width);
    for (std::size_t i = 0; i < points.size() && basis.size() < target; ++i) {
        const auto x = points.row(i);
        if (dot(F, dual, x).value != 0) continue;
        work.assign(x.begin(), x.end());
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const Element f = work[pivot[r]];
            if (f.value == 0) continue;
            const Element nf = F.neg(f);
            for (std::size_t c = 0; c < width; ++c) work[c] = F.add(work[c], F.mul(nf, basis[r][c]));
        }
        std::size_t lead = 0;
        while (lead < width && work[lead].value == 0) ++lead;
        if (lead == width) continue;
        const Element s = F.inv(work[lead]);
        for (auto& c : work) c = F.mul(c, s);
        basis.push_back(work);
        pivot.push_back(lead);
    }
    return basis.size();
}

inline std::size_t common_zero_count(const Field& F, const VectorBlock& duals, std::size_t first_row, std::size_t s,
                                     const VectorBlock& points) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool all_zero = true;
        for (std::size_t r = 0; r < s && all_zero; ++r) {
            all_zero = dot(F, duals.row(first_row + r), points.row(i)).value == 0;
        }
        if (all_zero) ++count;
    }
    return count;
}

}  // namespace mincode::kernels::detail
