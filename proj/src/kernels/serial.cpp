#include <limits>

#include "row_ops.hpp"

namespace mincode::kernels::serial {

std::vector<std::uint32_t> weights(const Field& F, const VectorBlock& messages, const VectorBlock& columns) {
    std::vector<std::uint32_t> out(messages.size());
    if (detail::use_gf2_masks(F, messages.width())) {
        const auto m = detail::gf2_masks(messages);
        const auto c = detail::gf2_masks(columns);
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t w = 0;
            for (auto col : c) w += detail::gf2_dot(m[i], col) ? 1U : 0U;
            out[i] = w;
        }
        return out;
    }
    for (std::size_t i = 0; i < messages.size(); ++i) out[i] = detail::row_weight(F, messages.row(i), columns);
    return out;
}

SupportTable supports(const Field& F, const VectorBlock& messages, const VectorBlock& columns) {
    SupportTable t;
    t.rows = messages.size();
    t.columns = columns.size();
    t.words = (t.columns + 63) / 64;
    t.bits.assign(t.rows * t.words, 0);
    t.weights.assign(t.rows, 0);
    if (detail::use_gf2_masks(F, messages.width())) {
        const auto m = detail::gf2_masks(messages);
        const auto c = detail::gf2_masks(columns);
        for (std::size_t i = 0; i < t.rows; ++i) {
            t.weights[i] = detail::row_support_gf2(m[i], c, t.bits.data() + i * t.words);
        }
        return t;
    }
    for (std::size_t i = 0; i < t.rows; ++i) {
        t.weights[i] = detail::row_support(F, messages.row(i), columns, t.bits.data() + i * t.words);
    }
    return t;
}

std::optional<ContainedPair> first_contained_pair(const SupportTable& table) {
    for (std::size_t outer = 0; outer < table.rows; ++outer) {
        if (auto inner = detail::first_inner(table, outer)) return ContainedPair{outer, *inner};
    }
    return std::nullopt;
}

std::optional<std::size_t> first_deficient_hyperplane(const Field& F, const VectorBlock& duals,
                                                      const VectorBlock& points, std::size_t target_rank) {
    for (std::size_t a = 0; a < duals.size(); ++a) {
        if (detail::hyperplane_rank(F, duals.row(a), points, target_rank) < target_rank) return a;
    }
    return std::nullopt;
}

MinCount min_common_zeros(const Field& F, const VectorBlock& duals, std::size_t s, const VectorBlock& points) {
    MinCount best{std::numeric_limits<std::size_t>::max(), 0};
    const std::size_t groups = s == 0 ? 0 : duals.size() / s;
    for (std::size_t g = 0; g < groups; ++g) {
        const auto count = detail::common_zero_count(F, duals, g * s, s, points);
        if (count < best.count) best = MinCount{count, g};
    }
    return best;
}

}  // namespace mincode::kernels::serial
