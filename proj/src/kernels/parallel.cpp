#include <omp.h>

#include <atomic>
#include <limits>

#include "row_ops.hpp"

namespace mincode::kernels::parallel {

namespace {

// Lowers `target` to `value` if smaller.
void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t seen = target.load(std::memory_order_relaxed);
    while (value < seen && !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
    }
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

void set_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

std::vector<std::uint32_t> weights(const Field& F, const VectorBlock& messages, const VectorBlock& columns) {
    const auto rows = static_cast<std::ptrdiff_t>(messages.size());
    std::vector<std::uint32_t> out(messages.size());
    if (detail::use_gf2_masks(F, messages.width())) {
        const auto m = detail::gf2_masks(messages);
        const auto c = detail::gf2_masks(columns);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            std::uint32_t w = 0;
            for (auto col : c) w += detail::gf2_dot(m[i], col) ? 1U : 0U;
            out[i] = w;
        }
        return out;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) out[i] = detail::row_weight(F, messages.row(i), columns);
    return out;
}

SupportTable supports(const Field& F, const VectorBlock& messages, const VectorBlock& columns) {
    SupportTable t;
    t.rows = messages.size();
    t.columns = columns.size();
    t.words = (t.columns + 63) / 64;
    t.bits.assign(t.rows * t.words, 0);
    t.weights.assign(t.rows, 0);
    const auto rows = static_cast<std::ptrdiff_t>(t.rows);
    if (detail::use_gf2_masks(F, messages.width())) {
        const auto m = detail::gf2_masks(messages);
        const auto c = detail::gf2_masks(columns);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            t.weights[i] = detail::row_support_gf2(m[i], c, t.bits.data() + i * t.words);
        }
        return t;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        t.weights[i] = detail::row_support(F, messages.row(i), columns, t.bits.data() + i * t.words);
    }
    return t;
}

std::optional<ContainedPair> first_contained_pair(const SupportTable& table) {
    std::atomic<std::size_t> best_outer{kNone};
    const auto rows = static_cast<std::ptrdiff_t>(table.rows);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t outer = 0; outer < rows; ++outer) {
        if (static_cast<std::size_t>(outer) > best_outer.load(std::memory_order_relaxed)) continue;
        if (detail::first_inner(table, static_cast<std::size_t>(outer))) {
            atomic_min(best_outer, static_cast<std::size_t>(outer));
        }
    }
    const std::size_t outer = best_outer.load();
    if (outer == kNone) return std::nullopt;
    return ContainedPair{outer, *detail::first_inner(table, outer)};
}

std::optional<std::size_t> first_deficient_hyperplane(const Field& F, const VectorBlock& duals,
                                                      const VectorBlock& points, std::size_t target_rank) {
    std::atomic<std::size_t> best{kNone};
    const auto rows = static_cast<std::ptrdiff_t>(duals.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t a = 0; a < rows; ++a) {
        if (static_cast<std::size_t>(a) > best.load(std::memory_order_relaxed)) continue;
        if (detail::hyperplane_rank(F, duals.row(a), points, target_rank) < target_rank) {
            atomic_min(best, static_cast<std::size_t>(a));
        }
    }
    const std::size_t found = best.load();
    if (found == kNone) return std::nullopt;
    return found;
}

MinCount min_common_zeros(const Field& F, const VectorBlock& duals, std::size_t s, const VectorBlock& points) {
    const std::size_t groups = s == 0 ? 0 : duals.size() / s;
    std::vector<std::size_t> counts(groups);
    const auto n = static_cast<std::ptrdiff_t>(groups);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t g = 0; g < n; ++g) {
        counts[g] = detail::common_zero_count(F, duals, static_cast<std::size_t>(g) * s, s, points);
    }
    MinCount best{kNone, 0};
    for (std::size_t g = 0; g < groups; ++g) {
        if (counts[g] < best.count) best = MinCount{counts[g], g};
    }
    return best;
}

}  // namespace mincode::kernels::parallel
