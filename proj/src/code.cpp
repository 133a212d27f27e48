#include "mincode/code.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mincode/error.hpp"
#include "mincode/kernels.hpp"

namespace mincode {

WeightDistribution::WeightDistribution(std::map<std::size_t, std::uint64_t> counts) {
    for (const auto& [w, a] : counts) {
        if (w > 0 && a > 0) counts_.emplace(w, a);
    }
}

std::uint64_t WeightDistribution::operator[](std::size_t w) const {
    if (w == 0) return 1;
    auto it = counts_.find(w);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t sum = 1;
    for (const auto& [w, a] : counts_) sum += a;
    return sum;
}

std::size_t WeightDistribution::w_min() const { return counts_.empty() ? 0 : counts_.begin()->first; }
std::size_t WeightDistribution::w_max() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

LinearCode LinearCode::build(VectorMultiset D) {
    if (D.empty()) throw Error(Errc::empty_defining_set, "defining multiset is empty");
    if (D.contains_zero()) throw Error(Errc::zero_vector, "defining multiset contains the zero vector");

    LinearCode C(std::move(D));
    const auto& F = C.D_.field();
    const std::size_t k = C.D_.k();
    C.columns_ = C.D_.expanded();

    std::vector<std::vector<Element>> rows;
    for (const auto& e : C.D_.entries()) rows.emplace_back(e.vector.coords().begin(), e.vector.coords().end());
    C.pivots_ = row_reduce(F, rows, k);

    C.reduced_.reserve(C.columns_.size());
    for (const auto& g : C.columns_) {
        GFVector r(C.pivots_.size());
        for (std::size_t j = 0; j < C.pivots_.size(); ++j) r[j] = g[C.pivots_[j]];
        C.reduced_.push_back(std::move(r));
    }
    return C;
}

GFVector LinearCode::embed_message(const GFVector& reduced) const {
    if (reduced.size() != dim()) throw Error(Errc::dimension_mismatch, "reduced message has wrong length");
    GFVector v(k_ambient());
    for (std::size_t j = 0; j < pivots_.size(); ++j) v[pivots_[j]] = reduced[j];
    return v;
}

GFVector codeword_of(const GFVector& v, const LinearCode& C) {
    if (v.size() != C.k_ambient()) {
        throw Error(Errc::dimension_mismatch, "message of length " + std::to_string(v.size()) +
                                                  " for ambient dimension " + std::to_string(C.k_ambient()));
    }
    GFVector c(C.n());
    for (std::size_t i = 0; i < C.n(); ++i) c[i] = dot(C.field(), v, C.columns()[i]);
    return c;
}

namespace {

struct ReducedSpace {
    std::vector<GFVector> messages;
    kernels::VectorBlock message_block;
    kernels::VectorBlock column_block;
};

ReducedSpace reduced_space(const LinearCode& C, std::uint64_t space_limit) {
    space_size(C.field().q(), C.k_ambient(), space_limit);
    auto messages = projective_points(C.field(), C.dim());
    kernels::VectorBlock mb(messages, C.dim());
    kernels::VectorBlock cb(C.reduced_columns(), C.dim());
    return ReducedSpace{std::move(messages), std::move(mb), std::move(cb)};
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t space_limit, Exec exec) {
    const auto space = reduced_space(C, space_limit);
    const auto& F = C.field();
    const auto w = exec == Exec::parallel ? kernels::parallel::weights(F, space.message_block, space.column_block)
                                          : kernels::serial::weights(F, space.message_block, space.column_block);
    std::map<std::size_t, std::uint64_t> counts;
    for (auto x : w) counts[x] += F.q() - 1;
    return WeightDistribution(std::move(counts));
}

MinimalityReport is_minimal_exhaustive(const LinearCode& C, std::uint64_t space_limit, Exec exec) {
    const auto space = reduced_space(C, space_limit);
    const auto& F = C.field();
    const auto table = exec == Exec::parallel
                           ? kernels::parallel::supports(F, space.message_block, space.column_block)
                           : kernels::serial::supports(F, space.message_block, space.column_block);
    const auto pair = exec == Exec::parallel ? kernels::parallel::first_contained_pair(table)
                                             : kernels::serial::first_contained_pair(table);
    MinimalityReport report;
    report.method = Method::exhaustive;
    if (pair) {
        report.is_minimal = false;
        report.witness = MinimalityWitness{C.embed_message(space.messages[pair->outer]),
                                           C.embed_message(space.messages[pair->inner])};
    }
    return report;
}

bool verify_witness(const LinearCode& C, const MinimalityWitness& w) {
    const auto outer = codeword_of(w.outer, C);
    const auto inner = codeword_of(w.inner, C);
    if (outer.is_zero() || inner.is_zero()) return false;
    for (std::size_t i = 0; i < C.n(); ++i) {
        if (inner[i].value != 0 && outer[i].value == 0) return false;
    }
    const std::array<GFVector, 2> pair{outer, inner};
    return span_dim(C.field(), pair) == 2;
}

bool ab_condition(std::uint32_t q, const WeightDistribution& wd) {
    if (wd.empty()) return false;
    return std::uint64_t{q} * wd.w_min() > std::uint64_t{q - 1} * wd.w_max();
}

bool is_projective(const LinearCode& C) { return is_projective_set(C.defining_set()); }

}  // namespace mincode
