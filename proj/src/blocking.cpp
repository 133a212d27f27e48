#include "mincode/blocking.hpp"

#include <limits>
#include <string>

#include "mincode/error.hpp"
#include "mincode/kernels.hpp"

namespace mincode {

namespace {

std::vector<GFVector> nonzero_expanded(const VectorMultiset& D) {
    std::vector<GFVector> out;
    for (const auto& e : D.entries()) {
        if (e.vector.is_zero()) continue;
        for (std::size_t i = 0; i < e.multiplicity; ++i) out.push_back(e.vector);
    }
    return out;
}

std::vector<GFVector> nonzero_distinct(const VectorMultiset& D) {
    std::vector<GFVector> out;
    for (const auto& e : D.entries()) {
        if (!e.vector.is_zero()) out.push_back(e.vector);
    }
    return out;
}

std::vector<GFVector> hyperplanes(const Field& F, std::size_t k, std::uint64_t limit) {
    const std::uint64_t count = gaussian_binomial(k, 1, F.q());
    if (count > limit) {
        throw Error(Errc::too_many_subspaces,
                    std::to_string(count) + " hyperplanes exceed the limit " + std::to_string(limit));
    }
    return projective_points(F, k);
}

}  // namespace

std::uint64_t theta(std::size_t s, std::uint64_t q) {
    std::uint64_t sum = 0;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i <= s; ++i) {
        sum += power;
        power *= q;
    }
    return sum;
}

std::uint64_t gaussian_binomial(std::size_t k, std::size_t s, std::uint64_t q) {
    if (s > k) return 0;
    // Recurrence [k, s] = [k-1, s-1] + q^s [k-1, s], saturating at uint64 max.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> row(s + 1, 0);
    row[0] = 1;
    for (std::size_t n = 1; n <= k; ++n) {
        for (std::size_t j = std::min(n, s); j >= 1; --j) {
            std::uint64_t qj = 1;
            for (std::size_t t = 0; t < j && qj != kMax; ++t) qj = qj > kMax / q ? kMax : qj * q;
            std::uint64_t term = (row[j] != 0 && qj > kMax / row[j]) ? kMax : qj * row[j];
            row[j] = term > kMax - row[j - 1] ? kMax : term + row[j - 1];
        }
    }
    return row[s];
}

std::vector<std::vector<GFVector>> echelon_subspaces(const Field& F, std::size_t k, std::size_t s,
                                                     std::uint64_t limit) {
    if (s == 0 || s > k) throw Error(Errc::bad_range, "subspace dimension out of range");
    const std::uint64_t count = gaussian_binomial(k, s, F.q());
    if (count > limit) {
        throw Error(Errc::too_many_subspaces,
                    std::to_string(count) + " subspaces exceed the limit " + std::to_string(limit));
    }
    std::vector<std::vector<GFVector>> out;
    out.reserve(count);

    std::vector<std::size_t> pivots(s);
    for (std::size_t i = 0; i < s; ++i) pivots[i] = i;
    while (true) {
        std::vector<bool> is_pivot(k, false);
        for (auto p : pivots) is_pivot[p] = true;
        // Free slots: row r, column c > pivots[r], c not a pivot column.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < s; ++r) {
            for (std::size_t c = pivots[r] + 1; c < k; ++c) {
                if (!is_pivot[c]) slots.emplace_back(r, c);
            }
        }
        std::vector<std::uint32_t> digits(slots.size(), 0);
        while (true) {
            std::vector<GFVector> basis(s, GFVector(k));
            for (std::size_t r = 0; r < s; ++r) basis[r][pivots[r]] = Element{1};
            for (std::size_t i = 0; i < slots.size(); ++i) basis[slots[i].first][slots[i].second] = Element{digits[i]};
            out.push_back(std::move(basis));
            bool carried_out = true;
            for (std::size_t i = slots.size(); i-- > 0;) {
                if (++digits[i] < F.q()) {
                    carried_out = false;
                    break;
                }
                digits[i] = 0;
            }
            if (carried_out) break;
        }
        // Next pivot combination in lexicographic order.
        std::size_t r = s;
        while (r > 0 && pivots[r - 1] == k - s + (r - 1)) --r;
        if (r == 0) break;
        ++pivots[r - 1];
        for (std::size_t j = r; j < s; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

BlockingReport fold_multiplicity(const VectorMultiset& D, std::size_t s, std::uint64_t subspace_limit, Exec exec) {
    const auto& F = D.field();
    const std::size_t k = D.k();
    if (s < 1 || s > k) throw Error(Errc::bad_range, "codimension s must satisfy 1 <= s <= k");
    const auto points = nonzero_expanded(D);
    const kernels::VectorBlock point_block(points, k);

    BlockingReport report;
    report.s = s;
    if (s == 1) {
        space_size(F.q(), k, kDefaultSpaceLimit);
        const auto duals = projective_points(F, k);
        const kernels::VectorBlock dual_block(duals, k);
        const auto w = exec == Exec::parallel ? kernels::parallel::weights(F, dual_block, point_block)
                                              : kernels::serial::weights(F, dual_block, point_block);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::size_t arg = 0;
        for (std::size_t a = 0; a < w.size(); ++a) {
            const std::size_t count = points.size() - w[a];
            if (count < best) {
                best = count;
                arg = a;
            }
        }
        report.fold = best;
        report.witness_subspace = {duals[arg]};
    } else {
        const auto subspaces = echelon_subspaces(F, k, s, subspace_limit);
        kernels::VectorBlock dual_block(k);
        for (const auto& basis : subspaces) {
            for (const auto& row : basis) dual_block.push(row.coords());
        }
        const auto best = exec == Exec::parallel ? kernels::parallel::min_common_zeros(F, dual_block, s, point_block)
                                                 : kernels::serial::min_common_zeros(F, dual_block, s, point_block);
        report.fold = best.count;
        report.witness_subspace = subspaces[best.index];
    }
    report.is_blocking = report.fold >= 1;
    return report;
}

CuttingReport is_cutting_definition(const VectorMultiset& D, std::uint64_t subspace_limit, Exec exec) {
    const auto& F = D.field();
    const std::size_t k = D.k();
    const auto points = nonzero_distinct(D);
    const auto duals = hyperplanes(F, k, subspace_limit);
    const kernels::VectorBlock point_block(points, k);
    const kernels::VectorBlock dual_block(duals, k);

    // Supports of the dual vectors over the points: Z_a ⊆ Z_b iff supp(b) ⊆ supp(a).
    const auto table = exec == Exec::parallel ? kernels::parallel::supports(F, dual_block, point_block)
                                              : kernels::serial::supports(F, dual_block, point_block);
    CuttingReport report;
    report.route = CuttingRoute::definition;
    for (std::size_t a = 0; a < table.rows; ++a) {
        if (table.weights[a] == points.size()) {
            report.is_cutting = false;
            report.witness_hyperplane = duals[a];
            break;
        }
    }
    const auto pair = exec == Exec::parallel ? kernels::parallel::first_contained_pair(table)
                                             : kernels::serial::first_contained_pair(table);
    if (pair) {
        report.is_cutting = false;
        report.witness_pair = std::make_pair(duals[pair->outer], duals[pair->inner]);
    }
    return report;
}

CuttingReport is_cutting_span(const VectorMultiset& D, std::uint64_t subspace_limit, Exec exec) {
    if (D.contains_zero() || !is_projective_set(D)) {
        throw Error(Errc::not_projective, "span-based cutting check needs a projective set; project it first");
    }
    const auto& F = D.field();
    const std::size_t k = D.k();
    if (k < 2) throw Error(Errc::bad_range, "span-based cutting check needs ambient dimension >= 2");
    const auto points = D.distinct();
    const auto duals = hyperplanes(F, k, subspace_limit);
    const kernels::VectorBlock point_block(points, k);
    const kernels::VectorBlock dual_block(duals, k);
    const auto bad = exec == Exec::parallel
                         ? kernels::parallel::first_deficient_hyperplane(F, dual_block, point_block, k - 1)
                         : kernels::serial::first_deficient_hyperplane(F, dual_block, point_block, k - 1);
    CuttingReport report;
    report.route = CuttingRoute::span;
    if (bad) {
        report.is_cutting = false;
        report.witness_hyperplane = duals[*bad];
    }
    return report;
}

bool is_cutting(const VectorMultiset& D, std::uint64_t subspace_limit, Exec exec) {
    if (D.k() < 2) return is_cutting_definition(D, subspace_limit, exec).is_cutting;
    const auto projected = project_multiset(D);
    if (projected.empty()) return false;
    return is_cutting_span(projected, subspace_limit, exec).is_cutting;
}

MinimalityReport is_minimal_cutting(const LinearCode& C, std::uint64_t subspace_limit, Exec exec) {
    MinimalityReport report;
    report.method = Method::cutting;
    if (C.dim() <= 1) return report;

    const auto& F = C.field();
    const std::size_t dim = C.dim();
    const auto reduced = VectorMultiset::from_vectors(F, dim, C.reduced_columns());
    const auto projected = project_multiset(reduced);
    const auto cutting = is_cutting_span(projected, subspace_limit, exec);
    if (cutting.is_cutting) return report;

    // The section H_a ∩ D̄ spans less than H_a, so some other hyperplane H_b contains
    // it; then Supp(c_b) ⊆ Supp(c_a).
    const GFVector& a = *cutting.witness_hyperplane;
    std::vector<GFVector> section;
    for (const auto& x : projected.distinct()) {
        if (dot(F, a, x).value == 0) section.push_back(x);
    }
    GFVector b;
    for (const auto& y : null_space(F, section, dim)) {
        auto candidate = proj_normalize(F, y);
        if (candidate != a) {
            b = std::move(candidate);
            break;
        }
    }
    report.is_minimal = false;
    report.witness = MinimalityWitness{C.embed_message(a), C.embed_message(b)};
    return report;
}

bool verify_cutting_witness(const VectorMultiset& D, const CuttingReport& report) {
    if (report.is_cutting) return !report.witness_pair && !report.witness_hyperplane;
    const auto& F = D.field();
    const auto points = nonzero_distinct(D);
    bool ok = report.witness_pair.has_value() || report.witness_hyperplane.has_value();
    if (report.witness_pair) {
        const auto& [first, second] = *report.witness_pair;
        if (first.is_zero() || second.is_zero()) return false;
        if (proj_normalize(F, first) == proj_normalize(F, second)) return false;
        for (const auto& x : points) {
            if (dot(F, first, x).value == 0 && dot(F, second, x).value != 0) return false;
        }
    }
    if (report.witness_hyperplane) {
        const auto& a = *report.witness_hyperplane;
        std::vector<GFVector> section;
        for (const auto& x : points) {
            if (dot(F, a, x).value == 0) section.push_back(x);
        }
        if (report.route == CuttingRoute::span) {
            ok = ok && span_dim(F, section) + 1 < D.k();
        } else {
            ok = ok && section.empty();
        }
    }
    return ok;
}

std::optional<std::pair<GFVector, Element>> affine_blocking_gap(const VectorMultiset& D) {
    const auto& F = D.field();
    const auto points = D.distinct();
    for (const auto& a : projective_points(F, D.k())) {
        std::vector<bool> hit(F.q(), false);
        for (const auto& x : points) hit[dot(F, a, x).value] = true;
        for (std::uint32_t b = 0; b < F.q(); ++b) {
            if (!hit[b]) return std::make_pair(a, Element{b});
        }
    }
    return std::nullopt;
}

}  // namespace mincode
