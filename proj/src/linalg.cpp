#include "mincode/linalg.hpp"

#include <algorithm>
#include <string>

#include "mincode/error.hpp"

namespace mincode {

GFVector::GFVector(std::initializer_list<std::uint32_t> values) {
    coords_.reserve(values.size());
    for (auto v : values) coords_.push_back(Element{v});
}

GFVector GFVector::unit(std::size_t length, std::size_t index) {
    GFVector v(length);
    v[index] = Element{1};
    return v;
}

bool GFVector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Element c) { return c.value == 0; });
}

std::vector<std::uint32_t> GFVector::values() const {
    std::vector<std::uint32_t> out;
    out.reserve(coords_.size());
    for (auto c : coords_) out.push_back(c.value);
    return out;
}

Element dot(const Field& F, std::span<const Element> v, std::span<const Element> w) noexcept {
    Element acc{0};
    for (std::size_t i = 0; i < v.size(); ++i) acc = F.add(acc, F.mul(v[i], w[i]));
    return acc;
}

Element dot(const Field& F, const GFVector& v, const GFVector& w) {
    if (v.size() != w.size()) {
        throw Error(Errc::length_mismatch,
                    "dot of lengths " + std::to_string(v.size()) + " and " + std::to_string(w.size()));
    }
    return dot(F, v.coords(), w.coords());
}

GFVector scale(const Field& F, Element a, const GFVector& v) {
    GFVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.mul(a, v[i]);
    return out;
}

GFVector add(const Field& F, const GFVector& v, const GFVector& w) {
    if (v.size() != w.size()) throw Error(Errc::length_mismatch, "vector addition");
    GFVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.add(v[i], w[i]);
    return out;
}

WeightSupport weight_support(const GFVector& v) {
    WeightSupport ws;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].value != 0) ws.support.push_back(i);
    }
    ws.weight = ws.support.size();
    return ws;
}

std::vector<std::size_t> row_reduce(const Field& F, std::vector<std::vector<Element>>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].value == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Element scale_by = F.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = F.mul(x, scale_by);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].value == 0) continue;
            const Element factor = F.neg(rows[r][col]);
            for (std::size_t c = col; c < width; ++c) {
                rows[r][c] = F.add(rows[r][c], F.mul(factor, rows[rank][c]));
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

std::size_t span_dim(const Field& F, std::span<const GFVector> vs) {
    if (vs.empty()) return 0;
    const std::size_t width = vs.front().size();
    std::vector<std::vector<Element>> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
        if (v.size() != width) throw Error(Errc::length_mismatch, "span_dim over mixed lengths");
        rows.emplace_back(v.coords().begin(), v.coords().end());
    }
    return row_reduce(F, rows, width).size();
}

std::vector<GFVector> null_space(const Field& F, std::span<const GFVector> rows_in, std::size_t width) {
    std::vector<std::vector<Element>> rows;
    for (const auto& v : rows_in) {
        if (v.size() != width) throw Error(Errc::length_mismatch, "null_space over mixed lengths");
        rows.emplace_back(v.coords().begin(), v.coords().end());
    }
    const auto pivots = row_reduce(F, rows, width);
    std::vector<bool> is_pivot(width, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<GFVector> basis;
    for (std::size_t free = 0; free < width; ++free) {
        if (is_pivot[free]) continue;
        GFVector x(width);
        x[free] = Element{1};
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F.neg(rows[r][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

GFVector proj_normalize(const Field& F, const GFVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].value != 0) {
            if (v[i].value == 1) return v;
            return scale(F, F.inv(v[i]), v);
        }
    }
    throw Error(Errc::zero_vector, "cannot normalize the zero vector");
}

std::uint64_t pack_gf2(const GFVector& v) noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < v.size() && i < 64; ++i) {
        if (v[i].value != 0) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::uint64_t space_size(std::uint32_t q, std::size_t k, std::uint64_t limit) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (size > limit / q) {
            throw Error(Errc::too_large, std::to_string(q) + "^" + std::to_string(k) + " exceeds the limit " +
                                             std::to_string(limit));
        }
        size *= q;
    }
    if (size > limit) throw Error(Errc::too_large, "space exceeds the limit " + std::to_string(limit));
    return size;
}

namespace {

// Odometer over GF(q)^k in lexicographic order.
bool next_vector(GFVector& v, std::uint32_t q) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i].value + 1 < q) {
            v[i].value += 1;
            return true;
        }
        v[i].value = 0;
    }
    return false;
}

}  // namespace

std::vector<GFVector> all_vectors(const Field& F, std::size_t k) {
    const auto total = space_size(F.q(), k, std::uint64_t{1} << 32);
    std::vector<GFVector> out;
    out.reserve(total);
    GFVector v(k);
    do {
        out.push_back(v);
    } while (next_vector(v, F.q()));
    return out;
}

std::vector<GFVector> projective_points(const Field& F, std::size_t k) {
    space_size(F.q(), k, std::uint64_t{1} << 32);
    std::vector<GFVector> out;
    GFVector v(k);
    while (next_vector(v, F.q())) {
        std::size_t lead = 0;
        while (v[lead].value == 0) ++lead;
        if (v[lead].value == 1) out.push_back(v);
    }
    return out;
}

VectorMultiset VectorMultiset::from_vectors(Field field, std::size_t k, std::vector<GFVector> vectors,
                                            ZeroPolicy zeros) {
    VectorMultiset D(std::move(field), k);
    for (const auto& v : vectors) {
        if (v.size() != k) {
            throw Error(Errc::length_mismatch,
                        "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(k));
        }
        for (auto c : v.coords()) {
            if (!D.field_.contains(c)) throw Error(Errc::bad_range, "coordinate outside the field");
        }
        if (zeros == ZeroPolicy::reject && v.is_zero()) {
            throw Error(Errc::zero_vector, "defining multisets exclude the zero vector");
        }
    }
    std::sort(vectors.begin(), vectors.end());
    for (auto& v : vectors) {
        if (!D.entries_.empty() && D.entries_.back().vector == v) {
            ++D.entries_.back().multiplicity;
        } else {
            D.entries_.push_back(Entry{std::move(v), 1});
        }
    }
    D.size_ = 0;
    for (const auto& e : D.entries_) D.size_ += e.multiplicity;
    return D;
}

bool VectorMultiset::contains_zero() const noexcept {
    return !entries_.empty() && entries_.front().vector.is_zero();
}

bool VectorMultiset::contains(const GFVector& v) const { return multiplicity(v) > 0; }

std::size_t VectorMultiset::multiplicity(const GFVector& v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, const GFVector& x) { return e.vector < x; });
    return (it != entries_.end() && it->vector == v) ? it->multiplicity : 0;
}

std::vector<GFVector> VectorMultiset::expanded() const {
    std::vector<GFVector> out;
    out.reserve(size_);
    for (const auto& e : entries_) {
        for (std::size_t i = 0; i < e.multiplicity; ++i) out.push_back(e.vector);
    }
    return out;
}

std::vector<GFVector> VectorMultiset::distinct() const {
    std::vector<GFVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.vector);
    return out;
}

VectorMultiset project_multiset(const VectorMultiset& D) {
    std::vector<GFVector> points;
    points.reserve(D.entries().size());
    for (const auto& e : D.entries()) {
        if (e.vector.is_zero()) continue;
        points.push_back(proj_normalize(D.field(), e.vector));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return VectorMultiset::from_vectors(D.field(), D.k(), std::move(points));
}

bool is_projective_set(const VectorMultiset& D) {
    if (D.contains_zero()) return false;
    return project_multiset(D).size() == D.size();
}

}  // namespace mincode
