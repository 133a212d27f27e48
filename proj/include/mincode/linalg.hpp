#pragma once

// Vectors over GF(q), vector multisets, and the Gaussian elimination that the rest of
// the library leans on. The inner product is the standard one, sum v_i w_i.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mincode/gf.hpp"

namespace mincode {

class GFVector {
public:
    GFVector() = default;
    explicit GFVector(std::size_t length) : coords_(length) {}
    explicit GFVector(std::vector<Element> coords) : coords_(std::move(coords)) {}
    GFVector(std::initializer_list<std::uint32_t> values);

    static GFVector unit(std::size_t length, std::size_t index);

    std::size_t size() const noexcept { return coords_.size(); }
    Element operator[](std::size_t i) const noexcept { return coords_[i]; }
    Element& operator[](std::size_t i) noexcept { return coords_[i]; }
    std::span<const Element> coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;

    /// Encoded coordinate values, e.g. [0,2,0,1].
    std::vector<std::uint32_t> values() const;

    friend auto operator<=>(const GFVector&, const GFVector&) = default;
    friend bool operator==(const GFVector&, const GFVector&) = default;

private:
    std::vector<Element> coords_;
};

struct WeightSupport {
    std::size_t weight = 0;
    std::vector<std::size_t> support;
};

/// Throws length_mismatch.
Element dot(const Field& F, const GFVector& v, const GFVector& w);
Element dot(const Field& F, std::span<const Element> v, std::span<const Element> w) noexcept;

GFVector scale(const Field& F, Element a, const GFVector& v);
GFVector add(const Field& F, const GFVector& v, const GFVector& w);

WeightSupport weight_support(const GFVector& v);

/// Rank of the given vectors; 0 for an empty collection.
std::size_t span_dim(const Field& F, std::span<const GFVector> vs);

/// Row-reduces `rows` (each of length `width`) in place to reduced echelon form and
/// returns the pivot columns. Zero rows are dropped.
std::vector<std::size_t> row_reduce(const Field& F, std::vector<std::vector<Element>>& rows, std::size_t width);

/// Basis of {x : <r, x> = 0 for every row r}.
std::vector<GFVector> null_space(const Field& F, std::span<const GFVector> rows, std::size_t width);

/// Scales v so that its first nonzero coordinate is 1. Throws zero_vector.
GFVector proj_normalize(const Field& F, const GFVector& v);

/// Packs a GF(2) vector (at most 64 coordinates) into a bit mask, coordinate i at bit i.
std::uint64_t pack_gf2(const GFVector& v) noexcept;

/// q^k, throwing too_large if it exceeds `limit`.
std::uint64_t space_size(std::uint32_t q, std::size_t k, std::uint64_t limit);

/// Every vector of GF(q)^k in lexicographic order (first coordinate most significant).
std::vector<GFVector> all_vectors(const Field& F, std::size_t k);

/// Leading-one representatives of all (q^k - 1)/(q - 1) points of PG(k-1, q),
/// in lexicographic order.
std::vector<GFVector> projective_points(const Field& F, std::size_t k);

enum class ZeroPolicy { reject, allow };

/// Ordered multiset of vectors sharing one ambient space GF(q)^k. Entries are kept
/// sorted lexicographically with multiplicities merged. The zero vector is refused
/// unless the multiset is built with ZeroPolicy::allow, which only affine point sets
/// awaiting a lift use.
class VectorMultiset {
public:
    struct Entry {
        GFVector vector;
        std::size_t multiplicity = 1;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    VectorMultiset(Field field, std::size_t k) : field_(std::move(field)), k_(k) {}

    /// Throws length_mismatch, zero_vector.
    static VectorMultiset from_vectors(Field field, std::size_t k, std::vector<GFVector> vectors,
                                       ZeroPolicy zeros = ZeroPolicy::reject);

    const Field& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    /// Count with multiplicity.
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool contains_zero() const noexcept;
    bool contains(const GFVector& v) const;
    std::size_t multiplicity(const GFVector& v) const;

    /// Every vector with multiplicity, in canonical order.
    std::vector<GFVector> expanded() const;
    /// Distinct vectors in canonical order.
    std::vector<GFVector> distinct() const;

    friend bool operator==(const VectorMultiset& a, const VectorMultiset& b) {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.entries_ == b.entries_;
    }

private:
    Field field_;
    std::size_t k_ = 0;
    std::vector<Entry> entries_;
    std::size_t size_ = 0;
};

/// The set of leading-one representatives of the points of D (multiplicity 1 each).
VectorMultiset project_multiset(const VectorMultiset& D);

/// D is projective iff its projection keeps every element.
bool is_projective_set(const VectorMultiset& D);

}  // namespace mincode
