#pragma once

// Defining-set families for minimal codes: unions of hyperplanes (including the
// monomial and monomial-plus-sum zero sets), weight-range sets, lifts into one more
// dimension, and the closed-form weight distributions and counting identities that
// accompany them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mincode/code.hpp"
#include "mincode/linalg.hpp"

namespace mincode {

/// The form x -> <a, x> - b. Linear when b = 0.
struct LinearForm {
    GFVector a;
    Element b{0};
};

struct HyperplaneUnion {
    VectorMultiset set;
    std::size_t span_dim = 0;
    /// Unions of hyperplanes H_a, a in S, are cutting iff dim Span(S) >= 3.
    bool predicted_cutting = false;
};

/// All nonzero x in GF(q)^k satisfying `keep`, as a multiplicity-one multiset.
VectorMultiset defining_set_where(const Field& F, std::size_t k, const std::function<bool(const GFVector&)>& keep);

/// (∪_{a in S} H_a) \ {0}. Throws empty_s, zero_vector, length_mismatch, covers_whole_space.
HyperplaneUnion hyperplane_union(const Field& F, std::size_t k, std::span<const GFVector> S);

/// {x != 0 : prod <a_i, x> = 0}; the same set as hyperplane_union of the a_i.
/// Throws bad_range for a form with b != 0.
HyperplaneUnion forms_product_set(const Field& F, std::size_t k, std::span<const LinearForm> forms);

/// {x != 0 : x_1 ... x_h = 0}, 3 <= h <= k.
VectorMultiset monomial_zero_set(const Field& F, std::size_t k, std::size_t h);

/// {x != 0 : x_1 ... x_h (x_1 + ... + x_h) = 0}, 2 <= h <= k.
VectorMultiset monomial_plus_sum_set(const Field& F, std::size_t k, std::size_t h);

enum class WeightBound { at_most, at_least };

/// at_most: 1 <= wt(x) <= h with 2 <= h <= k. at_least: wt(x) >= h with 1 <= h <= k - 1.
VectorMultiset weight_range_set(const Field& F, std::size_t k, WeightBound mode, std::size_t h);

/// {a e_i : a in GF(q), 1 <= i <= k - 1} in GF(q)^{k-1}, zero included once. k >= 3.
VectorMultiset scaled_basis_set(const Field& F, std::size_t k);

bool is_scale_closed(const VectorMultiset& D);

/// {a x : a in GF(q)*, x in D}, multiplicity one.
VectorMultiset scale_closure(const VectorMultiset& D);

enum class LiftGuarantee {
    none,
    /// Both parts cutting and the upper part closed under nonzero scaling.
    cutting_pair,
    /// Lower part cutting; minimal iff the upper part is an affine blocking set.
    affine_blocking,
};

struct Lift {
    VectorMultiset set;
    LiftGuarantee guarantee = LiftGuarantee::none;
    bool upper_cutting = false;
    bool upper_scale_closed = false;
    bool upper_affine_blocking = false;
    bool lower_cutting = false;
    /// Known whenever the lower part is cutting and the upper part nonempty.
    std::optional<bool> predicted_minimal{};
};

/// {(x, 1) : x in upper} ∪ {(x, 0) : x in lower} in GF(q)^{k+1}. Throws ambient_mismatch.
Lift lift(const VectorMultiset& upper, const VectorMultiset& lower);

enum class TableFamily { monomial, monomial_projective, monomial_plus_sum_h3 };

/// Closed-form weight distributions of the monomial zero set, its projection, and
/// the h = 3 monomial-plus-sum set. Colliding weights are merged.
WeightDistribution predicted_weight_distribution(TableFamily family, std::uint64_t q, std::size_t k,
                                                 std::size_t h = 3);

/// (q^h - (q-1)^h) q^{k-h} - 1.
std::uint64_t monomial_zero_size(std::uint64_t q, std::size_t k, std::size_t h);
/// q^{k-h-1} (q^{h+1} - (q-1)^{h+1} + (-1)^h (q-1)) - 1.
std::uint64_t monomial_plus_sum_size(std::uint64_t q, std::size_t k, std::size_t h);
std::uint64_t weight_range_size(std::uint64_t q, std::size_t k, WeightBound mode, std::size_t h);

/// Solutions of x_j = 0 (j in T), <a, x> = 0 in GF(q)^k: q^{k-t} if Supp(a) ⊆ T,
/// q^{k-t-1} otherwise. T holds 0-based indices. An empty T yields q^{k-1} for a != 0.
std::uint64_t count_N_aT(const GFVector& a, std::span<const std::size_t> T, std::uint64_t q, std::size_t k);

/// N_{h,b}: solutions of x_1 + ... + x_h = b with every x_i nonzero. Only b = 0 versus
/// b != 0 matters. h >= 2.
std::uint64_t count_toric(std::size_t h, Element b, std::uint64_t q);

}  // namespace mincode
