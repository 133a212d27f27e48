#pragma once

// Blocking and cutting properties of vector multisets, and the minimality decision
// that goes through them: a code is minimal exactly when the projection of its
// defining multiset is a cutting blocking set.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mincode/code.hpp"
#include "mincode/linalg.hpp"

namespace mincode {

/// Default cap on the number of subspaces a scan may visit.
inline constexpr std::uint64_t kDefaultSubspaceLimit = 1'000'000;

struct BlockingReport {
    std::size_t s = 1;
    bool is_blocking = false;
    /// Minimum of |D* ∩ W| over codimension-s subspaces W, counted with multiplicity.
    std::size_t fold = 0;
    /// s independent dual vectors whose common kernel attains the minimum.
    std::vector<GFVector> witness_subspace;
};

enum class CuttingRoute { definition, span };

struct CuttingReport {
    bool is_cutting = true;
    CuttingRoute route = CuttingRoute::definition;
    /// Definition route: H_first ∩ D lies inside H_second with <first> != <second>.
    std::optional<std::pair<GFVector, GFVector>> witness_pair;
    /// Span route: dim Span(H_a ∩ D) < k - 1. Definition route: a hyperplane missing D*.
    std::optional<GFVector> witness_hyperplane;
};

/// Minimum intersection size of D* with the codimension-s subspaces.
/// Throws bad_range, too_large (s = 1) or too_many_subspaces (s >= 2).
BlockingReport fold_multiplicity(const VectorMultiset& D, std::size_t s,
                                 std::uint64_t subspace_limit = kDefaultSubspaceLimit, Exec exec = Exec::parallel);

/// Cutting check straight from the definition: no hyperplane section of D lies in
/// another hyperplane, and D meets every hyperplane.
CuttingReport is_cutting_definition(const VectorMultiset& D, std::uint64_t subspace_limit = kDefaultSubspaceLimit,
                                    Exec exec = Exec::parallel);

/// Cutting check for projective sets: every hyperplane section spans the hyperplane.
/// Throws not_projective, bad_range (k < 2), too_many_subspaces.
CuttingReport is_cutting_span(const VectorMultiset& D, std::uint64_t subspace_limit = kDefaultSubspaceLimit,
                              Exec exec = Exec::parallel);

/// Cutting verdict for an arbitrary multiset: projects first, then uses the span route
/// (the definition route when k < 2).
bool is_cutting(const VectorMultiset& D, std::uint64_t subspace_limit = kDefaultSubspaceLimit,
                Exec exec = Exec::parallel);

/// Minimality through the cutting characterization. Codes of dimension 1 are minimal.
MinimalityReport is_minimal_cutting(const LinearCode& C, std::uint64_t subspace_limit = kDefaultSubspaceLimit,
                                    Exec exec = Exec::parallel);

/// Recomputes a cutting witness against D.
bool verify_cutting_witness(const VectorMultiset& D, const CuttingReport& report);

/// theta_s = (q^{s+1} - 1)/(q - 1).
std::uint64_t theta(std::size_t s, std::uint64_t q);

/// Number of s-dimensional subspaces of GF(q)^k.
std::uint64_t gaussian_binomial(std::size_t k, std::size_t s, std::uint64_t q);

/// Reduced echelon bases of every s-dimensional subspace of GF(q)^k.
std::vector<std::vector<GFVector>> echelon_subspaces(const Field& F, std::size_t k, std::size_t s,
                                                     std::uint64_t limit = kDefaultSubspaceLimit);

/// First affine hyperplane <a, x> = b that misses D, if any. D may contain the zero vector.
std::optional<std::pair<GFVector, Element>> affine_blocking_gap(const VectorMultiset& D);

inline bool is_affine_blocking(const VectorMultiset& D) { return !affine_blocking_gap(D).has_value(); }

}  // namespace mincode
