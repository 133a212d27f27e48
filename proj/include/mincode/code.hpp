#pragma once

// Linear codes C_D = { (<v, g_0>, ..., <v, g_{n-1}>) : v in GF(q)^k } built from a
// defining multiset D = {{g_0, ..., g_{n-1}}}.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mincode/linalg.hpp"

namespace mincode {

/// Default cap on q^k for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultSpaceLimit = std::uint64_t{1} << 24;

enum class Exec { serial, parallel };

/// A_w for w > 0; A_0 = 1 is implicit.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::map<std::size_t, std::uint64_t> counts);

    const std::map<std::size_t, std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t operator[](std::size_t w) const;
    /// Number of codewords including the zero word.
    std::uint64_t total() const;
    std::size_t w_min() const;
    std::size_t w_max() const;
    bool empty() const noexcept { return counts_.empty(); }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::map<std::size_t, std::uint64_t> counts_;
};

enum class Method { exhaustive, cutting };

/// Messages whose codewords satisfy Supp(c_inner) inside Supp(c_outer) while the two
/// codewords are linearly independent. Both are ambient vectors in GF(q)^k.
struct MinimalityWitness {
    GFVector outer;
    GFVector inner;
};

struct MinimalityReport {
    bool is_minimal = true;
    std::optional<MinimalityWitness> witness;
    Method method = Method::exhaustive;
};

class LinearCode {
public:
    /// Throws empty_defining_set or zero_vector.
    static LinearCode build(VectorMultiset D);

    const VectorMultiset& defining_set() const noexcept { return D_; }
    const Field& field() const noexcept { return D_.field(); }
    std::size_t n() const noexcept { return columns_.size(); }
    std::size_t k_ambient() const noexcept { return D_.k(); }
    std::size_t dim() const noexcept { return pivots_.size(); }

    /// Columns g_0..g_{n-1} in canonical order, repeated per multiplicity.
    const std::vector<GFVector>& columns() const noexcept { return columns_; }

    /// The same columns restricted to the pivot coordinates of Span(D). This
    /// restriction is injective on Span(D), so messages in GF(q)^dim index the
    /// codewords bijectively.
    const std::vector<GFVector>& reduced_columns() const noexcept { return reduced_; }
    const std::vector<std::size_t>& pivot_coordinates() const noexcept { return pivots_; }

    /// Ambient message producing the same codeword as a reduced message.
    GFVector embed_message(const GFVector& reduced) const;

private:
    explicit LinearCode(VectorMultiset D) : D_(std::move(D)) {}

    VectorMultiset D_;
    std::vector<GFVector> columns_;
    std::vector<GFVector> reduced_;
    std::vector<std::size_t> pivots_;
};

inline LinearCode build_code(VectorMultiset D) { return LinearCode::build(std::move(D)); }

/// Throws dimension_mismatch.
GFVector codeword_of(const GFVector& v, const LinearCode& C);

/// Exact A_w over the q^dim codewords. Throws too_large when q^k exceeds `space_limit`.
WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t space_limit = kDefaultSpaceLimit,
                                       Exec exec = Exec::parallel);

/// Pairwise support comparison over projective message representatives.
MinimalityReport is_minimal_exhaustive(const LinearCode& C, std::uint64_t space_limit = kDefaultSpaceLimit,
                                       Exec exec = Exec::parallel);

/// Recomputes both codewords and checks containment and linear independence.
bool verify_witness(const LinearCode& C, const MinimalityWitness& w);

/// q * w_min > (q - 1) * w_max.
bool ab_condition(std::uint32_t q, const WeightDistribution& wd);

bool is_projective(const LinearCode& C);

}  // namespace mincode
