#pragma once

// Bounds on the parameters of minimal codes, checked against measured values.

#include <compare>
#include <cstdint>
#include <optional>

#include "mincode/code.hpp"

namespace mincode {

/// Σ_{i<k} ⌈d/q^i⌉, the least length of a q-ary [n, k, d] code.
std::uint64_t griesmer_lb(std::uint64_t q, std::size_t k, std::uint64_t d);

struct MinimalCodeBounds {
    std::uint64_t distance_lb = 0;
    std::uint64_t length_lb = 0;
};

/// distance_lb = (q-1)(k-1)+1 and the Griesmer length for that distance. k >= 2.
MinimalCodeBounds minimal_code_bounds(std::uint64_t q, std::size_t k);

/// Minimum size of an affine blocking set in GF(q)^m: m(q-1)+1.
std::uint64_t jamison_lb(std::uint64_t q, std::size_t m);

/// Nonnegative fraction in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;
};

/// One bound: `ok` is false only when the bound applies and the measured value violates it.
struct BoundCheck {
    std::uint64_t bound = 0;
    std::uint64_t measured = 0;
    bool applicable = false;
    bool ok = true;
    bool operator==(const BoundCheck&) const = default;
};

struct BoundAudit {
    BoundCheck griesmer;     // n >= griesmer_lb(q, dim, d)
    BoundCheck distance_lb;  // d >= (q-1)(dim-1)+1
    BoundCheck length_lb;    // n >= minimal_code_bounds(q, dim).length_lb
    BoundCheck wmax_ub;      // w_max <= n-dim+1
    BoundCheck fold_lb;      // fold >= dim-1
    BoundCheck dim_cap;      // dim <= floor(n/q)+1
    Rational ab_ratio;       // w_min / w_max
    Rational ab_threshold;   // (q-1) / q
    bool ab_condition = false;
    /// d meets distance_lb with equality.
    bool distance_tight = false;

    /// True when no applicable check failed.
    bool all_ok() const;
    bool operator==(const BoundAudit&) const = default;
};

/// Audits C against the bounds. The minimal-code bounds apply only when `minimal`;
/// fold_lb applies only when `fold` is known.
BoundAudit audit(const LinearCode& C, const WeightDistribution& wd, bool minimal, std::optional<std::uint64_t> fold);

}  // namespace mincode
