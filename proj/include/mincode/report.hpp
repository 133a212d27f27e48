#pragma once

// End-to-end analysis of a defining multiset: parameters, weight distribution,
// minimality by both methods, blocking and cutting properties, bound audit, and a
// comparison with whatever the construction predicts. Also the reproduction suite
// for the worked examples.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mincode/blocking.hpp"
#include "mincode/bounds.hpp"
#include "mincode/spec.hpp"

namespace mincode {

inline constexpr std::string_view kSchema = "mincode/1";

enum class Check { weights, minimality, blocking, bounds, predicted };

using CheckSet = std::set<Check>;

CheckSet all_checks();
/// Comma-separated names, e.g. "weights,minimality". Throws parse_error.
CheckSet parse_checks(std::string_view csv);

struct AnalysisOptions {
    CheckSet checks = all_checks();
    std::uint64_t space_limit = kDefaultSpaceLimit;
    std::uint64_t subspace_limit = kDefaultSubspaceLimit;
    Exec exec = Exec::parallel;
};

struct Verdict {
    bool minimal = true;
    std::optional<MinimalityWitness> witness;

    bool operator==(const Verdict& o) const;
};

struct MinimalitySection {
    Verdict exhaustive;
    Verdict cutting;
    bool agree = true;
    bool operator==(const MinimalitySection&) const = default;
};

struct BlockingSection {
    std::size_t s = 1;
    bool is_blocking = false;
    std::size_t fold = 0;
    std::vector<GFVector> witness_subspace;
    bool operator==(const BlockingSection&) const = default;
};

struct CuttingSection {
    bool is_cutting = true;
    CuttingRoute route = CuttingRoute::span;
    std::optional<GFVector> witness_hyperplane;
    std::optional<std::pair<GFVector, GFVector>> witness_pair;
    /// The verdict of the other route on the same set.
    bool routes_agree = true;
    bool operator==(const CuttingSection&) const = default;
};

struct PredictedSection {
    Prediction prediction;
    /// Name of each predicted quantity and whether the measurement matched it.
    std::vector<std::pair<std::string, bool>> matches;
    bool operator==(const PredictedSection&) const = default;
};

struct AnalysisReport {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::vector<std::uint32_t> modulus;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t dim = 0;
    bool projective = false;
    std::optional<WeightDistribution> weight_distribution;
    std::optional<bool> ab_condition;
    std::optional<bool> minimal;
    /// "exhaustive", "cutting" or "both".
    std::optional<std::string> method;
    std::optional<MinimalitySection> minimality;
    /// Computed on the projection of the defining set, re-expressed in its span.
    std::optional<BlockingSection> blocking;
    std::optional<CuttingSection> cutting;
    std::optional<BoundAudit> bounds;
    std::optional<PredictedSection> predicted;
    std::vector<std::string> contradictions;

    bool operator==(const AnalysisReport&) const = default;
};

/// Runs the requested checks. Guard violations throw; mathematical inconsistencies
/// are collected in `contradictions`.
AnalysisReport analyze(const VectorMultiset& D, const AnalysisOptions& options = {},
                       const std::optional<Prediction>& prediction = std::nullopt);

Json to_json(const AnalysisReport& r);
/// Throws parse_error.
AnalysisReport report_from_json(const Json& j);
/// Short human-readable summary.
std::string to_text(const AnalysisReport& r);

struct ReproductionRow {
    std::string name;
    std::string expected;
    std::string measured;
    bool pass = false;
    double seconds = 0.0;
};

struct ReproductionOptions {
    /// Added to every closed-form weight of the monomial-set table before comparison.
    /// Zero in normal runs; nonzero values check that the comparison catches a broken table.
    std::int64_t monomial_table_shift = 0;
    Exec exec = Exec::parallel;
};

/// The six worked examples: two monomial sets, two sum-augmented sets, two lifts.
std::vector<ReproductionRow> reproduce(const ReproductionOptions& options = {});

}  // namespace mincode
