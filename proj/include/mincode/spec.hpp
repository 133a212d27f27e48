#pragma once

// JSON handles for the construction families and the defining-set file format.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mincode/constructions.hpp"

namespace mincode {

using Json = nlohmann::ordered_json;

enum class Family {
    hyperplane_union,
    forms_product,
    monomial,
    monomial_plus_sum,
    weight_le,
    weight_ge,
    lift,
    scaled_basis,
};

std::string_view family_name(Family f) noexcept;

/// {"family": "monomial", "q": 3, "k": 4, "h": 3, "projective": false}, or
/// {"family": "lift", "inner": [upper, lower]}. S and forms hold coefficient lists.
struct ConstructionSpec {
    Family family = Family::monomial;
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t h = 0;
    std::vector<std::vector<std::uint32_t>> S;
    std::vector<std::vector<std::uint32_t>> forms;
    std::vector<ConstructionSpec> inner;
    bool projective = false;

    bool operator==(const ConstructionSpec&) const = default;
};

/// Throws parse_error or unsupported_family.
ConstructionSpec parse_spec(const Json& j);
ConstructionSpec parse_spec_text(const std::string& text);
Json to_json(const ConstructionSpec& spec);

/// What the closed forms and guarantees say about a generated set.
struct Prediction {
    std::optional<std::uint64_t> size;
    std::optional<WeightDistribution> weight_distribution;
    std::optional<bool> minimal;
    std::optional<std::uint64_t> min_distance;
    std::optional<LiftGuarantee> guarantee;

    bool operator==(const Prediction&) const = default;
};

struct Construction {
    VectorMultiset set;
    Prediction prediction;
    std::optional<std::size_t> span_dim;
};

/// Runs the generator named by `spec` and attaches its predictions.
Construction build_construction(const ConstructionSpec& spec);

Json field_to_json(const Field& F);
Field field_from_json(const Json& j);

/// {"field": {...}, "k": k, "vectors": [[...], ...]}, canonical order, one row per copy.
Json defining_set_to_json(const VectorMultiset& D);
/// Throws parse_error and the validation errors of VectorMultiset.
VectorMultiset defining_set_from_json(const Json& j);

/// Throws io_error or parse_error.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::string_view guarantee_name(LiftGuarantee g) noexcept;
LiftGuarantee guarantee_from_name(std::string_view name);

Json distribution_to_json(const WeightDistribution& wd);
WeightDistribution distribution_from_json(const Json& j);

}  // namespace mincode
