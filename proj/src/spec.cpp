#include "mincode/spec.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "mincode/error.hpp"

namespace mincode {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilies{{
    {Family::hyperplane_union, "hyperplane_union"},
    {Family::forms_product, "forms_product"},
    {Family::monomial, "monomial"},
    {Family::monomial_plus_sum, "monomial_plus_sum"},
    {Family::weight_le, "weight_le"},
    {Family::weight_ge, "weight_ge"},
    {Family::lift, "lift"},
    {Family::scaled_basis, "scaled_basis"},
}};

template <typename T>
T get_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(Errc::parse_error, std::string("missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad \"") + key + "\": " + e.what());
    }
}

std::vector<std::vector<std::uint32_t>> coefficient_lists(const Json& j, const char* key) {
    std::vector<std::vector<std::uint32_t>> out;
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw Error(Errc::parse_error, std::string("\"") + key + "\" must be an array of coefficient lists");
    }
    for (const auto& row : j.at(key)) {
        if (row.is_object()) {
            if (row.value("b", 0u) != 0) throw Error(Errc::bad_range, "product sets take linear forms only (b = 0)");
            out.push_back(get_field<std::vector<std::uint32_t>>(row, "a"));
        } else {
            try {
                out.push_back(row.get<std::vector<std::uint32_t>>());
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::parse_error, std::string("bad coefficient list: ") + e.what());
            }
        }
    }
    return out;
}

GFVector to_vector(const Field& F, const std::vector<std::uint32_t>& values) {
    std::vector<Element> coords;
    for (auto v : values) {
        if (v >= F.q()) throw Error(Errc::bad_range, "coefficient " + std::to_string(v) + " outside GF(q)");
        coords.push_back(Element{v});
    }
    return GFVector(std::move(coords));
}

bool scale_closed_family(Family f) { return f != Family::lift && f != Family::scaled_basis; }

WeightDistribution divide_weights(const WeightDistribution& wd, std::uint64_t factor) {
    std::map<std::size_t, std::uint64_t> rows;
    for (const auto& [w, a] : wd.counts()) rows[w / factor] += a;
    return WeightDistribution(std::move(rows));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    for (const auto& [family, name] : kFamilies) {
        if (family == f) return name;
    }
    return "unknown";
}

ConstructionSpec parse_spec(const Json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "construction spec must be a JSON object");
    const auto name = get_field<std::string>(j, "family");
    ConstructionSpec spec;
    bool known = false;
    for (const auto& [family, fname] : kFamilies) {
        if (fname == name) {
            spec.family = family;
            known = true;
        }
    }
    if (!known) throw Error(Errc::unsupported_family, "unknown family \"" + name + "\"");
    spec.projective = j.value("projective", false);

    if (spec.family == Family::lift) {
        if (!j.contains("inner") || !j.at("inner").is_array() || j.at("inner").size() != 2) {
            throw Error(Errc::parse_error, "lift needs \"inner\": [upper, lower]");
        }
        for (const auto& part : j.at("inner")) spec.inner.push_back(parse_spec(part));
        return spec;
    }
    spec.q = get_field<std::uint64_t>(j, "q");
    spec.k = get_field<std::size_t>(j, "k");
    switch (spec.family) {
        case Family::hyperplane_union:
            spec.S = coefficient_lists(j, "S");
            break;
        case Family::forms_product:
            spec.forms = coefficient_lists(j, "forms");
            break;
        case Family::monomial:
        case Family::monomial_plus_sum:
        case Family::weight_le:
            spec.h = get_field<std::size_t>(j, "h");
            break;
        case Family::weight_ge:
            spec.h = j.contains("l") ? get_field<std::size_t>(j, "l") : get_field<std::size_t>(j, "h");
            break;
        case Family::lift:
        case Family::scaled_basis:
            break;
    }
    return spec;
}

ConstructionSpec parse_spec_text(const std::string& text) {
    try {
        return parse_spec(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

Json to_json(const ConstructionSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    if (spec.family == Family::lift) {
        j["inner"] = Json::array();
        for (const auto& part : spec.inner) j["inner"].push_back(to_json(part));
    } else {
        j["q"] = spec.q;
        j["k"] = spec.k;
        if (spec.family == Family::hyperplane_union) j["S"] = spec.S;
        if (spec.family == Family::forms_product) j["forms"] = spec.forms;
        if (spec.family == Family::monomial || spec.family == Family::monomial_plus_sum ||
            spec.family == Family::weight_le || spec.family == Family::weight_ge) {
            j["h"] = spec.h;
        }
    }
    j["projective"] = spec.projective;
    return j;
}

Construction build_construction(const ConstructionSpec& spec) {
    if (spec.family == Family::lift) {
        if (spec.inner.size() != 2) throw Error(Errc::parse_error, "lift needs two inner specs");
        const auto upper = build_construction(spec.inner[0]);
        const auto lower = build_construction(spec.inner[1]);
        auto L = lift(upper.set, lower.set);
        Construction out{std::move(L.set), {}, std::nullopt};
        auto& p = out.prediction;
        if (upper.prediction.size && lower.prediction.size) p.size = *upper.prediction.size + *lower.prediction.size;
        p.minimal = L.predicted_minimal;
        p.guarantee = L.guarantee;
        if (spec.inner[0].family == Family::scaled_basis && L.lower_cutting) {
            // The lifted scaled basis meets the minimum distance bound with equality.
            p.min_distance = (out.set.field().q() - 1) * (out.set.k() - 1) + 1;
        }
        if (spec.projective) {
            out.set = project_multiset(out.set);
            p.size.reset();
            p.min_distance.reset();
        }
        return out;
    }

    const auto F = Field::of_order(spec.q);
    const auto q = spec.q;
    const auto k = spec.k;
    Construction out{VectorMultiset(F, k), {}, std::nullopt};
    auto& p = out.prediction;
    switch (spec.family) {
        case Family::hyperplane_union:
        case Family::forms_product: {
            std::vector<GFVector> S;
            for (const auto& row : spec.family == Family::hyperplane_union ? spec.S : spec.forms) {
                S.push_back(to_vector(F, row));
            }
            auto U = hyperplane_union(F, k, S);
            out.set = std::move(U.set);
            out.span_dim = U.span_dim;
            p.minimal = U.predicted_cutting;
            break;
        }
        case Family::monomial:
            out.set = monomial_zero_set(F, k, spec.h);
            out.span_dim = spec.h;
            p.size = monomial_zero_size(q, k, spec.h);
            p.weight_distribution = predicted_weight_distribution(TableFamily::monomial, q, k, spec.h);
            p.minimal = true;
            break;
        case Family::monomial_plus_sum:
            out.set = monomial_plus_sum_set(F, k, spec.h);
            out.span_dim = spec.h;
            p.size = monomial_plus_sum_size(q, k, spec.h);
            if (spec.h == 3) {
                p.weight_distribution = predicted_weight_distribution(TableFamily::monomial_plus_sum_h3, q, k, 3);
            }
            // The h + 1 hyperplanes span GF(q)^h inside the dual space.
            p.minimal = spec.h >= 3;
            break;
        case Family::weight_le:
            out.set = weight_range_set(F, k, WeightBound::at_most, spec.h);
            p.size = weight_range_size(q, k, WeightBound::at_most, spec.h);
            break;
        case Family::weight_ge:
            out.set = weight_range_set(F, k, WeightBound::at_least, spec.h);
            p.size = weight_range_size(q, k, WeightBound::at_least, spec.h);
            break;
        case Family::scaled_basis:
            out.set = scaled_basis_set(F, k);
            p.size = (k - 1) * (q - 1) + 1;
            break;
        case Family::lift:
            break;
    }

    if (spec.projective) {
        const auto scale_closed = scale_closed_family(spec.family);
        out.set = project_multiset(out.set);
        if (!scale_closed) {
            p.size.reset();
        } else if (p.size) {
            *p.size /= q - 1;
        }
        if (spec.family == Family::monomial) {
            p.weight_distribution = predicted_weight_distribution(TableFamily::monomial_projective, q, k, spec.h);
        } else if (p.weight_distribution) {
            p.weight_distribution = divide_weights(*p.weight_distribution, q - 1);
        }
    }
    return out;
}

Json field_to_json(const Field& F) {
    Json j;
    j["p"] = F.p();
    j["e"] = F.e();
    j["modulus"] = F.modulus();
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "\"field\" must be an object");
    const auto p = get_field<std::uint32_t>(j, "p");
    const auto e = j.contains("e") ? get_field<std::uint32_t>(j, "e") : 1u;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = get_field<std::vector<std::uint32_t>>(j, "modulus");
    return Field::make(p, e, modulus);
}

Json defining_set_to_json(const VectorMultiset& D) {
    Json j;
    j["field"] = field_to_json(D.field());
    j["k"] = D.k();
    j["vectors"] = Json::array();
    for (const auto& v : D.expanded()) j["vectors"].push_back(v.values());
    return j;
}

VectorMultiset defining_set_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "defining-set file must hold a JSON object");
    if (!j.contains("field")) throw Error(Errc::parse_error, "missing \"field\"");
    const auto F = field_from_json(j.at("field"));
    const auto k = get_field<std::size_t>(j, "k");
    std::vector<GFVector> vectors;
    for (const auto& row : get_field<std::vector<std::vector<std::uint32_t>>>(j, "vectors")) {
        vectors.push_back(to_vector(F, row));
    }
    return VectorMultiset::from_vectors(F, k, std::move(vectors));
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

std::string_view guarantee_name(LiftGuarantee g) noexcept {
    switch (g) {
        case LiftGuarantee::none:
            return "none";
        case LiftGuarantee::cutting_pair:
            return "cutting_pair";
        case LiftGuarantee::affine_blocking:
            return "affine_blocking";
    }
    return "none";
}

LiftGuarantee guarantee_from_name(std::string_view name) {
    for (auto g : {LiftGuarantee::none, LiftGuarantee::cutting_pair, LiftGuarantee::affine_blocking}) {
        if (guarantee_name(g) == name) return g;
    }
    throw Error(Errc::parse_error, "unknown lift guarantee \"" + std::string(name) + "\"");
}

Json distribution_to_json(const WeightDistribution& wd) {
    Json j = Json::object();
    for (const auto& [w, a] : wd.counts()) j[std::to_string(w)] = a;
    return j;
}

WeightDistribution distribution_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "weight distribution must be an object");
    std::map<std::size_t, std::uint64_t> rows;
    for (const auto& [w, a] : j.items()) {
        try {
            rows[std::stoull(w)] = a.get<std::uint64_t>();
        } catch (const std::exception&) {
            throw Error(Errc::parse_error, "bad weight distribution entry \"" + w + "\"");
        }
    }
    return WeightDistribution(std::move(rows));
}

}  // namespace mincode
