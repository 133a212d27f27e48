// Command-line front end for the mincode library.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mincode/error.hpp"
#include "mincode/kernels.hpp"
#include "mincode/report.hpp"

namespace {

using namespace mincode;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kContradiction = 2;

struct Common {
    std::string spec;
    std::string in;
    std::string out;
    std::string checks;
    std::uint64_t max_space = kDefaultSpaceLimit;
    bool text = false;
    int threads = 0;
};

struct Source {
    VectorMultiset set;
    std::optional<Prediction> prediction;
    std::optional<std::size_t> span_dim;
};

Source load_source(const Common& c) {
    if (c.spec.empty() == c.in.empty()) throw CLI::ValidationError("exactly one of --spec or --in is required");
    if (!c.spec.empty()) {
        auto built = build_construction(parse_spec_text(c.spec));
        return Source{std::move(built.set), std::move(built.prediction), built.span_dim};
    }
    return Source{defining_set_from_json(read_json_file(c.in)), std::nullopt, std::nullopt};
}

void emit(const Common& c, const std::string& body) {
    if (c.out.empty()) {
        std::cout << body;
    } else {
        write_text_file(c.out, body);
    }
}

AnalysisOptions options_for(const Common& c, CheckSet checks) {
    AnalysisOptions o;
    o.checks = std::move(checks);
    o.space_limit = c.max_space;
    return o;
}

int run_construct(const Common& c) {
    if (c.spec.empty()) throw CLI::ValidationError("construct needs --spec");
    const auto built = build_construction(parse_spec_text(c.spec));
    const auto text = defining_set_to_json(built.set).dump() + "\n";
    const auto distinct = built.set.distinct();
    const auto dim = span_dim(built.set.field(), distinct);
    auto& summary = c.out.empty() ? std::cerr : std::cout;
    emit(c, text);
    summary << "size " << built.set.size() << ", span dimension " << dim << "\n";
    return kOk;
}

int run_analyze(const Common& c, CheckSet checks) {
    const auto source = load_source(c);
    const auto report = analyze(source.set, options_for(c, std::move(checks)), source.prediction);
    emit(c, c.text ? to_text(report) : to_json(report).dump(2) + "\n");
    return report.contradictions.empty() ? kOk : kContradiction;
}

int run_verify(const Common& c) {
    if (c.spec.empty()) throw CLI::ValidationError("verify needs --spec");
    const auto source = load_source(c);
    const auto report = analyze(source.set, options_for(c, all_checks()), source.prediction);
    emit(c, c.text ? to_text(report) : to_json(report).dump(2) + "\n");
    return report.contradictions.empty() ? kOk : kContradiction;
}

int run_audit(const Common& c) {
    const auto source = load_source(c);
    const auto report =
        analyze(source.set, options_for(c, {Check::weights, Check::minimality, Check::bounds}), std::nullopt);
    if (c.text) {
        emit(c, to_text(report));
    } else {
        const auto j = to_json(report);
        Json out;
        out["schema"] = kSchema;
        for (const char* key : {"n", "dim", "w_min", "w_max", "minimal", "bounds", "contradictions"}) out[key] = j.at(key);
        emit(c, out.dump(2) + "\n");
    }
    return report.contradictions.empty() ? kOk : kContradiction;
}

int run_reproduce(const Common& c, std::int64_t shift) {
    ReproductionOptions o;
    o.monomial_table_shift = shift;
    const auto rows = reproduce(o);
    std::size_t passed = 0;
    for (const auto& r : rows) passed += r.pass ? 1 : 0;
    if (c.text) {
        std::ostringstream out;
        for (const auto& r : rows) {
            out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(32) << r.name << std::fixed
                << std::setprecision(3) << r.seconds << "s\n"
                << "  expected " << r.expected << "\n"
                << "  measured " << r.measured << "\n";
        }
        out << passed << "/" << rows.size() << " pass\n";
        emit(c, out.str());
    } else {
        Json j;
        j["schema"] = kSchema;
        j["rows"] = Json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"name", r.name}, {"expected", r.expected}, {"measured", r.measured}, {"pass", r.pass}});
        }
        j["passed"] = passed;
        j["total"] = rows.size();
        emit(c, j.dump(2) + "\n");
    }
    return passed == rows.size() ? kOk : kContradiction;
}

int run_explore(const Common& c, const std::string& param, std::int64_t from, std::int64_t to) {
    if (c.spec.empty()) throw CLI::ValidationError("explore needs --spec");
    auto base = Json::parse(c.spec);
    Json rows = Json::array();
    int status = kOk;
    for (auto value = from; value <= to; ++value) {
        base[param] = value;
        const auto built = build_construction(parse_spec(base));
        const auto report = analyze(built.set, options_for(c, {Check::weights, Check::minimality}), std::nullopt);
        if (!report.contradictions.empty()) status = kContradiction;
        Json row = to_json(report);
        row["spec"] = base;
        rows.push_back(row);
    }
    if (c.text) {
        std::ostringstream out;
        for (const auto& row : rows) {
            out << param << "=" << row["spec"][param] << " [" << row["n"] << "," << row["dim"] << ","
                << row["w_min"] << "] w_max=" << row["w_max"] << " minimal=" << row["minimal"] << " A="
                << row["weight_distribution"].dump() << "\n";
        }
        emit(c, out.str());
    } else {
        emit(c, Json{{"schema", kSchema}, {"rows", rows}}.dump(2) + "\n");
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal linear codes from defining multisets"};
    app.require_subcommand(1);
    Common c;
    std::string param = "h";
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::int64_t shift = 0;

    auto add_common = [&](CLI::App* sub, bool input) {
        if (input) {
            sub->add_option("--spec", c.spec, "Construction spec as inline JSON");
            sub->add_option("--in", c.in, "Defining-set JSON file");
        }
        sub->add_option("--out", c.out, "Write output to this file instead of stdout");
        sub->add_option("--max-space", c.max_space, "Largest q^k to enumerate");
        sub->add_option("--threads", c.threads, "Worker threads (results do not depend on it)");
        auto* json = sub->add_flag("--json", "JSON output (default)");
        sub->add_flag("--text", c.text, "Human-readable output")->excludes(json);
    };

    auto* construct = app.add_subcommand("construct", "Materialize a defining set");
    construct->add_option("--spec", c.spec, "Construction spec as inline JSON")->required();
    construct->add_option("--out", c.out, "Defining-set file to write");

    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
    add_common(analyze_cmd, true);
    analyze_cmd->add_option("--checks", c.checks, "Subset of weights,minimality,blocking,bounds,predicted");

    auto* verify = app.add_subcommand("verify", "Compare a construction with its predicted properties");
    add_common(verify, true);

    auto* audit_cmd = app.add_subcommand("audit", "Bound audit");
    add_common(audit_cmd, true);

    auto* repro = app.add_subcommand("reproduce", "Recompute the worked examples");
    add_common(repro, false);
    repro->add_option("--shift-monomial-table", shift, "Perturb the monomial closed form (self-test)");

    auto* explore = app.add_subcommand("explore", "Tabulate a family over a parameter range");
    add_common(explore, true);
    explore->add_option("--param", param, "Spec key to vary");
    explore->add_option("--from", from, "First value")->required();
    explore->add_option("--to", to, "Last value")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (c.threads > 0) kernels::parallel::set_threads(c.threads);
        if (*construct) return run_construct(c);
        if (*analyze_cmd) return run_analyze(c, c.checks.empty() ? all_checks() : parse_checks(c.checks));
        if (*verify) return run_verify(c);
        if (*audit_cmd) return run_audit(c);
        if (*repro) return run_reproduce(c, shift);
        if (*explore) return run_explore(c, param, from, to);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
