#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "mincode/report.hpp"

using namespace mincode;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(const std::string& args) {
    const std::string command = std::string(MINCODE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("mincode_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("construct writes canonical defining-set files") {
    const auto path = temp_file("monomial.json");
    auto r = run("construct --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":3})") + " --out " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("size 56") != std::string::npos);
    const auto j = read_json_file(path);
    CHECK(j.at("vectors").size() == 56);

    r = run("analyze --in " + path.string());
    CHECK(r.status == 0);
    const auto report = report_from_json(Json::parse(r.out));
    CHECK(report.n == 56);
    CHECK(report.minimal == std::optional<bool>(true));
    std::filesystem::remove(path);

    r = run("construct --spec " +
            quote(R"({"family":"lift","inner":[{"family":"weight_le","q":3,"k":6,"h":2},{"family":"weight_le","q":3,"k":6,"h":2}]})"));
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out).at("vectors").size() == 144);

    r = run("construct --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":2})"));
    CHECK(r.status == 1);
}

TEST_CASE("analyze reports and exit codes") {
    auto r = run("analyze --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":3})"));
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("schema") == "mincode/1");
    CHECK(j.at("w_min") == 30);
    CHECK(j.at("w_max") == 42);
    CHECK(j.at("minimal") == true);
    CHECK(j.at("minimality").at("agree") == true);

    r = run("analyze --spec " + quote(R"({"family":"hyperplane_union","q":3,"k":4,"S":[[1,0,0,0],[0,1,0,0]]})"));
    REQUIRE(r.status == 0);
    j = Json::parse(r.out);
    CHECK(j.at("minimal") == false);
    CHECK_FALSE(j.at("minimality").at("exhaustive").at("witness").is_null());

    r = run("analyze --spec " + quote(R"({"family":"monomial_plus_sum","q":4,"k":4,"h":3})") + " --checks weights");
    REQUIRE(r.status == 0);
    j = Json::parse(r.out);
    CHECK(j.at("n") == 171);
    CHECK(j.at("w_min") == 108);
    CHECK_FALSE(j.contains("minimality"));

    CHECK(run("analyze --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":3})") + " --max-space 80").status == 1);
    CHECK(run("analyze").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("analyze --in /nonexistent.json").status == 1);
    CHECK(run("analyze --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":3})") + " --checks nope").status == 1);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const auto spec = quote(R"({"family":"monomial","q":4,"k":4,"h":3})");
    const auto a = run("analyze --spec " + spec + " --threads 1");
    const auto b = run("analyze --spec " + spec + " --threads 3");
    const auto c = run("analyze --spec " + spec);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("verify, audit, explore") {
    auto r = run("verify --spec " +
                 quote(R"({"family":"lift","inner":[{"family":"scaled_basis","q":2,"k":4},{"family":"weight_ge","q":2,"k":3,"h":1}]})"));
    CHECK(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("n") == 11);
    CHECK(j.at("w_min") == 4);
    CHECK(j.at("bounds").at("distance_tight") == true);

    r = run("audit --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":3})"));
    CHECK(r.status == 0);
    j = Json::parse(r.out);
    CHECK(j.at("bounds").at("all_ok") == true);

    r = run("explore --spec " + quote(R"({"family":"monomial","q":2,"k":5,"h":3})") + " --param h --from 3 --to 5");
    CHECK(r.status == 0);
    j = Json::parse(r.out);
    CHECK(j.at("rows").size() == 3);

    r = run("analyze --text --spec " + quote(R"({"family":"monomial","q":3,"k":4,"h":3})"));
    CHECK(r.status == 0);
    CHECK(r.out.find("1+6z^30+8z^36+54z^38+12z^42") != std::string::npos);
}

TEST_CASE("reproduce") {
    auto r = run("reproduce");
    CHECK(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("passed") == 6);

    r = run("reproduce --shift-monomial-table 1");
    CHECK(r.status == 2);
    j = Json::parse(r.out);
    CHECK(j.at("passed") == 4);
    CHECK(j.at("rows").at(0).at("pass") == false);
    CHECK(j.at("rows").at(1).at("pass") == false);
}
