#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SCHUBERT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(SCHUBERT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("poly") {
    auto r = run("--plain poly 321");
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2*x2 - x1^2*y1 - x1*x2*y1 - x1*x2*y2 + x1*y1^2 + x1*y1*y2 + x2*y1*y2 - y1^2*y2\n");
    CHECK(run("--plain poly 1").out == "1\n");
    CHECK(run("--plain poly 321 --eval all_x=1,all_y=-1").out == "8\n");
    CHECK(run("--plain poly 321 --single").out == "x1^2*x2\n");
    const auto j = nlohmann::json::parse(run("poly 213").out);
    CHECK(j["poly"] == "x1 - y1");
}

TEST_CASE("bsl") {
    CHECK(run("--plain bsl 321 --count").out == "8\n");
    CHECK(run("--plain bsl 4321 --count").out == "64\n");
    CHECK(run("--plain bsl 123 --count").out == "1\n");
    const auto j = nlohmann::json::parse(run("bsl 321 --list").out);
    CHECK(j["bsl"].size() == 8);
}

TEST_CASE("complex") {
    auto j = nlohmann::json::parse(run("complex 1423 --generic").out);
    CHECK(j["ranks"] == nlohmann::json::array({3, 6, 3}));
    CHECK(j["ddzero"] == true);
    CHECK(j["euler"] == 0);
    j = nlohmann::json::parse(run("complex 2413 --identity --homology").out);
    CHECK(j["homology"] == nlohmann::json::array({0, 0, 0, 0}));
    j = nlohmann::json::parse(run("complex 2413 --matrix " + data("point2413.json") + " --homology --field p").out);
    CHECK(j["homology"][0] == 1);
    j = nlohmann::json::parse(run("complex 1423 --zero --homology --field p:2147483647").out);
    CHECK(j["homology"] == nlohmann::json::array({3, 6, 3}));
}

TEST_CASE("ideal") {
    auto j = nlohmann::json::parse(run("ideal 2413 --member " + data("point2413.json")).out);
    CHECK(j["member"] == true);
    CHECK(j["codimension"] == 3);
    CHECK(j["generators"].size() == 5);
}

TEST_CASE("verify") {
    const auto r = run("verify --suite paper-examples --seed 3");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["passed"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run("poly 3x1").code == 2);
    CHECK(run("poly 11").code == 2);
    CHECK(run("poly 321 --bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("complex 321").code == 2);
    CHECK(run("complex 321 --matrix " + data("bad.json")).code == 2);
    CHECK(run("complex 321 --matrix " + data("missing.json")).code == 2);
    CHECK(run("complex 321 --matrix " + data("small.json")).code == 3);
    CHECK(run("complex 321 --generic --homology").code == 3);
    CHECK(run("complex 21 --identity --field p:1000").code == 3);
    CHECK(run("poly 321 --eval x1=1").code == 3);
}
