#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hmsphere/cli.hpp"

using namespace hmsphere::cli;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "hmsphere");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

}  // namespace

TEST_CASE("period json") {
    const Outcome o = invoke({"period", "--n", "3", "--m", "2", "--hm", "1", "--c", "3"});
    REQUIRE(o.code == kExitOk);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(std::abs(j["result"]["value"].get<double>() - 2.6217618326027037043) <= 1e-11);
    CHECK(j["inputs"]["n"] == 3);
    CHECK(j["version"] == version());
    CHECK(j.contains("err_estimate"));
    CHECK(j["nodes"].get<int>() >= 16);
}

TEST_CASE("identical inputs give byte-identical output") {
    const std::vector<std::string> args{"solve", "--n", "3", "--m", "2", "--hm", "1", "--k", "3"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(std::abs(j["result"]["p_achieved"].get<double>() - 2 * std::numbers::pi / 3) <= 1e-10);

    const std::vector<std::string> v{"verify", "--n", "4", "--m", "2", "--seed", "3", "--format", "json"};
    CHECK(invoke(v).out == invoke(v).out);
}

TEST_CASE("profile csv round trip") {
    const Outcome o = invoke({"profile", "--n", "3", "--m", "2", "--hm", "1", "--k", "3", "--samples", "32"});
    REQUIRE(o.code == kExitOk);
    std::stringstream ss(o.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "s,g,r,lambda,theta");
    std::vector<std::vector<double>> rows;
    while (std::getline(ss, line)) {
        std::vector<double> row;
        for (const auto& f : split(line, ',')) row.push_back(std::stod(f));
        CHECK(row.size() == 5);
        rows.push_back(row);
    }
    REQUIRE(rows.size() == 2 * 3 * 32 + 1);
    CHECK(rows.front()[4] == 0.0);
    CHECK(std::abs(rows.back()[4] - 2 * std::numbers::pi) <= 1e-6);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][0] > rows[i - 1][0]);
}

TEST_CASE("embedded profile header and norms") {
    const Outcome o = invoke({"profile", "--n", "3", "--m", "2", "--hm", "1", "--k", "3", "--samples", "16",
                              "--embed", "--circle-samples", "4"});
    REQUIRE(o.code == kExitOk);
    std::stringstream ss(o.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "s,g,r,lambda,theta,x1,x2,x3,x4,x5");
    int count = 0;
    while (std::getline(ss, line)) {
        const auto f = split(line, ',');
        REQUIRE(f.size() == 10);
        double sq = 0.0;
        for (int d = 5; d < 10; ++d) sq += std::stod(f[d]) * std::stod(f[d]);
        CHECK(std::abs(sq - 1.0) <= 1e-12);
        ++count;
    }
    CHECK(count == (2 * 3 * 16 + 1) * 4);
}

TEST_CASE("out file") {
    const auto path = std::filesystem::temp_directory_path() / "hmsphere_cli_test.json";
    const Outcome o = invoke({"limits", "--n", "3", "--m", "2", "--hm", "1", "--out", path.string()});
    REQUIRE(o.code == kExitOk);
    CHECK(o.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["result"]["b_val"].get<double>() == doctest::Approx(2 * std::numbers::pi / std::sqrt(5.0)));
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"solve", "--n", "3", "--m", "2", "--hm", "3", "--k", "3"}).code == kExitDomain);
    const Outcome bracket = invoke({"solve", "--n", "3", "--m", "2", "--hm", "3", "--k", "3"});
    CHECK(bracket.err.find("h_high") != std::string::npos);
    CHECK(invoke({"period", "--n", "3", "--m", "2", "--hm", "1", "--c", "1"}).code == kExitDomain);
    CHECK(invoke({"critical", "--n", "3", "--m", "3", "--hm", "1"}).code == kExitDomain);
    CHECK(invoke({"critical", "--n", "3"}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
    CHECK(invoke({"critical", "--n", "x", "--m", "2", "--hm", "1"}).code == kExitUsage);
    CHECK(invoke({"verify", "--n", "3", "--m", "2", "--seed", "7"}).code == kExitOk);
}

TEST_CASE("precision from the environment and the flag") {
    const std::vector<std::string> args{"critical", "--n", "3", "--m", "2", "--hm", "1", "--format", "csv"};
    ::setenv("HM_PERIOD_PRECISION", "5", 1);
    const Outcome env = invoke(args);
    auto flagged = args;
    flagged.insert(flagged.end(), {"--precision", "8"});
    const Outcome flag = invoke(flagged);
    ::setenv("HM_PERIOD_PRECISION", "oops", 1);
    const Outcome bad = invoke(args);
    ::unsetenv("HM_PERIOD_PRECISION");
    const Outcome plain = invoke(args);

    CHECK(env.out.find("2.2361,") != std::string::npos);
    CHECK(flag.out.find("2.236068,") != std::string::npos);
    CHECK(bad.code == kExitUsage);
    CHECK(plain.out.find("2.23606797749979,") != std::string::npos);
}
