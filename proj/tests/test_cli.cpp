#include <doctest.h>

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "output.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"seiffert"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = seiffert::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
    using seiffert::cli::format_double;
    CHECK(format_double(2.5) == "2.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("eval") {
    auto r = run({"eval", "T", "3", "1"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(2.1568104322916100).epsilon(1e-15));
    CHECK(run({"eval", "C", "3", "1"}).out == "2.5\n");
    CHECK(run({"eval", "A", "3", "1"}).out == "2\n");
    CHECK(run({"eval", "S", "1", "7"}).out == "5\n");
    CHECK(run({"eval", "Q", "3", "1", "--t", "0.75", "--p", "1"}).out == "2.125\n");
}

TEST_CASE("eval errors") {
    CHECK(run({"eval", "G", "3", "1"}).code == seiffert::cli::kExitUsage);
    CHECK(run({"eval", "Q", "3", "1", "--t", "0.75"}).code == seiffert::cli::kExitUsage);
    auto r = run({"eval", "A", "0", "1"});
    CHECK(r.code == seiffert::cli::kExitDomain);
    CHECK(r.err.find("domain error") != std::string::npos);
    CHECK(run({"eval", "Q", "3", "1", "--t", "0.4", "--p", "1"}).code == seiffert::cli::kExitDomain);
    CHECK(run({"bogus"}).code == seiffert::cli::kExitUsage);
    CHECK(run({}).code == seiffert::cli::kExitUsage);
}

TEST_CASE("table csv and json carry the same values") {
    auto csv = run({"table", "--p-min", "0.5", "--p-max", "2", "--steps", "3"});
    REQUIRE(csv.code == 0);
    const auto rows = parse_csv(csv.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"p", "t_lower", "t_upper", "gap"});
    CHECK(std::stod(rows[1][0]) == 0.5);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(0.89406184104699999).epsilon(1e-15));
    CHECK(std::stod(rows[1][2]) == doctest::Approx(0.90824829046386302).epsilon(1e-15));
    CHECK(std::stod(rows[2][0]) == 1.0);
    CHECK(std::stod(rows[2][1]) == doctest::Approx(0.76136160043853166).epsilon(1e-15));
    CHECK(std::stod(rows[2][2]) == doctest::Approx(0.78867513459481288).epsilon(1e-15));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][3]) > 0.0);

    auto js = run({"table", "--p-min", "0.5", "--p-max", "2", "--steps", "3", "--json"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j["rows"].size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(j["rows"][i][c].get<double>() == std::stod(rows[i + 1][c]));
        }
    }
}

TEST_CASE("table with empirical columns") {
    auto r = run({"table", "--p-min", "1", "--p-max", "2", "--steps", "2", "--empirical"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows[0].size() == 6);
    CHECK(rows[0][4] == "empirical_t_lower");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(std::stod(rows[i][4]) - std::stod(rows[i][1])) < 1e-6);
        CHECK(std::abs(std::stod(rows[i][5]) - std::stod(rows[i][2])) < 1e-6);
    }
}

TEST_CASE("table range errors") {
    CHECK(run({"table", "--p-min", "0.4"}).code == seiffert::cli::kExitDomain);
    CHECK(run({"table", "--p-min", "2", "--p-max", "1"}).code == seiffert::cli::kExitDomain);
    CHECK(run({"table", "--steps", "1"}).code == seiffert::cli::kExitDomain);
}

TEST_CASE("certify full suite") {
    auto r = run({"certify", "--p", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.rfind("PASS\n") == r.out.size() - 5);

    auto js = run({"certify", "--p", "1", "--json", "--seed", "9"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"][0]["detail"]["abs_diff"].get<double>() < 1e-6);
    CHECK(j["checks"][1]["detail"]["abs_diff"].get<double>() < 1e-6);
    CHECK(j["checks"][5]["detail"]["seed"] == 9);
}

TEST_CASE("certify single weight") {
    auto r = run({"certify", "--p", "1", "--t", "0.77"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MIXED") != std::string::npos);
    CHECK(r.out.find("negative witness: x =") != std::string::npos);
    CHECK(r.out.find("positive witness: x =") != std::string::npos);

    auto js = run({"certify", "--p", "1", "--t", "0.77", "--json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["verdict"] == "MIXED");
    CHECK(j["case"] == "CASE3");
    CHECK(j["negative_witness"]["f"].get<double>() < 0);
    CHECK(j["positive_witness"]["f"].get<double>() > 0);

    CHECK(run({"certify", "--p", "1", "--t", "0.7"}).code == 0);
    CHECK(run({"certify", "--p", "1", "--t", "0.8"}).code == 0);
    CHECK(run({"certify", "--p", "0.4"}).code == seiffert::cli::kExitDomain);
    CHECK(run({"certify", "--p", "1", "--t", "0.3"}).code == seiffert::cli::kExitDomain);
    CHECK(run({"certify"}).code == seiffert::cli::kExitUsage);
}

TEST_CASE("certify reports indeterminate scans") {
    // 16 grid points starting at 1e-6 cannot resolve the case-3 extremum near 1.
    auto r = run({"certify", "--p", "2", "--t", std::to_string(0.5 + std::sqrt(0.1) / 2).c_str(),
                  "--grid-size", "16"});
    CHECK(r.code == seiffert::cli::kExitIndeterminate);
    CHECK(r.err.find("u=") != std::string::npos);
}

TEST_CASE("seed from the environment") {
    ::setenv("SEIFFERT_SEED", "77", 1);
    auto env = run({"certify", "--p", "2", "--json"});
    auto flag = run({"certify", "--p", "2", "--json", "--seed", "5"});
    ::unsetenv("SEIFFERT_SEED");
    CHECK(nlohmann::json::parse(env.out)["checks"][5]["detail"]["seed"] == 77);
    CHECK(nlohmann::json::parse(flag.out)["checks"][5]["detail"]["seed"] == 5);
    ::setenv("SEIFFERT_SEED", "abc", 1);
    CHECK(run({"certify", "--p", "2"}).code == seiffert::cli::kExitUsage);
    ::unsetenv("SEIFFERT_SEED");
}

TEST_CASE("trace") {
    auto r = run({"trace", "--p", "1", "--u", "0.3", "--n", "100"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == std::vector<std::string>{"x", "f", "g"});
    CHECK(std::stod(rows[1][1]) < 0.0);
    CHECK(std::stod(rows[100][1]) == doctest::Approx(0.020799789197000607).epsilon(1e-6));
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][2]) < std::stod(rows[i - 1][2]));
    }

    auto zero = run({"trace", "--p", "3", "--t", "0.5", "--n", "50", "--json"});
    const auto j = nlohmann::json::parse(zero.out);
    REQUIRE(j["rows"].size() == 50);
    for (const auto& row : j["rows"]) {
        const double x = row[0].get<double>();
        CHECK(row[1].get<double>() < 0.0);
        CHECK(row[1].get<double>() == doctest::Approx(std::log(std::atan(x) / x)).epsilon(1e-10));
    }

    CHECK(run({"trace", "--p", "1"}).code == seiffert::cli::kExitUsage);
    CHECK(run({"trace", "--p", "1", "--u", "0.3", "--t", "0.7"}).code == seiffert::cli::kExitUsage);
    CHECK(run({"trace", "--p", "1", "--u", "0.3", "--x-min", "0"}).code == seiffert::cli::kExitDomain);
    CHECK(run({"trace", "--p", "1", "--u", "1.3"}).code == seiffert::cli::kExitDomain);
}

TEST_CASE("output is deterministic") {
    CHECK(run({"certify", "--p", "0.75", "--json"}).out == run({"certify", "--p", "0.75", "--json"}).out);
    CHECK(run({"trace", "--p", "2", "--u", "0.1"}).out == run({"trace", "--p", "2", "--u", "0.1"}).out);
}
