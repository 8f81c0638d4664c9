#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "octaspec/cli.hpp"
#include "octaspec/intensity.hpp"

using namespace octaspec;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "octaspec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrices") {
    const Result r = run({"matrices"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("generators").size() == 9);
    for (const auto& g : j.at("generators")) {
        const std::string letter = g.at("letter");
        const bool parabolic = letter == "S" || letter == "R1" || letter == "L2";
        CAPTURE(letter);
        CHECK((g.at("kind") == "parabolic") == parabolic);
    }
    const Result csv = run({"matrices", "--format", "csv"});
    CHECK(csv.out.rfind("letter,a,b,c,d,trace,kind\n", 0) == 0);
    CHECK(csv.out.find("R1,1,0,1,1,2,parabolic\n") != std::string::npos);
}

TEST_CASE("enumerate and intensity") {
    const Result empty = run({"enumerate", "0", "0"});
    CHECK(empty.code == 0);
    CHECK(nlohmann::json::parse(empty.out).at("lines").empty());

    const Result e = run({"enumerate", "2", "3.6"});
    const Result i = run({"intensity", "--min", "2", "--max", "3.6"});
    REQUIRE(e.code == 0);
    REQUIRE(i.code == 0);
    const auto ej = nlohmann::json::parse(e.out);
    const auto ij = nlohmann::json::parse(i.out);
    CHECK(ej.at("lines") == ij.at("lines"));
    // The printed total is the rounded compensated sum of the exact intensities.
    const IntensityReport report = interval_intensity(2.0, 3.6);
    double sum = 0.0;
    for (const auto& line : report.lines) sum += line.intensity;
    CHECK(std::abs(sum - report.total_intensity) < 1e-12);
    CHECK(ij.at("total").get<double>() == doctest::Approx(report.total_intensity).epsilon(1e-11));

    const Result csv = run({"intensity", "2", "3.6", "--format", "csv"});
    CHECK(csv.out.rfind("canonical,word_length,orbit_size,trace_re,trace_im,length,lambda\n", 0) == 0);
    CHECK(csv.out.find("\r") == std::string::npos);
    CHECK(csv.out.find("\ntotal,") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitInvalidArguments);
    CHECK(run({"bogus"}).code == kExitInvalidArguments);
    CHECK(run({"enumerate", "3", "1"}).code == kExitInvalidArguments);
    CHECK(run({"enumerate", "-1", "1"}).code == kExitInvalidArguments);
    CHECK(run({"enumerate"}).code == kExitInvalidArguments);
    CHECK(run({"matrices", "--format", "xml"}).code == kExitInvalidArguments);
    CHECK(run({"verify", "2.4", "2.5", "--n", "0"}).code == kExitInvalidArguments);
    CHECK(run({"verify", "0", "1"}).code == kExitInvalidArguments);  // no lines
    CHECK(run({"enumerate", "0", "7"}).code == kExitResourceGuard);
    CHECK(run({"--help"}).code == kExitOk);
    // Five octahedra without conditioning are far from the limit law.
    const Result bad = run({"verify", "2.4", "2.5", "--n", "5", "--trials", "400", "--unconditioned"});
    CHECK(bad.code == kExitVerifyFailed);
    CHECK(nlohmann::json::parse(bad.out).at("passed") == false);
}

TEST_CASE("verify passes at moderate size and is reproducible") {
    const std::vector<std::string> args = {"verify", "2.4", "2.5", "--n", "1000", "--trials", "400", "--seed", "5"};
    auto with_threads = [&](const char* t) {
        auto a = args;
        a.push_back("--threads");
        a.push_back(t);
        return run(a);
    };
    const Result one = with_threads("1");
    CHECK(one.code == 0);
    CHECK(with_threads("1").out == one.out);
    CHECK(with_threads("2").out == one.out);
    CHECK(with_threads("8").out == one.out);
    const auto j = nlohmann::json::parse(one.out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("fit").at("classes").size() == 2);
    CHECK(j.at("fit").at("classes").at(0).contains("unconditioned_mean"));
}

TEST_CASE("simulate writes the batch to --out") {
    const std::string path = "test_cli_batch.csv";
    const Result r = run({"simulate", "2.4", "2.5", "--n", "200", "--trials", "30", "--format", "csv", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "trial,SSS1,SSS2,attempts");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 30);
    std::remove(path.c_str());
}
