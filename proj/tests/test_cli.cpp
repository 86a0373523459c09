#include "doctest.h"

#include "cutlab/cli.hpp"
#include "cutlab/report.hpp"

#include <filesystem>
#include <fstream>

using namespace cutlab;
namespace fs = std::filesystem;

namespace {

std::string temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("cutlab_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p.string();
}

}  // namespace

TEST_CASE("cli error paths") {
    SUBCASE("missing config file") {
        CHECK(run_cli({"certify", "--config", "/nonexistent/cfg.json"}) == 2);
    }
    SUBCASE("malformed config") {
        const std::string dir = temp_dir("badcfg");
        const std::string path = dir + "/cfg.json";
        write_text_file(path, "{ not json");
        CHECK(run_cli({"certify", "--config", path}) == 2);
    }
    SUBCASE("invalid config values") {
        const std::string dir = temp_dir("badvals");
        const std::string path = dir + "/cfg.json";
        write_text_file(path, "{\"zeta\": 0.9}");
        CHECK(run_cli({"certify", "--config", path}) == 2);
    }
    SUBCASE("unknown flag") {
        CHECK(run_cli({"certify", "--nope"}) == 2);
    }
}

TEST_CASE("cli certify writes the certification record") {
    const std::string dir = temp_dir("certify");
    CHECK(run_cli({"certify", "--seed", "1", "--out", dir}) == 0);
    CHECK(fs::exists(dir + "/certify.json"));
    CHECK(fs::exists(dir + "/certify.csv"));
    CHECK(fs::exists(dir + "/certification.json"));

    std::ifstream f(dir + "/certification.json");
    json j;
    f >> j;
    CHECK(j.contains("slope_max"));
    CHECK(j.contains("partition_defect"));
    CHECK(j.contains("theta_min_on_unit"));
    CHECK(j.contains("theta_max_on_unit"));
}

TEST_CASE("cli sawtooth with a fraction list") {
    const std::string dir = temp_dir("sawtooth");
    // single spec keeps the runtime low; the ratio table lands in the report
    CHECK(run_cli({"sawtooth", "--eps-saw", "1/16", "--seed", "2", "--out", dir}) == 0);
    CHECK(fs::exists(dir + "/sawtooth_contrast.json"));
    CHECK(fs::exists(dir + "/sawtooth_contrast.csv"));
    CHECK(fs::exists(dir + "/sawtooth_contrast.svg"));

    std::ifstream f(dir + "/sawtooth_contrast.json");
    json j;
    f >> j;
    CHECK(j["suite_name"] == "sawtooth_contrast");
    CHECK(j["meta"]["table"]["ratio_g"].size() == 1);
    CHECK(j["meta"]["table"]["ratio_f_eps"].size() == 1);

    std::ifstream t(dir + "/sawtooth_table.csv");
    std::string header;
    std::string row;
    std::getline(t, header);
    std::getline(t, row);
    CHECK(header == "eps_saw,ratio_g,ratio_f_eps,ratio_g_weighted,ratio_f_eps_weighted");
    CHECK(row.substr(0, 7) == "0.0625,");
}
