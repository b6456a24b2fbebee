#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbf/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = rbf::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/rbf_cli_" + name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    return path;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("chi: rational zero prints exact zeros") {
    auto r = run({"chi", "--P", "5", "--y", "0.2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,0\n");
    CHECK(r.err.empty());

    auto naive = run({"chi", "--P", "5", "--y", "0.2", "--path", "naive"});
    CHECK(naive.code == 0);

    auto peak = run({"chi", "--P", "7", "--y", "3", "--format", "json"});
    CHECK(peak.code == 0);
    auto j = nlohmann::json::parse(peak.out);
    CHECK(j["re"] == 1.0);
    CHECK(j["im"] == 0.0);

    CHECK(run({"chi", "--P", "5", "--y", "0.2", "--path", "psychic"}).code == 2);
    CHECK(run({"chi", "--y", "0.2"}).code == 2);   // --P missing
    CHECK(run({"chi", "--P", "0", "--y", "1"}).code == 2);  // bad domain
}

TEST_CASE("arrows: quarter-turn phasors") {
    auto r = run({"arrows", "--P", "4", "--y", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "item,re,im\n"
          "0,1,0\n"
          "1,0,1\n"
          "2,-1,0\n"
          "3,0,-1\n"
          "centroid,0,0\n");
}

TEST_CASE("validate: the built-in cross-check table passes") {
    auto r = run({"validate"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("case,direct,rbf,classical,max_diff\n", 0) == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.find("sin2_k2.3_P20,-0.024447180486226572,") != std::string::npos);
    CHECK(r.out.find("cos8pi_P4,1,1,1,0") != std::string::npos);
    CHECK(r.out.find("prod_cos8pi_P4,1,1,1,0") != std::string::npos);

    auto rj = run({"validate", "--format", "json"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["classical"].is_null());
    CHECK(j[1]["rbf"] == 1.0);
    CHECK(j[2]["max_diff"] == 0.0);
}

TEST_CASE("sweep: row count and determinism") {
    auto r1 = run({"sweep", "--fn", "sin2", "--k", "2.3", "--pmin", "2", "--pmax", "200"});
    CHECK(r1.code == 0);
    CHECK(count_lines(r1.out) == 200);  // header + 199 rows
    auto r2 = run({"sweep", "--fn", "sin2", "--k", "2.3", "--pmin", "2", "--pmax", "200"});
    CHECK(r1.out == r2.out);

    CHECK(run({"sweep", "--fn", "nope", "--pmin", "2", "--pmax", "4"}).code == 2);
}

TEST_CASE("sweep: RBF_THREADS only changes the schedule") {
    auto seq = run({"sweep", "--fn", "sin2", "--pmin", "2", "--pmax", "80"});
    setenv("RBF_THREADS", "4", 1);
    auto par = run({"sweep", "--fn", "sin2", "--pmin", "2", "--pmax", "80"});
    unsetenv("RBF_THREADS");
    CHECK(seq.code == 0);
    CHECK(par.code == 0);
    CHECK(seq.out == par.out);
}

TEST_CASE("bias: function paths") {
    auto r = run({"bias", "--fn", "sin2", "--k", "2.3", "--P", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("rbf_re,rbf_im,classical_re,classical_im,direct,max_discrepancy\n", 0) == 0);
    CHECK(r.out.find("-0.024447180486226572,0,,,-0.024447180486226572,0") != std::string::npos);

    auto rj = run({"bias", "--fn", "cos2pin", "--n", "4", "--P", "4", "--format", "json"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["rbf_re"] == 1.0);
    CHECK(j["classical_re"] == 1.0);
    CHECK(j["direct"] == 1.0);
    CHECK(j["max_discrepancy"] == 0.0);

    auto r2d = run({"bias", "--fn", "prod_cos8pi", "--P", "4"});
    CHECK(r2d.code == 0);
    CHECK(r2d.out.find("\n1,0,1,0,1,0\n") != std::string::npos);

    CHECK(run({"bias", "--P", "4"}).code == 2);                    // neither source given
    CHECK(run({"bias", "--fn", "mystery", "--P", "4"}).code == 2);
}

TEST_CASE("bias: tolerance gate returns exit 1") {
    // c_6 survives P = 3, but the narrow alias window l_max = 1 misses it:
    // the two views disagree by 1 and the report fails its tolerance
    std::string spec = write_temp(
        "gate.json",
        R"({"modes":[{"k":6,"re":1.0,"im":0.0},{"k":-6,"re":1.0,"im":0.0}],)"
        R"("symmetric_real":true,"source_N":null})");
    auto fail = run({"bias", "--spectrum", spec, "--P", "3", "--lmax", "1"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("2,0,0,0,,2") != std::string::npos);

    auto pass = run({"bias", "--spectrum", spec, "--P", "3", "--lmax", "2"});
    CHECK(pass.code == 0);
}

TEST_CASE("bias: 2d spectrum file") {
    std::string spec = write_temp(
        "2d.json", R"({"modes":[{"k1":4,"k2":4,"re":0.25,"im":0.0},)"
                   R"({"k1":4,"k2":-4,"re":0.25,"im":0.0},{"k1":-4,"k2":4,"re":0.25,"im":0.0},)"
                   R"({"k1":-4,"k2":-4,"re":0.25,"im":0.0}]})");
    auto r = run({"bias", "--spectrum", spec, "--P", "4", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rbf_re"] == 1.0);
    CHECK(j["classical_re"] == 1.0);
    CHECK(j["direct"].is_null());
}

TEST_CASE("spectrum-estimate roundtrips through bias") {
    std::string path = "/tmp/rbf_cli_est.json";
    auto est = run({"spectrum-estimate", "--fn", "cos2pin", "--n", "4", "--N", "64",
                    "--drop-tol", "1e-12", "--output", path});
    CHECK(est.code == 0);
    CHECK(est.out.empty());  // everything went to the file

    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    CHECK(j["modes"].size() == 2);
    CHECK(j["symmetric_real"] == true);
    CHECK(j["source_N"] == 64);

    auto bias = run({"bias", "--spectrum", path, "--P", "4"});
    CHECK(bias.code == 0);
    CHECK(bias.out.find("\n1,0,1,0,,0\n") != std::string::npos);
}

TEST_CASE("filter: header and window default") {
    auto r = run({"filter", "--fn", "cos2pin", "--n", "4", "--P", "2", "--krange", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,input_mag,filter_mag,filtered_mag\n", 0) == 0);
    CHECK(count_lines(r.out) == 11);

    auto defaulted = run({"filter", "--fn", "cos2pin", "--n", "4", "--P", "4"});
    CHECK(count_lines(defaulted.out) == 25);  // default window 3P = 12 each side

    CHECK(run({"filter", "--P", "4"}).code == 2);
    CHECK(run({"filter", "--fn", "sin2", "--k", "2.3", "--P", "4"}).code == 2);  // m not integer
}

TEST_CASE("landscape commands emit the fixed schemas") {
    auto land = run({"landscape", "--P", "2", "--ymin", "0", "--ymax", "1", "--n", "3"});
    CHECK(land.code == 0);
    CHECK(land.out == "y,chi,classification\n0,1,Peak\n0.5,0,Zero\n1,1,Peak\n");

    auto l2 = run({"landscape2d", "--P", "1", "--range", "1", "--n", "2"});
    CHECK(l2.code == 0);
    CHECK(l2.out ==
          "y1,y2,re_product,product_of_re\n"
          "0,0,1,1\n0,1,1,1\n1,0,1,1\n1,1,1,1\n");
}

TEST_CASE("config file mirrors flags and loses to explicit ones") {
    std::string cfg = write_temp("cfg.json", R"({"P": 5, "y": 0.2})");
    auto r = run({"chi", "--config", cfg});
    CHECK(r.code == 0);
    CHECK(r.out == "0,0\n");

    // explicit flag wins over the config value
    auto over = run({"chi", "--config", cfg, "--y", "1"});
    CHECK(over.code == 0);
    CHECK(over.out == "1,0\n");

    CHECK(run({"chi", "--config", "/tmp/rbf_cli_does_not_exist.json"}).code == 3);
    std::string bad = write_temp("bad.json", "not json at all");
    CHECK(run({"chi", "--config", bad}).code == 3);
    std::string arr = write_temp("arr.json", "[1,2,3]");
    CHECK(run({"chi", "--config", arr}).code == 3);
}

TEST_CASE("output file and I/O failures") {
    std::string path = "/tmp/rbf_cli_out.csv";
    auto r = run({"chi", "--P", "5", "--y", "0.2", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "0,0\n");

    CHECK(run({"chi", "--P", "5", "--y", "0.2", "--output", "/tmp/no_such_dir/x.csv"}).code == 3);
    CHECK(run({"bias", "--spectrum", "/tmp/rbf_cli_missing_spec.json", "--P", "4"}).code == 3);

    std::string mangled = write_temp("mangled.json", R"({"modes": "nope"})");
    CHECK(run({"bias", "--spectrum", mangled, "--P", "4"}).code == 3);
}

TEST_CASE("usage surface") {
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage: rbf") != std::string::npos);
    CHECK(help.out.find("spectrum-estimate") != std::string::npos);

    auto sub_help = run({"sweep", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(sub_help.out.find("--pmax") != std::string::npos);

    CHECK(run({}).code == 2);               // a subcommand is required
    CHECK(run({"conjure"}).code == 2);      // unknown subcommand
    CHECK(run({"chi", "--P", "5", "--y", "0.2", "--sideways", "1"}).code == 2);
}
