#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "doctest.h"

using powfrac::app::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = powfrac::app::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("powfrac_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("classify report") {
    const auto r = cli({"classify", "z^2-z-1"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["class"] == "PV");
    CHECK(j["counts"]["inside"] == 1);
    CHECK(j["irreducibility"] == "Proved");
    CHECK(j["stable_under_precision_doubling"] == true);
}

TEST_CASE("exit codes") {
    CHECK(cli({"classify", "z^2-4"}).code == 2);
    CHECK(cli({"classify", "z^2+"}).code == 2);
    CHECK(cli({"salem", "z^2-z-1"}).code == 2);
    CHECK(cli({"orbit", "z^2-z-1", "--xi", "(1,1,1)/0"}).code == 2);
    const auto r = cli({"classify", "z^2-2z+1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotSquarefree") != std::string::npos);
}

TEST_CASE("orbit csv") {
    const auto r = cli({"orbit", "2z-3", "--N", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,x_n,y_n,bits_used,exact\n1,1,1/2,0,true\n2,2,1/4,0,true\n3,3,3/8,0,true\n");
}

TEST_CASE("period command on Fibonacci-type traces") {
    const auto r = cli({"period", "z^2-z-1", "--xi", "(1,1)/3", "--N", "100"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.contains("trace_period"));
}

TEST_CASE("kronecker command") {
    const auto r = cli({"kronecker", "z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1", "--targets", "1,1,1,1"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["witness"] == 1524);
}

TEST_CASE("theorem-check writes a replayable manifest") {
    const auto dir = scratch("golden");
    const auto r = cli({"theorem-check", "z^2-z-1", "--N", "120", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["verdict"] == "finite-limit-set-consistent");
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    CHECK(std::filesystem::exists(dir / "theorem-check.json"));
    CHECK(std::filesystem::exists(dir / "orbit.csv"));
    CHECK(cli({"replay", (dir / "manifest.json").string()}).code == 0);

    auto manifest = Json::parse(std::ifstream(dir / "manifest.json"));
    manifest["outputs"]["theorem-check.json"]["sha256"] = std::string(64, '0');
    std::ofstream(dir / "manifest.json") << manifest.dump(2);
    CHECK(cli({"replay", (dir / "manifest.json").string()}).code == 4);
    std::filesystem::remove_all(dir);
}

TEST_CASE("options round trip") {
    powfrac::app::Options o;
    o.command = "limits";
    o.polynomial = "z^3-z-1";
    o.N = 321;
    o.epsilon = "1/500";
    const auto back = powfrac::app::options_from_json(powfrac::app::options_to_json(o));
    CHECK(powfrac::app::options_to_json(back) == powfrac::app::options_to_json(o));
}

TEST_CASE("sha256") {
    CHECK(powfrac::app::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
