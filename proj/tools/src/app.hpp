#ifndef POWFRAC_APP_HPP
#define POWFRAC_APP_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace powfrac::app {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string polynomial;
    std::string xi = "1";
    std::string L = "1";
    long N = 200;
    std::string epsilon = "0.01";
    long resolution = 64;
    /// 0 selects POWFRAC_PRECISION_CAP or the default cap.
    long precision_cap = 0;
    long warmup = 10;
    std::string format = "json";
    std::string out;
    int bins = 50;
    std::string targets;
    std::string tol = "0.15";
    long n_max = 1000000;
    long max_period = 200;
    std::string manifest;
};

struct OutputFile {
    std::string name;
    std::string content;
};

/// Runs a command without touching the filesystem; the first file is the
/// primary report.
std::vector<OutputFile> execute(const Options& opts);

Json options_to_json(const Options& opts);
Options options_from_json(const Json& j);

std::string sha256_hex(std::string_view data);
Json make_manifest(const Options& opts, const std::vector<OutputFile>& files);

/// Full command line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powfrac::app

#endif  // POWFRAC_APP_HPP
