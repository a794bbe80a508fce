#include "app.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "powfrac/error.hpp"
#include "powfrac/report_io.hpp"

namespace powfrac::app {

namespace {

namespace fs = std::filesystem;

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("polynomial", o.polynomial, "Minimal polynomial, e.g. \"z^2-z-1\" or \"[-1,-1,1]\"")->required();
    sub->add_option("--xi", o.xi, "Seed (e0,...,e_{d-1})/L, rational or decimal");
    sub->add_option("--L", o.L, "Positive integer multiplier applied to xi");
    sub->add_option("--N", o.N, "Horizon")->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", o.epsilon, "Cluster radius (exact decimal or fraction)");
    sub->add_option("--resolution", o.resolution, "Certified bits of y_n")->check(CLI::Range(16L, 1L << 20));
    sub->add_option("--precision-cap", o.precision_cap, "Working precision cap in bits");
    sub->add_option("--warmup", o.warmup, "Discarded prefix before clustering")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Directory for reports and the run manifest");
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw Error(ErrorKind::BadInput, "cli", "cannot read " + p.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const Options& o, const std::vector<OutputFile>& files, std::ostream& out) {
    if (o.out.empty()) {
        out << files.front().content;
        return;
    }
    const fs::path dir(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::BadInput, "cli", "cannot create " + dir.string() + ": " + ec.message());
    for (const auto& f : files) io::write_atomic(dir / f.name, f.content);
    io::write_atomic(dir / "manifest.json", make_manifest(o, files).dump(2) + "\n");
    out << files.front().content;
}

int replay(const std::string& path, std::ostream& out) {
    const Json manifest = Json::parse(read_file(path), nullptr, false);
    if (manifest.is_discarded() || !manifest.contains("options") || !manifest.contains("outputs")) {
        throw Error(ErrorKind::Parse, "cli", "malformed manifest " + path);
    }
    const Options o = options_from_json(manifest.at("options"));
    const auto files = execute(o);
    Json report{{"replayed", o.command}, {"manifest", path}};
    bool identical = files.size() == manifest.at("outputs").size();
    Json detail = Json::object();
    for (const auto& f : files) {
        const std::string actual = sha256_hex(f.content);
        const auto& outs = manifest.at("outputs");
        const std::string expected = outs.contains(f.name) ? outs.at(f.name).at("sha256").get<std::string>() : "";
        identical = identical && actual == expected;
        detail[f.name] = Json{{"expected", expected}, {"actual", actual}, {"match", actual == expected}};
    }
    report["files"] = std::move(detail);
    report["identical"] = identical;
    out << report.dump(2) << "\n";
    return identical ? 0 : exit_code(ErrorKind::Internal);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App cli{"Certified fractional parts of L xi alpha^n"};
    cli.require_subcommand(1);
    Options o;
    std::string replay_path;

    auto* classify = cli.add_subcommand("classify", "PV / Salem / Neither classification");
    classify->add_option("polynomial", o.polynomial, "Minimal polynomial")->required();
    classify->add_option("--out", o.out, "Directory for reports and the run manifest");
    add_common(cli.add_subcommand("orbit", "Certified x_n, y_n"), o);
    add_common(cli.add_subcommand("limits", "Cluster the fractional parts"), o);
    auto* period = cli.add_subcommand("period", "Trace period mod L and ultimate period of s_n");
    add_common(period, o);
    period->add_option("--max-period", o.max_period, "Largest period tried for s_n");
    auto* sal = cli.add_subcommand("salem", "Salem context, near-integer check and density scan");
    add_common(sal, o);
    sal->add_option("--bins", o.bins, "Histogram bins")->check(CLI::PositiveNumber);
    auto* kron = cli.add_subcommand("kronecker", "Kronecker target search");
    add_common(kron, o);
    kron->add_option("--targets", o.targets, "Comma separated theta_j in [-1, 1] (default all 1)");
    kron->add_option("--tol", o.tol, "Tolerance relative to each amplitude");
    kron->add_option("--n-max", o.n_max, "Largest n scanned")->check(CLI::NonNegativeNumber);
    auto* tc = cli.add_subcommand("theorem-check", "Full pipeline with a verdict");
    add_common(tc, o);
    tc->add_option("--bins", o.bins, "Histogram bins")->check(CLI::PositiveNumber);
    tc->add_option("--max-period", o.max_period, "Largest period tried for s_n");
    auto* rep = cli.add_subcommand("replay", "Re-run a manifest and compare digests");
    rep->add_option("manifest", replay_path, "manifest.json")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        cli.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << cli.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << cli.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(ErrorKind::Parse);
    }

    try {
        if (rep->parsed()) return replay(replay_path, out);
        for (auto* sub : cli.get_subcommands()) o.command = sub->get_name();
        emit(o, execute(o), out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: cli: " << e.what() << "\n";
        return exit_code(ErrorKind::Internal);
    }
}

}  // namespace powfrac::app
