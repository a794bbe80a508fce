#include <openssl/evp.h>

#include <memory>

#include "app.hpp"
#include "powfrac/error.hpp"

namespace powfrac::app {

std::string sha256_hex(std::string_view data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw Error(ErrorKind::Internal, "cli", "sha256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

Json options_to_json(const Options& o) {
    return Json{{"command", o.command},     {"polynomial", o.polynomial}, {"xi", o.xi},
                {"L", o.L},                 {"N", o.N},                   {"epsilon", o.epsilon},
                {"resolution", o.resolution}, {"precision_cap", o.precision_cap}, {"warmup", o.warmup},
                {"format", o.format},       {"bins", o.bins},             {"targets", o.targets},
                {"tol", o.tol},             {"n_max", o.n_max},           {"max_period", o.max_period}};
}

Options options_from_json(const Json& j) {
    Options o;
    try {
        o.command = j.at("command").get<std::string>();
        o.polynomial = j.at("polynomial").get<std::string>();
        o.xi = j.at("xi").get<std::string>();
        o.L = j.at("L").get<std::string>();
        o.N = j.at("N").get<long>();
        o.epsilon = j.at("epsilon").get<std::string>();
        o.resolution = j.at("resolution").get<long>();
        o.precision_cap = j.at("precision_cap").get<long>();
        o.warmup = j.at("warmup").get<long>();
        o.format = j.at("format").get<std::string>();
        o.bins = j.at("bins").get<int>();
        o.targets = j.at("targets").get<std::string>();
        o.tol = j.at("tol").get<std::string>();
        o.n_max = j.at("n_max").get<long>();
        o.max_period = j.at("max_period").get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, "cli", std::string("malformed manifest: ") + e.what());
    }
    return o;
}

Json make_manifest(const Options& o, const std::vector<OutputFile>& files) {
    Json outputs = Json::object();
    for (const auto& f : files) outputs[f.name] = Json{{"sha256", sha256_hex(f.content)}, {"bytes", f.content.size()}};
    return Json{{"tool", "powfrac"},
                {"tool_version", POWFRAC_VERSION},
                {"options", options_to_json(o)},
                {"horizons", Json{{"N", o.N}, {"warmup", o.warmup}}},
                {"precisions", Json{{"resolution", o.resolution}, {"precision_cap", o.precision_cap}}},
                {"outputs", std::move(outputs)}};
}

}  // namespace powfrac::app
