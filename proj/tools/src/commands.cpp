#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "app.hpp"
#include "json_out.hpp"
#include "powfrac/error.hpp"
#include "powfrac/field.hpp"
#include "powfrac/report_io.hpp"

namespace powfrac::app {

namespace {

using analyze::LimitPointReport;
using field::FieldElement;

constexpr std::string_view kModule = "cli";

struct Setup {
    poly::AlgebraicNumber a;
    FieldElement xi;
    orbit::OrbitConfig cfg;
    mpq_class epsilon;
};

mp::Bits precision_cap(const Options& o) {
    if (o.precision_cap > 0) return o.precision_cap;
    if (const char* env = std::getenv("POWFRAC_PRECISION_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) {
            throw Error(ErrorKind::BadInput, kModule, "POWFRAC_PRECISION_CAP must be a positive integer");
        }
        return v;
    }
    return poly::kDefaultPrecisionCap;
}

Setup setup(const Options& o) {
    if (o.polynomial.empty()) throw Error(ErrorKind::BadInput, kModule, "missing polynomial");
    const auto p = poly::IntPolynomial::parse(o.polynomial);
    auto a = poly::classify(p);
    auto xi = FieldElement::parse(o.xi, p);
    orbit::OrbitConfig cfg;
    cfg.horizon = o.N;
    cfg.resolution = o.resolution;
    cfg.precision_cap = precision_cap(o);
    const mpq_class scale = field::parse_rational(o.L);
    if (scale.get_den() != 1 || scale < 1) throw Error(ErrorKind::BadInput, kModule, "--L must be a positive integer");
    cfg.scale = scale.get_num();
    return {std::move(a), std::move(xi), cfg, field::parse_rational(o.epsilon)};
}

Json header(const Options& o, const Setup& s) {
    return Json{{"command", o.command},
                {"polynomial", s.a.minpoly().to_string()},
                {"xi", s.xi.to_string()},
                {"L", integer(s.cfg.scale)},
                {"horizon", s.cfg.horizon},
                {"resolution", s.cfg.resolution},
                {"precision_cap", orbit::effective_cap(s.cfg, s.a)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

FieldElement scaled_xi(const Setup& s) {
    return s.xi * FieldElement::from_rational(s.xi.modulus(), mpq_class(s.cfg.scale));
}

std::vector<OutputFile> cmd_classify(const Options& o) {
    const auto p = poly::IntPolynomial::parse(o.polynomial);
    const auto a = poly::classify(p);
    Json j{{"command", o.command}};
    j.update(to_json(a));
    const auto doubled = poly::classify(p, 2 * poly::kDefaultPrecision);
    j["stable_under_precision_doubling"] = doubled.classification() == a.classification() && doubled.counts() == a.counts();
    return {{"classify.json", dump(j)}};
}

std::vector<OutputFile> cmd_orbit(const Options& o) {
    const Setup s = setup(o);
    const auto samples = orbit::iterate(s.xi, s.a, s.cfg);
    if (o.format == "csv") return {{"orbit.csv", io::orbit_csv(samples)}};
    Json j = header(o, s);
    Json arr = Json::array();
    for (const auto& smp : samples) arr.push_back(to_json(smp));
    j["samples"] = std::move(arr);
    return {{"orbit.json", dump(j)}, {"orbit.csv", io::orbit_csv(samples)}};
}

std::vector<OutputFile> cmd_limits(const Options& o) {
    const Setup s = setup(o);
    const auto samples = orbit::iterate(s.xi, s.a, s.cfg);
    const auto rep = analyze::cluster_limit_points(samples, s.epsilon, o.warmup);
    Json j = header(o, s);
    j.update(to_json(rep, s.cfg.resolution));
    if (s.a.classification() == poly::Classification::PV) {
        const mpz_class L = scaled_xi(s).L();
        j["pv_verify"] = Json{{"L", integer(L)}, {"tol", exact(s.epsilon)}, {"holds", analyze::pv_verify(rep, L, s.epsilon)}};
    }
    return {{"limits.json", dump(j)}};
}

std::optional<Json> trace_period(const Setup& s, long modulus) {
    if (!s.a.minpoly().is_monic()) return std::nullopt;
    const FieldElement xi = scaled_xi(s);
    const int d = s.a.degree();
    const auto b = field::trace_sequence(xi, d);
    std::vector<mpz_class> A(s.a.minpoly().coeffs().begin(), s.a.minpoly().coeffs().end() - 1);
    long scan = 1;
    for (int i = 0; i < d && scan < 50'000'000; ++i) scan *= modulus;
    scan = 2 * std::min<long>(scan, 50'000'000) + d;
    return to_json(analyze::pure_period_mod(A, b, modulus, scan));
}

std::vector<OutputFile> cmd_period(const Options& o) {
    const Setup s = setup(o);
    Json j = header(o, s);
    const mpz_class modulus = scaled_xi(s).L();
    if (!modulus.fits_slong_p()) throw Error(ErrorKind::BadInput, kModule, "modulus too large");
    if (auto tp = trace_period(s, modulus.get_si())) {
        j["trace_period"] = std::move(*tp);
    } else {
        j["trace_period"] = Json{{"skipped", "minimal polynomial is not monic"}};
    }
    const auto samples = orbit::iterate(s.xi, s.a, s.cfg);
    const auto sv = orbit::s_sequence(samples, s.a.minpoly());
    std::vector<mpz_class> seq;
    for (const auto& v : sv) seq.push_back(v.s);
    const auto up = analyze::ultimate_period_scan(seq, o.max_period);
    Json sp{{"terms", static_cast<long>(seq.size())}, {"max_period", o.max_period}, {"label", "evidence"}};
    sp["found"] = up.has_value();
    if (up) {
        sp["period"] = up->period;
        sp["start"] = sv.empty() ? up->start : sv.front().n + up->start - 1;
    }
    j["s_period"] = std::move(sp);
    return {{"period.json", dump(j)}};
}

std::vector<double> values_at_multiples(const std::vector<orbit::OrbitSample>& samples, long q) {
    std::vector<double> out;
    for (const auto& smp : samples) {
        if (smp.n % q == 0) out.push_back(smp.y_double());
    }
    return out;
}

std::vector<OutputFile> cmd_salem(const Options& o) {
    Setup s = setup(o);
    const FieldElement xi = scaled_xi(s);
    const auto ctx = salem::build_context(s.a, xi, s.cfg.resolution);
    orbit::OrbitConfig cfg = s.cfg;
    cfg.scale = 1;
    cfg.horizon = s.cfg.horizon * ctx.q;
    const auto samples = orbit::iterate(xi, s.a, cfg);
    const auto dens = salem::density_scan(values_at_multiples(samples, ctx.q), o.bins);
    if (o.format == "csv") return {{"histogram.csv", io::histogram_csv(dens)}};
    Json j = header(o, s);
    j["context"] = to_json(ctx);
    j["near_integer"] = to_json(salem::near_integer_check(ctx, samples, std::max<long>(1, s.cfg.horizon / 5)));
    j["density"] = to_json(dens);
    return {{"salem.json", dump(j)}, {"histogram.csv", io::histogram_csv(dens)}};
}

std::vector<double> parse_targets(const std::string& text, int m) {
    std::vector<double> out;
    if (text.empty()) return std::vector<double>(static_cast<std::size_t>(m), 1.0);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const double v = field::parse_rational(item).get_d();
        if (v < -1 || v > 1) throw Error(ErrorKind::BadInput, kModule, "targets must lie in [-1, 1]");
        out.push_back(v);
    }
    return out;
}

std::vector<OutputFile> cmd_kronecker(const Options& o) {
    const Setup s = setup(o);
    const auto ctx = salem::build_context(s.a, scaled_xi(s), s.cfg.resolution);
    const auto targets = parse_targets(o.targets, ctx.m());
    const mpq_class tol = field::parse_rational(o.tol);
    const auto res = salem::kronecker_search(ctx, targets, tol.get_d(), o.n_max);
    Json j = header(o, s);
    j["context"] = to_json(ctx);
    Json t = Json::array();
    for (double v : targets) t.push_back(tagged(v));
    j["targets"] = std::move(t);
    j["tol"] = exact(tol);
    j["n_max"] = o.n_max;
    j["scanned"] = res.scanned;
    if (res.n) {
        j["witness"] = *res.n;
        j["R_at_witness"] = tagged(salem::residual_R(ctx, *res.n));
    } else {
        j["witness"] = nullptr;
    }
    return {{"kronecker.json", dump(j)}};
}

long center_count_off_boundary(const LimitPointReport& rep) {
    long g = 0;
    for (const auto& c : rep.clusters) {
        if (c.center > rep.epsilon && c.center < 1 - rep.epsilon) ++g;
    }
    return g;
}

// The collision and contraction steps on an orbit of L xi; recorded, never fatal.
Json collision_chain(const Setup& s, const FieldElement& xi, const mpz_class& L,
                     const std::vector<orbit::OrbitSample>& samples, const LimitPointReport& rep, long warmup,
                     bool& contraction_holds, bool& contraction_ran) {
    Json j;
    contraction_ran = false;
    try {
        const auto eta = analyze::assign_eta(samples, rep, 2 * s.epsilon);
        const auto col = analyze::find_vector_collision(eta, s.a.degree(), center_count_off_boundary(rep));
        j["collision"] = Json{{"m", col.m}, {"r", col.r}};
        const auto con = analyze::verify_contraction(xi, s.a, L, col.m, col.r, s.epsilon, s.cfg.horizon, warmup,
                                                     s.cfg.resolution);
        j["contraction"] = to_json(con, s.cfg.resolution);
        contraction_holds = con.holds;
        contraction_ran = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EtaAssignment && e.kind() != ErrorKind::NoCollision) throw;
        j["collision"] = Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    return j;
}

std::vector<OutputFile> cmd_theorem_check(const Options& o) {
    const Setup s = setup(o);
    const FieldElement xi = scaled_xi(s);
    const mp::Bits bits = s.cfg.resolution;
    const auto& p = s.a.minpoly();
    std::vector<OutputFile> files;

    Json j = header(o, s);
    j["classification"] = to_json(s.a);
    j["xi_in_field"] = true;

    const auto samples = orbit::iterate(s.xi, s.a, s.cfg);
    const auto rep = analyze::cluster_limit_points(samples, s.epsilon, o.warmup);
    orbit::OrbitConfig doubled = s.cfg;
    doubled.horizon = 2 * s.cfg.horizon;
    const auto samples2 = orbit::iterate(s.xi, s.a, doubled);
    const auto rep2 = analyze::cluster_limit_points(samples2, s.epsilon, o.warmup);
    const bool growth = rep2.clusters.size() > rep.clusters.size();
    j["limits"] = to_json(rep, bits);
    j["cluster_counts"] = Json{{"N", s.cfg.horizon},
                               {"count_N", static_cast<long>(rep.clusters.size())},
                               {"2N", doubled.horizon},
                               {"count_2N", static_cast<long>(rep2.clusters.size())},
                               {"strictly_increasing", growth}};

    const auto sv = orbit::s_sequence(samples, p);
    std::vector<mpz_class> seq;
    mpz_class smax = 0;
    for (const auto& v : sv) {
        seq.push_back(v.s);
        smax = std::max<mpz_class>(smax, abs(v.s));
    }
    const auto up = analyze::ultimate_period_scan(seq, std::min<long>(o.max_period, static_cast<long>(seq.size()) / 2 - 1));
    Json sj{{"terms", static_cast<long>(seq.size())}, {"max_abs", integer(smax)}, {"bound", integer(poly::length(p) - 1)}};
    sj["ultimately_periodic"] = up.has_value();
    if (up) sj["period"] = Json{{"t", up->period}, {"start", sv.front().n + up->start - 1}};
    sj["label"] = "evidence";
    j["s_sequence"] = std::move(sj);
    j["smallness"] = to_json(orbit::smallness_check(samples, p), bits);

    std::string verdict = "inconclusive";
    Json evidence = Json::array();
    if (growth) evidence.push_back("cluster count grows under horizon doubling");

    if (s.a.classification() == poly::Classification::PV) {
        const mpz_class L = xi.L();
        const bool pv_ok = analyze::pv_verify(rep, L, s.epsilon);
        j["pv_verify"] = Json{{"L", integer(L)}, {"tol", exact(s.epsilon)}, {"holds", pv_ok}};
        const mpq_class rat_tol(10, mpz_class(1) << static_cast<mp_bitcnt_t>(bits));
        const auto ds = analyze::difference_structure(rep, p.leading(), rat_tol);
        j["difference_structure"] = to_json(ds, bits);

        orbit::OrbitConfig scaled_cfg = s.cfg;
        scaled_cfg.scale = s.cfg.scale * ds.L_common;
        const auto scaled_samples = orbit::iterate(s.xi, s.a, scaled_cfg);
        const auto scaled_rep = analyze::cluster_limit_points(scaled_samples, s.epsilon, o.warmup);
        Json proj{{"L", integer(ds.L_common)}};
        try {
            const auto pr = analyze::scale_and_project(rep, scaled_rep, ds.L_common,
                                                       2 * s.epsilon * mpq_class(ds.L_common + 1));
            proj["holds"] = true;
            proj["max_miss"] = tagged(pr.max_miss, bits);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ToleranceViolation) throw;
            proj["holds"] = false;
            proj["message"] = e.what();
        }
        proj["scaled_limits"] = to_json(scaled_rep, bits);
        j["scale_and_project"] = std::move(proj);

        bool holds = false, ran = false;
        j["chain"] = collision_chain(s, xi, ds.L_common, scaled_samples, scaled_rep, o.warmup, holds, ran);
        if (pv_ok && ran && holds) verdict = "finite-limit-set-consistent";
    } else {
        bool holds = false, ran = false;
        j["chain"] = collision_chain(s, xi, 1, samples, rep, o.warmup, holds, ran);
        if (ran && !holds) evidence.push_back("contraction fails for the first window collision");

        if (s.a.classification() == poly::Classification::Salem) {
            const auto ctx = salem::build_context(s.a, xi, bits);
            orbit::OrbitConfig cfg = s.cfg;
            cfg.scale = 1;
            cfg.horizon = 2 * s.cfg.horizon * ctx.q;
            const auto qs = orbit::iterate(xi, s.a, cfg);
            std::vector<orbit::OrbitSample> first(qs.begin(), qs.begin() + s.cfg.horizon * ctx.q);
            const auto d1 = salem::density_scan(values_at_multiples(first, ctx.q), o.bins);
            const auto d2 = salem::density_scan(values_at_multiples(qs, ctx.q), o.bins);
            j["salem"] = Json{{"context", to_json(ctx)},
                              {"near_integer", to_json(salem::near_integer_check(ctx, first, std::max<long>(1, s.cfg.horizon / 5)))},
                              {"density_N", to_json(d1)},
                              {"density_2N", to_json(d2)}};
            if (d1.run_bins > 1 && d2.run_bins >= d1.run_bins) evidence.push_back("density interval of y_{qn}");
            files.push_back({"histogram.csv", io::histogram_csv(d1)});
        }
        if (!evidence.empty()) verdict = "infinite-limit-set-evidence";
    }
    j["evidence"] = std::move(evidence);
    j["verdict"] = verdict;
    files.insert(files.begin(), OutputFile{"theorem-check.json", dump(j)});
    files.push_back({"orbit.csv", io::orbit_csv(samples)});
    return files;
}

}  // namespace

std::vector<OutputFile> execute(const Options& o) {
    if (o.format != "json" && o.format != "csv") throw Error(ErrorKind::BadInput, kModule, "--format must be json or csv");
    if (o.command == "classify") return cmd_classify(o);
    if (o.command == "orbit") return cmd_orbit(o);
    if (o.command == "limits") return cmd_limits(o);
    if (o.command == "period") return cmd_period(o);
    if (o.command == "salem") return cmd_salem(o);
    if (o.command == "kronecker") return cmd_kronecker(o);
    if (o.command == "theorem-check") return cmd_theorem_check(o);
    throw Error(ErrorKind::BadInput, kModule, "unknown command '" + o.command + "'");
}

}  // namespace powfrac::app
