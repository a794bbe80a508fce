#include <algorithm>
#include <map>

#include "powfrac/analyze.hpp"
#include "powfrac/error.hpp"

namespace powfrac::analyze {

namespace {

constexpr std::string_view kModule = "analyze";

mpq_class frac(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - mpq_class(f);
}

mpq_class nearest_integer_distance(const mpq_class& q) { return orbit::circle_norm(frac(q)); }

void sort_unique(std::vector<mpq_class>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ProjectionReport scale_and_project(const LimitPointReport& base, const LimitPointReport& scaled, const mpz_class& L,
                                   const mpq_class& tol) {
    if (L < 1) throw Error(ErrorKind::BadInput, kModule, "L must be positive");
    ProjectionReport out;
    out.targets = {mpq_class(0), mpq_class(1)};
    for (const auto& c : base.clusters) out.targets.push_back(frac(c.center * L));
    sort_unique(out.targets);
    out.scaled = scaled;
    out.max_miss = 0;
    for (const auto& c : scaled.clusters) {
        mpq_class miss = 1;
        for (const auto& t : out.targets) miss = std::min<mpq_class>(miss, abs(c.center - t));
        if (miss > out.max_miss) out.max_miss = miss;
        if (miss > tol) {
            throw Error(ErrorKind::ToleranceViolation, kModule,
                        "scaled center " + std::to_string(c.center.get_d()) + " is " + std::to_string(miss.get_d()) +
                            " from every projected center");
        }
    }
    return out;
}

std::optional<mpq_class> detect_rational(const mpq_class& x, const mpq_class& tol, long den_max) {
    for (long q = 1; q <= den_max; ++q) {
        const mpq_class scaled = x * q + mpq_class(1, 2);
        mpz_class p;
        mpz_fdiv_q(p.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        mpq_class cand(p, q);
        cand.canonicalize();
        if (abs(x - cand) <= tol) return cand;
    }
    return std::nullopt;
}

DifferenceStructure difference_structure(const LimitPointReport& report, const mpz_class& a_d, const mpq_class& rat_tol,
                                         long den_max) {
    DifferenceStructure out;
    const auto centers = report.centers();
    std::vector<mpq_class> irrational;
    for (const auto& c : centers) {
        if (auto r = detect_rational(c, rat_tol, den_max)) {
            out.L_common = lcm(out.L_common, r->get_den());
        } else {
            irrational.push_back(c);
        }
    }
    for (std::size_t i = 0; i < centers.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) out.differences.push_back(centers[i] - centers[j]);
    }
    sort_unique(out.differences);
    for (const auto& dlt : out.differences) {
        if (auto r = detect_rational(dlt, 2 * rat_tol, den_max)) out.L_common = lcm(out.L_common, r->get_den());
    }
    for (const auto& mu : irrational) out.scaled_irrational.push_back(frac(mu * out.L_common));
    sort_unique(out.scaled_irrational);
    if (out.scaled_irrational.empty()) return out;

    std::vector<mpq_class> eta = out.scaled_irrational;
    eta.push_back(0);
    eta.push_back(1);
    sort_unique(eta);
    std::optional<mpq_class> tau;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (eta[i] == 1 && eta[j] == 0) continue;
            const mpq_class v = nearest_integer_distance((eta[i] - eta[j]) * a_d);
            if (!tau || v < *tau) tau = v;
        }
    }
    out.tau = tau;
    out.tau_in_range = tau && *tau > 0 && *tau < mpq_class(1, 2);
    return out;
}

EtaAssignment assign_eta(const std::vector<orbit::OrbitSample>& samples, const LimitPointReport& report,
                         const mpq_class& radius) {
    EtaAssignment out;
    out.centers = report.centers();
    if (out.centers.empty()) throw Error(ErrorKind::EtaAssignment, kModule, "no centers to assign to");
    bool started = false;
    for (const auto& s : samples) {
        if (s.n <= report.warmup) continue;
        if (!started) {
            out.first_n = s.n;
            started = true;
        }
        const mpq_class y = s.y();
        const auto it = std::lower_bound(out.centers.begin(), out.centers.end(), y);
        std::size_t best = static_cast<std::size_t>(it - out.centers.begin());
        if (best == out.centers.size()) {
            --best;
        } else if (best > 0 && y - out.centers[best - 1] <= out.centers[best] - y) {
            --best;
        }
        if (abs(y - out.centers[best]) > radius) {
            throw Error(ErrorKind::EtaAssignment, kModule,
                        "y_" + std::to_string(s.n) + " is farther than the cluster radius from every center");
        }
        out.ids.push_back(static_cast<int>(best));
    }
    return out;
}

Collision find_vector_collision(const EtaAssignment& eta, int d, long g) {
    const std::size_t w = static_cast<std::size_t>(d) + 1;
    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t h = 0; h + w <= eta.ids.size(); ++h) {
        std::vector<int> key(eta.ids.begin() + static_cast<std::ptrdiff_t>(h),
                             eta.ids.begin() + static_cast<std::ptrdiff_t>(h + w));
        auto [it, inserted] = seen.emplace(std::move(key), h);
        if (!inserted) {
            return {eta.first_n + static_cast<long>(h), eta.first_n + static_cast<long>(it->second)};
        }
    }
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(g + 2), static_cast<unsigned long>(d + 1));
    throw Error(ErrorKind::NoCollision, kModule,
                "no repeated window among " + std::to_string(eta.ids.size()) + " assignments; a collision is forced within " +
                    bound.get_str() + " windows");
}

ContractionReport verify_contraction(const field::FieldElement& xi, const poly::AlgebraicNumber& a, const mpz_class& L,
                                     long m, long r, const mpq_class& epsilon, long horizon, long warmup,
                                     mp::Bits resolution) {
    if (!(m > r && r >= 1)) throw Error(ErrorKind::BadInput, kModule, "need m > r >= 1");
    using field::FieldElement;
    const auto& p = a.minpoly();
    const FieldElement gen = FieldElement::generator(p);
    const FieldElement diff = field::pow(gen, static_cast<unsigned long>(m)) - field::pow(gen, static_cast<unsigned long>(r));
    ContractionReport out{FieldElement::from_rational(p, mpq_class(L)) * xi * diff, false, 0, std::nullopt, false};
    orbit::OrbitConfig cfg;
    cfg.horizon = horizon;
    cfg.resolution = resolution;
    const mpq_class bound = 2 * epsilon;
    orbit::iterate(out.xi_prime, a, cfg, [&](const orbit::OrbitSample& s) {
        if (s.n <= warmup) return;
        const mpq_class norm = orbit::circle_norm(s.y());
        if (norm > out.max_norm) out.max_norm = norm;
        if (norm >= bound && !out.first_violation) out.first_violation = s.n;
    });
    out.holds = !out.first_violation.has_value();
    out.gate = bound * poly::length(p) < 1;
    return out;
}

}  // namespace powfrac::analyze
