#include <algorithm>
#include <cmath>
#include <map>

#include "powfrac/analyze.hpp"
#include "powfrac/error.hpp"

namespace powfrac::analyze {

namespace {

constexpr std::string_view kModule = "analyze";

double circle_gap(double a, double b) {
    const double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

Cluster summarize(std::vector<mpq_class> members) {
    std::sort(members.begin(), members.end());
    Cluster c;
    c.population = static_cast<long>(members.size());
    c.center = members[(members.size() - 1) / 2];
    c.max_deviation = std::max<mpq_class>(c.center - members.front(), members.back() - c.center);
    return c;
}

}  // namespace

std::vector<mpq_class> LimitPointReport::centers() const {
    std::vector<mpq_class> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back(c.center);
    return out;
}

LimitPointReport cluster_limit_points(const std::vector<mpq_class>& y, const mpq_class& epsilon, long warmup) {
    if (epsilon <= 0 || epsilon >= mpq_class(1, 4)) {
        throw Error(ErrorKind::BadInput, kModule, "epsilon must lie in (0, 1/4)");
    }
    if (warmup < 0 || static_cast<long>(y.size()) <= warmup) {
        throw Error(ErrorKind::BadInput, kModule, "horizon must exceed the warmup");
    }
    const double eps = epsilon.get_d();
    std::multimap<double, std::size_t> anchors;
    std::vector<double> anchor_pos;
    std::vector<std::vector<mpq_class>> members;

    for (std::size_t i = static_cast<std::size_t>(warmup); i < y.size(); ++i) {
        const double v = y[i].get_d();
        std::size_t best = members.size();
        double best_gap = 0;
        auto scan = [&](double lo, double hi) {
            for (auto it = anchors.lower_bound(lo); it != anchors.end() && it->first <= hi; ++it) {
                const double g = circle_gap(v, it->first);
                if (g > eps) continue;
                if (best == members.size() || g < best_gap || (g == best_gap && it->second < best)) {
                    best = it->second;
                    best_gap = g;
                }
            }
        };
        scan(v - eps, v + eps);
        if (v - eps < 0) scan(v - eps + 1.0, 1.0);
        if (v + eps > 1) scan(0.0, v + eps - 1.0);
        if (best == members.size()) {
            anchors.emplace(v, members.size());
            anchor_pos.push_back(v);
            members.emplace_back();
        }
        members[best].push_back(y[i]);
    }

    LimitPointReport report;
    report.epsilon = epsilon;
    report.warmup = warmup;
    report.horizon = static_cast<long>(y.size());
    const mpq_class half(1, 2);
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (circle_gap(anchor_pos[k], 0.0) <= eps) {
            std::vector<mpq_class> low, high;
            for (auto& m : members[k]) (m >= half ? high : low).push_back(std::move(m));
            if (!low.empty()) report.clusters.push_back(summarize(std::move(low)));
            if (!high.empty()) report.clusters.push_back(summarize(std::move(high)));
        } else {
            report.clusters.push_back(summarize(std::move(members[k])));
        }
    }
    std::sort(report.clusters.begin(), report.clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.center < b.center; });
    return report;
}

LimitPointReport cluster_limit_points(const std::vector<orbit::OrbitSample>& samples, const mpq_class& epsilon,
                                      long warmup) {
    std::vector<mpq_class> y;
    y.reserve(samples.size());
    for (const auto& s : samples) y.push_back(s.y());
    return cluster_limit_points(y, epsilon, warmup);
}

bool pv_verify(const LimitPointReport& report, const mpz_class& L, const mpq_class& tol) {
    for (const auto& c : report.clusters) {
        const mpq_class scaled = c.center * L;
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        const mpq_class lo(k, L), hi(k + 1, L);
        if (c.center - lo > tol && hi - c.center > tol) return false;
    }
    return true;
}

}  // namespace powfrac::analyze
