#include "json_out.hpp"

#include "powfrac/report_io.hpp"

namespace powfrac::app {

Json tagged(const mpq_class& v, mp::Bits bits) { return Json{{"value", io::tagged_decimal(v, bits)}, {"bits", bits}}; }

Json tagged(const mp::Real& v) {
    return Json{{"value", v.to_fixed(io::decimal_digits(v.precision()))}, {"bits", v.precision()}};
}

Json tagged(double v) { return tagged(mpq_class(v), 53); }

Json exact(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return Json{{"value", c.get_str()}, {"exact", true}};
}

Json integer(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json to_json(const poly::AlgebraicNumber& a) {
    const auto& c = a.counts();
    Json j;
    j["polynomial"] = a.minpoly().to_string();
    j["class"] = std::string(poly::to_string(a.classification()));
    j["degree"] = a.degree();
    j["length"] = integer(poly::length(a.minpoly()));
    j["irreducibility"] = std::string(poly::to_string(a.irreducibility()));
    if (auto w = a.irreducibility_witness()) {
        j["irreducibility_witness_prime"] = *w;
    } else {
        j["irreducibility_witness_prime"] = nullptr;
    }
    j["monic"] = a.minpoly().is_monic();
    j["counts"] = Json{{"inside", c.inside}, {"on", c.on}, {"outside", c.outside}};
    const mp::Bits bits = a.conjugate_precision();
    j["alpha"] = Json{{"lo", tagged(a.alpha_interval().lo, bits)}, {"hi", tagged(a.alpha_interval().hi, bits)}};
    return j;
}

Json to_json(const orbit::OrbitSample& s) {
    Json y = s.y_exact ? exact(*s.y_exact) : tagged(s.y(), s.resolution);
    return Json{{"n", s.n}, {"x", integer(s.x)}, {"y", std::move(y)}, {"bits_used", s.bits_used}, {"exact", s.exact}};
}

Json to_json(const analyze::LimitPointReport& r, mp::Bits bits) {
    Json clusters = Json::array();
    for (const auto& c : r.clusters) {
        clusters.push_back(Json{{"center", tagged(c.center, bits)}, {"pop", c.population}, {"maxdev", tagged(c.max_deviation, bits)}});
    }
    return Json{{"clusters", std::move(clusters)},
                {"epsilon", exact(r.epsilon)},
                {"warmup", r.warmup},
                {"horizon", r.horizon}};
}

Json to_json(const analyze::PeriodReport& r) {
    return Json{{"pure", r.pure},
                {"period", r.period},
                {"preperiod", r.preperiod},
                {"modulus", r.modulus},
                {"lemma_violation", r.lemma_violation}};
}

Json to_json(const analyze::DifferenceStructure& d, mp::Bits bits) {
    Json diffs = Json::array();
    for (const auto& v : d.differences) diffs.push_back(tagged(v, bits));
    Json scaled = Json::array();
    for (const auto& v : d.scaled_irrational) scaled.push_back(tagged(v, bits));
    Json j{{"differences", std::move(diffs)}, {"L_common", integer(d.L_common)}, {"scaled_irrational", std::move(scaled)}};
    if (d.tau) {
        j["tau"] = tagged(*d.tau, bits);
    } else {
        j["tau"] = nullptr;
    }
    j["tau_proxy"] = d.tau_is_proxy;
    j["tau_in_range"] = d.tau_in_range;
    return j;
}

Json to_json(const analyze::ContractionReport& c, mp::Bits bits) {
    Json j{{"xi_prime", c.xi_prime.to_string()}, {"holds", c.holds}, {"max_norm", tagged(c.max_norm, bits)}};
    if (c.first_violation) {
        j["first_violation"] = *c.first_violation;
    } else {
        j["first_violation"] = nullptr;
    }
    j["gate_2eps_below_inverse_length"] = c.gate;
    return j;
}

Json to_json(const orbit::SmallnessReport& s, mp::Bits bits) {
    Json j{{"holds", s.holds}, {"sup_norm", tagged(s.sup_norm, bits)}};
    if (s.first_violation) {
        j["first_violation"] = *s.first_violation;
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

Json to_json(const salem::SalemContext& ctx) {
    Json phi = Json::array(), u = Json::array(), v = Json::array();
    for (int j = 0; j < ctx.m(); ++j) {
        const auto jj = static_cast<std::size_t>(j);
        phi.push_back(tagged(ctx.phi[jj]));
        u.push_back(tagged(ctx.U[jj]));
        v.push_back(tagged(ctx.V[jj]));
    }
    return Json{{"m", ctx.m()},      {"phi", std::move(phi)}, {"U", std::move(u)},
                {"V", std::move(v)}, {"H", tagged(ctx.H)},   {"q", ctx.q},
                {"L", integer(ctx.L())}, {"ell_residue", ctx.ell_residue}};
}

Json to_json(const salem::NearIntegerReport& r) {
    Json observed = Json::array();
    for (const auto& [k, cnt] : r.observed) observed.push_back(Json{{"integer", k}, {"count", cnt}});
    return Json{{"checked", r.checked},
                {"tail_start", r.tail_start},
                {"max_tail_distance", tagged(r.max_tail_distance)},
                {"envelope_nonincreasing", r.envelope_nonincreasing},
                {"residues_consistent", r.residues_consistent},
                {"observed", std::move(observed)}};
}

Json to_json(const salem::DensityReport& r) {
    const auto bins = static_cast<long>(r.histogram.size());
    const long start = bins ? static_cast<long>(r.lo * static_cast<double>(bins) + 0.5) : 0;
    return Json{{"interval", Json{{"lo", exact(mpq_class(start, bins))}, {"hi", exact(mpq_class(start + r.run_bins, bins))}}},
                {"run_bins", r.run_bins},
                {"bins", bins},
                {"max_gap", tagged(r.max_gap)},
                {"horizon", r.horizon},
                {"histogram", r.histogram},
                {"label", "evidence"}};
}

}  // namespace powfrac::app
