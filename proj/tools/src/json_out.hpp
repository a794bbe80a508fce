#ifndef POWFRAC_JSON_OUT_HPP
#define POWFRAC_JSON_OUT_HPP

#include <gmpxx.h>

#include "app.hpp"
#include "powfrac/analyze.hpp"
#include "powfrac/orbit.hpp"
#include "powfrac/poly_algebra.hpp"
#include "powfrac/real.hpp"
#include "powfrac/salem.hpp"

namespace powfrac::app {

/// {"value": decimal, "bits": b}; numbers never leave as bare floats.
Json tagged(const mpq_class& v, mp::Bits bits);
Json tagged(const mp::Real& v);
Json tagged(double v);
/// {"value": "p/q", "exact": true}.
Json exact(const mpq_class& v);
Json integer(const mpz_class& v);

Json to_json(const poly::AlgebraicNumber& a);
Json to_json(const orbit::OrbitSample& s);
Json to_json(const analyze::LimitPointReport& r, mp::Bits bits);
Json to_json(const analyze::PeriodReport& r);
Json to_json(const analyze::DifferenceStructure& d, mp::Bits bits);
Json to_json(const analyze::ContractionReport& c, mp::Bits bits);
Json to_json(const orbit::SmallnessReport& s, mp::Bits bits);
Json to_json(const salem::SalemContext& ctx);
Json to_json(const salem::NearIntegerReport& r);
Json to_json(const salem::DensityReport& r);

}  // namespace powfrac::app

#endif  // POWFRAC_JSON_OUT_HPP
