#pragma once

// JSON forms of the library types. Rationals travel as "p/q" strings and
// multiprecision floats as decimal strings with enough digits to round-trip
// at their own precision.

#include <json.hpp>

#include "ghostmgf/distengine.hpp"
#include "ghostmgf/ghostrec.hpp"
#include "ghostmgf/mcoracle.hpp"
#include "ghostmgf/momentlab.hpp"
#include "ghostmgf/zerolab.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& x);
  static void from_json(const json& j, mpq_class& x);
};

}  // namespace nlohmann

namespace ghostmgf {

using Json = nlohmann::json;

void to_json(Json& j, const Poly& p);
void from_json(const Json& j, Poly& p);
void to_json(Json& j, const LinFactor& f);
void from_json(const Json& j, LinFactor& f);
void to_json(Json& j, const RatFun& r);
void from_json(const Json& j, RatFun& r);
void to_json(Json& j, const ProblemSpec& s);
void from_json(const Json& j, ProblemSpec& s);
void to_json(Json& j, const PartialFractionTerm& t);
void from_json(const Json& j, PartialFractionTerm& t);
void to_json(Json& j, const DensityModel& d);
void from_json(const Json& j, DensityModel& d);
void to_json(Json& j, const CumulantSeries& c);
void from_json(const Json& j, CumulantSeries& c);
void to_json(Json& j, const RescaledDiagnostics& d);
void from_json(const Json& j, RescaledDiagnostics& d);
void to_json(Json& j, const GridPoint& g);
void from_json(const Json& j, GridPoint& g);
void to_json(Json& j, const ZeroReport& z);
void from_json(const Json& j, ZeroReport& z);
void to_json(Json& j, const JansonComparison& c);
void from_json(const Json& j, JansonComparison& c);
void to_json(Json& j, const K3Certificate& c);
void from_json(const Json& j, K3Certificate& c);
void to_json(Json& j, const ClusterPoint& p);
void from_json(const Json& j, ClusterPoint& p);
void to_json(Json& j, const SimSpec& s);
void from_json(const Json& j, SimSpec& s);
void to_json(Json& j, const Histogram& h);
void from_json(const Json& j, Histogram& h);
void to_json(Json& j, const SimResult& r);
void from_json(const Json& j, SimResult& r);

/// Decimal string form of a float; parse back with BigFloat::parse at the same precision.
Json big_to_json(const BigFloat& x);
/// [re, im] as decimal strings.
Json big_to_json(const BigComplex& z);
BigComplex complex_from_json(const Json& j, mpfr_prec_t bits);

/// Exact field-by-field equality, including every zero.
bool same_report(const ZeroReport& a, const ZeroReport& b);

/// "re,im,kind" rows for zeros and poles.
std::string zeros_to_csv(const ZeroReport& z);
/// "bin_lo,bin_hi,count" rows.
std::string histogram_to_csv(const Histogram& h);

}  // namespace ghostmgf
