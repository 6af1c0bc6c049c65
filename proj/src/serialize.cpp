#include "ghostmgf/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace nlohmann {

void adl_serializer<mpq_class>::to_json(json& j, const mpq_class& x) { j = ghostmgf::to_string(x); }

void adl_serializer<mpq_class>::from_json(const json& j, mpq_class& x) {
  if (j.is_number_integer()) {
    x = mpq_class(j.get<long>());
    return;
  }
  x = ghostmgf::parse_scalar(j.get<std::string>());
}

}  // namespace nlohmann

namespace ghostmgf {

void to_json(Json& j, const Poly& p) { j = p.coeffs(); }
void from_json(const Json& j, Poly& p) { p = Poly(j.get<std::vector<Scalar>>()); }

void to_json(Json& j, const LinFactor& f) { j = Json{{"pole", f.pole}, {"multiplicity", f.multiplicity}}; }
void from_json(const Json& j, LinFactor& f) {
  j.at("pole").get_to(f.pole);
  j.at("multiplicity").get_to(f.multiplicity);
}

void to_json(Json& j, const RatFun& r) { j = Json{{"numer", r.numer()}, {"factors", r.denom()}}; }
void from_json(const Json& j, RatFun& r) {
  r = RatFun(j.at("numer").get<Poly>(), j.at("factors").get<std::vector<LinFactor>>());
}

void to_json(Json& j, const ProblemSpec& s) { j = Json{{"k", s.k}, {"m", s.m}, {"n", s.n}}; }
void from_json(const Json& j, ProblemSpec& s) {
  j.at("k").get_to(s.k);
  j.at("m").get_to(s.m);
  j.at("n").get_to(s.n);
}

void to_json(Json& j, const PartialFractionTerm& t) {
  j = Json{{"pole", t.pole}, {"order", t.order}, {"coefficient", t.coefficient}};
}
void from_json(const Json& j, PartialFractionTerm& t) {
  j.at("pole").get_to(t.pole);
  j.at("order").get_to(t.order);
  j.at("coefficient").get_to(t.coefficient);
}

void to_json(Json& j, const DensityModel& d) {
  j = Json::array();
  for (const auto& t : d.terms) j.push_back(Json{{"rate", t.rate}, {"degree", t.degree}, {"weight", t.weight}});
  j = Json{{"terms", j}};
}
void from_json(const Json& j, DensityModel& d) {
  d.terms.clear();
  for (const auto& e : j.at("terms")) {
    DensityModel::Term t;
    e.at("rate").get_to(t.rate);
    e.at("degree").get_to(t.degree);
    e.at("weight").get_to(t.weight);
    d.terms.push_back(t);
  }
}

void to_json(Json& j, const CumulantSeries& c) { j = c.kappas; }
void from_json(const Json& j, CumulantSeries& c) { c.kappas = j.get<std::vector<Scalar>>(); }

void to_json(Json& j, const RescaledDiagnostics& d) {
  j = Json{{"n", d.n},
           {"p_max", d.p_max},
           {"scaled", d.scaled},
           {"tilde", d.tilde},
           {"variance_limit", d.variance_limit},
           {"scaled_within_factorial_bounds", d.scaled_within_factorial_bounds},
           {"cumulant_coefficients_log_concave", d.cumulant_coefficients_log_concave}};
}
void from_json(const Json& j, RescaledDiagnostics& d) {
  j.at("n").get_to(d.n);
  j.at("p_max").get_to(d.p_max);
  j.at("scaled").get_to(d.scaled);
  j.at("tilde").get_to(d.tilde);
  j.at("variance_limit").get_to(d.variance_limit);
  j.at("scaled_within_factorial_bounds").get_to(d.scaled_within_factorial_bounds);
  j.at("cumulant_coefficients_log_concave").get_to(d.cumulant_coefficients_log_concave);
}

void to_json(Json& j, const GridPoint& g) { j = Json::array({g.x, g.value}); }
void from_json(const Json& j, GridPoint& g) {
  g.x = j.at(0).get<double>();
  g.value = j.at(1).get<double>();
}

Json big_to_json(const BigFloat& x) { return x.to_string(); }
Json big_to_json(const BigComplex& z) { return Json::array({z.re.to_string(), z.im.to_string()}); }

BigComplex complex_from_json(const Json& j, mpfr_prec_t bits) {
  return BigComplex(BigFloat::parse(j.at(0).get<std::string>(), bits), BigFloat::parse(j.at(1).get<std::string>(), bits));
}

void to_json(Json& j, const ZeroReport& z) {
  Json zeros = Json::array();
  for (const auto& x : z.zeros) zeros.push_back(big_to_json(x));
  j = Json{{"spec", z.spec},
           {"precision_bits", z.precision_bits},
           {"working_bits", z.working_bits},
           {"zeros", zeros},
           {"poles", z.poles},
           {"disk_radius", z.disk_radius},
           {"min_zero_modulus", big_to_json(z.min_zero_modulus)},
           {"zero_free", z.zero_free},
           {"winding", z.winding},
           {"zeros_inside", z.zeros_inside},
           {"real_zeros", z.real_zeros},
           {"conjugate_pairs", z.conjugate_pairs},
           {"min_real_part", big_to_json(z.min_real_part)},
           {"vieta_residual", z.vieta_residual},
           {"conjugate_closed", z.conjugate_closed}};
}

void from_json(const Json& j, ZeroReport& z) {
  j.at("spec").get_to(z.spec);
  z.precision_bits = j.at("precision_bits").get<mpfr_prec_t>();
  z.working_bits = j.at("working_bits").get<mpfr_prec_t>();
  const mpfr_prec_t bits = z.precision_bits;
  z.zeros.clear();
  for (const auto& e : j.at("zeros")) z.zeros.push_back(complex_from_json(e, bits));
  j.at("poles").get_to(z.poles);
  j.at("disk_radius").get_to(z.disk_radius);
  z.min_zero_modulus = BigFloat::parse(j.at("min_zero_modulus").get<std::string>(), bits);
  j.at("zero_free").get_to(z.zero_free);
  j.at("winding").get_to(z.winding);
  j.at("zeros_inside").get_to(z.zeros_inside);
  j.at("real_zeros").get_to(z.real_zeros);
  j.at("conjugate_pairs").get_to(z.conjugate_pairs);
  z.min_real_part = BigFloat::parse(j.at("min_real_part").get<std::string>(), bits);
  j.at("vieta_residual").get_to(z.vieta_residual);
  j.at("conjugate_closed").get_to(z.conjugate_closed);
}

bool same_report(const ZeroReport& a, const ZeroReport& b) {
  if (a.zeros.size() != b.zeros.size()) return false;
  for (std::size_t i = 0; i < a.zeros.size(); ++i) {
    if (!(a.zeros[i].re == b.zeros[i].re) || !(a.zeros[i].im == b.zeros[i].im)) return false;
  }
  return a.spec == b.spec && a.poles == b.poles && a.disk_radius == b.disk_radius &&
         a.min_zero_modulus == b.min_zero_modulus && a.zero_free == b.zero_free && a.winding == b.winding &&
         a.zeros_inside == b.zeros_inside && a.real_zeros == b.real_zeros && a.conjugate_pairs == b.conjugate_pairs &&
         a.min_real_part == b.min_real_part && a.vieta_residual == b.vieta_residual &&
         a.conjugate_closed == b.conjugate_closed && a.precision_bits == b.precision_bits &&
         a.working_bits == b.working_bits;
}

void to_json(Json& j, const JansonComparison& c) {
  j = Json{{"f_numerator", c.f_numerator},
           {"j_numerator", c.j_numerator},
           {"difference", c.difference},
           {"equal", c.equal}};
}
void from_json(const Json& j, JansonComparison& c) {
  j.at("f_numerator").get_to(c.f_numerator);
  j.at("j_numerator").get_to(c.j_numerator);
  j.at("difference").get_to(c.difference);
  j.at("equal").get_to(c.equal);
}

void to_json(Json& j, const K3Certificate& c) {
  j = Json{{"passed", c.passed},
           {"radius", c.radius},
           {"janson_at_radius", c.janson_at_radius},
           {"three_r_squared", c.three_r_squared},
           {"r_squared", c.r_squared},
           {"janson_zeros", c.janson_zeros},
           {"difference_is_t_squared", c.difference_is_t_squared}};
}
void from_json(const Json& j, K3Certificate& c) {
  j.at("passed").get_to(c.passed);
  j.at("radius").get_to(c.radius);
  j.at("janson_at_radius").get_to(c.janson_at_radius);
  j.at("three_r_squared").get_to(c.three_r_squared);
  j.at("r_squared").get_to(c.r_squared);
  j.at("janson_zeros").get_to(c.janson_zeros);
  j.at("difference_is_t_squared").get_to(c.difference_is_t_squared);
}

void to_json(Json& j, const ClusterPoint& p) { j = Json{{"s", p.s}, {"gap", p.gap}, {"multiplicity", p.multiplicity}}; }
void from_json(const Json& j, ClusterPoint& p) {
  j.at("s").get_to(p.s);
  j.at("gap").get_to(p.gap);
  j.at("multiplicity").get_to(p.multiplicity);
}

void to_json(Json& j, const SimSpec& s) { j = Json{{"k", s.k}, {"m", s.m}, {"n", s.n}}; }
void from_json(const Json& j, SimSpec& s) {
  j.at("k").get_to(s.k);
  j.at("m").get_to(s.m);
  j.at("n").get_to(s.n);
}

void to_json(Json& j, const Histogram& h) { j = Json{{"edges", h.edges}, {"counts", h.counts}}; }
void from_json(const Json& j, Histogram& h) {
  j.at("edges").get_to(h.edges);
  j.at("counts").get_to(h.counts);
}

void to_json(Json& j, const SimResult& r) {
  j = Json{{"spec", r.spec},         {"samples", r.samples},
           {"seed", r.seed},         {"mean", r.mean},
           {"variance", r.variance}, {"histogram", r.histogram},
           {"empirical_cdf_at", r.empirical_cdf_at}};
}
void from_json(const Json& j, SimResult& r) {
  j.at("spec").get_to(r.spec);
  j.at("samples").get_to(r.samples);
  j.at("seed").get_to(r.seed);
  j.at("mean").get_to(r.mean);
  j.at("variance").get_to(r.variance);
  j.at("histogram").get_to(r.histogram);
  j.at("empirical_cdf_at").get_to(r.empirical_cdf_at);
}

std::string zeros_to_csv(const ZeroReport& z) {
  std::ostringstream out;
  out << "re,im,kind\n";
  for (const auto& x : z.zeros) out << x.re.to_string(17) << ',' << x.im.to_string(17) << ",zero\n";
  for (const auto& p : z.poles) {
    const std::string re = BigFloat(p.pole, z.precision_bits).to_string(17);
    for (int i = 0; i < p.multiplicity; ++i) out << re << ",0,pole\n";
  }
  return out.str();
}

std::string histogram_to_csv(const Histogram& h) {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count\n";
  char buf[64];
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,", h.edges[b], h.edges[b + 1]);
    out << buf << h.counts[b] << '\n';
  }
  return out.str();
}

}  // namespace ghostmgf
