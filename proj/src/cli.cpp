#include "ghostmgf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "ghostmgf/serialize.hpp"

namespace ghostmgf::cli {
namespace {

const std::vector<std::string> kCommands = {"mgf",      "ghost",           "density",        "cdf",
                                            "moments",  "cumulants",       "zeros",          "verify-diskfree",
                                            "janson-compare", "clusters",  "simulate",       "sweep",
                                            "reproduce-figure"};

const std::vector<std::string> kFigures = {"densities", "density3", "zeros20", "zeros5-12-20"};

const std::vector<std::string> kSweepTemplates = {"mgf", "cumulants", "moments", "zeros", "verify-diskfree",
                                                  "janson-compare"};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Config {
  std::string command;
  int k = -1;
  std::string m;
  std::string n;
  int d = -1;
  int order = 10;
  long precision = 256;
  long samples = 100000;
  std::uint64_t seed = 0;
  double x_max = 4.0;
  int points = 201;
  int bins = 50;
  std::vector<double> probes;
  std::string format = "json";
  std::string output;
  std::string figure;
  std::string k_range;
  std::string m_range;
  std::string n_range;
  std::string sweep_template = "verify-diskfree";
  bool all_orders = false;
  unsigned threads = 0;
};

struct Outcome {
  std::string text;
  int code = kOk;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* kind_of(int code) {
  switch (code) {
    case kUsage: return "usage";
    case kInvalidSpec: return "invalid_spec";
    case kUnknownCommand: return "unknown_command";
    case kUnwritablePath: return "unwritable_path";
    case kComputationFailed: return "computation_failed";
    default: return "failure";
  }
}

int report_error(std::ostream& err, int code, const std::string& message) {
  err << Json{{"error", {{"code", code}, {"kind", kind_of(code)}, {"message", message}}}}.dump() << "\n";
  return code;
}

long default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0') throw Failure(kUsage, std::string(kPrecisionEnv) + " is not an integer: '" + env + "'");
  return bits;
}

ProblemSpec spec_of(const Config& c, bool need_positive_k = false) {
  if (c.k < 0 || c.m.empty() || c.n.empty()) throw Failure(kUsage, c.command + " needs --k, --m and --n");
  if (need_positive_k && c.k < 1) throw Failure(kInvalidSpec, c.command + " needs k >= 1");
  return make_spec(c.k, parse_scalar(c.m), parse_scalar(c.n));
}

SimSpec sim_spec_of(const Config& c) {
  const ProblemSpec s = spec_of(c, true);
  if (!s.is_integral()) throw Failure(kInvalidSpec, "simulation needs integer m and n");
  return {s.k, static_cast<int>(s.m.get_num().get_si()), static_cast<int>(s.n.get_num().get_si())};
}

void require_json(const Config& c) {
  if (c.format != "json") throw Failure(kUsage, c.command + " has no csv form");
}

Json display_form(const RatFun& r) {
  Json factors = Json::array();
  for (const auto& f : r.denom()) {
    factors.push_back({{"a", Scalar(f.pole.get_num())}, {"b", Scalar(f.pole.get_den())}, {"multiplicity", f.multiplicity}});
  }
  return {{"numerator", r.display_numerator()}, {"factors", factors}};
}

Json cancellations_json(const GhostTable& table) {
  Json out = Json::array();
  for (const auto& c : table.cancellations()) {
    out.push_back({{"i", c.i}, {"j", c.j}, {"pole", c.factor.pole}, {"multiplicity", c.factor.multiplicity}});
  }
  return out;
}

Outcome cmd_generating(const Config& c, bool ghost) {
  require_json(c);
  const ProblemSpec spec = spec_of(c);
  const int d = ghost ? c.d : 0;
  if (ghost && (d < 0 || d > spec.k)) throw Failure(kUsage, "ghost needs 0 <= --d <= k");
  const GhostTable table = build_table(spec);
  const RatFun& f = table.at(spec.k, spec.k - d);
  Json j{{"spec", spec}};
  if (ghost) j["d"] = d;
  j["mgf"] = f;
  j["display"] = display_form(f);
  j["cancellations"] = cancellations_json(table);
  return {dump(j)};
}

std::vector<GridPoint> cdf_grid(const DensityModel& d, double x_max, int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(x_max > 0)) throw std::invalid_argument("grid needs x_max > 0");
  std::vector<GridPoint> grid;
  for (int i = 0; i < points; ++i) {
    const double x = i == points - 1 ? x_max : x_max * i / (points - 1);
    grid.push_back({x, cdf_eval(d, x).to_double()});
  }
  return grid;
}

Outcome cmd_density(const Config& c, bool cumulative) {
  const ProblemSpec spec = spec_of(c, true);
  const RatFun f = mgf(spec);
  const DensityModel model = density(f);
  const auto grid = cumulative ? cdf_grid(model, c.x_max, c.points) : density_grid(model, c.x_max, c.points);
  const char* name = cumulative ? "cdf" : "density";
  if (c.format == "csv") return {grid_to_csv(grid, name)};
  Json j{{"spec", spec}, {"density", model}, {"grid", grid}};
  if (!cumulative) j["partial_fractions"] = partial_fractions(f);
  return {dump(j)};
}

Outcome cmd_moments(const Config& c, bool with_moments) {
  require_json(c);
  if (c.order < 1) throw Failure(kUsage, "--order must be at least 1");
  const ProblemSpec spec = spec_of(c);
  const RatFun f = mgf(spec);
  const auto moments = raw_moments(f, c.order);
  const CumulantSeries kappas = cumulants_from_moments(moments);
  Json j{{"spec", spec}};
  if (with_moments) j["moments"] = moments;
  j["cumulants"] = kappas;
  Json diag{{"all_positive", all_positive(kappas)},
            {"mean_closed_form", mean_closed_form(spec.k, spec.m, spec.n)},
            {"mean_matches_closed_form", kappas.kappa(1) == mean_closed_form(spec.k, spec.m, spec.n)}};
  if (c.order >= 2) diag["variance_positive"] = kappas.kappa(2) > 0;
  if (with_moments && spec.is_integral() && spec.m == spec.k && spec.n == spec.k && spec.k >= 1 && c.order >= 2) {
    diag["rescaled"] = rescaled_diagnostics(spec.k, kappas);
  }
  j["diagnostics"] = diag;
  return {dump(j)};
}

Outcome cmd_zeros(const Config& c) {
  const ProblemSpec spec = spec_of(c, true);
  const ZeroReport rep = zero_free_disk(spec, c.precision);
  if (c.format == "csv") return {zeros_to_csv(rep)};
  return {dump(Json(rep))};
}

Json diskfree_summary(const ZeroReport& rep) {
  return {{"spec", rep.spec},
          {"zero_free", rep.zero_free},
          {"winding", rep.winding},
          {"zeros_inside", rep.zeros_inside},
          {"disk_radius", rep.disk_radius},
          {"min_zero_modulus", big_to_json(rep.min_zero_modulus)},
          {"degree", rep.zeros.size()},
          {"real_zeros", rep.real_zeros},
          {"conjugate_pairs", rep.conjugate_pairs},
          {"min_real_part", big_to_json(rep.min_real_part)},
          {"precision_bits", rep.precision_bits}};
}

Outcome cmd_verify(const Config& c) {
  require_json(c);
  const ZeroReport rep = zero_free_disk(spec_of(c, true), c.precision);
  return {dump(diskfree_summary(rep)), rep.zero_free ? kOk : kVerdictFailed};
}

/// Verdict for the identities that are known to hold: J == F for k <= 2 and P_J - P == t^2 for k = 3.
Json janson_json(const ProblemSpec& spec, bool& ok) {
  const JansonComparison cmp = janson_compare(spec);
  Json j{{"spec", spec}, {"comparison", cmp}};
  ok = true;
  if (spec.k <= 2) {
    ok = cmp.equal;
    j["verdict"] = ok;
  } else if (spec.k == 3) {
    ok = cmp.difference == Poly({0, 0, 1});
    j["verdict"] = ok;
    if (spec.m >= 3 && spec.n >= 3) {
      const K3Certificate cert = zero_free_k3_certificate(spec.m, spec.n);
      j["certificate"] = cert;
      ok = ok && cert.passed;
    }
  } else {
    j["verdict"] = nullptr;
  }
  return j;
}

Outcome cmd_janson(const Config& c) {
  require_json(c);
  bool ok = true;
  Json j = janson_json(spec_of(c, true), ok);
  return {dump(j), ok ? kOk : kVerdictFailed};
}

Outcome cmd_clusters(const Config& c) {
  if (c.k < 1) throw Failure(kUsage, "clusters needs --k >= 1");
  std::optional<Scalar> n;
  if (!c.n.empty()) n = parse_scalar(c.n);
  if (n && *n <= c.k - 1) throw Failure(kInvalidSpec, "clusters needs n > k - 1");
  std::optional<Scalar> scale;  // t = m n s / k when m and n are both given
  if (n && !c.m.empty()) scale = parse_scalar(c.m) * *n / c.k;
  const auto points = asymptotic_clusters(c.k, n);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "s,gap,multiplicity\n";
    for (const auto& p : points) out << to_string(p.s) << ',' << p.gap << ',' << p.multiplicity << '\n';
    return {out.str()};
  }
  Json arr = Json::array();
  for (const auto& p : points) {
    Json e = p;
    if (scale) e["t"] = Scalar(p.s * *scale);
    arr.push_back(e);
  }
  Json j{{"k", c.k}, {"points", arr}};
  if (n) j["n"] = *n;
  // Without n the count per cluster extends the enumerated small cases.
  if (!n) j["multiplicity_inferred"] = true;
  if (!c.m.empty()) j["m"] = parse_scalar(c.m);
  return {dump(j)};
}

Outcome cmd_simulate(const Config& c) {
  if (c.samples < 1) throw Failure(kUsage, "--samples must be at least 1");
  if (c.bins < 1) throw Failure(kUsage, "--bins must be at least 1");
  const SimResult res = monte_carlo(sim_spec_of(c), c.samples, c.seed, c.probes, c.bins, c.threads);
  if (c.format == "csv") return {histogram_to_csv(res.histogram)};
  return {dump(Json(res))};
}

struct Range {
  int lo = 0;
  int hi = -1;
};

Range parse_range(const std::string& text, const char* name) {
  if (text.empty()) throw Failure(kUsage, std::string("sweep needs --") + name + "-range");
  Range r;
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    }
  } catch (const std::logic_error&) {
    throw Failure(kUsage, std::string("malformed --") + name + "-range '" + text + "', expected lo:hi");
  }
  return r;
}

Json sweep_unit(const Config& c, const ProblemSpec& spec, bool& ok) {
  const std::string& what = c.sweep_template;
  if (what == "mgf") {
    ok = true;
    return {{"spec", spec}, {"ok", true}, {"mgf", mgf(spec)}};
  }
  if (what == "cumulants" || what == "moments") {
    const CumulantSeries kappas = cumulants(mgf(spec), c.order);
    ok = all_positive(kappas);
    return {{"spec", spec}, {"ok", ok}, {"cumulants", kappas}};
  }
  if (what == "zeros" || what == "verify-diskfree") {
    const ZeroReport rep = zero_free_disk(spec, c.precision);
    ok = what == "zeros" ? rep.conjugate_closed : rep.zero_free;
    Json j = diskfree_summary(rep);
    j["ok"] = ok;
    return j;
  }
  Json j = janson_json(spec, ok);
  j["ok"] = ok;
  return j;
}

Outcome cmd_sweep(const Config& c) {
  if (std::find(kSweepTemplates.begin(), kSweepTemplates.end(), c.sweep_template) == kSweepTemplates.end()) {
    throw Failure(kUsage, "sweep cannot run template '" + c.sweep_template + "'");
  }
  const Range kr = parse_range(c.k_range, "k"), mr = parse_range(c.m_range, "m"), nr = parse_range(c.n_range, "n");
  std::vector<std::array<int, 3>> specs;
  for (int k = kr.lo; k <= kr.hi; ++k) {
    for (int m = mr.lo; m <= mr.hi; ++m) {
      for (int n = nr.lo; n <= nr.hi; ++n) {
        if (c.all_orders || (k <= m && m <= n)) specs.push_back({k, m, n});
      }
    }
  }

  std::vector<Json> results(specs.size());
  std::vector<char> ok(specs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      const auto [k, m, n] = specs[i];
      bool good = false;
      try {
        results[i] = sweep_unit(c, make_spec(k, m, n), good);
      } catch (const std::exception& e) {
        results[i] = {{"spec", {{"k", k}, {"m", std::to_string(m)}, {"n", std::to_string(n)}}},
                      {"ok", false},
                      {"error", e.what()}};
        good = false;
      }
      ok[i] = good ? 1 : 0;
    }
  };
  unsigned threads = c.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(specs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const long failed = std::count(ok.begin(), ok.end(), 0);
  std::ostringstream out;
  if (c.format == "csv") {
    out << "k,m,n,ok\n";
    for (std::size_t i = 0; i < specs.size(); ++i) {
      out << specs[i][0] << ',' << specs[i][1] << ',' << specs[i][2] << ',' << (ok[i] ? "true" : "false") << '\n';
    }
  } else {
    out << Json(results).dump(2) << "\n";
  }
  out << "# sweep " << c.sweep_template << ": " << specs.size() << " specs, " << failed << " failed\n";
  return {out.str(), failed == 0 ? kOk : kVerdictFailed};
}

Outcome cmd_figure(const Config& c) {
  const std::string& id = c.figure;
  if (id == "densities") {
    // n = 1..25 on [0, 4].
    std::ostringstream csv;
    csv << "n,x,density\n";
    Json curves = Json::array();
    char buf[64];
    for (int n = 1; n <= 25; ++n) {
      const auto grid = density_grid(density(mgf(make_spec(n, n, n))), 4.0, 201);
      curves.push_back({{"n", n}, {"grid", grid}});
      for (const auto& g : grid) {
        std::snprintf(buf, sizeof buf, "%d,%.10g,%.10g\n", n, g.x, g.value);
        csv << buf;
      }
    }
    if (c.format == "csv") return {csv.str()};
    return {dump({{"figure", id}, {"curves", curves}})};
  }
  if (id == "density3") {
    const ProblemSpec spec = make_spec(3, 3, 3);
    const auto grid = density_grid(density(mgf(spec)), 4.0, 201);
    if (c.format == "csv") return {grid_to_csv(grid)};
    return {dump({{"figure", id}, {"spec", spec}, {"grid", grid}})};
  }
  if (id == "zeros20" || id == "zeros5-12-20") {
    const ProblemSpec spec = id == "zeros20" ? make_spec(20, 20, 20) : make_spec(5, 12, 20);
    const ZeroReport rep = zero_free_disk(spec, c.precision);
    if (c.format == "csv") return {zeros_to_csv(rep)};
    Json j{{"figure", id}, {"report", rep}};
    if (id == "zeros5-12-20") {
      Json pts = Json::array();
      const Scalar scale = spec.m * spec.n / spec.k;
      for (const auto& p : asymptotic_clusters(spec.k, spec.n)) {
        Json e = p;
        e["t"] = Scalar(p.s * scale);
        pts.push_back(e);
      }
      j["clusters"] = pts;
    }
    return {dump(j)};
  }
  throw Failure(kUsage, "unknown figure '" + id + "'");
}

Outcome dispatch(const Config& c) {
  const std::string& cmd = c.command;
  if (cmd == "mgf") return cmd_generating(c, false);
  if (cmd == "ghost") return cmd_generating(c, true);
  if (cmd == "density") return cmd_density(c, false);
  if (cmd == "cdf") return cmd_density(c, true);
  if (cmd == "moments") return cmd_moments(c, true);
  if (cmd == "cumulants") return cmd_moments(c, false);
  if (cmd == "zeros") return cmd_zeros(c);
  if (cmd == "verify-diskfree") return cmd_verify(c);
  if (cmd == "janson-compare") return cmd_janson(c);
  if (cmd == "clusters") return cmd_clusters(c);
  if (cmd == "simulate") return cmd_simulate(c);
  if (cmd == "sweep") return cmd_sweep(c);
  if (cmd == "reproduce-figure") return cmd_figure(c);
  throw Failure(kUnknownCommand, "unknown command '" + cmd + "'");
}

const char* kFooter = R"(Exit codes:
  0  success
  1  verification false (verify-diskfree, janson-compare) or sweep with failures
  2  usage error: malformed flags or option values
  3  invalid spec: k, m, n rejected by the recursion
  4  unknown command
  5  output path not writable
  6  computation failed: precision or root-finding limits reached

Environment:
  GHOSTMGF_PRECISION  default for --precision (bits, default 256)

Errors are written to stderr as {"error": {"code", "kind", "message"}}.)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args[0].rfind('-', 0) != 0 &&
      std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end()) {
    return report_error(err, kUnknownCommand, "unknown command '" + args[0] + "'");
  }

  Config c;
  try {
    c.precision = default_precision();
  } catch (const Failure& f) {
    return report_error(err, f.code(), f.what());
  }

  CLI::App app{"Exact distribution of the minimum k-matching cost on random bipartite graphs", "ghostmgf"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--k", c.k, "matching size");
  app.add_option("--m", c.m, "left vertex count, integer or p/q");
  app.add_option("--n", c.n, "right vertex count, integer or p/q");
  app.add_option("--d", c.d, "ghost edge count (ghost)");
  app.add_option("--order", c.order, "number of moments and cumulants")->capture_default_str();
  app.add_option("--precision", c.precision, "working precision in bits")
      ->check(CLI::Range(32L, 1L << 20))
      ->capture_default_str();
  app.add_option("--samples", c.samples, "Monte Carlo replications")->capture_default_str();
  app.add_option("--seed", c.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--x-max", c.x_max, "right end of the evaluation grid")->capture_default_str();
  app.add_option("--points", c.points, "grid size")->capture_default_str();
  app.add_option("--bins", c.bins, "histogram bins (simulate)")->capture_default_str();
  app.add_option("--probe", c.probes, "points for the empirical CDF (simulate)")->delimiter(',');
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("-o,--output", c.output, "write to this file instead of stdout");
  app.add_option("--k-range", c.k_range, "sweep range lo:hi");
  app.add_option("--m-range", c.m_range, "sweep range lo:hi");
  app.add_option("--n-range", c.n_range, "sweep range lo:hi");
  app.add_option("--template", c.sweep_template, "command run per spec (sweep)")
      ->check(CLI::IsMember(kSweepTemplates))
      ->capture_default_str();
  app.add_flag("--all-orders", c.all_orders, "sweep every (k, m, n), not only k <= m <= n");
  app.add_option("--threads", c.threads, "worker threads, 0 = all cores");

  app.add_subcommand("mgf", "moment generating function F_{k,m,n}");
  app.add_subcommand("ghost", "ghost generating function F^(d)_{k,m,n}");
  app.add_subcommand("density", "density of the cost on a grid");
  app.add_subcommand("cdf", "distribution function of the cost on a grid");
  app.add_subcommand("moments", "raw moments, cumulants and diagnostics");
  app.add_subcommand("cumulants", "exact cumulants");
  app.add_subcommand("zeros", "zeros and poles of F_{k,m,n}");
  app.add_subcommand("verify-diskfree", "check that F_{k,m,n} has no zero in |t| < mn/k");
  app.add_subcommand("janson-compare", "compare F_{k,m,n} with the default-denominator ratio");
  app.add_subcommand("clusters", "limit cluster points of the zeros");
  app.add_subcommand("simulate", "Monte Carlo samples of the cost");
  app.add_subcommand("sweep", "run a command over a grid of specs");
  app.add_subcommand("reproduce-figure", "data for a figure")
      ->add_option("figure", c.figure, "figure id")
      ->required()
      ->check(CLI::IsMember(kFigures));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(err, kUsage, e.what());
  }
  c.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::out | std::ios::trunc);
    if (!file) return report_error(err, kUnwritablePath, "cannot write '" + c.output + "'");
  }
  std::ostream& sink = c.output.empty() ? out : file;

  Outcome result;
  try {
    result = dispatch(c);
  } catch (const Failure& f) {
    return report_error(err, f.code(), f.what());
  } catch (const SpecError& e) {
    return report_error(err, kInvalidSpec, e.what());
  } catch (const ParseError& e) {
    return report_error(err, kInvalidSpec, e.what());
  } catch (const DivisionByZero& e) {
    return report_error(err, kInvalidSpec, e.what());
  } catch (const PrecisionError& e) {
    return report_error(err, kComputationFailed, e.what());
  } catch (const RootFindingError& e) {
    return report_error(err, kComputationFailed, e.what());
  } catch (const WindingError& e) {
    return report_error(err, kComputationFailed, e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(err, kUsage, e.what());
  } catch (const std::exception& e) {
    return report_error(err, kComputationFailed, e.what());
  }
  sink << result.text;
  sink.flush();
  if (!sink) return report_error(err, kUnwritablePath, "write to '" + c.output + "' failed");
  return result.code;
}

}  // namespace ghostmgf::cli
