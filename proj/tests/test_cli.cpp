#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ghostmgf/cli.hpp"
#include "ghostmgf/serialize.hpp"

using ghostmgf::Json;
namespace cli = ghostmgf::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json error_of(const Run& r) { return Json::parse(r.err).at("error"); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("mgf output") {
    const Run r = run({"mgf", "--k", "3", "--m", "3", "--n", "3"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("display").at("numerator") == Json({"972", "-540", "96", "-6"}));
    CHECK(j.at("mgf").at("factors") == Json::parse(R"([{"pole":"3","multiplicity":5},{"pole":"4","multiplicity":1}])"));
    CHECK(j.at("mgf").get<ghostmgf::RatFun>() == ghostmgf::mgf(ghostmgf::make_spec(3, 3, 3)));
    CHECK(j.at("cancellations").empty());
  }

  TEST_CASE("rational spec and cancellation") {
    const Run r = run({"mgf", "--k", "3", "--m", "3", "--n", "10/3"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("display").at("numerator") == Json({"98000", "-23800", "1680"}));
    REQUIRE(j.at("cancellations").size() == 1);
    CHECK(j.at("cancellations").at(0).at("pole") == "4");
  }

  TEST_CASE("ghost") {
    const Run r = run({"ghost", "--k", "3", "--m", "3", "--n", "3", "--d", "1"});
    REQUIRE(r.code == cli::kOk);
    CHECK(Json::parse(r.out).at("display").at("numerator") == Json({"1782", "-1170", "252", "-18"}));
    CHECK(run({"ghost", "--k", "3", "--m", "3", "--n", "3"}).code == cli::kUsage);
  }

  TEST_CASE("moments and cumulants") {
    const Run r = run({"moments", "--k", "3", "--m", "3", "--n", "3", "--order", "3"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("cumulants") == Json({"49/36", "73/144", "8185/23328"}));
    CHECK(j.at("moments").at(0) == "49/36");
    CHECK(j.at("diagnostics").at("all_positive") == true);
    const Run c = run({"cumulants", "--k", "4", "--m", "4", "--n", "4", "--order", "1"});
    CHECK(Json::parse(c.out).at("cumulants") == Json({"205/144"}));
  }

  TEST_CASE("density, cdf and figure csv") {
    const Run d = run({"density", "--k", "3", "--m", "3", "--n", "3", "--format", "csv"});
    REQUIRE(d.code == cli::kOk);
    CHECK(d.out.rfind("x,density\n0,0\n", 0) == 0);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 202);
    const Run c = run({"cdf", "--k", "1", "--m", "3", "--n", "3", "--format", "csv", "--points", "2", "--x-max", "10"});
    CHECK(c.out == "x,cdf\n0,0\n10,1\n");
    const Run f = run({"reproduce-figure", "density3", "--format", "csv"});
    CHECK(f.out == d.out);
    CHECK(run({"reproduce-figure", "nope"}).code == cli::kUsage);
  }

  TEST_CASE("zeros and verification") {
    const Run z = run({"zeros", "--k", "3", "--m", "3", "--n", "3"});
    REQUIRE(z.code == cli::kOk);
    const auto rep = Json::parse(z.out).get<ghostmgf::ZeroReport>();
    CHECK(rep.zeros.size() == 3);
    CHECK(rep.zero_free);
    const Run v = run({"verify-diskfree", "--k", "4", "--m", "4", "--n", "4"});
    CHECK(v.code == cli::kOk);
    CHECK(Json::parse(v.out).at("zero_free") == true);
    const Run csv = run({"zeros", "--k", "3", "--m", "3", "--n", "3", "--format", "csv"});
    CHECK(csv.out.rfind("re,im,kind\n", 0) == 0);
  }

  TEST_CASE("janson and clusters") {
    const Run j = run({"janson-compare", "--k", "3", "--m", "5", "--n", "7"});
    CHECK(j.code == cli::kOk);
    CHECK(Json::parse(j.out).at("certificate").at("passed") == true);
    const Run c = run({"clusters", "--k", "2"});
    const Json cj = Json::parse(c.out);
    CHECK(cj.at("points").size() == 1);
    CHECK(cj.at("points").at(0).at("s") == "2");
    CHECK(cj.at("multiplicity_inferred") == true);
    const Run t = run({"clusters", "--k", "5", "--m", "12", "--n", "20"});
    CHECK(Json::parse(t.out).at("points").at(0).at("t") == "60");
  }

  TEST_CASE("simulate") {
    const std::vector<std::string> args = {"simulate", "--k", "2", "--m", "3", "--n", "3", "--samples", "300",
                                           "--seed", "5", "--probe", "0.1,0.5"};
    const Run a = run(args);
    REQUIRE(a.code == cli::kOk);
    const auto res = Json::parse(a.out).get<ghostmgf::SimResult>();
    CHECK(res.samples == 300);
    CHECK(res.empirical_cdf_at.size() == 2);
    CHECK(run(args).out == a.out);
    const Run h = run({"simulate", "--k", "2", "--m", "3", "--n", "3", "--samples", "100", "--format", "csv", "--bins", "4"});
    CHECK(h.out.rfind("bin_lo,bin_hi,count\n", 0) == 0);
    CHECK(std::count(h.out.begin(), h.out.end(), '\n') == 5);
    CHECK(run({"simulate", "--k", "2", "--m", "5/2", "--n", "3"}).code == cli::kInvalidSpec);
  }

  TEST_CASE("error codes") {
    Run r = run({"frobnicate"});
    CHECK(r.code == cli::kUnknownCommand);
    CHECK(error_of(r).at("kind") == "unknown_command");
    r = run({"mgf", "--k", "4", "--m", "3", "--n", "3"});
    CHECK(r.code == cli::kInvalidSpec);
    CHECK(error_of(r).at("code") == cli::kInvalidSpec);
    CHECK(run({"mgf", "--k", "2", "--m", "x/y", "--n", "3"}).code == cli::kInvalidSpec);
    CHECK(run({"mgf", "--k", "2", "--m", "3"}).code == cli::kUsage);
    CHECK(run({"mgf", "--k", "2", "--m", "3", "--n", "3", "--bogus"}).code == cli::kUsage);
    CHECK(run({"mgf", "--k", "2", "--m", "3", "--n", "3", "--format", "csv"}).code == cli::kUsage);
    CHECK(run({"mgf", "--k", "2", "--m", "3", "--n", "3", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"mgf", "--k", "2", "--m", "3", "--n", "3", "-o", "/nonexistent-dir/out.json"}).code == cli::kUnwritablePath);
    CHECK(run({"zeros", "--k", "3", "--m", "3", "--n", "3", "--precision", "8"}).code == cli::kUsage);
  }

  TEST_CASE("help documents the exit codes") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Exit codes") != std::string::npos);
    CHECK(r.out.find("GHOSTMGF_PRECISION") != std::string::npos);
    CHECK(r.out.find("unwritable") == std::string::npos);
    CHECK(r.out.find("output path not writable") != std::string::npos);
  }

  TEST_CASE("output file") {
    const std::string path = "cli_test_output.json";
    const Run r = run({"mgf", "--k", "2", "--m", "3", "--n", "3", "--output", path});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j.at("spec").at("k") == 2);
    std::remove(path.c_str());
  }

  TEST_CASE("precision from the environment") {
    setenv(cli::kPrecisionEnv, "128", 1);
    const Run r = run({"zeros", "--k", "3", "--m", "3", "--n", "3"});
    CHECK(Json::parse(r.out).at("precision_bits") == 128);
    setenv(cli::kPrecisionEnv, "lots", 1);
    CHECK(run({"zeros", "--k", "3", "--m", "3", "--n", "3"}).code == cli::kUsage);
    unsetenv(cli::kPrecisionEnv);
    CHECK(Json::parse(run({"zeros", "--k", "3", "--m", "3", "--n", "3"}).out).at("precision_bits") == 256);
  }

  TEST_CASE("deterministic reruns") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"mgf", "--k", "4", "--m", "5", "--n", "6"},
             {"zeros", "--k", "5", "--m", "5", "--n", "7"},
             {"density", "--k", "3", "--m", "4", "--n", "4", "--points", "21"},
             {"simulate", "--k", "3", "--m", "3", "--n", "3", "--samples", "200"}}) {
      CHECK(run(args).out == run(args).out);
    }
  }

  TEST_CASE("sweep") {
    const Run empty = run({"sweep", "--k-range", "3:2", "--m-range", "1:8", "--n-range", "1:8"});
    CHECK(empty.code == cli::kOk);
    CHECK(empty.out.rfind("[]\n", 0) == 0);

    const std::vector<std::string> base = {"sweep", "--k-range", "1:4", "--m-range", "1:4", "--n-range", "1:4"};
    auto with = [&](std::vector<std::string> extra) {
      auto a = base;
      a.insert(a.end(), extra.begin(), extra.end());
      return run(a);
    };
    const Run disk = with({"--threads", "1"});
    CHECK(disk.code == cli::kOk);
    const Json dj = Json::parse(disk.out.substr(0, disk.out.find("# sweep")));
    CHECK(dj.size() == 20);
    CHECK(dj.at(0).at("spec").at("k") == 1);
    CHECK(disk.out.find("# sweep verify-diskfree: 20 specs, 0 failed") != std::string::npos);
    CHECK(with({"--threads", "4"}).out == disk.out);

    const Run cum = with({"--template", "cumulants", "--order", "6"});
    CHECK(cum.code == cli::kOk);

    // k > min(m, n) specs fail, the rest still run.
    const Run mixed = run({"sweep", "--k-range", "2:3", "--m-range", "2:3", "--n-range", "3", "--all-orders",
                           "--template", "mgf"});
    CHECK(mixed.code == cli::kVerdictFailed);
    const Json mj = Json::parse(mixed.out.substr(0, mixed.out.find("# sweep")));
    CHECK(mj.size() == 4);
    CHECK(mj.at(0).at("ok") == true);
    CHECK(mj.at(2).at("ok") == false);
    CHECK(mj.at(2).contains("error"));
    CHECK(mj.at(3).at("ok") == true);

    CHECK(run({"sweep", "--k-range", "1:x", "--m-range", "1", "--n-range", "1"}).code == cli::kUsage);
    CHECK(run({"sweep", "--m-range", "1", "--n-range", "1"}).code == cli::kUsage);
  }
}

TEST_SUITE("cli_slow") {
  TEST_CASE("twenty by twenty disk verification") {
    const Run r = run({"verify-diskfree", "--k", "20", "--m", "20", "--n", "20"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("zero_free") == true);
    CHECK(j.at("real_zeros") == 28);
    CHECK(j.at("conjugate_pairs") == 81);
  }
}
