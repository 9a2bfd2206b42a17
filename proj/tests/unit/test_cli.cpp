#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace curvelab;
using curvelab::test::error_of;

namespace {

struct Run {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("CURVELAB_EXT_DEGREE", value, 1); }
  ~EnvGuard() { unsetenv("CURVELAB_EXT_DEGREE"); }
};

const char* kConjugateNodes = "(x^2 - 2*z^2)*(y^2 - 3*z^2)";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("syntax errors exit 2 with a JSON report") {
    const Run r = run({"analyze", "--curve", "garbage(("});
    CHECK(r.code == 2);
    CHECK(r.json()["error"] == "SyntaxError");
    CHECK(r.json().contains("position"));
  }

  TEST_CASE("usage errors are JSON too") {
    CHECK(run({}).code == 2);
    CHECK(run({"lct", "--bogus"}).json()["error"] == "UsageError");
    CHECK(run({"help-me"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("lct of the cusp") {
    const Run r = run({"lct", "--curve", "y^2*z - x^3", "--point", "0:0:1"});
    CHECK(r.code == 0);
    CHECK(r.json()["lct"] == "5/6");
    const Run g = run({"lct", "--curve", "y^2*z - x^3"});
    CHECK(g.json()["lct"] == "5/6");
    CHECK(run({"lct", "--curve", "y^2*z - x^3", "--point", "1:2:1"}).json()["error"] == "PointNotOnCurve");
  }

  TEST_CASE("git on the even Ploski quartic") {
    const PlaneCurve c = ploski_curve(4);
    const Run r = run({"git", "--curve", c.form().str()});
    CHECK(r.code == 0);
    CHECK(r.json()["status"] == "StrictlySemistable");
  }

  TEST_CASE("classify and milnor") {
    const Json k = run({"classify", "--curve", "y*(y*z - x^2)", "--point", "0:0:1"}).json();
    CHECK(k["alias"] == "A3");
    CHECK(k["threshold_class"]["tag"] == "T");
    const Json m = run({"milnor", "--curve", "y^2*z - x^3", "--point", "0:0:1"}).json();
    CHECK(m["mu"] == 2);
    CHECK(m["oracle"] == 2);
  }

  TEST_CASE("output is exact unless approximations are requested") {
    const auto args = std::vector<std::string>{"analyze", "--curve", "y^2*z - x^3"};
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("_approx") == std::string::npos);
    CHECK(a.json()["schema"] == kReportSchema);
    std::vector<std::string> approx = args;
    approx.push_back("--approx");
    CHECK(run(approx).out.find("\"lct_approx\"") != std::string::npos);
  }

  TEST_CASE("curves from files") {
    const std::string path = "cli_test_curve.txt";
    {
      std::ofstream f(path);
      f << "z*y^2 - x^2*(x + z)\n";
    }
    const Run r = run({"git", "--curve", "@" + path});
    CHECK(r.json()["status"] == "StrictlySemistable");
    std::remove(path.c_str());
    CHECK(run({"git", "--curve", "@missing-file.txt"}).code == 2);
  }

  TEST_CASE("extension bound from the environment, flag takes precedence") {
    CHECK(run({"analyze", "--curve", kConjugateNodes}).code == 0);
    const EnvGuard env("1");
    const Run limited = run({"analyze", "--curve", kConjugateNodes});
    CHECK(limited.code == 3);
    CHECK(limited.json()["partial"] == true);
    CHECK(run({"analyze", "--curve", kConjugateNodes, "--ext-degree", "4"}).code == 0);
  }

  TEST_CASE("generate") {
    const Json c = run({"generate", "cone", "--degree", "4"}).json();
    CHECK(c["curve"]["degree"] == 4);
    const Json s = run({"generate", "cone", "--params", "0,1,inf"}).json();
    CHECK(s["curve"]["degree"] == 3);
    CHECK(run({"generate", "cone", "--params", "1,1"}).json()["error"] == "DuplicateSlope");
    CHECK(run({"generate", "tk", "--degree", "5", "--tag", "K"}).json()["curve"]["form"] ==
          tk_curve(5, ThresholdTag::K).form().str());
    CHECK(run({"generate", "named", "--name", "wall_quintic"}).json().contains("curve"));
    CHECK(run({"generate", "spiral"}).code == 2);
    const Run r1 = run({"generate", "random", "--degree", "4", "--seed", "3"});
    CHECK(r1.out == run({"generate", "random", "--degree", "4", "--seed", "3"}).out);
  }

  TEST_CASE("surface verbs") {
    const std::string ex = "w^3*x + w^2*y*z + x*y*z*(y + z)";
    CHECK(run({"surface", "smooth", "--surface", ex}).json()["smoothness"] == "Failed");
    const Run alpha = run({"surface", "alpha", "--surface", ex, "--point", "0:0:0:1"});
    CHECK(alpha.code == 2);
    CHECK(alpha.json()["error"] == "SingularSurfacePoint");
    const Json assumed = run({"surface", "alpha", "--surface", ex, "--point", "0:0:0:1", "--assume-smooth"}).json();
    CHECK(assumed["alpha"]["kind"] == "AlphaLowerBound");
    CHECK(assumed["alpha"]["bound"] == "5/8");
    const Json star = run({"surface", "star", "--surface", star_surface(4).form.str(), "--point", "0:0:0:1"}).json();
    CHECK(star["star_point"] == true);
    CHECK(run({"surface", "sideways", "--surface", ex}).code == 2);
  }

  TEST_CASE("verify-paper on a single criterion") {
    const Run r = run({"verify-paper", "--criterion", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") == 0);
    const Run j = run({"verify-paper", "--criterion", "1", "--format", "json"});
    CHECK(j.json()[0]["passed"] == true);
  }

  TEST_CASE("timing is opt-in") {
    const auto base = std::vector<std::string>{"lct", "--curve", "y^2*z - x^3"};
    CHECK_FALSE(run(base).json().contains("timing_seconds"));
    auto timed = base;
    timed.push_back("--timing");
    CHECK(run(timed).json().contains("timing_seconds"));
  }
}
