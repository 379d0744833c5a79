#include "w1g/cli.hpp"
#include "w1g/random.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace w1g;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("w1g_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

RunConfig small() {
  RunConfig c;
  c.genus = 1;
  c.domain_radius = 1;
  c.value_radius = 1;
  c.samples = 20;
  return c;
}

}  // namespace

TEST_CASE("every subcommand is registered") {
  const auto subs = subcommands();
  for (const auto* name : {"verify-axioms", "residual-scan", "check-k", "classify", "coboundary-test", "propagate",
                           "turaev", "kernel", "certificate-scan", "make-cochain"})
    CHECK(std::find(subs.begin(), subs.end(), name) != subs.end());
  const auto r = run("frobnicate", small());
  CHECK(r.exit_code == kExitUsage);
  CHECK(r.report.at("error").at("kind") == "usage");
}

TEST_CASE("classify and turaev through the runner") {
  RunConfig c = small();
  c.domain_radius = 2;
  c.value_radius = 5;
  const auto r = run("classify", c);
  CHECK(r.exit_code == kExitPass);
  CHECK(r.report.at("result").at("dimension") == 2);
  CHECK(r.report.at("config").at("coboundary_radius") == 5);

  RunConfig t = small();
  t.genus = 2;
  t.value_radius = 2;
  const auto tr = run("turaev", t);
  CHECK(tr.exit_code == kExitPass);
  CHECK(tr.report.at("result").at("all_zero") == true);
  t.genus = 1;
  CHECK(run("turaev", t).exit_code == kExitUsage);
}

TEST_CASE("make-cochain feeds residual-scan and coboundary-test") {
  TempDir dir;
  RunConfig k = small();
  k.input = dir.write("ind.json", R"({"genus":1,"values":[{"exp":[1,1],"value":"1"}]})");
  k.kind = "delta";
  const auto made = run("make-cochain", k);
  REQUIRE(made.exit_code == kExitPass);

  RunConfig s = small();
  s.input = dir.write("delta.json", made.rendered);
  const auto scan = run("residual-scan", s);
  CHECK(scan.exit_code == kExitCheckFailed);
  const auto& w = scan.report.at("result").at("witnesses");
  REQUIRE(w.size() == 3);
  CHECK(w.at(0).at("Z1") == Json::array({1, 0}));
  CHECK(w.at(0).at("Z2") == Json::array({0, 1}));
  CHECK(scan.report.at("result").at("pairs_checked") == 24);

  RunConfig h = small();
  h.domain_radius = 2;
  h.input = dir.write("hom.json", R"({"basis_values":["1","0"]})");
  const auto hom = run("make-cochain", h);
  RunConfig cb = small();
  cb.value_radius = 3;
  cb.input = dir.write("hdelta.json", hom.rendered);
  const auto test = run("coboundary-test", cb);
  CHECK(test.exit_code == kExitCheckFailed);
  CHECK(test.report.at("result").at("feasible") == false);
  CHECK(test.report.at("result").at("verified") == true);
  s.input = cb.input;
  CHECK(run("residual-scan", s).exit_code == kExitPass);
}

TEST_CASE("check-k reports both halves of the additivity test") {
  TempDir dir;
  RunConfig c = small();
  c.domain_radius = 2;
  c.input = dir.write("hom.json", R"({"basis_values":["1","-2"]})");
  const auto ok = run("check-k", c);
  CHECK(ok.exit_code == kExitPass);
  CHECK(ok.report.at("result").at("extension").at("homomorphism").at("basis_values") == Json::array({"1", "-2"}));
  c.input = dir.write("ind.json", R"({"genus":1,"values":[{"exp":[1,1],"value":"3"}]})");
  const auto bad = run("check-k", c);
  CHECK(bad.exit_code == kExitCheckFailed);
  CHECK(bad.report.at("result").contains("compatibility"));
}

TEST_CASE("errors map to the exit-code contract") {
  TempDir dir;
  RunConfig c = small();
  CHECK(run("residual-scan", c).exit_code == kExitUsage);
  c.input = dir.write("bad.json", "{ not json");
  const auto parse = run("residual-scan", c);
  CHECK(parse.exit_code == kExitParse);
  CHECK(parse.report.at("error").at("kind") == "parse");
  c.input = dir.write("bad2.json", R"({"genus":1,"flavor":"wedge","domain_radius":1,"entries":[{"Z":[1],"value":{}}]})");
  CHECK(run("residual-scan", c).exit_code == kExitParse);

  RunConfig w = small();
  w.domain_radius = 3;
  w.value_radius = 2;
  const auto win = run("kernel", w);
  CHECK(win.exit_code == kExitUsage);
  CHECK(win.report.at("error").at("kind") == "window");

  RunConfig g = small();
  g.genus = 0;
  CHECK(run("kernel", g).exit_code == kExitUsage);
}

TEST_CASE("propagate and kernel through the runner") {
  RunConfig c = small();
  c.flavor = Flavor::tensor;
  c.component = "prime_prime";
  c.domain_radius = 2;
  c.value_radius = 2;
  const auto p = run("propagate", c);
  CHECK(p.exit_code == kExitPass);
  CHECK(p.report.at("result").at("unique_on_interior") == true);
  c.truncation = Truncation::strict;
  CHECK(run("propagate", c).exit_code == kExitCheckFailed);

  RunConfig k = small();
  k.with_basis = true;
  const auto kr = run("kernel", k);
  CHECK(kr.exit_code == kExitPass);
  CHECK(kr.report.at("result").at("kernel_dim") == 2);
  CHECK(kr.report.at("result").at("kernel").size() == 2);
}

TEST_CASE("reports are deterministic and render as text") {
  RunConfig c = small();
  c.samples = 50;
  c.seed = 99;
  const auto a = run("verify-axioms", c);
  const auto b = run("verify-axioms", c);
  CHECK(a.exit_code == kExitPass);
  CHECK(a.rendered == b.rendered);
  CHECK(read<AxiomsReport>(a.report.at("result")).passed());
  c.seed = 100;
  CHECK(run("verify-axioms", c).rendered != a.rendered);

  c.format = OutputFormat::text;
  const auto text = run("certificate-scan", c);
  CHECK(text.rendered.find("result.nonzero: 0") != std::string::npos);
  CHECK(text.rendered.find("passed: true") != std::string::npos);
}

TEST_CASE("write_report honours the output path") {
  TempDir dir;
  RunConfig c = small();
  c.output = (dir.path / "out.json").string();
  const auto r = run("certificate-scan", c);
  write_report(r, c);
  std::ifstream in(c.output);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == r.rendered);
  CHECK(parse_json(ss.str()) == r.report);
}
