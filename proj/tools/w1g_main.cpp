// Command-line front end; all logic lives in w1g::run.

#include "w1g/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Exact cocycle and cobracket experiments on the Laurent Poisson algebra W_1(g)"};
  app.require_subcommand(1);
  w1g::RunConfig cfg;
  std::string flavor = "wedge", format = "json", truncation = "finite-support", exec = "parallel";

  const std::map<std::string_view, std::string> about{
      {"verify-axioms", "Exact Poisson and module laws on sampled elements"},
      {"make-cochain", "Write a Delta_k, iota, delta_0 or coboundary cochain as JSON"},
      {"residual-scan", "Cocycle residual at every pair of a cochain file"},
      {"check-k", "Additivity witnesses of a k-map, or its extension to a homomorphism"},
      {"coboundary-test", "Decide d = dm in the window; prints a certificate when not"},
      {"kernel", "Rank and kernel of the windowed cocycle system"},
      {"classify", "Cocycles modulo coboundaries in the window"},
      {"propagate", "Solve for all values from pinned generator values"},
      {"certificate-scan", "Check the non-coboundary certificate over all triples"},
      {"turaev", "Coefficient of the target pair in the cobracket over a window"},
  };
  for (const auto name : w1g::subcommands()) {
    const auto it = about.find(name);
    auto* sub = app.add_subcommand(std::string(name), it == about.end() ? std::string() : it->second);
    sub->add_option("--genus", cfg.genus, "Genus g (exponent vectors in Z^2g)");
    sub->add_option("--domain-radius", cfg.domain_radius, "Cochain window ||Z|| <= R");
    sub->add_option("--value-radius", cfg.value_radius, "Value window ||u||, ||v|| <= S");
    sub->add_option("--coboundary-radius", cfg.coboundary_radius, "Support box of m (default: value radius)");
    sub->add_option("--flavor", flavor, "tensor | wedge")->check(CLI::IsMember({"tensor", "wedge"}));
    sub->add_option("--component", cfg.component, "all | unit_unit | prime_unit | unit_prime | prime_prime");
    sub->add_option("--truncation", truncation, "finite-support | strict")
        ->check(CLI::IsMember({"finite-support", "strict"}));
    sub->add_option("--seed", cfg.seed, "Seed for sampled property suites");
    sub->add_option("--samples", cfg.samples, "Random samples per property");
    sub->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", cfg.output, "Report path (default: stdout)");
    sub->add_option("--input,-i", cfg.input, "Input JSON file");
    sub->add_option("--kind", cfg.kind, "make-cochain: delta | delta-left | delta-right | iota | delta0 | coboundary");
    sub->add_option("--scale", cfg.scale, "make-cochain delta0: value r as p/q");
    sub->add_flag("--with-basis", cfg.with_basis, "kernel: include the kernel basis");
    sub->add_option("--exec", exec, "parallel | serial")->check(CLI::IsMember({"parallel", "serial"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : w1g::kExitUsage;
  }
  cfg.flavor = w1g::parse_flavor(flavor);
  cfg.truncation = w1g::parse_truncation(truncation);
  cfg.format = format == "text" ? w1g::OutputFormat::text : w1g::OutputFormat::json;
  cfg.exec = exec == "serial" ? w1g::Exec::serial : w1g::Exec::parallel;

  const auto* sub = app.get_subcommands().front();
  const auto result = w1g::run(sub->get_name(), cfg);
  try {
    w1g::write_report(result, cfg);
  } catch (const std::exception& e) {
    std::cerr << "w1g: " << e.what() << "\n";
    return w1g::kExitUsage;
  }
  if (result.report.contains("error"))
    std::cerr << "w1g: " << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
