// Command-line driver: flag parsing only, everything else lives in run().
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuspidal/cli.hpp"
#include "cuspidal/errors.hpp"

namespace {

std::array<double, 4> parse_region(const std::string& text) {
  std::array<double, 4> r{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4) throw cuspidal::InvalidInput("--region expects x0,y0,x1,y1");
    std::size_t used = 0;
    try {
      r[i] = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw cuspidal::InvalidInput("--region: bad number '" + item + "'");
    ++i;
  }
  if (i != 4) throw cuspidal::InvalidInput("--region expects x0,y0,x1,y1");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and verify cusps of deformed complex polynomial maps"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  cuspidal::RunConfig cfg;
  std::string command, seed, region, json, csv, svg;
  double a = 0, b = 0, t = 0, s = 0, radius = 0;
  int n = 0;

  app.add_option("command", command,
                 "analyze | theorem1 | corollary1 | theorem2 | theorem3 | example1 | genericity")
      ->required();
  app.add_option("--poly", cfg.poly, "base polynomial f, e.g. \"z^3 + z\"");
  app.add_option("--g", cfg.g, "second deformation term (theorem2)");
  app.add_option("--h", cfg.h, "deformation term with h(0) = 0 (theorem3)");
  auto* oa = app.add_option("--a", a, "real part of the zbar coefficient");
  auto* ob = app.add_option("--b", b, "imaginary part of the zbar coefficient");
  auto* ot = app.add_option("--t", t, "deformation parameter (automatic when absent)");
  auto* os = app.add_option("--s", s, "second deformation parameter");
  auto* on = app.add_option("--n", n, "degree for example1");
  auto* orad = app.add_option("--radius", radius, "local disk radius");
  auto* oreg = app.add_option("--region", region, "search rectangle x0,y0,x1,y1");
  auto* oseed = app.add_option("--seed", seed, "seed for the generic (a, b) draw");
  app.add_option("--tol", cfg.tolerances, "tolerance override KEY=VAL (repeatable)");
  auto* ojson = app.add_option("--json", json, "JSON report path, - for stdout");
  auto* ocsv = app.add_option("--csv", csv, "CSV cusp table path, - for stdout");
  auto* osvg = app.add_option("--svg", svg, "SVG picture path");
  app.add_option("--grid", cfg.grid, "marching-squares resolution for --svg");
  app.add_option("--samples", cfg.samples, "samples per circle for genericity");
  app.add_flag("--auto-ab", cfg.auto_ab, "draw a generic (a, b) from the seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cuspidal::kExitInput;
  }

  try {
    const auto cmd = cuspidal::command_from_string(command);
    if (!cmd) throw cuspidal::InvalidInput("unknown command '" + command + "'");
    cfg.command = *cmd;
    if (*oa) cfg.a = a;
    if (*ob) cfg.b = b;
    if (*ot) cfg.t = t;
    if (*os) cfg.s = s;
    if (*on) cfg.n = n;
    if (*orad) cfg.radius = radius;
    if (*oreg) cfg.region = parse_region(region);
    std::optional<std::uint64_t> flag_seed;
    if (*oseed) flag_seed = cuspidal::parse_seed(seed);
    cfg.seed = cuspidal::resolve_seed(flag_seed, std::getenv("CUSPIDAL_SEED"));
    if (*ojson) cfg.out.json = json;
    if (*ocsv) cfg.out.csv = csv;
    if (*osvg) cfg.out.svg = svg;
  } catch (const cuspidal::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cuspidal::kExitInput;
  }
  return cuspidal::run(cfg, std::cout, std::cerr);
}
