#include "cuspidal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cuspidal/errors.hpp"
#include "cuspidal/parse.hpp"
#include "cuspidal/report.hpp"

namespace cuspidal {

namespace {

using nlohmann::json;

struct Outcome {
  std::vector<Verdict> verdicts;
  std::optional<CuspReport> report;  // drives cusps/spurious/SVG
  std::optional<bool> excellent;
  std::optional<double> t_used;
  json extra = json::object();
  bool success = true;
};

struct AbChoice {
  double a = 1.0;
  double b = 0.0;
  json echo;
};

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw InvalidInput("malformed number for " + what + ": '" + text + "'");
  }
  return v;
}

AbChoice choose_ab(const RunConfig& cfg, const MixedPolynomial& f, const AnalysisConfig& ac,
                   std::ostream& err) {
  if (cfg.auto_ab && (cfg.a || cfg.b)) throw InvalidInput("--auto-ab cannot be combined with --a/--b");
  if (cfg.a || cfg.b) {
    err << "warning: explicit --a/--b bypass the genericity gate\n";
    return {cfg.a.value_or(0.0), cfg.b.value_or(0.0), {{"mode", "explicit"}}};
  }
  const auto pick = generic_ab(f, cfg.seed, ac);
  if (!pick.gated) err << "warning: no seed passed the genericity scan; using the first draw\n";
  return {pick.a,
          pick.b,
          {{"mode", "auto"},
           {"a", pick.a},
           {"b", pick.b},
           {"seed_used", pick.seed},
           {"attempts", pick.attempts},
           {"gated", pick.gated},
           {"heuristic", true}}};
}

MixedPolynomial require_poly(const std::string& src, const char* flag) {
  if (src.empty()) throw InvalidInput(std::string("missing required flag ") + flag);
  return parse_poly(src);
}

SearchRegion region_from(const RunConfig& cfg, const MixedPolynomial& f) {
  if (!cfg.region) return default_region(f);
  const auto& r = *cfg.region;
  SearchRegion out;
  out.lo = {r[0], r[1]};
  out.hi = {r[2], r[3]};
  out.validate();
  return out;
}

// A report assembled from a verifier's cusps, enough for SVG and JSON.
CuspReport report_for(const MixedPolynomial& f, const MixedPolynomial& map, const Verdict& v,
                      std::optional<LinearTerm> lin, const AnalysisConfig& ac) {
  CuspReport r;
  r.base = f;
  r.map = map;
  r.linear = lin;
  r.t = v.t_used;
  r.region = default_region(f);
  r.cusps = v.cusps;
  for (const auto& s : singularities_of(f, ac)) r.per_singularity.push_back({s.w, s.multiplicity, 0.0, 0});
  return r;
}

Outcome run_analyze(const RunConfig& cfg, const AnalysisConfig& ac, json& echo, std::ostream& err) {
  const auto f = require_poly(cfg.poly, "--poly");
  const auto ab = choose_ab(cfg, f, ac, err);
  echo["ab"] = ab.echo;
  const double t = cfg.t.value_or(auto_t(singularities_of(f, ac)));
  Outcome o;
  o.report = count_cusps(Deformation::linear(f, ab.a, ab.b, t), region_from(cfg, f), ac);
  o.excellent = o.report->excellent;
  o.t_used = t;
  o.success = o.report->excellent;
  return o;
}

Outcome run_verdict(Verdict v, std::optional<CuspReport> report) {
  Outcome o;
  o.success = v.pass();
  o.t_used = v.t_used;
  for (const auto& [k, x] : v.details) {
    if (k == "excellent") o.excellent = x != 0.0;
  }
  o.report = std::move(report);
  o.verdicts.push_back(std::move(v));
  return o;
}

Outcome run_command(const RunConfig& cfg, const AnalysisConfig& ac, json& echo, std::ostream& err) {
  switch (cfg.command) {
    case Command::Analyze:
      return run_analyze(cfg, ac, echo, err);

    case Command::Theorem1: {
      const auto f = require_poly(cfg.poly, "--poly");
      const auto ab = choose_ab(cfg, f, ac, err);
      echo["ab"] = ab.echo;
      auto v = verify_theorem1(f, ab.a, ab.b, cfg.t, cfg.radius, ac);
      const auto map = realize(Deformation::linear(f, ab.a, ab.b, v.t_used));
      auto rep = report_for(f, map, v, LinearTerm{ab.a, ab.b}, ac);
      return run_verdict(std::move(v), std::move(rep));
    }

    case Command::Corollary1: {
      const auto f = require_poly(cfg.poly, "--poly");
      const auto ab = choose_ab(cfg, f, ac, err);
      echo["ab"] = ab.echo;
      auto v = verify_corollary1(f, ab.a, ab.b, cfg.t, ac);
      const auto map = realize(Deformation::linear(f, ab.a, ab.b, v.t_used));
      auto rep = report_for(f, map, v, LinearTerm{ab.a, ab.b}, ac);
      return run_verdict(std::move(v), std::move(rep));
    }

    case Command::Theorem2: {
      const auto f = require_poly(cfg.poly, "--poly");
      const auto g = require_poly(cfg.g, "--g");
      if (!cfg.s) throw InvalidInput("theorem2 requires --s");
      const auto ab = choose_ab(cfg, f, ac, err);
      echo["ab"] = ab.echo;
      const double t = cfg.t.value_or(auto_t(singularities_of(f, ac)));
      const SecondDeformation sd(Deformation::linear(f, ab.a, ab.b, t), g, *cfg.s);
      std::optional<SearchRegion> region;
      if (cfg.region) region = region_from(cfg, f);
      auto v = verify_theorem2(sd, region, ac);
      auto rep = report_for(f, realize(sd), v, LinearTerm{ab.a, ab.b}, ac);
      rep.s = *cfg.s;
      return run_verdict(std::move(v), std::move(rep));
    }

    case Command::Theorem3: {
      const auto f = require_poly(cfg.poly, "--poly");
      const auto h = require_poly(cfg.h, "--h");
      if (cfg.a || cfg.b || cfg.auto_ab) throw InvalidInput("theorem3 takes --h instead of --a/--b");
      auto v = verify_theorem3(f, h, cfg.t, cfg.radius, ac);
      const auto map = realize(Deformation::general(f, h, v.t_used));
      auto rep = report_for(f, map, v, std::nullopt, ac);
      return run_verdict(std::move(v), std::move(rep));
    }

    case Command::Example1: {
      if (!cfg.n) throw InvalidInput("example1 requires --n");
      if (*cfg.n < 2 || *cfg.n > 64) throw InvalidInput("--n must lie in [2, 64]");
      const auto f = power(MixedPolynomial::z(), static_cast<unsigned>(*cfg.n));
      const auto ab = choose_ab(cfg, f, ac, err);
      echo["ab"] = ab.echo;
      const double t = cfg.t.value_or(1e-2);
      const auto positions = example1_positions(*cfg.n, ab.a, ab.b, t);
      auto report = count_cusps(Deformation::linear(f, ab.a, ab.b, t), default_region(f), ac);

      double worst = 0.0;
      for (const auto& c : report.cusps) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto p : positions) best = std::min(best, std::abs(p - c.center));
        worst = std::max(worst, best);
      }
      constexpr double kPositionTol = 1e-8;
      Verdict v;
      v.claim = "example1";
      v.expected_lo = *cfg.n + 1;
      v.observed = static_cast<int>(report.cusps.size());
      v.status = (v.observed == v.expected_lo && worst <= kPositionTol && report.excellent)
                     ? VerdictStatus::Pass
                     : VerdictStatus::Fail;
      v.details = {{"max_deviation", worst}, {"position_tol", kPositionTol}};
      v.t_used = t;
      v.t_schedule = {t};
      v.cusps = report.cusps;
      json closed = json::array();
      for (const auto p : positions) closed.push_back({{"re", p.real()}, {"im", p.imag()}});
      auto o = run_verdict(std::move(v), std::move(report));
      o.excellent = o.report->excellent;
      o.extra["closed_form"] = closed;
      return o;
    }

    case Command::Genericity: {
      const auto f = require_poly(cfg.poly, "--poly");
      const auto ab = choose_ab(cfg, f, ac, err);
      echo["ab"] = ab.echo;
      const auto res = genericity_scan(f, ab.a, ab.b, cfg.radius, cfg.samples, ac);
      json wit = json::array();
      for (const auto w : res.witnesses) wit.push_back({{"re", w.real()}, {"im", w.imag()}});
      Outcome o;
      o.success = res.generic;
      o.extra["genericity"] = {{"generic", res.generic},
                               {"heuristic", GenericityResult::heuristic},
                               {"points_checked", res.points_checked},
                               {"witnesses", wit}};
      return o;
    }
  }
  throw InvalidInput("unknown command");
}

json echo_config(const RunConfig& cfg, const AnalysisConfig& ac) {
  auto opt = [](const std::optional<double>& v) -> json { return v ? json(*v) : json(nullptr); };
  json e = {{"poly", cfg.poly},
            {"g", cfg.g},
            {"h", cfg.h},
            {"a", opt(cfg.a)},
            {"b", opt(cfg.b)},
            {"t", opt(cfg.t)},
            {"s", opt(cfg.s)},
            {"radius", opt(cfg.radius)},
            {"n", cfg.n ? json(*cfg.n) : json(nullptr)},
            {"region", cfg.region ? json(*cfg.region) : json(nullptr)},
            {"seed", cfg.seed},
            {"auto_ab", cfg.auto_ab},
            {"grid", cfg.grid},
            {"samples", cfg.samples}};
  e["tolerances"] = {{"j_rel", ac.tol.j_rel},
                     {"h_rel", ac.tol.h_rel},
                     {"phi_rel", ac.tol.phi_rel},
                     {"refine_tol", ac.refine_tol},
                     {"max_depth", ac.max_depth}};
  return e;
}

void write_target(const std::string& target, const std::string& text, std::ostream& out) {
  if (target == "-") {
    out << text;
    return;
  }
  std::ofstream file(target, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidInput("cannot open output file '" + target + "'");
  file << text;
  if (!file) throw InvalidInput("failed writing output file '" + target + "'");
}

void print_root(std::ostream& out, const CertifiedRoot& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %+.12e %+.12e  ms=%+d  %s\n", r.center.real(), r.center.imag(),
                r.degree, std::string(to_string(r.classification)).c_str());
  out << buf;
}

void print_text(const RunConfig& cfg, const Outcome& o, const json& echo, std::ostream& out) {
  out << "command: " << to_string(cfg.command) << "\n";
  if (!cfg.poly.empty()) out << "poly: " << cfg.poly << "\n";
  if (echo.contains("ab") && echo["ab"].contains("a")) {
    out << "a, b: " << echo["ab"]["a"].get<double>() << ", " << echo["ab"]["b"].get<double>()
        << " (seeded, genericity scan is heuristic)\n";
  }
  if (o.t_used) out << "t: " << *o.t_used << "\n";
  for (const auto& v : o.verdicts) {
    out << "verdict " << v.claim << ": expected ";
    if (v.at_least) out << ">= ";
    out << v.expected_lo;
    if (v.expected_hi) out << ".." << *v.expected_hi;
    out << ", observed " << v.observed << " -> " << to_string(v.status) << "\n";
    for (const auto& [k, x] : v.details) out << "  " << k << " = " << x << "\n";
    if (v.t_schedule.size() > 1) {
      out << "  t schedule:";
      for (const double t : v.t_schedule) out << " " << t;
      out << "\n";
    }
    if (!v.note.empty()) out << "  note: " << v.note << "\n";
  }
  if (o.report) {
    out << "cusps: " << o.report->cusps.size() << "\n";
    for (const auto& r : o.report->cusps) print_root(out, r);
    if (!o.report->spurious.empty()) {
      out << "other zeros of G: " << o.report->spurious.size() << "\n";
      for (const auto& r : o.report->spurious) print_root(out, r);
    }
  }
  if (o.excellent) out << "excellent: " << (*o.excellent ? "yes" : "no") << "\n";
  if (o.extra.contains("genericity")) {
    const auto& g = o.extra["genericity"];
    out << "generic (heuristic scan): " << (g["generic"].get<bool>() ? "yes" : "no") << ", "
        << g["points_checked"].get<std::size_t>() << " psi = 0 points checked\n";
  }
}

}  // namespace

std::optional<Command> command_from_string(std::string_view name) {
  for (const auto c : {Command::Analyze, Command::Theorem1, Command::Corollary1, Command::Theorem2,
                       Command::Theorem3, Command::Example1, Command::Genericity}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Theorem1: return "theorem1";
    case Command::Corollary1: return "corollary1";
    case Command::Theorem2: return "theorem2";
    case Command::Theorem3: return "theorem3";
    case Command::Example1: return "example1";
    case Command::Genericity: return "genericity";
  }
  return "analyze";
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidInput("seed is not an unsigned 64-bit integer: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value == nullptr || *env_value == '\0') return kDefaultSeed;
  return parse_seed(env_value);
}

AnalysisConfig apply_tolerances(const std::vector<std::string>& overrides) {
  AnalysisConfig ac;
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidInput("--tol expects KEY=VAL, got '" + kv + "'");
    const auto key = kv.substr(0, eq);
    const double v = parse_double(kv.substr(eq + 1), key);
    if (key == "max_depth") {
      if (v != std::floor(v) || v < 1 || v > 60) throw InvalidInput("max_depth must be in [1, 60]");
      ac.max_depth = static_cast<int>(v);
      continue;
    }
    if (!(v > 0.0)) throw InvalidInput("tolerance " + key + " must be positive");
    if (key == "j_rel") {
      ac.tol.j_rel = v;
    } else if (key == "h_rel") {
      ac.tol.h_rel = v;
    } else if (key == "phi_rel") {
      ac.tol.phi_rel = v;
    } else if (key == "refine_tol") {
      ac.refine_tol = v;
    } else {
      throw InvalidInput("unknown tolerance key '" + key + "'");
    }
  }
  return ac;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.grid < 2 || cfg.grid > 4096) throw InvalidInput("--grid must lie in [2, 4096]");
    if (cfg.samples < 8) throw InvalidInput("--samples must be at least 8");
    if (cfg.out.json && cfg.out.csv && *cfg.out.json == "-" && *cfg.out.csv == "-") {
      throw InvalidInput("--json - and --csv - cannot both write to standard output");
    }
    const auto ac = apply_tolerances(cfg.tolerances);
    json echo = echo_config(cfg, ac);
    const Outcome o = run_command(cfg, ac, echo, err);

    if (cfg.out.json) {
      json doc = {{"version", kReportSchemaVersion},
                  {"command", std::string(to_string(cfg.command))},
                  {"config_echo", echo},
                  {"verdicts", json::array()},
                  {"cusps", json::array()},
                  {"spurious", json::array()},
                  {"excellent", o.excellent ? json(*o.excellent) : json(nullptr)},
                  {"t_used", o.t_used ? json(*o.t_used) : json(nullptr)},
                  {"seed", cfg.seed}};
      for (const auto& v : o.verdicts) doc["verdicts"].push_back(to_json(v));
      if (o.report) {
        for (const auto& r : o.report->cusps) doc["cusps"].push_back(to_json(r));
        for (const auto& r : o.report->spurious) doc["spurious"].push_back(to_json(r));
        json sing = json::array();
        for (const auto& s : o.report->per_singularity) {
          sing.push_back({{"re", s.w.real()},
                          {"im", s.w.imag()},
                          {"multiplicity", s.multiplicity},
                          {"local_cusps", s.local_cusps}});
        }
        doc["singularities"] = sing;
        json wit = json::array();
        for (const auto w : o.report->witnesses) wit.push_back({{"re", w.real()}, {"im", w.imag()}});
        doc["witnesses"] = wit;
      }
      for (const auto& [k, v] : o.extra.items()) doc[k] = v;
      write_target(*cfg.out.json, doc.dump(2) + "\n", out);
    }
    if (cfg.out.csv) {
      write_target(*cfg.out.csv, cusps_csv(o.report ? o.report->cusps : std::vector<CertifiedRoot>{}),
                   out);
    }
    if (cfg.out.svg) {
      CuspReport empty;
      Canvas canvas;
      canvas.grid = cfg.grid;
      write_target(*cfg.out.svg, render_svg(o.report ? *o.report : empty, canvas), out);
    }
    if (!cfg.out.any()) print_text(cfg, o, echo, out);
    return o.success ? kExitPass : kExitFail;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace cuspidal
