// One line per acceptance criterion. Tolerances and time limits are fixed
// here; the exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cuspidal/analysis.hpp"
#include "cuspidal/cli.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/parse.hpp"

using namespace cuspidal;

namespace {

constexpr double kPositionTol = 1e-8;       // AC1: cusp vs closed form
constexpr double kAc1Seconds = 30.0;        // AC1: per n
constexpr double kAc2Seconds = 60.0;        // AC2: per n
constexpr double kClosedFormRel = 1e-9;     // AC5: |dc| <= rel * max|c|
constexpr double kJacobianRel = 1e-12;      // AC5
constexpr double kLeibnizAbs = 1e-12;       // AC9
constexpr double kRealImagRel = 1e-10;      // AC9

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

MixedPolynomial zpow(unsigned n) { return MixedPolynomial::monomial(1.0, n, 0); }

double relative_delta(const MixedPolynomial& g, const MixedPolynomial& h) {
  const double scale = std::max(g.max_coefficient_magnitude(), h.max_coefficient_magnitude());
  return scale == 0.0 ? 0.0 : (g - h).max_coefficient_magnitude() / scale;
}

// Runs body and turns any escaped exception into a failure.
Criterion guarded(const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c;
}

Criterion ac1() {
  return guarded([](Criterion& c) {
    double slowest = 0.0, worst = 0.0;
    for (unsigned n = 2; n <= 6; ++n) {
      const auto start = Clock::now();
      const auto f = zpow(n);
      const auto rep = count_cusps(Deformation::linear(f, 1.0, 0.0, 1e-2), default_region(f));
      const double took = seconds_since(start);
      slowest = std::max(slowest, took);
      const std::string tag = "n=" + std::to_string(n) + ": ";
      if (took >= kAc1Seconds) c.fail(tag + fmt("%.1fs", took));
      if (rep.cusps.size() != n + 1) {
        c.fail(tag + std::to_string(rep.cusps.size()) + " cusps");
        continue;
      }
      const auto closed = example1_positions(int(n), 1.0, 0.0, 1e-2);
      std::vector<bool> used(closed.size(), false);
      for (const auto& cusp : rep.cusps) {
        if (cusp.classification != RootClass::PositiveSimple) c.fail(tag + "cusp not PositiveSimple");
        std::size_t best = 0;
        for (std::size_t j = 1; j < closed.size(); ++j) {
          if (std::abs(closed[j] - cusp.center) < std::abs(closed[best] - cusp.center)) best = j;
        }
        const double dev = std::abs(closed[best] - cusp.center);
        worst = std::max(worst, dev);
        if (used[best] || dev > kPositionTol) c.fail(tag + "cusp off closed form by " + fmt("%.2e", dev));
        used[best] = true;
      }
      if (rep.spurious.size() != 1 || rep.spurious[0].degree != -1 ||
          std::abs(rep.spurious[0].center) > 1e-6) {
        c.fail(tag + "expected one degree -1 spurious zero at 0");
      }
    }
    c.note("max deviation " + fmt("%.1e", worst) + ", slowest " + fmt("%.2fs", slowest));
  });
}

Criterion ac2() {
  return guarded([](Criterion& c) {
    double slowest = 0.0;
    for (unsigned n = 3; n <= 5; ++n) {
      const auto start = Clock::now();
      const auto f = zpow(n) + MixedPolynomial::z();
      const auto ab = generic_ab(f, kDefaultSeed);
      const auto v = verify_corollary1(f, ab.a, ab.b, std::nullopt);
      const auto rep =
          count_cusps(Deformation::linear(f, ab.a, ab.b, v.t_used), default_region(f));
      const double took = seconds_since(start);
      slowest = std::max(slowest, took);
      const std::string tag = "n=" + std::to_string(n) + ": ";
      if (took >= kAc2Seconds) c.fail(tag + fmt("%.1fs", took));
      if (!ab.gated) c.fail(tag + "no gated (a,b)");
      if (v.observed != int(3 * n - 3) || !v.pass()) {
        c.fail(tag + "total " + std::to_string(v.observed));
      }
      if (rep.per_singularity.size() != n - 1) c.fail(tag + "wrong singularity count");
      for (const auto& s : rep.per_singularity) {
        if (s.multiplicity != 1 || s.local_cusps != 3) {
          c.fail(tag + "singularity with m=" + std::to_string(s.multiplicity) + " holds " +
                 std::to_string(s.local_cusps) + " cusps");
        }
      }
    }
    c.note("3n-3 split 3 per singularity, slowest " + fmt("%.2fs", slowest));
  });
}

Criterion ac3() {
  return guarded([](Criterion& c) {
    for (const char* src : {"z^2", "z^3", "z^2 + z^5", "z^3 + z^7 + z^8"}) {
      const auto f = parse_poly(src);
      const auto ab = generic_ab(f, kDefaultSeed);
      const auto v = verify_theorem1(f, ab.a, ab.b, std::nullopt, std::nullopt);
      const int k = int(multiplicity_at_origin(f));
      double g0 = NAN, gt = NAN;
      for (const auto& [key, x] : v.details) {
        if (key == "m_s_G0_0") g0 = x;
        if (key == "m_s_Gt_0") gt = x;
      }
      const std::string tag = std::string(src) + ": ";
      if (v.observed != k + 1) c.fail(tag + "local count " + std::to_string(v.observed));
      if (g0 != k) c.fail(tag + "m_s(G0,0) = " + fmt("%g", g0));
      if (v.observed + gt != k) c.fail(tag + "nu + m_s(Gt,0) = " + fmt("%g", v.observed + gt));
      if (!v.pass()) c.fail(tag + "verdict " + std::string(to_string(v.status)) + " " + v.note);
    }
    c.note("k+1 cusps, nu - 1 = m_s(G0,0) = k for all four");
  });
}

// f with f_z = n prod (z - w_j)^{m_j}, distinct w_j on the integer grid
// {-2..2}^2 and f(0) = 0.
struct RandomInstance {
  MixedPolynomial f;
  int n = 0;
  int ell = 0;
};

RandomInstance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(2, 6), coord(-2, 2);
  RandomInstance out;
  out.n = deg(rng);
  int left = out.n - 1;
  std::vector<ComplexPoint> used;
  auto fz = MixedPolynomial::constant(double(out.n));
  while (left > 0) {
    std::uniform_int_distribution<int> mult(1, left);
    const int m = mult(rng);
    ComplexPoint w;
    do {
      w = {double(coord(rng)), double(coord(rng))};
    } while (std::find(used.begin(), used.end(), w) != used.end());
    used.push_back(w);
    fz = fz * power(MixedPolynomial::z() - MixedPolynomial::constant(w), unsigned(m));
    left -= m;
  }
  out.ell = int(used.size());
  MixedPolynomial::TermMap terms;
  for (const auto& [e, c] : fz.terms()) terms[{e.p + 1, 0}] = c / double(e.p + 1);
  out.f = MixedPolynomial(terms);
  return out;
}

Criterion ac4() {
  return guarded([](Criterion& c) {
    std::mt19937_64 rng(0xC0FFEE);
    int passed = 0;
    double slowest = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto inst = random_instance(rng);
      const auto start = Clock::now();
      const auto ab = generic_ab(inst.f, kDefaultSeed);
      const auto v = verify_corollary1(inst.f, ab.a, ab.b, std::nullopt);
      slowest = std::max(slowest, seconds_since(start));
      const int expect = inst.n - 1 + 2 * inst.ell;
      const bool in_range = v.observed >= inst.n + 1 && v.observed <= 3 * inst.n - 3;
      if (v.observed != expect || !in_range || !v.pass()) {
        c.fail("#" + std::to_string(trial) + " n=" + std::to_string(inst.n) + " l=" +
               std::to_string(inst.ell) + " observed " + std::to_string(v.observed) +
               " expected " + std::to_string(expect));
      } else {
        ++passed;
      }
    }
    c.note(std::to_string(passed) + "/20 match n-1+2l inside [n+1, 3n-3], slowest " +
           fmt("%.2fs", slowest));
  });
}

Criterion ac5() {
  return guarded([](Criterion& c) {
    std::mt19937_64 rng(0xA5);
    std::uniform_real_distribution<double> u(-1.0, 1.0), ut(1e-4, 1e-1);
    std::uniform_int_distribution<unsigned> deg(1, 6);
    double worst = 0.0, worst_j = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const unsigned n = deg(rng);
      auto f = zpow(n);
      for (unsigned p = 1; p < n; ++p) f = f + MixedPolynomial::monomial({u(rng), u(rng)}, p, 0);
      const double theta = 3.14159 * u(rng);
      const double t = ut(rng);
      const auto d = Deformation::linear(f, std::cos(theta), std::sin(theta), t);
      const double delta = relative_delta(cusp_poly(realize(d)), cusp_poly_linear_closed_form(d));
      worst = std::max(worst, delta);
      const auto fz = d_dz(f);
      const auto j = jacobian(realize(d));
      const auto expect = fz * conjugate(fz) - MixedPolynomial::constant(t * t);
      worst_j = std::max(worst_j, relative_delta(j, expect));
      bool same_support = j.size() == expect.size();
      for (const auto& [e, x] : j.terms()) {
        same_support = same_support && expect.coefficient(e.p, e.q) != Complex(0.0);
      }
      if (!same_support) c.fail("jacobian support differs on trial " + std::to_string(trial));
    }
    if (worst > kClosedFormRel) c.fail("closed form delta " + fmt("%.2e", worst));
    if (worst_j > kJacobianRel) c.fail("jacobian delta " + fmt("%.2e", worst_j));
    c.note("G delta " + fmt("%.1e", worst) + ", J delta " + fmt("%.1e", worst_j));
  });
}

Criterion ac6() {
  return guarded([](Criterion& c) {
    for (std::uint32_t p = 0; p <= 5; ++p) {
      for (std::uint32_t q = 0; q <= 5; ++q) {
        const int d =
            winding_number(MixedPolynomial::monomial(1.0, p, q), Contour::circle(0.0, 1.0)).degree;
        if (d != int(p) - int(q)) c.fail("z^" + std::to_string(p) + " zbar^" + std::to_string(q));
      }
    }
    std::mt19937_64 rng(0xD6);
    std::uniform_real_distribution<double> u(-1.0, 1.0), cut(-0.9, 0.9);
    std::uniform_int_distribution<int> count(0, 3);
    int done = 0, draws = 0;
    while (done < 50 && draws < 1000) {
      ++draws;
      auto g = MixedPolynomial::constant(1.0);
      int expect = 0;
      const int np = 1 + count(rng), nm = count(rng);
      for (int i = 0; i < np; ++i) {
        g = g * (MixedPolynomial::z() - MixedPolynomial::constant({u(rng), u(rng)}));
        ++expect;
      }
      for (int i = 0; i < nm; ++i) {
        g = g * (MixedPolynomial::zbar() - MixedPolynomial::constant({u(rng), u(rng)}));
        --expect;
      }
      const ComplexPoint lo{-1.5, -1.5}, hi{1.5, 1.5}, m{cut(rng), cut(rng)};
      try {
        const int whole = winding_number(g, Contour::box(lo, hi)).degree;
        const int parts =
            winding_number(g, Contour::box(lo, m)).degree +
            winding_number(g, Contour::box({m.real(), lo.imag()}, {hi.real(), m.imag()})).degree +
            winding_number(g, Contour::box(m, hi)).degree +
            winding_number(g, Contour::box({lo.real(), m.imag()}, {m.real(), hi.imag()})).degree;
        if (whole != parts || whole != expect) {
          c.fail("instance " + std::to_string(done) + ": whole " + std::to_string(whole) +
                 ", parts " + std::to_string(parts));
        }
        ++done;
      } catch (const ModulusTooSmall&) {
        // a zero landed on a cut line; not an instance with a zero-free boundary
      }
    }
    if (done < 50) c.fail("only " + std::to_string(done) + " usable instances");
    c.note("36 monomials, " + std::to_string(done) + " subdivided instances");
  });
}

Criterion ac7() {
  return guarded([](Criterion& c) {
    const auto inner = Deformation::linear(zpow(3), 1.0, 0.0, 1e-2);
    for (const char* g : {"zbar^2", "z*zbar", "z^2 + zbar^3"}) {
      std::vector<int> counts;
      for (double s : {0.0, 1e-6, 1e-5}) {
        const auto v = verify_theorem2(SecondDeformation(inner, parse_poly(g), s), std::nullopt);
        counts.push_back(v.observed);
        if (!v.pass()) c.fail(std::string(g) + " s=" + fmt("%g", s) + ": " + v.note);
      }
      if (!std::all_of(counts.begin(), counts.end(), [&](int x) { return x == counts[0]; })) {
        c.fail(std::string(g) + ": counts vary with s");
      }
    }
    c.note("count 4 at s = 0, 1e-6, 1e-5 for all three g");
  });
}

Criterion ac8() {
  return guarded([](Criterion& c) {
    const auto h = parse_poly("zbar + zbar^2");
    std::string summary;
    for (unsigned k = 2; k <= 4; ++k) {
      const auto v = verify_theorem3(zpow(k), h, std::nullopt, std::nullopt);
      const std::string tag = "k=" + std::to_string(k);
      if (v.status == VerdictStatus::Fail) c.fail(tag + " failed: observed " + std::to_string(v.observed));
      if (v.status == VerdictStatus::Pass && v.observed < int(k) + 1) c.fail(tag + " pass below bound");
      if (!summary.empty()) summary += ", ";
      summary += tag + " " + std::string(to_string(v.status)) + " " + std::to_string(v.observed);
    }
    c.note(summary);
  });
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct GoldenRun {
  std::string name;
  RunConfig cfg;
};

// Mirrors the golden list in tests/CMakeLists.txt.
std::vector<GoldenRun> golden_runs() {
  std::vector<GoldenRun> out;
  auto add = [&out](std::string name, Command cmd, auto&& tweak) {
    RunConfig cfg;
    cfg.command = cmd;
    tweak(cfg);
    out.push_back({std::move(name), std::move(cfg)});
  };
  add("theorem1_z4.json", Command::Theorem1, [](RunConfig& c) {
    c.poly = "z^4";
    c.t = 1e-3;
    c.radius = 0.5;
  });
  const auto ex1 = [](RunConfig& c) {
    c.n = 3;
    c.a = 1.0;
    c.b = 0.0;
    c.t = 0.01;
  };
  add("example1_n3.csv", Command::Example1, ex1);
  add("example1_n3.svg", Command::Example1, ex1);
  add("example1_n3.json", Command::Example1, ex1);
  const auto z3z = [](RunConfig& c) {
    c.poly = "z^3 + z";
    c.auto_ab = true;
  };
  add("analyze_z3_z.svg", Command::Analyze, z3z);
  add("analyze_z3_z.json", Command::Analyze, z3z);
  add("corollary1_z4_z2.json", Command::Corollary1, [](RunConfig& c) {
    c.poly = "z^4 + z^2";
    c.auto_ab = true;
  });
  add("theorem2_z3_zbar2.json", Command::Theorem2, [](RunConfig& c) {
    c.poly = "z^3";
    c.g = "zbar^2";
    c.a = 1.0;
    c.b = 0.0;
    c.t = 1e-2;
    c.s = 1e-5;
  });
  add("theorem3_z3.json", Command::Theorem3, [](RunConfig& c) {
    c.poly = "z^3";
    c.h = "zbar + zbar^2";
    c.t = 1e-3;
  });
  add("genericity_z3_z7_z8.json", Command::Genericity, [](RunConfig& c) {
    c.poly = "z^3 + z^7 + z^8";
    c.auto_ab = true;
  });
  return out;
}

Criterion ac9(const std::filesystem::path& golden_dir) {
  return guarded([&golden_dir](Criterion& c) {
    std::mt19937_64 rng(0x99);
    std::uniform_int_distribution<int> coef(-9, 9), dg(0, 4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_mixed = [&] {
      MixedPolynomial g;
      for (int k = 0; k < 6; ++k) {
        g = g + MixedPolynomial::monomial({double(coef(rng)), double(coef(rng))},
                                          std::uint32_t(dg(rng)), std::uint32_t(dg(rng)));
      }
      return g;
    };
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = random_mixed(), h = random_mixed();
      const auto lhs = d_dz(g * h), rhs = d_dz(g) * h + g * d_dz(h);
      if ((lhs - rhs).max_coefficient_magnitude() > kLeibnizAbs) c.fail("Leibniz");
      if (d_dzbar(conjugate(g)) != conjugate(d_dz(g))) c.fail("conjugation");
    }
    for (int trial = 0; trial < 50; ++trial) {
      auto f = zpow(2 + trial % 5);
      for (unsigned p = 1; p < 2 + unsigned(trial % 5); ++p) {
        f = f + MixedPolynomial::monomial({u(rng), u(rng)}, p, 0);
      }
      const auto gp = genericity_polys(f);
      const auto j = jacobian(realize(Deformation::linear(f, u(rng), 0.5, 0.01)));
      for (const auto* poly : {&j, &gp.psi, &gp.phi1, &gp.phi2}) {
        if (!is_real_valued(*poly)) c.fail("not real valued on trial " + std::to_string(trial));
        const auto v = evaluate_bounded(*poly, {u(rng), u(rng)});
        if (std::abs(v.value.imag()) > kRealImagRel * (1.0 + v.magnitude)) c.fail("imaginary part");
      }
    }

    const auto work = std::filesystem::temp_directory_path() / "cuspidal_acceptance";
    std::filesystem::create_directories(work);
    int compared = 0;
    for (auto& entry : golden_runs()) {
      const auto ext = std::filesystem::path(entry.name).extension().string();
      std::string bytes[2];
      for (int k = 0; k < 2; ++k) {
        RunConfig cfg = entry.cfg;
        const auto target = (work / (std::to_string(k) + "_" + entry.name)).string();
        if (ext == ".json") cfg.out.json = target;
        if (ext == ".csv") cfg.out.csv = target;
        if (ext == ".svg") cfg.out.svg = target;
        std::ostringstream out, err;
        const int code = run(cfg, out, err);
        if (code != kExitPass) c.fail(entry.name + " exit " + std::to_string(code));
        bytes[k] = slurp(target);
      }
      if (bytes[0].empty() || bytes[0] != bytes[1]) c.fail(entry.name + " not deterministic");
      const auto golden = golden_dir / entry.name;
      if (std::filesystem::exists(golden)) {
        ++compared;
        if (slurp(golden) != bytes[0]) c.fail(entry.name + " differs from golden copy");
      }
    }
    c.note("identities hold; " + std::to_string(golden_runs().size()) +
           " CLI outputs byte-identical across runs, " + std::to_string(compared) +
           " match golden files");
  });
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path golden_dir = argc > 1 ? argv[1] : CUSPIDAL_GOLDEN_DIR;
  const std::vector<std::pair<const char*, std::function<Criterion()>>> criteria = {
      {"AC1 example1 counts and positions", ac1},
      {"AC2 example2 counts", ac2},
      {"AC3 theorem1 local counts and degrees", ac3},
      {"AC4 corollary1 formula on random f", ac4},
      {"AC5 closed-form identities", ac5},
      {"AC6 degree oracle", ac6},
      {"AC7 theorem2 stability", ac7},
      {"AC8 theorem3 bound", ac8},
      {"AC9 property suite and determinism", [&] { return ac9(golden_dir); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    const auto c = check();
    std::printf("%s %-40s (%.1fs) %s\n", c.pass ? "PASS" : "FAIL", name, seconds_since(start),
                c.detail.c_str());
    std::fflush(stdout);
    failed += c.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
