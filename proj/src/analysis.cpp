#include "cuspidal/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

bool point_less(ComplexPoint a, ComplexPoint b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_roots(std::vector<CertifiedRoot>& roots) {
  std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& x, const CertifiedRoot& y) {
    return point_less(x.center, y.center);
  });
}

void require_holomorphic(const MixedPolynomial& f, const char* what) {
  if (!f.is_holomorphic()) throw InvalidInput(std::string(what) + " must have no zbar terms");
}

CertifiedRoot translate(CertifiedRoot r, ComplexPoint by) {
  r.box.lo += by;
  r.box.hi += by;
  r.center += by;
  return r;
}

// Holomorphic f written around w with the terms u^0..u^m removed. At a zero
// of f_z of multiplicity m those coefficients vanish exactly; what is left in
// double precision is rounding from the shift and from the position of w.
// Dropping it makes the local model an exact multiple singularity.
MixedPolynomial local_base(const MixedPolynomial& f, ComplexPoint w, int m, double rho) {
  const auto shifted = taylor_shift(f, w);
  MixedPolynomial::TermMap kept;
  double total = 0.0;
  double dropped = 0.0;
  for (const auto& [e, c] : shifted.terms()) {
    if (e.p == 0) continue;
    const double size = std::abs(c) * std::pow(rho, static_cast<double>(e.p));
    total += size;
    if (static_cast<int>(e.p) <= m) {
      dropped = std::max(dropped, size);
    } else {
      kept.emplace(e, c);
    }
  }
  if (dropped > 1e-8 * total) {
    std::ostringstream os;
    os << "zero of f_z near (" << w.real() << ", " << w.imag() << ") is not a single root of"
       << " multiplicity " << m;
    throw IndeterminateCluster(os.str());
  }
  return MixedPolynomial(std::move(kept));
}

MixedPolynomial drop_constant(const MixedPolynomial& g) {
  auto terms = g.terms();
  terms.erase(Exponent{0, 0});
  return MixedPolynomial(std::move(terms));
}

struct Zones {
  std::vector<CertifiedRoot> cusps;
  std::vector<CertifiedRoot> spurious;
  std::vector<ComplexPoint> witnesses;
};

// Sorts one zero of G (in the frame of sp) into cusp / spurious / witness.
// Certified simple roots are judged at their refined position. An unresolved
// cluster is judged on its whole box: it touches the critical set unless a
// Taylor bound keeps J away from zero there, and likewise for H.
void classify_zero(const SingularityPolys& sp, const CertifiedRoot& r, ComplexPoint offset,
                   const Tolerances& tol, Zones& out) {
  const auto placed = translate(r, offset);
  if (r.classification != RootClass::Indeterminate) {
    const auto jb = evaluate_bounded(sp.jacobian, r.center);
    if (std::abs(jb.value) > tol.j_rel * jb.magnitude) {
      out.spurious.push_back(placed);
      return;
    }
    const auto hb = evaluate_bounded(sp.regularity, r.center);
    out.cusps.push_back(placed);
    if (!(std::abs(hb.value) > tol.h_rel * hb.magnitude)) out.witnesses.push_back(placed.center);
    return;
  }
  if (excludes_zeros(sp.jacobian, r.box)) {
    out.spurious.push_back(placed);
    return;
  }
  if (!excludes_zeros(sp.regularity, r.box)) {
    out.witnesses.push_back(placed.center);
    return;
  }
  std::ostringstream os;
  os << "unresolved zero cluster of G on the critical set near (" << placed.center.real() << ", "
     << placed.center.imag() << ")";
  throw IndeterminateCluster(os.str());
}

// G vanishing identically only happens for constant J; a nonzero constant J
// means there is no critical set at all.
bool has_no_critical_set(const SingularityPolys& sp) {
  if (!sp.cusp.is_zero()) return false;
  const auto& j = sp.jacobian;
  if (j.size() == 1 && j.coefficient(0, 0) != Complex{}) return true;
  throw IndeterminateCluster("cusp polynomial vanishes identically");
}

struct LocalOutcome {
  Zones zones;
  double radius = 0.0;
};

// Zeros of G in the disk |z - w| <= rho, computed in coordinates u = z - w.
LocalOutcome analyze_local(const MixedPolynomial& f, const MixedPolynomial& perturbation,
                           const Singularity& s, double rho, const AnalysisConfig& cfg) {
  const auto g = local_base(f, s.w, s.multiplicity, rho) + drop_constant(taylor_shift(perturbation, s.w));
  const auto sp = singularity_polys(g);
  LocalOutcome out;
  out.radius = rho;
  if (has_no_critical_set(sp)) return out;

  LocatorOptions opts;
  opts.on_boundary_zero = BoundaryZeroPolicy::EmitCluster;
  std::vector<CertifiedRoot> roots;
  const double factors[] = {1.05, 1.07, 1.11};
  for (std::size_t i = 0; i < std::size(factors); ++i) {
    auto box = SearchRegion::square(0.0, factors[i] * rho);
    box.max_depth = cfg.max_depth;
    box.refine_tol = cfg.refine_tol;
    try {
      roots = isolate_roots(sp.cusp, box, opts);
      break;
    } catch (const BoundaryZero&) {
      if (i + 1 == std::size(factors)) throw;
    }
  }

  // A root sitting on the disk boundary would make the count depend on
  // rounding; move the boundary off it.
  const double band = 10.0 * cfg.refine_tol;
  for (const double r : {rho, 0.99 * rho, 1.01 * rho}) {
    const bool straddles = std::any_of(roots.begin(), roots.end(), [&](const CertifiedRoot& c) {
      return std::abs(std::abs(c.center) - r) <= band;
    });
    if (!straddles) {
      out.radius = r;
      break;
    }
  }
  for (const auto& r : roots) {
    if (std::abs(r.center) <= out.radius) classify_zero(sp, r, s.w, cfg.tol, out.zones);
  }
  return out;
}

struct Disk {
  ComplexPoint c;
  double r;
  bool covers(ComplexPoint z) const { return std::abs(z - c) <= r; }
};

CuspReport analyze_map(const MixedPolynomial& base, const MixedPolynomial& map,
                       const SearchRegion& region, const AnalysisConfig& cfg) {
  region.validate();
  require_holomorphic(base, "deformation base");
  CuspReport report;
  report.base = base;
  report.map = map;
  report.region = region;

  const auto sings = singularities_of(base, cfg);
  const auto perturbation = map - base;
  Zones zones;
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < sings.size(); ++i) {
    if (!region.contains(sings[i].w)) continue;
    auto local = analyze_local(base, perturbation, sings[i], local_radius(sings, i), cfg);
    report.per_singularity.push_back({sings[i].w, sings[i].multiplicity, local.radius,
                                      static_cast<int>(local.zones.cusps.size())});
    disks.push_back({sings[i].w, local.radius});
    for (auto& v : {&Zones::cusps, &Zones::spurious}) {
      auto& src = local.zones.*v;
      (zones.*v).insert((zones.*v).end(), src.begin(), src.end());
    }
    zones.witnesses.insert(zones.witnesses.end(), local.zones.witnesses.begin(),
                           local.zones.witnesses.end());
  }

  // Everything outside the local disks.
  const auto sp = singularity_polys(map);
  if (!has_no_critical_set(sp)) {
    LocatorOptions opts;
    // A split line through a disk can run close to a high-order zero of G
    // at its center. The disk interior is handled above, so keep splitting
    // until the offending boxes fall inside a disk and are skipped.
    opts.on_boundary_zero = BoundaryZeroPolicy::Descend;
    opts.skip = [&disks](const SearchRegion& b) {
      const ComplexPoint corners[] = {b.lo, b.hi, {b.lo.real(), b.hi.imag()}, {b.hi.real(), b.lo.imag()}};
      return std::any_of(disks.begin(), disks.end(), [&](const Disk& d) {
        return std::all_of(std::begin(corners), std::end(corners),
                           [&](ComplexPoint c) { return d.covers(c); });
      });
    };
    auto box = region;
    box.max_depth = cfg.max_depth;
    box.refine_tol = cfg.refine_tol;
    for (const auto& r : isolate_roots(sp.cusp, box, opts)) {
      const bool local = std::any_of(disks.begin(), disks.end(),
                                     [&](const Disk& d) { return d.covers(r.center); });
      if (!local) classify_zero(sp, r, 0.0, cfg.tol, zones);
    }
  }

  sort_roots(zones.cusps);
  sort_roots(zones.spurious);
  std::sort(zones.witnesses.begin(), zones.witnesses.end(), point_less);
  report.cusps = std::move(zones.cusps);
  report.spurious = std::move(zones.spurious);
  report.witnesses = std::move(zones.witnesses);
  report.excellent = report.witnesses.empty();
  return report;
}

// Runs attempt(t) with t given or automatic; an automatic t that fails is
// retried at t/10 up to four times.
template <class Attempt>
Verdict with_schedule(std::optional<double> t, double t_auto, Attempt attempt) {
  double tv = t.value_or(t_auto);
  std::vector<double> schedule;
  for (int i = 0;; ++i) {
    schedule.push_back(tv);
    const bool last = t.has_value() || i == 4;
    try {
      Verdict v = attempt(tv);
      if (v.pass() || last) {
        v.t_used = tv;
        v.t_schedule = schedule;
        return v;
      }
    } catch (const NumericError&) {
      if (last) throw;
    }
    tv /= 10.0;
  }
}

// Singularity list with the zero of f_z at the origin placed exactly at 0.
std::pair<std::vector<Singularity>, std::size_t> origin_singularity(const MixedPolynomial& f,
                                                                    int k,
                                                                    const AnalysisConfig& cfg) {
  auto sings = singularities_of(f, cfg);
  std::size_t at = sings.size();
  for (std::size_t i = 0; i < sings.size(); ++i) {
    if (at == sings.size() || std::abs(sings[i].w) < std::abs(sings[at].w)) at = i;
  }
  if (at == sings.size()) {
    sings.push_back({0.0, k - 1});
    at = sings.size() - 1;
  }
  sings[at] = {0.0, k - 1};
  return {sings, at};
}

int require_multiplicity(const MixedPolynomial& f) {
  const int k = static_cast<int>(multiplicity_at_origin(f));
  if (k < 2) throw MultiplicityTooSmall("multiplicity at the origin must be at least 2");
  return k;
}

Contour quiet_circle(double radius) {
  auto c = Contour::circle(0.0, radius);
  c.min_modulus = kTiny;
  c.relative_floor = 1e-11;
  return c;
}

}  // namespace

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Inapplicable: return "inapplicable";
  }
  return "fail";
}

SearchRegion default_region(const MixedPolynomial& f) {
  require_holomorphic(f, "polynomial");
  const auto fz = d_dz(f);
  const auto n = fz.degree();
  double bound = 1.0;
  if (n > 0) {
    const double top = std::abs(fz.coefficient(n, 0));
    double ratio = 0.0;
    for (const auto& [e, c] : fz.terms()) {
      if (e.p != n) ratio = std::max(ratio, std::abs(c) / top);
    }
    bound += ratio;
  }
  return SearchRegion::square(0.0, 2.0 * bound);
}

std::vector<Singularity> singularities_of(const MixedPolynomial& f, const AnalysisConfig& cfg) {
  require_holomorphic(f, "polynomial");
  const auto fz = d_dz(f);
  if (fz.degree() == 0) return {};
  auto region = default_region(f);
  region.max_depth = cfg.max_depth;
  LocatorOptions opts;
  opts.on_boundary_zero = BoundaryZeroPolicy::EmitCluster;

  std::vector<Singularity> out;
  for (const auto& r : isolate_roots(fz, region, opts)) {
    if (!r.boundary_certified) throw IndeterminateCluster("unresolved zero cluster of f_z");
    if (r.degree == 0) continue;
    if (r.degree < 0) throw IndeterminateCluster("negative degree for a holomorphic polynomial");
    if (r.degree == 1 && r.classification == RootClass::PositiveSimple) {
      out.push_back({r.center, 1});
      continue;
    }
    // A root of multiplicity m is a simple root of the (m-1)-th derivative.
    auto lower = fz;
    for (int i = 1; i < r.degree; ++i) lower = d_dz(lower);
    ComplexPoint w = r.center;
    try {
      const auto refined = refine_root(lower, r.center, kTiny);
      if (std::abs(refined - r.center) <= std::hypot(r.box.width(), r.box.height())) w = refined;
    } catch (const NumericError&) {
    }
    out.push_back({w, r.degree});
  }
  std::sort(out.begin(), out.end(),
            [](const Singularity& x, const Singularity& y) { return point_less(x.w, y.w); });
  return out;
}

double local_radius(const std::vector<Singularity>& sings, std::size_t i) {
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < sings.size(); ++j) {
    if (j != i) nearest = std::min(nearest, std::abs(sings[j].w - sings[i].w));
  }
  return std::isfinite(nearest) ? 0.5 * nearest : 1.0;
}

double auto_t(const std::vector<Singularity>& sings) {
  double d = 1.0;
  int m = 1;
  if (sings.size() >= 2) {
    d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sings.size(); ++i) {
      for (std::size_t j = i + 1; j < sings.size(); ++j) {
        d = std::min(d, std::abs(sings[i].w - sings[j].w));
      }
    }
  }
  for (const auto& s : sings) m = std::max(m, s.multiplicity);
  return std::clamp(1e-2 * std::pow(d, m), 1e-8, 1e-2);
}

CuspReport count_cusps(const Deformation& d, const SearchRegion& region, const AnalysisConfig& cfg) {
  auto report = analyze_map(d.base(), realize(d), region, cfg);
  if (const auto* lin = std::get_if<LinearTerm>(&d.kind())) report.linear = *lin;
  report.t = d.t();
  return report;
}

CuspReport count_cusps(const SecondDeformation& sd, const SearchRegion& region,
                       const AnalysisConfig& cfg) {
  auto report = analyze_map(sd.inner().base(), realize(sd), region, cfg);
  if (const auto* lin = std::get_if<LinearTerm>(&sd.inner().kind())) report.linear = *lin;
  report.t = sd.inner().t();
  report.s = sd.s();
  return report;
}

ExcellenceResult check_excellent(const Deformation& d, const SearchRegion& region,
                                 const AnalysisConfig& cfg) {
  const auto report = count_cusps(d, region, cfg);
  return {report.excellent, report.witnesses};
}

Verdict verify_theorem1(const MixedPolynomial& f, double a, double b, std::optional<double> t,
                        std::optional<double> radius, const AnalysisConfig& cfg) {
  require_holomorphic(f, "base polynomial");
  const int k = require_multiplicity(f);
  const auto [sings, at] = origin_singularity(f, k, cfg);
  const double rho = radius.value_or(local_radius(sings, at));
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidInput("radius must be positive");

  // m_s(G_0, 0) does not depend on t.
  const int g0_degree = winding_number(cusp_poly(f), quiet_circle(0.5 * rho)).degree;

  return with_schedule(t, auto_t(sings), [&](double tv) {
    const auto d = Deformation::linear(f, a, b, tv);
    const auto local = analyze_local(f, realize(d) - f, sings[at], rho, cfg);
    int center_degree = 0;
    for (const auto& r : local.zones.spurious) center_degree += r.degree;
    const int nu = static_cast<int>(local.zones.cusps.size());
    const bool excellent = local.zones.witnesses.empty();
    const bool bookkeeping = nu + center_degree == g0_degree && g0_degree == k;

    Verdict v;
    v.claim = "theorem1";
    v.expected_lo = k + 1;
    v.observed = nu;
    v.cusps = local.zones.cusps;
    v.status = (nu == k + 1 && bookkeeping && excellent) ? VerdictStatus::Pass : VerdictStatus::Fail;
    v.details = {{"k", k},
                 {"radius", local.radius},
                 {"m_s_Gt_0", center_degree},
                 {"m_s_G0_0", g0_degree},
                 {"excellent", excellent ? 1.0 : 0.0}};
    if (!bookkeeping) v.note = "degree bookkeeping nu + m_s(G_t,0) = m_s(G_0,0) = k failed";
    if (!excellent) v.note = "deformation is not excellent near 0";
    return v;
  });
}

Verdict verify_corollary1(const MixedPolynomial& f, double a, double b, std::optional<double> t,
                          const AnalysisConfig& cfg) {
  require_holomorphic(f, "base polynomial");
  const int n = static_cast<int>(f.degree());
  if (n < 2) throw InvalidInput("degree of f must be at least 2");
  const auto sings = singularities_of(f, cfg);
  const int ell = static_cast<int>(sings.size());
  int total_multiplicity = 0;
  for (const auto& s : sings) total_multiplicity += s.multiplicity;
  const auto region = default_region(f);

  return with_schedule(t, auto_t(sings), [&](double tv) {
    const auto report = count_cusps(Deformation::linear(f, a, b, tv), region, cfg);
    const int observed = static_cast<int>(report.cusps.size());
    const int expected = n - 1 + 2 * ell;
    const bool in_range = observed >= n + 1 && observed <= 3 * n - 3;
    Verdict v;
    v.claim = "corollary1";
    v.expected_lo = expected;
    v.observed = observed;
    v.cusps = report.cusps;
    v.status = (observed == expected && in_range && report.excellent) ? VerdictStatus::Pass
                                                                       : VerdictStatus::Fail;
    v.details = {{"n", n},
                 {"ell", ell},
                 {"sum_m", total_multiplicity},
                 {"lower", n + 1},
                 {"upper", 3 * n - 3},
                 {"excellent", report.excellent ? 1.0 : 0.0}};
    if (!report.excellent) v.note = "deformation is not excellent";
    return v;
  });
}

Verdict verify_theorem2(const SecondDeformation& sd, std::optional<SearchRegion> region,
                        const AnalysisConfig& cfg) {
  const auto box = region.value_or(default_region(sd.inner().base()));
  const auto at_zero = count_cusps(sd.with_s(0.0), box, cfg);
  const auto at_s = count_cusps(sd, box, cfg);
  Verdict v;
  v.claim = "theorem2";
  v.expected_lo = static_cast<int>(at_zero.cusps.size());
  v.observed = static_cast<int>(at_s.cusps.size());
  v.cusps = at_s.cusps;
  const bool excellent = at_zero.excellent && at_s.excellent;
  v.status = (v.observed == v.expected_lo && excellent) ? VerdictStatus::Pass : VerdictStatus::Fail;
  v.details = {{"s", sd.s()},
               {"excellent_s0", at_zero.excellent ? 1.0 : 0.0},
               {"excellent_s", at_s.excellent ? 1.0 : 0.0}};
  if (!excellent) v.note = "a deformation in the family is not excellent";
  v.t_used = sd.inner().t();
  v.t_schedule = {v.t_used};
  return v;
}

Verdict verify_theorem3(const MixedPolynomial& f, const MixedPolynomial& h, std::optional<double> t,
                        std::optional<double> radius, const AnalysisConfig& cfg) {
  require_holomorphic(f, "base polynomial");
  const int k = require_multiplicity(f);
  const int delta = delta_of(h);
  const auto [sings, at] = origin_singularity(f, k, cfg);
  const double rho = radius.value_or(local_radius(sings, at));
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidInput("radius must be positive");

  return with_schedule(t, auto_t(sings), [&](double tv) {
    Verdict v;
    v.claim = "theorem3";
    v.expected_lo = k - delta;
    v.at_least = true;
    v.details = {{"k", k}, {"delta", delta}};
    const auto d = Deformation::general(f, h, tv);
    LocalOutcome local;
    try {
      local = analyze_local(f, realize(d) - f, sings[at], rho, cfg);
    } catch (const IndeterminateCluster& e) {
      v.status = VerdictStatus::Inapplicable;
      v.note = std::string("cusps could not be resolved as simple roots: ") + e.what();
      return v;
    }
    v.observed = static_cast<int>(local.zones.cusps.size());
    v.cusps = local.zones.cusps;
    v.details.emplace_back("radius", local.radius);
    const bool excellent = local.zones.witnesses.empty();
    const bool simple = std::all_of(local.zones.cusps.begin(), local.zones.cusps.end(),
                                    [](const CertifiedRoot& r) {
                                      return r.classification != RootClass::Indeterminate;
                                    });
    if (!excellent || !simple) {
      v.status = VerdictStatus::Inapplicable;
      v.note = !excellent ? "deformation is not excellent near 0"
                          : "a cusp is not a simple root of G";
      return v;
    }
    v.status = v.observed >= v.expected_lo ? VerdictStatus::Pass : VerdictStatus::Fail;
    return v;
  });
}

std::vector<ComplexPoint> example1_positions(int n, double a, double b, double t) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidInput("t must be positive");
  if (a == 0.0 && b == 0.0) throw InvalidInput("(a, b) must be nonzero");
  const double tau = std::hypot(a, b);
  const double iota = std::atan2(b, a);
  const double r = std::pow(t * tau / n, 1.0 / (n - 1));
  std::vector<ComplexPoint> out;
  for (int j = 0; j <= n; ++j) {
    out.push_back(std::polar(r, (iota + 2.0 * j * std::numbers::pi) / (n + 1)));
  }
  return out;
}

namespace {

GenericityResult scan_singularities(const MixedPolynomial& f, const std::vector<Singularity>& sings,
                                    double a, double b, std::optional<double> radius,
                                    int n_samples, const Tolerances& tol) {
  GenericityResult out;
  if (a == 0.0 && b == 0.0) {
    out.generic = false;
    return out;
  }
  constexpr int kLevels = 7;
  constexpr int kBisections = 60;
  for (std::size_t i = 0; i < sings.size(); ++i) {
    // The top circle of the default ladder stays well inside the local disk;
    // at the full radius it can run through points such as zeros of f_zz
    // where phi1 and phi2 vanish for every (a, b).
    const double rho = radius.value_or(0.5 * local_radius(sings, i));
    const auto gp = genericity_polys(local_base(f, sings[i].w, sings[i].multiplicity, rho));
    const auto psi = [&gp](ComplexPoint u) { return evaluate(gp.psi, u).real(); };
    const auto check = [&](ComplexPoint u) {
      ++out.points_checked;
      const auto p1 = evaluate_bounded(gp.phi1, u);
      const auto p2 = evaluate_bounded(gp.phi2, u);
      const double phi = a * p1.value.real() + b * p2.value.real();
      // Cancellation between the a and b terms, measured against the terms
      // themselves; the magnitude bounds only set the rounding floor.
      const double scale = std::abs(a) * std::abs(p1.value.real()) +
                           std::abs(b) * std::abs(p2.value.real());
      const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                           (std::abs(a) * p1.magnitude + std::abs(b) * p2.magnitude);
      if (std::abs(phi) < tol.phi_rel * scale + noise) {
        out.generic = false;
        out.witnesses.push_back(u + sings[i].w);
      }
    };
    for (int level = 0; level < kLevels; ++level) {
      const double r = std::ldexp(rho, -level);
      const auto at = [r](double theta) { return std::polar(r, theta); };
      const double step = 2.0 * std::numbers::pi / n_samples;
      for (int k = 0; k < n_samples; ++k) {
        double lo = k * step, hi = (k + 1) * step;
        double vlo = psi(at(lo));
        const double vhi = psi(at(hi));
        if (vlo == 0.0) {
          check(at(lo));
          continue;
        }
        if ((vlo < 0.0) == (vhi < 0.0) || vhi == 0.0) continue;
        for (int it = 0; it < kBisections; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double vm = psi(at(mid));
          if (vm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((vm < 0.0) == (vlo < 0.0)) {
            lo = mid;
            vlo = vm;
          } else {
            hi = mid;
          }
        }
        check(at(0.5 * (lo + hi)));
      }
    }
  }
  return out;
}

constexpr int kGateSamples = 256;

std::pair<double, double> unit_vector(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const double angle = static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

GenericityResult genericity_scan(const MixedPolynomial& f, double a, double b,
                                 std::optional<double> radius, int n_samples,
                                 const AnalysisConfig& cfg) {
  require_holomorphic(f, "polynomial");
  if (n_samples < 8) throw InvalidInput("genericity scan needs at least 8 samples per circle");
  if (radius && !(*radius > 0.0 && std::isfinite(*radius))) {
    throw InvalidInput("scan radius must be positive");
  }
  return scan_singularities(f, singularities_of(f, cfg), a, b, radius, n_samples, cfg.tol);
}

GenericChoice generic_ab(const MixedPolynomial& f, std::uint64_t seed, const AnalysisConfig& cfg) {
  require_holomorphic(f, "polynomial");
  const auto sings = singularities_of(f, cfg);
  constexpr int kMaxAttempts = 64;
  for (int i = 0; i < kMaxAttempts; ++i) {
    const auto [a, b] = unit_vector(seed + i);
    if (scan_singularities(f, sings, a, b, std::nullopt, kGateSamples, cfg.tol).generic) {
      return {a, b, seed + i, i + 1, true};
    }
  }
  const auto [a, b] = unit_vector(seed);
  return {a, b, seed, kMaxAttempts, false};
}

}  // namespace cuspidal
