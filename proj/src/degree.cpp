#include "cuspidal/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double d) {
  // into (-pi, pi]
  d = std::remainder(d, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

ComplexPoint lerp(ComplexPoint a, ComplexPoint b, double f) {
  return {std::lerp(a.real(), b.real(), f), std::lerp(a.imag(), b.imag(), f)};
}

struct Sample {
  ComplexPoint z;
  double arg = 0.0;
  // |g| / (|g_z| + |g_zbar|), a first-order estimate of the distance to the
  // nearest zero.
  double reach = 0.0;
};

struct Sampler {
  const MixedPolynomial& g;
  const MixedPolynomial gz;
  const MixedPolynomial gzb;
  const Contour& contour;
  double floor_abs;
  DegreeResult result;

  ComplexPoint point(double s) const {
    if (const auto* c = std::get_if<Circle>(&contour.shape)) {
      return c->center + std::polar(c->radius, kTwoPi * s);
    }
    const auto& b = std::get<BoxBoundary>(contour.shape);
    const ComplexPoint corners[5] = {b.lo, {b.hi.real(), b.lo.imag()}, b.hi,
                                     {b.lo.real(), b.hi.imag()}, b.lo};
    const double scaled = 4.0 * s;
    const int edge = std::min(3, static_cast<int>(std::floor(scaled)));
    return lerp(corners[edge], corners[edge + 1], scaled - edge);
  }

  // Argument of g at parameter s, enforcing the modulus floor.
  Sample sample(double s) {
    if (++result.samples_used > contour.sample_budget) {
      throw NonConvergent("winding number exceeded its sample budget");
    }
    const auto z = point(s);
    const auto bv = evaluate_bounded(g, z);
    const double mod = std::abs(bv.value);
    const double floor = std::max(floor_abs, contour.relative_floor * bv.magnitude);
    if (!(mod > 0.0) || mod < floor) {
      std::ostringstream os;
      os << "|g| = " << mod << " below floor " << floor << " at (" << z.real() << ", "
         << z.imag() << ")";
      throw ModulusTooSmall(z, mod, os.str());
    }
    result.min_modulus_seen = std::min(result.min_modulus_seen, mod);
    const double slope = std::abs(evaluate(gz, z)) + std::abs(evaluate(gzb, z));
    const double reach = slope > 0.0 ? mod / slope : std::numeric_limits<double>::infinity();
    return {z, std::arg(bv.value), reach};
  }

  // Accumulated argument change over [s0, s1]. A segment is accepted when
  // the phase steps are small and the segment is no longer than the
  // distance-to-zero estimate at its samples; the angle test alone can
  // alias a fast turn near a multiple zero by a full 2 pi.
  double turn(double s0, const Sample& a0, double s1, const Sample& a1) {
    const double sm = 0.5 * (s0 + s1);
    if (!(sm > s0 && sm < s1)) throw NonConvergent("winding number cannot resolve the argument");
    const double whole = wrap_angle(a1.arg - a0.arg);
    const Sample am = sample(sm);
    const double left = wrap_angle(am.arg - a0.arg);
    const double right = wrap_angle(a1.arg - am.arg);
    const double lim = contour.max_step_turn;
    const double reach = std::min({a0.reach, am.reach, a1.reach});
    if (std::abs(whole) <= lim && std::abs(left) <= lim && std::abs(right) <= lim &&
        std::abs(left + right - whole) < 1e-9 && std::abs(a1.z - a0.z) <= reach) {
      return left + right;
    }
    return turn(s0, a0, sm, am) + turn(sm, am, s1, a1);
  }
};

}  // namespace

Contour Contour::circle(ComplexPoint center, double radius) {
  require_finite(center, "circle center");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("circle radius must be > 0");
  return Contour{Circle{center, radius}};
}

Contour Contour::box(ComplexPoint lo, ComplexPoint hi) {
  require_finite(lo, "box corner");
  require_finite(hi, "box corner");
  if (!(lo.real() < hi.real() && lo.imag() < hi.imag())) {
    throw InvalidInput("box contour needs lo < hi componentwise");
  }
  return Contour{BoxBoundary{lo, hi}};
}

DegreeResult winding_number(const MixedPolynomial& g, const Contour& c) {
  if (g.is_zero()) throw InvalidInput("winding number of the zero polynomial");
  if (!(c.max_step_turn > 0.0 && c.max_step_turn < std::numbers::pi)) {
    throw InvalidInput("max_step_turn must lie in (0, pi)");
  }
  const double floor_abs =
      c.min_modulus > 0.0 ? c.min_modulus : 1e-9 * g.max_coefficient_magnitude();

  Sampler sampler{g, d_dz(g), d_dzbar(g), c, floor_abs,
                  DegreeResult{0, std::numeric_limits<double>::infinity(), 0}};
  constexpr int kInitial = 32;
  std::vector<Sample> samples(kInitial + 1);
  for (int i = 0; i < kInitial; ++i) samples[i] = sampler.sample(static_cast<double>(i) / kInitial);
  samples[kInitial] = samples[0];

  double total = 0.0;
  for (int i = 0; i < kInitial; ++i) {
    total += sampler.turn(static_cast<double>(i) / kInitial, samples[i],
                          static_cast<double>(i + 1) / kInitial, samples[i + 1]);
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.25) {
    throw NonConvergent("winding number residue too large");
  }
  sampler.result.degree = static_cast<int>(rounded);
  return sampler.result;
}

std::string_view to_string(RootClass c) {
  switch (c) {
    case RootClass::PositiveSimple: return "PositiveSimple";
    case RootClass::NegativeSimple: return "NegativeSimple";
    case RootClass::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

RootClass classify_by_derivatives(Complex g_z, Complex g_zbar, double margin) {
  const double pz = std::abs(g_z);
  const double pzb = std::abs(g_zbar);
  if (pz > pzb + margin) return RootClass::PositiveSimple;
  if (pzb > pz + margin) return RootClass::NegativeSimple;
  return RootClass::Indeterminate;
}

RootClass classify_root(const MixedPolynomial& g, ComplexPoint alpha, double tol) {
  require_finite(alpha, "classify_root point");
  const double mod = std::abs(evaluate(g, alpha));
  if (mod > tol) {
    std::ostringstream os;
    os << "|g(alpha)| = " << mod << " exceeds tolerance " << tol;
    throw NotARoot(os.str());
  }
  return classify_by_derivatives(evaluate(d_dz(g), alpha), evaluate(d_dzbar(g), alpha), tol);
}

int delta_of(const MixedPolynomial& h, double tol) {
  const double hz = std::abs(evaluate(d_dz(h), 0.0));
  const double hzb = std::abs(evaluate(d_dzbar(h), 0.0));
  if (std::abs(hz - hzb) <= tol) {
    throw EqualModuli("|h_z(0)| and |h_zbar(0)| coincide");
  }
  return hz > hzb ? 1 : -1;
}

}  // namespace cuspidal
