#include "cuspidal/locator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Derivatives {
  MixedPolynomial g;
  MixedPolynomial gz;
  MixedPolynomial gzb;

  explicit Derivatives(const MixedPolynomial& poly) : g(poly), gz(d_dz(poly)), gzb(d_dzbar(poly)) {}
};

// |g| at or below rounding noise of its own evaluation.
bool at_noise_floor(const BoundedValue& bv) {
  return std::abs(bv.value) <= 64.0 * kEps * bv.magnitude;
}

struct NewtonOutcome {
  ComplexPoint z;
  bool converged = false;
};

// 2-D Newton on (Re g, Im g). The real Jacobian is
//   [[Re(g_z + g_zbar), -Im(g_z - g_zbar)], [Im(g_z + g_zbar), Re(g_z - g_zbar)]].
// Iterates down to the rounding floor of g rather than stopping at tol:
// with tiny deformation parameters an absolute |g| <= tol says nothing about
// the position. tol only rescues iterations that stagnate above the floor.
// If a fence box is given, leaving it (with 50% slack) aborts the iteration.
NewtonOutcome newton(const Derivatives& d, ComplexPoint z, double tol, int max_iter,
                     const SearchRegion* fence) {
  auto outside_fence = [fence](ComplexPoint p) {
    if (fence == nullptr) return false;
    const double sx = 0.5 * fence->width();
    const double sy = 0.5 * fence->height();
    return p.real() < fence->lo.real() - sx || p.real() > fence->hi.real() + sx ||
           p.imag() < fence->lo.imag() - sy || p.imag() > fence->hi.imag() + sy;
  };

  auto step = [&d](ComplexPoint p, Complex v) -> std::optional<ComplexPoint> {
    const Complex gz = evaluate(d.gz, p);
    const Complex gzb = evaluate(d.gzb, p);
    const Complex sum = gz + gzb;
    const Complex diff = gz - gzb;
    const double m11 = sum.real(), m12 = -diff.imag();
    const double m21 = sum.imag(), m22 = diff.real();
    const double det = m11 * m22 - m12 * m21;
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return std::nullopt;
    const double dx = (-v.real() * m22 + m12 * v.imag()) / det;
    const double dy = (-m11 * v.imag() + m21 * v.real()) / det;
    const ComplexPoint next = p + ComplexPoint{dx, dy};
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) return std::nullopt;
    return next;
  };

  ComplexPoint best = z;
  BoundedValue best_bv = evaluate_bounded(d.g, z);
  bool stagnated = false;
  for (int it = 0; it < max_iter; ++it) {
    const auto bv = evaluate_bounded(d.g, z);
    if (std::abs(bv.value) < std::abs(best_bv.value)) {
      best = z;
      best_bv = bv;
    }
    if (at_noise_floor(bv)) return {z, true};
    const auto next = step(z, bv.value);
    if (!next || outside_fence(*next)) break;
    const double moved = std::abs(*next - z);
    z = *next;
    if (moved <= 4.0 * kEps * std::abs(z)) {
      stagnated = true;
      const auto last = evaluate_bounded(d.g, z);
      if (std::abs(last.value) < std::abs(best_bv.value)) {
        best = z;
        best_bv = last;
      }
      break;
    }
  }
  const bool ok = at_noise_floor(best_bv) || (stagnated && std::abs(best_bv.value) <= tol);
  return {best, ok};
}

Contour box_contour(const SearchRegion& box, double relative_floor) {
  auto c = Contour::box(box.lo, box.hi);
  c.min_modulus = std::numeric_limits<double>::min();
  c.relative_floor = relative_floor;
  return c;
}

std::optional<int> boundary_degree(const MixedPolynomial& g, const SearchRegion& box,
                                   double relative_floor) {
  try {
    return winding_number(g, box_contour(box, relative_floor)).degree;
  } catch (const ModulusTooSmall&) {
    return std::nullopt;
  }
}

SearchRegion sub_box(const SearchRegion& parent, ComplexPoint lo, ComplexPoint hi) {
  SearchRegion b = parent;
  b.lo = lo;
  b.hi = hi;
  return b;
}

std::array<SearchRegion, 4> split_at(const SearchRegion& box, ComplexPoint s) {
  const double x0 = box.lo.real(), y0 = box.lo.imag();
  const double x1 = box.hi.real(), y1 = box.hi.imag();
  return {sub_box(box, {x0, y0}, s), sub_box(box, {s.real(), y0}, {x1, s.imag()}),
          sub_box(box, {x0, s.imag()}, {s.real(), y1}), sub_box(box, s, {x1, y1})};
}

// 0, +1/1000, -1/1000, +1/500, -1/500, +1/250, ...
double jitter_fraction(int attempt) {
  if (attempt == 0) return 0.0;
  const int level = (attempt - 1) / 2;
  const double mag = std::ldexp(1.0, level) / 1000.0;
  return (attempt % 2 == 1) ? mag : -mag;
}

struct Node {
  SearchRegion box;
  int depth = 0;
  std::optional<int> degree;
};

CertifiedRoot cluster_of(const Node& node, bool resolution_limited) {
  CertifiedRoot r;
  r.box = node.box;
  r.center = node.box.center();
  r.degree = node.degree.value_or(0);
  r.classification = RootClass::Indeterminate;
  r.boundary_certified = node.degree.has_value();
  r.resolution_limited = resolution_limited;
  return r;
}

std::optional<CertifiedRoot> certify_simple(const Derivatives& d, const SearchRegion& box,
                                            int degree) {
  const auto nt = newton(d, box.center(), box.refine_tol, 50, &box);
  if (!nt.converged || !box.contains(nt.z)) return std::nullopt;
  double rho = 0.0;
  for (const ComplexPoint corner : {box.lo, box.hi, ComplexPoint{box.lo.real(), box.hi.imag()},
                                    ComplexPoint{box.hi.real(), box.lo.imag()}}) {
    rho = std::max(rho, std::abs(corner - nt.z));
  }
  if (!injective_on_disk(d.g, nt.z, rho)) return std::nullopt;
  const auto cls = classify_by_derivatives(evaluate(d.gz, nt.z), evaluate(d.gzb, nt.z), 0.0);
  const auto expected = degree > 0 ? RootClass::PositiveSimple : RootClass::NegativeSimple;
  if (cls != expected) return std::nullopt;
  return CertifiedRoot{box, nt.z, degree, cls, true, false};
}

}  // namespace

SearchRegion SearchRegion::square(ComplexPoint center, double half_width) {
  SearchRegion r;
  r.lo = center - ComplexPoint{half_width, half_width};
  r.hi = center + ComplexPoint{half_width, half_width};
  return r;
}

bool SearchRegion::contains(ComplexPoint z) const {
  return z.real() >= lo.real() && z.real() <= hi.real() && z.imag() >= lo.imag() &&
         z.imag() <= hi.imag();
}

void SearchRegion::validate() const {
  require_finite(lo, "search region corner");
  require_finite(hi, "search region corner");
  if (!(lo.real() < hi.real() && lo.imag() < hi.imag())) {
    throw InvalidInput("search region must have nonempty interior");
  }
  if (max_depth < 0 || max_depth > 60) throw InvalidInput("max_depth must lie in [0, 60]");
  if (!(refine_tol > 0.0)) throw InvalidInput("refine_tol must be positive");
}

bool excludes_zeros(const MixedPolynomial& g, const SearchRegion& box) {
  if (g.is_zero()) return false;
  const auto c = box.center();
  const double rho = 0.5 * std::hypot(box.width(), box.height());
  const auto shifted = taylor_shift(g, c);
  double tail = 0.0;
  for (const auto& [e, coef] : shifted.terms()) {
    if (e.p + e.q == 0) continue;
    tail += std::abs(coef) * std::pow(rho, static_cast<double>(e.p + e.q));
  }
  const double head = std::abs(shifted.coefficient(0, 0));
  const double noise = 1e3 * kEps * evaluate_bounded(g, c).magnitude;
  return head > tail * (1.0 + 1e-9) + noise;
}

bool injective_on_disk(const MixedPolynomial& g, ComplexPoint alpha, double radius) {
  const auto shifted = taylor_shift(g, alpha);
  const double sigma = std::abs(std::abs(shifted.coefficient(1, 0)) -
                                std::abs(shifted.coefficient(0, 1)));
  double lipschitz = 0.0;
  for (const auto& [e, coef] : shifted.terms()) {
    const unsigned deg = e.p + e.q;
    if (deg < 2) continue;
    lipschitz += deg * std::abs(coef) * std::pow(radius, static_cast<double>(deg - 1));
  }
  return sigma > 0.0 && sigma > lipschitz * (1.0 + 1e-9);
}

std::vector<CertifiedRoot> isolate_roots(const MixedPolynomial& g, const SearchRegion& region,
                                         const LocatorOptions& options) {
  region.validate();
  if (g.is_zero()) throw InvalidInput("cannot isolate zeros of the zero polynomial");

  const Derivatives d(g);
  std::vector<CertifiedRoot> out;

  const auto top = boundary_degree(g, region, options.relative_floor);
  if (!top && options.on_boundary_zero != BoundaryZeroPolicy::Descend) {
    throw BoundaryZero("zero on the search region boundary");
  }

  std::vector<Node> stack{Node{region, 0, top}};
  std::size_t processed = 0;
  while (!stack.empty()) {
    if (++processed > options.box_budget) throw NonConvergent("root isolation box budget exhausted");
    Node node = std::move(stack.back());
    stack.pop_back();

    if (options.skip && options.skip(node.box)) continue;
    const bool maybe_empty = !node.degree || *node.degree == 0;
    if (maybe_empty && excludes_zeros(g, node.box)) continue;
    if (node.degree && std::abs(*node.degree) == 1) {
      if (auto r = certify_simple(d, node.box, *node.degree)) {
        out.push_back(*r);
        continue;
      }
    }
    if (node.depth >= node.box.max_depth) {
      if (!node.degree || *node.degree != 0) out.push_back(cluster_of(node, false));
      continue;
    }

    const auto mid = node.box.center();
    bool split = false;
    for (int attempt = 0; attempt <= options.jitter_attempts && !split; ++attempt) {
      const double f = jitter_fraction(attempt);
      const ComplexPoint s{mid.real() + f * node.box.width(), mid.imag() + f * node.box.height()};
      const auto kids = split_at(node.box, s);
      std::array<std::optional<int>, 4> degs;
      bool ok = true;
      int sum = 0;
      std::array<bool, 4> skipped{};
      bool any_skipped = false;
      for (std::size_t i = 0; i < 4 && ok; ++i) {
        skipped[i] = options.skip && options.skip(kids[i]);
        if (skipped[i]) {
          any_skipped = true;
          continue;
        }
        degs[i] = boundary_degree(g, kids[i], options.relative_floor);
        ok = degs[i].has_value();
        if (ok) sum += *degs[i];
      }
      // Dropped children hide part of the degree, so the sum check only
      // applies when all four were computed.
      if (ok && !any_skipped && node.degree && sum != *node.degree) ok = false;
      if (!ok) continue;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!skipped[i]) stack.push_back(Node{kids[i], node.depth + 1, degs[i]});
      }
      split = true;
    }
    if (split) continue;

    switch (options.on_boundary_zero) {
      case BoundaryZeroPolicy::Throw:
        throw BoundaryZero("no zero-free splitting line found after jitter attempts");
      case BoundaryZeroPolicy::EmitCluster:
        out.push_back(cluster_of(node, true));
        break;
      case BoundaryZeroPolicy::Descend: {
        for (const auto& kid : split_at(node.box, mid)) {
          stack.push_back(Node{kid, node.depth + 1, boundary_degree(g, kid, options.relative_floor)});
        }
        break;
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

ComplexPoint refine_root(const MixedPolynomial& g, ComplexPoint seed, double tol) {
  require_finite(seed, "refine_root seed");
  if (!(tol > 0.0)) throw InvalidInput("refine_root tolerance must be positive");
  const Derivatives d(g);
  const auto nt = newton(d, seed, tol, 50, nullptr);
  if (nt.converged) return nt.z;

  // Fallback: find a box around the seed with nonzero boundary degree, then
  // shrink it by keeping a child of nonzero degree.
  constexpr double kFloor = 1e-11;
  double half = 1e-2 * std::max(1.0, std::abs(seed));
  std::optional<SearchRegion> box;
  for (int grow = 0; grow < 12 && !box; ++grow, half *= 2.0) {
    auto candidate = SearchRegion::square(seed, half);
    const auto deg = boundary_degree(g, candidate, kFloor);
    if (deg && *deg != 0) box = candidate;
  }
  if (!box) throw Diverged("refine_root: Newton failed and no enclosing box has nonzero degree");

  for (int level = 0; level < 200; ++level) {
    const auto inner = newton(d, box->center(), tol, 50, &*box);
    if (inner.converged && box->contains(inner.z)) return inner.z;
    bool shrunk = false;
    for (int attempt = 0; attempt <= 8 && !shrunk; ++attempt) {
      const double f = jitter_fraction(attempt);
      const auto mid = box->center();
      const ComplexPoint s{mid.real() + f * box->width(), mid.imag() + f * box->height()};
      for (const auto& kid : split_at(*box, s)) {
        const auto deg = boundary_degree(g, kid, kFloor);
        if (deg && *deg != 0) {
          box = kid;
          shrunk = true;
          break;
        }
      }
    }
    if (!shrunk) {
      const auto bv = evaluate_bounded(g, box->center());
      if (std::abs(bv.value) <= tol || at_noise_floor(bv)) return box->center();
      throw Diverged("refine_root: box shrinking stalled");
    }
    if (box->width() < 4.0 * kEps * std::max(1.0, std::abs(box->center()))) return box->center();
  }
  throw Diverged("refine_root: fallback budget exhausted");
}

}  // namespace cuspidal
