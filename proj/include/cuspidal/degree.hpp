#pragma once

#include <cstddef>
#include <numbers>
#include <string_view>
#include <variant>

#include "cuspidal/mixed_polynomial.hpp"

namespace cuspidal {

struct Circle {
  ComplexPoint center;
  double radius = 1.0;
};

struct BoxBoundary {
  ComplexPoint lo;
  ComplexPoint hi;
};

/// Closed curve traversed counterclockwise, plus the sampling controls used
/// when tracking the argument of g along it.
struct Contour {
  std::variant<Circle, BoxBoundary> shape;
  // Absolute floor on |g| at every sample. Zero selects the default,
  // 1e-9 times the largest coefficient magnitude of g.
  double min_modulus = 0.0;
  // Extra floor relative to sum |c_pq| |z|^(p+q) at the sample point.
  double relative_floor = 0.0;
  double max_step_turn = std::numbers::pi / 2;
  std::size_t sample_budget = std::size_t{1} << 20;

  static Contour circle(ComplexPoint center, double radius);
  static Contour box(ComplexPoint lo, ComplexPoint hi);
};

struct DegreeResult {
  int degree = 0;
  double min_modulus_seen = 0.0;
  std::size_t samples_used = 0;
};

// Mapping degree of g/|g| along the contour. Throws ModulusTooSmall when a
// sample falls under the floor and NonConvergent when the sample budget is
// exhausted or the accumulated turn is not close to a whole number of turns.
DegreeResult winding_number(const MixedPolynomial& g, const Contour& c);

enum class RootClass { PositiveSimple, NegativeSimple, Indeterminate };

std::string_view to_string(RootClass c);

// Sign of |g_z| - |g_zbar| with a dead band of width margin.
RootClass classify_by_derivatives(Complex g_z, Complex g_zbar, double margin);

// Throws NotARoot when |g(alpha)| > tol.
RootClass classify_root(const MixedPolynomial& g, ComplexPoint alpha, double tol);

// +1 when |h_z(0)| > |h_zbar(0)|, -1 when smaller; EqualModuli when the two
// moduli agree within tol.
int delta_of(const MixedPolynomial& h, double tol = 1e-12);

}  // namespace cuspidal
