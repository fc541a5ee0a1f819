#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cuspidal/degree.hpp"
#include "cuspidal/mixed_polynomial.hpp"

namespace cuspidal {

// Axis-aligned search rectangle plus the subdivision controls.
struct SearchRegion {
  ComplexPoint lo;
  ComplexPoint hi;
  int max_depth = 40;
  double refine_tol = 1e-10;

  static SearchRegion square(ComplexPoint center, double half_width);

  ComplexPoint center() const { return 0.5 * (lo + hi); }
  double width() const { return hi.real() - lo.real(); }
  double height() const { return hi.imag() - lo.imag(); }
  bool contains(ComplexPoint z) const;

  // Throws InvalidInput unless lo < hi, everything finite, 0 <= max_depth <= 60.
  void validate() const;
};

struct CertifiedRoot {
  SearchRegion box;
  ComplexPoint center;
  int degree = 0;  // winding number of g on the box boundary
  RootClass classification = RootClass::Indeterminate;
  // False when the box boundary itself could not be certified zero-free
  // (only possible with BoundaryZeroPolicy::Descend); degree is then 0.
  bool boundary_certified = true;
  // Emitted because no zero-free splitting line existed at double precision.
  bool resolution_limited = false;
};

// What to do when no jittered split of a box yields zero-free child
// boundaries.
enum class BoundaryZeroPolicy {
  Throw,        // BoundaryZero
  EmitCluster,  // emit the unsplittable box as an Indeterminate cluster
  Descend,      // split anyway, children with uncertified boundaries
};

struct LocatorOptions {
  BoundaryZeroPolicy on_boundary_zero = BoundaryZeroPolicy::Throw;
  // |g| below this multiple of sum |c||z|^(p+q) counts as zero on a boundary.
  double relative_floor = 1e-11;
  int jitter_attempts = 8;
  std::size_t box_budget = std::size_t{1} << 22;
  // Boxes for which this returns true are dropped without inspection.
  std::function<bool(const SearchRegion&)> skip;
};

/// Isolates the zeros of g inside region by quadtree subdivision with
/// boundary-degree certification.
///
/// A box with boundary degree +-1 is emitted once Newton converges inside it
/// and an injectivity bound on the Taylor expansion at the converged point
/// shows the root is the only one in the box. Boxes of degree 0 are dropped
/// only after a Taylor lower bound on |g| excludes zeros, since a +1/-1 pair
/// has degree 0. Boxes still unresolved at max_depth are emitted as
/// Indeterminate clusters carrying their raw degree. Results are sorted by
/// (Re, Im) of the centers.
std::vector<CertifiedRoot> isolate_roots(const MixedPolynomial& g, const SearchRegion& region,
                                         const LocatorOptions& options = {});

// Newton iteration with the 2x2 real Jacobian built from g_z and g_zbar.
// Falls back to boundary-degree box shrinking around the seed; throws
// Diverged when both fail.
ComplexPoint refine_root(const MixedPolynomial& g, ComplexPoint seed, double tol);

// True when the Taylor bound at the box center proves g has no zero in the box.
bool excludes_zeros(const MixedPolynomial& g, const SearchRegion& box);

// True when g restricted to the closed disk of given radius around alpha is
// injective by the Taylor bound, so the disk holds at most one zero.
bool injective_on_disk(const MixedPolynomial& g, ComplexPoint alpha, double radius);

}  // namespace cuspidal
