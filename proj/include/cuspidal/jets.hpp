#pragma once

#include <variant>

#include "cuspidal/mixed_polynomial.hpp"

namespace cuspidal {

// f + t (a + ib) zbar
struct LinearTerm {
  double a = 0.0;
  double b = 0.0;
};

// f + t h(z, zbar), h(0) = 0
struct GeneralTerm {
  MixedPolynomial h;
};

/// A holomorphic base polynomial f together with a perturbation scaled by t.
///
/// Construction validates the invariants: f has no zbar terms, a linear
/// perturbation has (a, b) != (0, 0) whenever t != 0, and a general
/// perturbation has no constant term. Violations throw InvalidInput.
class Deformation {
 public:
  static Deformation linear(MixedPolynomial base, double a, double b, double t);
  static Deformation general(MixedPolynomial base, MixedPolynomial h, double t);

  const MixedPolynomial& base() const { return base_; }
  const std::variant<LinearTerm, GeneralTerm>& kind() const { return kind_; }
  bool is_linear() const { return std::holds_alternative<LinearTerm>(kind_); }
  double t() const { return t_; }

  // (a+ib) zbar for the linear kind, h for the general kind.
  MixedPolynomial direction() const;

  Deformation with_t(double t) const;

 private:
  Deformation(MixedPolynomial base, std::variant<LinearTerm, GeneralTerm> kind, double t);

  MixedPolynomial base_;
  std::variant<LinearTerm, GeneralTerm> kind_;
  double t_ = 0.0;
};

/// f_t + s g, where the first Wirtinger derivatives of g vanish at 0.
class SecondDeformation {
 public:
  SecondDeformation(Deformation inner, MixedPolynomial g, double s);

  const Deformation& inner() const { return inner_; }
  const MixedPolynomial& g() const { return g_; }
  double s() const { return s_; }

  SecondDeformation with_s(double s) const { return {inner_, g_, s}; }

 private:
  Deformation inner_;
  MixedPolynomial g_;
  double s_ = 0.0;
};

MixedPolynomial realize(const Deformation& d);
MixedPolynomial realize(const SecondDeformation& sd);

// J = |g_z|^2 - |g_zbar|^2, the determinant of the real derivative.
MixedPolynomial jacobian(const MixedPolynomial& g);

// G = G1 + i G2 with Gk = d(g_k, J)/d(x, y); in Wirtinger form
// G = -2i g_z J_zbar + 2i g_zbar J_z.
MixedPolynomial cusp_poly(const MixedPolynomial& g);

// -2i (f_z)^2 conj(f_zz) + 2ti(a+ib) f_zz conj(f_z); rejects general kinds.
MixedPolynomial cusp_poly_linear_closed_form(const Deformation& d);

// H = -2i G_z J_zbar + 2i G_zbar J_z with G = cusp_poly(g), J = jacobian(g).
MixedPolynomial regularity_poly(const MixedPolynomial& g);

// J, G and H of one map, computed together.
struct SingularityPolys {
  MixedPolynomial jacobian;
  MixedPolynomial cusp;
  MixedPolynomial regularity;
};
SingularityPolys singularity_polys(const MixedPolynomial& g);

struct GenericityPolys {
  MixedPolynomial phi1;
  MixedPolynomial phi2;
  MixedPolynomial psi;
};

// phi1, phi2 (real polynomials in the partials of Re f) and
// psi = 3|f_zz|^4 - f_zz^2 conj(f_z f_zzz) - conj(f_zz)^2 f_z f_zzz.
GenericityPolys genericity_polys(const MixedPolynomial& f);

MixedPolynomial capital_phi(const MixedPolynomial& phi1, const MixedPolynomial& phi2, double a,
                            double b);

// Smallest p with a nonzero z^p coefficient; f must be holomorphic,
// nonzero, with f(0) = 0.
unsigned multiplicity_at_origin(const MixedPolynomial& f);

}  // namespace cuspidal
