#include "cuspidal/jets.hpp"

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

const Complex kI{0.0, 1.0};

void require_holomorphic(const MixedPolynomial& f, const char* what) {
  if (!f.is_holomorphic()) {
    throw InvalidInput(std::string(what) + " must be a complex polynomial (no zbar terms)");
  }
}

// -2i A B_zbar + 2i C B_z, the Wirtinger form shared by G and H.
MixedPolynomial minor_combination(const MixedPolynomial& a_z, const MixedPolynomial& a_zbar,
                                  const MixedPolynomial& jac) {
  return scale(mul(a_z, d_dzbar(jac)), -2.0 * kI) + scale(mul(a_zbar, d_dz(jac)), 2.0 * kI);
}

}  // namespace

Deformation::Deformation(MixedPolynomial base, std::variant<LinearTerm, GeneralTerm> kind, double t)
    : base_(std::move(base)), kind_(std::move(kind)), t_(t) {}

Deformation Deformation::linear(MixedPolynomial base, double a, double b, double t) {
  require_holomorphic(base, "deformation base");
  if (t != 0.0 && a == 0.0 && b == 0.0) {
    throw InvalidInput("linear deformation requires (a, b) != (0, 0) when t != 0");
  }
  return Deformation(std::move(base), LinearTerm{a, b}, t);
}

Deformation Deformation::general(MixedPolynomial base, MixedPolynomial h, double t) {
  require_holomorphic(base, "deformation base");
  if (h.coefficient(0, 0) != Complex{}) {
    throw InvalidInput("general deformation term must satisfy h(0) = 0");
  }
  return Deformation(std::move(base), GeneralTerm{std::move(h)}, t);
}

MixedPolynomial Deformation::direction() const {
  if (const auto* lin = std::get_if<LinearTerm>(&kind_)) {
    return MixedPolynomial::monomial(Complex{lin->a, lin->b}, 0, 1);
  }
  return std::get<GeneralTerm>(kind_).h;
}

Deformation Deformation::with_t(double t) const {
  if (const auto* lin = std::get_if<LinearTerm>(&kind_)) return linear(base_, lin->a, lin->b, t);
  return general(base_, std::get<GeneralTerm>(kind_).h, t);
}

SecondDeformation::SecondDeformation(Deformation inner, MixedPolynomial g, double s)
    : inner_(std::move(inner)), g_(std::move(g)), s_(s) {
  if (evaluate(d_dz(g_), 0.0) != Complex{} || evaluate(d_dzbar(g_), 0.0) != Complex{}) {
    throw InvalidInput("second deformation term needs vanishing first derivatives at 0");
  }
}

MixedPolynomial realize(const Deformation& d) {
  return add(d.base(), scale(d.direction(), d.t()));
}

MixedPolynomial realize(const SecondDeformation& sd) {
  return add(realize(sd.inner()), scale(sd.g(), sd.s()));
}

MixedPolynomial jacobian(const MixedPolynomial& g) {
  const auto gz = d_dz(g);
  const auto gzb = d_dzbar(g);
  return real_part(subtract(mul(gz, conjugate(gz)), mul(gzb, conjugate(gzb))));
}

MixedPolynomial cusp_poly(const MixedPolynomial& g) {
  return minor_combination(d_dz(g), d_dzbar(g), jacobian(g));
}

MixedPolynomial cusp_poly_linear_closed_form(const Deformation& d) {
  const auto* lin = std::get_if<LinearTerm>(&d.kind());
  if (lin == nullptr) throw InvalidInput("closed form applies to linear deformations only");
  const auto fz = d_dz(d.base());
  const auto fzz = d_dz(fz);
  const Complex ab{lin->a, lin->b};
  return scale(mul(mul(fz, fz), conjugate(fzz)), -2.0 * kI) +
         scale(mul(fzz, conjugate(fz)), 2.0 * d.t() * kI * ab);
}

MixedPolynomial regularity_poly(const MixedPolynomial& g) {
  return singularity_polys(g).regularity;
}

SingularityPolys singularity_polys(const MixedPolynomial& g) {
  SingularityPolys out;
  out.jacobian = jacobian(g);
  out.cusp = minor_combination(d_dz(g), d_dzbar(g), out.jacobian);
  out.regularity = minor_combination(d_dz(out.cusp), d_dzbar(out.cusp), out.jacobian);
  return out;
}

GenericityPolys genericity_polys(const MixedPolynomial& f) {
  require_holomorphic(f, "genericity polynomials input");
  const auto fz = d_dz(f);
  const auto fzz = d_dz(fz);
  const auto fzzz = d_dz(fzz);

  // Partials of f1 = Re f through Cauchy-Riemann:
  //   f_z  = f1x - i f1y          -> f1x = Re f_z,  f1y = -Im f_z
  //   f_zz = f1xx - i f1xy        -> f1xy = -Im f_zz, f1yy = -f1xx = -Re f_zz
  const auto fx = real_part(fz);
  const auto fy = scale(imag_part(fz), -1.0);
  const auto fxy = scale(imag_part(fzz), -1.0);
  const auto fyy = scale(real_part(fzz), -1.0);

  const auto fx2 = mul(fx, fx);
  const auto fy2 = mul(fy, fy);
  const auto second_diff = subtract(mul(fyy, fyy), mul(fxy, fxy));
  const auto cross = mul(fxy, fyy);
  const auto u = add(scale(fx2, -3.0), fy2);  // -3 f1x^2 + f1y^2
  const auto v = add(scale(fx2, -1.0), scale(fy2, 3.0));  // -f1x^2 + 3 f1y^2

  GenericityPolys out;
  out.phi1 = real_part(add(mul(mul(u, fy), second_diff), scale(mul(mul(v, fx), cross), 2.0)));
  out.phi2 = real_part(subtract(mul(mul(v, fx), second_diff), scale(mul(mul(u, fy), cross), 2.0)));

  const auto fzz2 = mul(fzz, fzz);
  const auto fz_fzzz = mul(fz, fzzz);
  const auto abs_fzz2 = mul(fzz, conjugate(fzz));
  out.psi = real_part(subtract(subtract(scale(mul(abs_fzz2, abs_fzz2), 3.0),
                                        mul(fzz2, conjugate(fz_fzzz))),
                               mul(conjugate(fzz2), fz_fzzz)));
  return out;
}

MixedPolynomial capital_phi(const MixedPolynomial& phi1, const MixedPolynomial& phi2, double a,
                            double b) {
  return add(scale(phi1, a), scale(phi2, b));
}

unsigned multiplicity_at_origin(const MixedPolynomial& f) {
  require_holomorphic(f, "multiplicity input");
  if (f.is_zero()) throw InvalidInput("multiplicity of the zero polynomial is undefined");
  if (f.coefficient(0, 0) != Complex{}) throw InvalidInput("multiplicity requires f(0) = 0");
  // Canonical order puts the lowest power first.
  return f.terms().begin()->first.p;
}

}  // namespace cuspidal
