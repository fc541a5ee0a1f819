#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace cuspidal {

using Complex = std::complex<double>;

// A point of the plane, z = x + iy. Finite components are required wherever
// a point crosses the public API (see require_finite).
using ComplexPoint = std::complex<double>;

void require_finite(ComplexPoint z, const char* what);

// Exponent pair of the monomial z^p zbar^q.
struct Exponent {
  std::uint32_t p = 0;
  std::uint32_t q = 0;

  friend bool operator==(Exponent, Exponent) = default;
};

// Canonical term order: total degree p+q first, then p.
struct CanonicalOrder {
  bool operator()(Exponent a, Exponent b) const {
    const std::uint64_t da = std::uint64_t{a.p} + a.q;
    const std::uint64_t db = std::uint64_t{b.p} + b.q;
    if (da != db) return da < db;
    return a.p < b.p;
  }
};

/// Sparse polynomial in z and zbar with double-precision complex
/// coefficients, sum of c_pq z^p zbar^q.
///
/// Values are immutable once built; every operation below is a pure
/// function returning a new polynomial. No stored coefficient is exactly
/// zero, so the zero polynomial is the empty term map.
class MixedPolynomial {
 public:
  using TermMap = std::map<Exponent, Complex, CanonicalOrder>;

  MixedPolynomial() = default;
  explicit MixedPolynomial(TermMap terms);

  static MixedPolynomial constant(Complex c);
  static MixedPolynomial monomial(Complex c, std::uint32_t p, std::uint32_t q);
  static MixedPolynomial z() { return monomial(1.0, 1, 0); }
  static MixedPolynomial zbar() { return monomial(1.0, 0, 1); }

  const TermMap& terms() const { return terms_; }
  Complex coefficient(std::uint32_t p, std::uint32_t q) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Largest p+q over stored terms; 0 for the zero polynomial.
  std::uint32_t degree() const;
  std::uint32_t max_p() const;
  std::uint32_t max_q() const;

  // Every term has q = 0.
  bool is_holomorphic() const;

  double max_coefficient_magnitude() const;

  friend bool operator==(const MixedPolynomial&, const MixedPolynomial&) = default;

 private:
  TermMap terms_;
};

Complex evaluate(const MixedPolynomial& g, ComplexPoint z);

// Value together with sum |c_pq| |z|^(p+q), the natural scale of rounding
// error in the evaluation at z.
struct BoundedValue {
  Complex value;
  double magnitude = 0.0;
};
BoundedValue evaluate_bounded(const MixedPolynomial& g, ComplexPoint z);

MixedPolynomial d_dz(const MixedPolynomial& g);
MixedPolynomial d_dzbar(const MixedPolynomial& g);

MixedPolynomial conjugate(const MixedPolynomial& g);
MixedPolynomial add(const MixedPolynomial& g, const MixedPolynomial& h);
MixedPolynomial subtract(const MixedPolynomial& g, const MixedPolynomial& h);
MixedPolynomial mul(const MixedPolynomial& g, const MixedPolynomial& h);
MixedPolynomial scale(const MixedPolynomial& g, Complex c);
MixedPolynomial power(const MixedPolynomial& g, unsigned k);

// Drops coefficients with |c| <= eps. prune(g, 0.0) is the identity.
MixedPolynomial prune(const MixedPolynomial& g, double eps);

// c_pq == conj(c_qp) for every stored term, compared exactly.
bool is_real_valued(const MixedPolynomial& g);

// (g + conj g)/2 and (g - conj g)/(2i); both results pass is_real_valued
// exactly.
MixedPolynomial real_part(const MixedPolynomial& g);
MixedPolynomial imag_part(const MixedPolynomial& g);

// g(center + u) re-expanded as a mixed polynomial in u.
MixedPolynomial taylor_shift(const MixedPolynomial& g, ComplexPoint center);

// Textual form `(<re>,<im>)*z^p*zbar^q` joined by ` + ` in canonical order,
// 17 significant digits; "0" for the zero polynomial.
std::string to_string(const MixedPolynomial& g);

inline MixedPolynomial operator+(const MixedPolynomial& g, const MixedPolynomial& h) {
  return add(g, h);
}
inline MixedPolynomial operator-(const MixedPolynomial& g, const MixedPolynomial& h) {
  return subtract(g, h);
}
inline MixedPolynomial operator-(const MixedPolynomial& g) { return scale(g, -1.0); }
inline MixedPolynomial operator*(const MixedPolynomial& g, const MixedPolynomial& h) {
  return mul(g, h);
}
inline MixedPolynomial operator*(Complex c, const MixedPolynomial& g) { return scale(g, c); }

}  // namespace cuspidal
