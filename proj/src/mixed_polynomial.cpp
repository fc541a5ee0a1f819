#include "cuspidal/mixed_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

void drop_zeros(MixedPolynomial::TermMap& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == Complex{0.0, 0.0}; });
}

std::uint32_t checked_sum(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) {
    throw std::overflow_error("mixed polynomial exponent overflow");
  }
  return a + b;
}

// powers[k] = base^k by repeated multiplication.
std::vector<Complex> powers_of(Complex base, std::uint32_t max_k) {
  std::vector<Complex> out(std::size_t{max_k} + 1);
  out[0] = 1.0;
  for (std::uint32_t k = 1; k <= max_k; ++k) out[k] = out[k - 1] * base;
  return out;
}

std::vector<double> powers_of(double base, std::uint32_t max_k) {
  std::vector<double> out(std::size_t{max_k} + 1);
  out[0] = 1.0;
  for (std::uint32_t k = 1; k <= max_k; ++k) out[k] = out[k - 1] * base;
  return out;
}

}  // namespace

void require_finite(ComplexPoint z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidInput(std::string(what) + ": non-finite complex point");
  }
}

MixedPolynomial::MixedPolynomial(TermMap terms) : terms_(std::move(terms)) {
  drop_zeros(terms_);
}

MixedPolynomial MixedPolynomial::constant(Complex c) { return monomial(c, 0, 0); }

MixedPolynomial MixedPolynomial::monomial(Complex c, std::uint32_t p, std::uint32_t q) {
  TermMap t;
  t.emplace(Exponent{p, q}, c);
  return MixedPolynomial(std::move(t));
}

Complex MixedPolynomial::coefficient(std::uint32_t p, std::uint32_t q) const {
  auto it = terms_.find(Exponent{p, q});
  return it == terms_.end() ? Complex{} : it->second;
}

std::uint32_t MixedPolynomial::degree() const {
  if (terms_.empty()) return 0;
  const auto e = terms_.rbegin()->first;
  return e.p + e.q;
}

std::uint32_t MixedPolynomial::max_p() const {
  std::uint32_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.p);
  return m;
}

std::uint32_t MixedPolynomial::max_q() const {
  std::uint32_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.q);
  return m;
}

bool MixedPolynomial::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.q == 0; });
}

double MixedPolynomial::max_coefficient_magnitude() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex evaluate(const MixedPolynomial& g, ComplexPoint z) { return evaluate_bounded(g, z).value; }

BoundedValue evaluate_bounded(const MixedPolynomial& g, ComplexPoint z) {
  if (g.is_zero()) return {};
  const auto zp = powers_of(z, g.max_p());
  const auto zq = powers_of(std::conj(z), g.max_q());
  const auto rp = powers_of(std::abs(z), g.degree());
  BoundedValue out;
  for (const auto& [e, c] : g.terms()) {
    out.value += c * (zp[e.p] * zq[e.q]);
    out.magnitude += std::abs(c) * rp[e.p + e.q];
  }
  return out;
}

MixedPolynomial d_dz(const MixedPolynomial& g) {
  MixedPolynomial::TermMap out;
  for (const auto& [e, c] : g.terms()) {
    if (e.p == 0) continue;
    out.emplace(Exponent{e.p - 1, e.q}, c * static_cast<double>(e.p));
  }
  return MixedPolynomial(std::move(out));
}

MixedPolynomial d_dzbar(const MixedPolynomial& g) {
  MixedPolynomial::TermMap out;
  for (const auto& [e, c] : g.terms()) {
    if (e.q == 0) continue;
    out.emplace(Exponent{e.p, e.q - 1}, c * static_cast<double>(e.q));
  }
  return MixedPolynomial(std::move(out));
}

MixedPolynomial conjugate(const MixedPolynomial& g) {
  MixedPolynomial::TermMap out;
  for (const auto& [e, c] : g.terms()) out.emplace(Exponent{e.q, e.p}, std::conj(c));
  return MixedPolynomial(std::move(out));
}

MixedPolynomial add(const MixedPolynomial& g, const MixedPolynomial& h) {
  auto out = g.terms();
  for (const auto& [e, c] : h.terms()) out[e] += c;
  return MixedPolynomial(std::move(out));
}

MixedPolynomial subtract(const MixedPolynomial& g, const MixedPolynomial& h) {
  auto out = g.terms();
  for (const auto& [e, c] : h.terms()) out[e] -= c;
  return MixedPolynomial(std::move(out));
}

MixedPolynomial mul(const MixedPolynomial& g, const MixedPolynomial& h) {
  MixedPolynomial::TermMap out;
  for (const auto& [eg, cg] : g.terms()) {
    for (const auto& [eh, ch] : h.terms()) {
      out[Exponent{checked_sum(eg.p, eh.p), checked_sum(eg.q, eh.q)}] += cg * ch;
    }
  }
  return MixedPolynomial(std::move(out));
}

MixedPolynomial scale(const MixedPolynomial& g, Complex c) {
  MixedPolynomial::TermMap out;
  for (const auto& [e, v] : g.terms()) out.emplace(e, v * c);
  return MixedPolynomial(std::move(out));
}

MixedPolynomial power(const MixedPolynomial& g, unsigned k) {
  auto out = MixedPolynomial::constant(1.0);
  for (unsigned i = 0; i < k; ++i) out = mul(out, g);
  return out;
}

MixedPolynomial prune(const MixedPolynomial& g, double eps) {
  auto out = g.terms();
  std::erase_if(out, [eps](const auto& kv) { return std::abs(kv.second) <= eps; });
  return MixedPolynomial(std::move(out));
}

bool is_real_valued(const MixedPolynomial& g) {
  for (const auto& [e, c] : g.terms()) {
    if (c != std::conj(g.coefficient(e.q, e.p))) return false;
  }
  return true;
}

MixedPolynomial real_part(const MixedPolynomial& g) {
  MixedPolynomial::TermMap out;
  for (const auto& [e, c] : g.terms()) {
    // Same expression for (p,q) and (q,p), so the pair is conjugate-exact.
    const Complex mirror = std::conj(g.coefficient(e.q, e.p));
    out.emplace(e, 0.5 * (c + mirror));
    out.emplace(Exponent{e.q, e.p}, std::conj(0.5 * (c + mirror)));
  }
  return MixedPolynomial(std::move(out));
}

MixedPolynomial imag_part(const MixedPolynomial& g) {
  // (g - conj g)/(2i) = -i/2 (g - conj g)
  MixedPolynomial::TermMap out;
  for (const auto& [e, c] : g.terms()) {
    const Complex mirror = std::conj(g.coefficient(e.q, e.p));
    const Complex v = Complex{0.0, -0.5} * (c - mirror);
    out.emplace(e, v);
    out.emplace(Exponent{e.q, e.p}, std::conj(v));
  }
  return MixedPolynomial(std::move(out));
}

MixedPolynomial taylor_shift(const MixedPolynomial& g, ComplexPoint center) {
  if (g.is_zero()) return g;
  const std::uint32_t n = std::max(g.max_p(), g.max_q());
  // Pascal triangle, exact in double for the degrees used here.
  std::vector<std::vector<double>> binom(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) {
    binom[i].assign(i + 1, 1.0);
    for (std::uint32_t j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  const auto cp = powers_of(center, g.max_p());
  const auto cq = powers_of(std::conj(center), g.max_q());

  MixedPolynomial::TermMap out;
  for (const auto& [e, c] : g.terms()) {
    // (center + u)^p (conj center + ubar)^q
    for (std::uint32_t j = 0; j <= e.p; ++j) {
      const Complex left = c * (binom[e.p][j] * cp[e.p - j]);
      for (std::uint32_t k = 0; k <= e.q; ++k) {
        out[Exponent{j, k}] += left * (binom[e.q][k] * cq[e.q - k]);
      }
    }
  }
  return MixedPolynomial(std::move(out));
}

std::string to_string(const MixedPolynomial& g) {
  if (g.is_zero()) return "0";
  std::string out;
  char buf[128];
  for (const auto& [e, c] : g.terms()) {
    if (!out.empty()) out += " + ";
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)*z^%u*zbar^%u", c.real(), c.imag(), e.p, e.q);
    out += buf;
  }
  return out;
}

}  // namespace cuspidal
