#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cuspidal/analysis.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/parse.hpp"

using namespace cuspidal;

namespace {

MixedPolynomial zpow(unsigned n) { return MixedPolynomial::monomial(1.0, n, 0); }

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("singularities of z^3 + z and z^4") {
  const auto s = singularities_of(parse_poly("z^3 + z"));
  REQUIRE(s.size() == 2);
  const double r3 = 1.0 / std::sqrt(3.0);
  for (const auto& x : s) {
    CHECK(std::abs(x.w.real()) <= 1e-10);
    CHECK(std::abs(std::abs(x.w.imag()) - r3) <= 1e-10);
  }
  CHECK(s[0].w.imag() * s[1].w.imag() < 0.0);
  CHECK(s[0].multiplicity == 1);
  CHECK(local_radius(s, 0) == doctest::Approx(1.0 / std::sqrt(3.0)));

  const auto q = singularities_of(zpow(4));
  REQUIRE(q.size() == 1);
  CHECK(q[0].multiplicity == 3);
  CHECK(std::abs(q[0].w) <= 1e-8);
  CHECK(local_radius(q, 0) == 1.0);
}

TEST_CASE("auto_t schedule") {
  CHECK(auto_t({{0.0, 3}}) == 1e-2);
  CHECK(auto_t({{0.0, 1}, {0.1, 1}}) == doctest::Approx(1e-3));
  CHECK(auto_t({{0.0, 4}, {1e-3, 1}}) == 1e-8);
}

TEST_CASE("example1 closed form") {
  const auto p = example1_positions(2, 1.0, 0.0, 0.02);
  REQUIRE(p.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(p[j]) == doctest::Approx(0.01));
    CHECK(std::abs(p[j] - std::polar(0.01, 2.0 * std::numbers::pi * j / 3.0)) <= 1e-15);
  }
  const auto q = example1_positions(3, 0.0, 1.0, 0.05);
  REQUIRE(q.size() == 4);
  for (int j = 0; j < 4; ++j) {
    const double theta = (std::numbers::pi / 2 + 2.0 * std::numbers::pi * j) / 4.0;
    CHECK(std::abs(std::arg(q[j]) - std::remainder(theta, 2.0 * std::numbers::pi)) <= 1e-12);
  }
}

TEST_CASE("count_cusps for z^3 + 0.01 zbar over the plane") {
  const auto d = Deformation::linear(zpow(3), 1.0, 0.0, 0.01);
  const auto rep = count_cusps(d, default_region(zpow(3)));
  CHECK(rep.cusps.size() == 4);
  REQUIRE(rep.spurious.size() == 1);
  CHECK(rep.spurious[0].degree == -1);
  CHECK(std::abs(rep.spurious[0].center) <= 1e-6);
  CHECK(rep.excellent);
  const auto closed = example1_positions(3, 1.0, 0.0, 0.01);
  for (const auto& c : rep.cusps) {
    CHECK(c.classification == RootClass::PositiveSimple);
    double best = 1.0;
    for (auto p : closed) best = std::min(best, std::abs(p - c.center));
    CHECK(best <= 1e-8);
  }
}

TEST_CASE("excellence fails at t = 0") {
  const auto d = Deformation::linear(zpow(3), 1.0, 0.0, 0.0);
  CHECK_FALSE(check_excellent(d, SearchRegion::square(0.0, 0.5)).excellent);
}

TEST_CASE("theorem1") {
  const auto v = verify_theorem1(zpow(4), 1.0, 0.0, 1e-3, 0.5);
  CHECK(v.pass());
  CHECK(v.expected_lo == 5);
  CHECK(v.observed == 5);
  const auto g = generic_ab(parse_poly("z^2 + z^5"), kDefaultSeed);
  const auto w = verify_theorem1(parse_poly("z^2 + z^5"), g.a, g.b, std::nullopt, std::nullopt);
  CHECK(w.pass());
  CHECK(w.expected_lo == 3);
  CHECK_THROWS_AS(verify_theorem1(parse_poly("z + z^2"), 1.0, 0.0, 1e-3, 0.5),
                  MultiplicityTooSmall);
}

TEST_CASE("corollary1 on z^4 + z^2") {
  const auto f = parse_poly("z^4 + z^2");
  const auto g = generic_ab(f, kDefaultSeed);
  const auto v = verify_corollary1(f, g.a, g.b, std::nullopt);
  CHECK(v.pass());
  CHECK(v.observed == 9);
}

TEST_CASE("theorem2 stability") {
  const auto inner = Deformation::linear(zpow(3), 1.0, 0.0, 1e-2);
  for (const char* g : {"zbar^2", "z*zbar"}) {
    const auto v = verify_theorem2(SecondDeformation(inner, parse_poly(g), 1e-5), std::nullopt);
    CHECK(v.pass());
    CHECK(v.observed == 4);
  }
  CHECK(verify_theorem2(SecondDeformation(inner, parse_poly("zbar^2"), 0.0), std::nullopt).pass());
}

TEST_CASE("theorem3") {
  const auto v = verify_theorem3(zpow(3), parse_poly("zbar"), 1e-3, std::nullopt);
  CHECK(v.pass());
  CHECK(v.at_least);
  CHECK(v.expected_lo == 4);
  CHECK(v.observed == 4);
  const auto w = verify_theorem3(zpow(3), parse_poly("zbar + zbar^2"), 1e-3, std::nullopt);
  CHECK(w.status != VerdictStatus::Fail);
  if (w.pass()) CHECK(w.observed >= 4);
  CHECK_THROWS_AS(verify_theorem3(zpow(3), zpow(2), 1e-3, std::nullopt), EqualModuli);
}

TEST_CASE("genericity scan") {
  CHECK_FALSE(genericity_scan(zpow(3), 0.0, 0.0, std::nullopt, 64).generic);
  const auto sq = genericity_scan(zpow(2), 0.6, 0.8, std::nullopt, 64);
  CHECK(sq.generic);
  CHECK(sq.points_checked == 0);
  CHECK(GenericityResult::heuristic);
}

TEST_CASE("generic_ab is deterministic and unit length") {
  const auto f = parse_poly("z^3 + z");
  const auto a = generic_ab(f, 42), b = generic_ab(f, 42);
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
  CHECK(a.seed == b.seed);
  CHECK(std::hypot(a.a, a.b) == doctest::Approx(1.0));
  CHECK(a.gated);
}

TEST_CASE("verdict status strings") {
  CHECK(to_string(VerdictStatus::Pass) == "pass");
  CHECK(to_string(VerdictStatus::Fail) == "fail");
  CHECK(to_string(VerdictStatus::Inapplicable) == "inapplicable");
}

}  // TEST_SUITE
