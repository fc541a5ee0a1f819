#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>

#include "cuspidal/report.hpp"

using namespace cuspidal;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

CuspReport example1_report() {
  const auto d = Deformation::linear(MixedPolynomial::monomial(1.0, 3, 0), 1.0, 0.0, 0.01);
  auto rep = count_cusps(d, SearchRegion::square(0.0, 2.0));
  rep.per_singularity.push_back({0.0, 2, 4, 4});
  return rep;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("csv rows round-trip doubles") {
  CertifiedRoot r;
  r.center = {0.1, -1.0 / 3.0};
  r.degree = 1;
  r.classification = RootClass::PositiveSimple;
  const auto csv = cusps_csv({r});
  CHECK(csv.rfind("re,im,ms,class\n", 0) == 0);
  double re = 0, im = 0;
  int ms = 0;
  char cls[32] = {};
  REQUIRE(std::sscanf(csv.c_str() + 15, "%lf,%lf,%d,%31s", &re, &im, &ms, cls) == 4);
  CHECK(re == r.center.real());
  CHECK(im == r.center.imag());
  CHECK(ms == 1);
  CHECK(std::string(cls) == "PositiveSimple");
  CHECK(cusps_csv({}) == "re,im,ms,class\n");
}

TEST_CASE("verdict json expected field") {
  Verdict v;
  v.claim = "theorem1";
  v.expected_lo = 4;
  v.observed = 4;
  v.status = VerdictStatus::Pass;
  CHECK(to_json(v)["expected"] == 4);
  CHECK(to_json(v)["pass"] == true);
  v.expected_hi = 6;
  CHECK(to_json(v)["expected"]["hi"] == 6);
  v.expected_hi.reset();
  v.at_least = true;
  CHECK(to_json(v)["expected"]["at_least"] == 4);
  v.status = VerdictStatus::Inapplicable;
  CHECK(to_json(v)["status"] == "inapplicable");
  CHECK(to_json(v)["pass"] == false);
}

TEST_CASE("root and region json") {
  CertifiedRoot r;
  r.center = {0.5, 0.25};
  r.degree = -1;
  const auto j = to_json(r);
  CHECK(j["re"] == 0.5);
  CHECK(j["ms"] == -1);
  CHECK(j["class"] == "Indeterminate");
  CHECK(to_json(SearchRegion::square(0.0, 1.0)).size() == 4);
}

TEST_CASE("empty report draws axes and legend only") {
  CuspReport empty;
  const auto svg = render_svg(empty);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<line") == 2);
  CHECK(count_of(svg, "<circle") == 0);
  CHECK(count_of(svg, "<path") == 0);
  CHECK(count_of(svg, "<text") >= 4);
}

TEST_CASE("example1 picture") {
  const auto rep = example1_report();
  const auto svg = render_svg(rep);
  CHECK(count_of(svg, "fill=\"#c0392b\"") == 4);
  CHECK(count_of(svg, "fill=\"none\" stroke=\"#7f7f7f\"") == 1);
  CHECK(svg.find("stroke=\"#1f4e79\"") != std::string::npos);
  CHECK(svg.find("a = 1, b = 0, t = 0.01") != std::string::npos);
  CHECK(render_svg(rep) == svg);
  Canvas small;
  small.grid = 32;
  CHECK(render_svg(rep, small) != svg);
}

}  // TEST_SUITE
