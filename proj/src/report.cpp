#include "cuspidal/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace cuspidal {

namespace {

std::string fmt(const char* format, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

struct View {
  double x0 = -1.0, y0 = -1.0, x1 = 1.0, y1 = 1.0;
};

View choose_view(const CuspReport& report, const Canvas& canvas) {
  std::vector<ComplexPoint> pts;
  for (const auto& r : report.cusps) pts.push_back(r.center);
  for (const auto& r : report.spurious) pts.push_back(r.center);
  for (const auto& s : report.per_singularity) pts.push_back(s.w);

  View v;
  if (!pts.empty()) {
    v.x0 = v.x1 = pts.front().real();
    v.y0 = v.y1 = pts.front().imag();
    for (const auto p : pts) {
      v.x0 = std::min(v.x0, p.real());
      v.x1 = std::max(v.x1, p.real());
      v.y0 = std::min(v.y0, p.imag());
      v.y1 = std::max(v.y1, p.imag());
    }
    double extent = std::max(v.x1 - v.x0, v.y1 - v.y0);
    if (!(extent > 0.0)) extent = std::max(1e-3, 0.1 * std::max(std::abs(v.x0), std::abs(v.y0)));
    const double pad = 0.35 * extent;
    v.x0 -= pad;
    v.x1 += pad;
    v.y0 -= pad;
    v.y1 += pad;
  } else if (report.region.width() > 0.0 && report.region.height() > 0.0) {
    v = {report.region.lo.real(), report.region.lo.imag(), report.region.hi.real(),
         report.region.hi.imag()};
  }

  // Match the canvas aspect ratio so circles stay circles.
  const double want = static_cast<double>(canvas.width) / canvas.height;
  const double w = v.x1 - v.x0, h = v.y1 - v.y0;
  if (w / h < want) {
    const double grow = 0.5 * (h * want - w);
    v.x0 -= grow;
    v.x1 += grow;
  } else {
    const double grow = 0.5 * (w / want - h);
    v.y0 -= grow;
    v.y1 += grow;
  }
  return v;
}

struct Projector {
  View v;
  double width, height;
  double px(double x) const { return (x - v.x0) / (v.x1 - v.x0) * width; }
  double py(double y) const { return height - (y - v.y0) / (v.y1 - v.y0) * height; }
};

// Segments of the zero set of the real polynomial jac over the view.
std::string contour_path(const MixedPolynomial& jac, const Projector& pr, int n) {
  if (jac.is_zero() || n < 1) return {};
  const double dx = (pr.v.x1 - pr.v.x0) / n;
  const double dy = (pr.v.y1 - pr.v.y0) / n;
  std::vector<double> val(static_cast<std::size_t>(n + 1) * (n + 1));
  auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(j) * (n + 1) + i]; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      at(i, j) = evaluate(jac, {pr.v.x0 + i * dx, pr.v.y0 + j * dy}).real();
    }
  }

  std::string path;
  auto emit = [&](ComplexPoint p, ComplexPoint q) {
    path += fmt("M%.2f %.2f", pr.px(p.real()), pr.py(p.imag()));
    path += fmt("L%.2f %.2f", pr.px(q.real()), pr.py(q.imag()));
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // corners counterclockwise from bottom-left
      const double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const ComplexPoint c[4] = {{pr.v.x0 + i * dx, pr.v.y0 + j * dy},
                                 {pr.v.x0 + (i + 1) * dx, pr.v.y0 + j * dy},
                                 {pr.v.x0 + (i + 1) * dx, pr.v.y0 + (j + 1) * dy},
                                 {pr.v.x0 + i * dx, pr.v.y0 + (j + 1) * dy}};
      bool pos[4];
      for (int k = 0; k < 4; ++k) pos[k] = v[k] > 0.0;
      ComplexPoint cross[4];
      bool has[4];
      int count = 0;
      for (int e = 0; e < 4; ++e) {
        const int a = e, b = (e + 1) % 4;
        has[e] = pos[a] != pos[b];
        if (has[e]) {
          const double f = v[a] / (v[a] - v[b]);
          cross[e] = c[a] + f * (c[b] - c[a]);
          ++count;
        }
      }
      if (count == 2) {
        int first = -1;
        for (int e = 0; e < 4; ++e) {
          if (!has[e]) continue;
          if (first < 0) {
            first = e;
          } else {
            emit(cross[first], cross[e]);
          }
        }
      } else if (count == 4) {
        // Saddle: decide by the cell average which diagonal pair connects.
        const bool center = (v[0] + v[1] + v[2] + v[3]) > 0.0;
        if (center == pos[0]) {
          emit(cross[0], cross[1]);  // cut off corner 1
          emit(cross[2], cross[3]);  // cut off corner 3
        } else {
          emit(cross[3], cross[0]);  // cut off corner 0
          emit(cross[1], cross[2]);  // cut off corner 2
        }
      }
    }
  }
  return path;
}

}  // namespace

nlohmann::json to_json(const CertifiedRoot& r) {
  return {{"re", r.center.real()},
          {"im", r.center.imag()},
          {"ms", r.degree},
          {"class", std::string(to_string(r.classification))}};
}

nlohmann::json to_json(const SearchRegion& r) {
  return nlohmann::json::array({r.lo.real(), r.lo.imag(), r.hi.real(), r.hi.imag()});
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json expected;
  if (v.at_least) {
    expected = {{"at_least", v.expected_lo}};
  } else if (v.expected_hi) {
    expected = {{"lo", v.expected_lo}, {"hi", *v.expected_hi}};
  } else {
    expected = v.expected_lo;
  }
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [k, x] : v.details) details[k] = x;
  return {{"claim", v.claim},           {"expected", expected},
          {"observed", v.observed},     {"status", std::string(to_string(v.status))},
          {"pass", v.pass()},           {"details", details},
          {"note", v.note},             {"t_used", v.t_used},
          {"t_schedule", v.t_schedule}};
}

std::string cusps_csv(const std::vector<CertifiedRoot>& roots) {
  std::string out = "re,im,ms,class\n";
  char buf[160];
  for (const auto& r : roots) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%s\n", r.center.real(), r.center.imag(),
                  r.degree, std::string(to_string(r.classification)).c_str());
    out += buf;
  }
  return out;
}

std::string render_svg(const CuspReport& report, const Canvas& canvas) {
  const Projector pr{choose_view(report, canvas), static_cast<double>(canvas.width),
                     static_cast<double>(canvas.height)};
  char buf[256];
  std::string svg;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                canvas.width, canvas.height, canvas.width, canvas.height);
  svg += buf;
  svg += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes through the origin when visible
  if (pr.v.x0 < 0.0 && pr.v.x1 > 0.0) {
    svg += fmt("<line x1=\"%.2f\" y1=\"0\" x2=\"%.2f\"", pr.px(0.0), pr.px(0.0));
    std::snprintf(buf, sizeof buf, " y2=\"%d\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n",
                  canvas.height);
    svg += buf;
  }
  if (pr.v.y0 < 0.0 && pr.v.y1 > 0.0) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"0\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\" stroke=\"#bbbbbb\" "
                  "stroke-width=\"1\"/>\n",
                  pr.py(0.0), canvas.width, pr.py(0.0));
    svg += buf;
  }

  if (!report.map.is_zero()) {
    const auto path = contour_path(jacobian(report.map), pr, canvas.grid);
    if (!path.empty()) {
      svg += "<path fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.2\" d=\"" + path + "\"/>\n";
    }
  }

  for (const auto& s : report.per_singularity) {
    const double x = pr.px(s.w.real()), y = pr.py(s.w.imag());
    std::snprintf(buf, sizeof buf,
                  "<path stroke=\"#444444\" stroke-width=\"1.5\" d=\"M%.2f %.2fL%.2f %.2fM%.2f "
                  "%.2fL%.2f %.2f\"/>\n",
                  x - 5, y - 5, x + 5, y + 5, x - 5, y + 5, x + 5, y - 5);
    svg += buf;
  }
  for (const auto& r : report.spurious) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4.5\" fill=\"none\" stroke=\"#7f7f7f\" "
                  "stroke-width=\"1.5\"/>\n",
                  pr.px(r.center.real()), pr.py(r.center.imag()));
    svg += buf;
  }
  for (const auto& r : report.cusps) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#c0392b\"/>\n",
                  pr.px(r.center.real()), pr.py(r.center.imag()));
    svg += buf;
  }

  std::vector<std::string> legend;
  if (report.linear) {
    std::snprintf(buf, sizeof buf, "a = %.6g, b = %.6g, t = %.6g", report.linear->a,
                  report.linear->b, report.t);
  } else {
    std::snprintf(buf, sizeof buf, "t = %.6g", report.t);
  }
  legend.emplace_back(buf);
  if (report.s != 0.0) {
    std::snprintf(buf, sizeof buf, "s = %.6g", report.s);
    legend.emplace_back(buf);
  }
  std::snprintf(buf, sizeof buf, "cusps: %zu (filled)", report.cusps.size());
  legend.emplace_back(buf);
  std::snprintf(buf, sizeof buf, "other zeros of G: %zu (hollow)", report.spurious.size());
  legend.emplace_back(buf);
  legend.emplace_back("singularities of f: crosses");
  legend.emplace_back("line: J = 0");

  std::snprintf(buf, sizeof buf,
                "<rect x=\"8\" y=\"8\" width=\"250\" height=\"%zu\" fill=\"white\" "
                "fill-opacity=\"0.85\" stroke=\"#999999\"/>\n",
                legend.size() * 16 + 10);
  svg += buf;
  for (std::size_t i = 0; i < legend.size(); ++i) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"16\" y=\"%zu\" font-family=\"monospace\" font-size=\"12\">", 26 + i * 16);
    svg += buf;
    svg += legend[i] + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cuspidal
