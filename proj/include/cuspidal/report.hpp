#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspidal/analysis.hpp"

namespace cuspidal {

inline constexpr const char* kReportSchemaVersion = "1.0";

nlohmann::json to_json(const CertifiedRoot& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const SearchRegion& r);

// Rows of re,im,ms,class with 17 significant digits, header included.
std::string cusps_csv(const std::vector<CertifiedRoot>& roots);

struct Canvas {
  int width = 640;
  int height = 640;
  int grid = 512;  // marching-squares cells per side
};

// Zero contour of J, cusps (filled), spurious zeros of G (hollow),
// singularities of f (crosses) and a legend with a, b, t. The view is the
// bounding box of the marked points with a margin, or the report region
// when there are none.
std::string render_svg(const CuspReport& report, const Canvas& canvas = {});

}  // namespace cuspidal
