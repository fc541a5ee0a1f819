#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspidal/jets.hpp"
#include "cuspidal/locator.hpp"

namespace cuspidal {

// All cutoffs are relative to the pointwise magnitude bound
// sum |c_pq| |z|^(p+q) of the polynomial being tested, so they behave the
// same at t = 1e-2 and t = 1e-8.
struct Tolerances {
  double j_rel = 1e-7;    // |J| <= j_rel * bound  ->  zero of G lies on J = 0
  double h_rel = 1e-7;    // |H| >  h_rel * bound  ->  cusp is regular
  double phi_rel = 1e-6;  // |Phi| < phi_rel * scale  ->  genericity witness
};

struct AnalysisConfig {
  Tolerances tol;
  int max_depth = 40;
  double refine_tol = 1e-10;
};

// A zero of f_z and its multiplicity.
struct Singularity {
  ComplexPoint w;
  int multiplicity = 1;
};

struct SingularityInfo {
  ComplexPoint w;
  int multiplicity = 1;
  double radius = 0.0;  // radius of the local disk actually used
  int local_cusps = 0;
};

struct CuspReport {
  MixedPolynomial base;
  MixedPolynomial map;  // realized deformation
  std::optional<LinearTerm> linear;
  double t = 0.0;
  double s = 0.0;
  SearchRegion region;
  std::vector<CertifiedRoot> cusps;
  std::vector<CertifiedRoot> spurious;  // zeros of G off the critical set
  bool excellent = true;
  std::vector<ComplexPoint> witnesses;  // approximate points of G'
  std::vector<SingularityInfo> per_singularity;
};

struct ExcellenceResult {
  bool excellent = true;
  std::vector<ComplexPoint> witnesses;
};

enum class VerdictStatus { Pass, Fail, Inapplicable };

std::string_view to_string(VerdictStatus s);

struct Verdict {
  std::string claim;
  int expected_lo = 0;
  std::optional<int> expected_hi;  // absent: exactly expected_lo (or a lower bound, below)
  bool at_least = false;           // observed >= expected_lo is the claim
  int observed = 0;
  VerdictStatus status = VerdictStatus::Fail;
  std::vector<std::pair<std::string, double>> details;
  std::string note;
  double t_used = 0.0;
  std::vector<double> t_schedule;
  std::vector<CertifiedRoot> cusps;  // the cusps behind the observed count

  bool pass() const { return status == VerdictStatus::Pass; }
};

// Zeros of f_z in the default region, sorted by (Re, Im). Multiple roots come
// back once, with the multiplicity given by their boundary degree.
std::vector<Singularity> singularities_of(const MixedPolynomial& f, const AnalysisConfig& cfg = {});

// Half the distance from singularity i to its nearest neighbour, or 1.0.
double local_radius(const std::vector<Singularity>& sings, std::size_t i);

// 1e-2 * d^m clamped to [1e-8, 1e-2], d the minimal pairwise distance between
// singularities (1 when there are fewer than two) and m the largest
// multiplicity.
double auto_t(const std::vector<Singularity>& sings);

// Square around 0 holding every zero of f_z with room to spare.
SearchRegion default_region(const MixedPolynomial& f);

CuspReport count_cusps(const Deformation& d, const SearchRegion& region,
                       const AnalysisConfig& cfg = {});
CuspReport count_cusps(const SecondDeformation& sd, const SearchRegion& region,
                       const AnalysisConfig& cfg = {});

ExcellenceResult check_excellent(const Deformation& d, const SearchRegion& region,
                                 const AnalysisConfig& cfg = {});

// Local cusp count of f + t(a+ib)zbar in the disk of given radius around 0.
// Missing t or radius are chosen automatically; an automatic t is retried
// at t/10 up to four times when the count disagrees.
Verdict verify_theorem1(const MixedPolynomial& f, double a, double b, std::optional<double> t,
                        std::optional<double> radius, const AnalysisConfig& cfg = {});

Verdict verify_corollary1(const MixedPolynomial& f, double a, double b, std::optional<double> t,
                          const AnalysisConfig& cfg = {});

// Count at s = 0 against the count at sd.s(), over region or the default one.
Verdict verify_theorem2(const SecondDeformation& sd, std::optional<SearchRegion> region,
                        const AnalysisConfig& cfg = {});

Verdict verify_theorem3(const MixedPolynomial& f, const MixedPolynomial& h, std::optional<double> t,
                        std::optional<double> radius, const AnalysisConfig& cfg = {});

// The n+1 closed-form cusp positions of z^n + t(a+ib)zbar.
std::vector<ComplexPoint> example1_positions(int n, double a, double b, double t);

struct GenericityResult {
  bool generic = true;
  std::vector<ComplexPoint> witnesses;
  std::size_t points_checked = 0;  // psi = 0 points examined
  // The scan samples circles; it is evidence, not a certificate.
  static constexpr bool heuristic = true;
};

// Looks for points on small circles around each singularity where psi
// vanishes and a phi1 + b phi2 nearly does too. Without a radius each
// singularity uses half its local radius.
GenericityResult genericity_scan(const MixedPolynomial& f, double a, double b,
                                 std::optional<double> radius, int n_samples,
                                 const AnalysisConfig& cfg = {});

struct GenericChoice {
  double a = 1.0;
  double b = 0.0;
  std::uint64_t seed = 0;  // seed that produced (a, b)
  int attempts = 0;
  bool gated = true;  // false when no seed passed the scan
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Unit vector drawn from mt19937_64(seed), advancing the seed until the
// genericity scan passes.
GenericChoice generic_ab(const MixedPolynomial& f, std::uint64_t seed,
                         const AnalysisConfig& cfg = {});

}  // namespace cuspidal
