#pragma once

#include <optional>
#include <vector>

#include "ksat/errors.hpp"

namespace ksat {

// Root-finding knobs. Lemma-guaranteed root counts mean a fine sign scan
// plus bisection is complete; nothing fancier is needed.
struct RootOptions {
  double s_tol = 1e-12;          // bisection width in s
  double r_tol = 1e-10;          // bisection width / residual in r
  double transition_tol = 1e-9;  // |f(s1)-f(s3)| below this counts as the tie
  int max_iterations = 200;
  int scan_points = 10000;
};

// The S-shape of r(s): local max at s01, inflection at s02, local min at s03.
struct CriticalPoints {
  double s01 = 0.0;
  double s02 = 0.0;
  double s03 = 0.0;
  double r_at_s01 = 0.0;
  double r_at_s03 = 0.0;
};

// The transition point: the two local maxima of f exchange dominance at
// r_cr, and the dominant similarity degree jumps from s1cr to s3cr.
struct Thresholds {
  int k = 0;
  double r_cr = 0.0;
  double s1cr = 0.0;
  double s3cr = 0.0;
  double bracket_lo = 0.0;  // r(s03)
  double bracket_hi = 0.0;  // r(s01)
  double residual = 0.0;    // |f(s1cr) - f(s3cr)|
};

// Monotone pieces of r(s), named after their inverse maps:
//   s1: [0, r(s01)]        -> [0.5, s01]   (increasing)
//   s2: [r(s03), r(s01)]   -> [s01, s03]   (decreasing)
//   s3: [r(s03), +inf)     -> [s03, 1)     (increasing)
enum class Branch { s1 = 1, s2 = 2, s3 = 3 };

enum class CurveBranch { s1, s3, transition };

// One sample of the dominant-similarity curve. At the transition both
// maxima tie: smj holds the lower value and smj_upper the upper one.
// f_s1 / f_s3 are the local maximum values where the branch exists.
struct CurvePoint {
  double r = 0.0;
  double smj = 0.0;
  std::optional<double> smj_upper;
  CurveBranch branch = CurveBranch::s1;
  std::optional<double> f_s1;
  std::optional<double> f_s3;
};

// Evaluation clamps s to at most 1 - kDegreeClamp before ln(1-s); r(s)
// diverges at s = 1, so this bounds the largest representable r.
inline constexpr double kDegreeClamp = 1e-12;

// The lemma structure (one inflection, two extrema) is proved for k >= 5;
// threshold operations refuse smaller k with a scan report.
inline constexpr int kMinThresholdK = 5;

// r(s) = (1/k)((2^k-2)/s^{k-1} + s)(ln s - ln(1-s)): the density at which
// s is a stationary point of f. Domain [0.5, 1).
double r_of_s(int k, double s);

// Closed-form derivatives of r(s), by product rule on A(s) L(s) with
// A = (2^k-2)s^{1-k} + s and L = ln s - ln(1-s).
double r_prime(int k, double s);
double r_double_prime(int k, double s);

// F1(s) = k(k-1)(ln s - ln(1-s))(1-s)^2 - 2(k-1)(1-s) + 2s - 1 and
// F(s) = F1(s) + s^k/(2^k-2): sign(F) = sign(r''), an independent check on
// r_double_prime.
double lemma2_F1(int k, double s);
double lemma2_F(int k, double s);

// Sign scan of r' and r'' over [0.5, 1 - 1e-9]; midpoints of sign-change
// intervals. Diagnostic payload for refusals, usable on any k >= 2.
ScanReport scan_roots(int k, const RootOptions& options = {});

// Unique root s02 of r''(s) = 0 on [0.5, 1), by bisection on lemma2_F.
double find_inflection(int k, const RootOptions& options = {});

// Both roots of r'(s) = 0: s01 on [0.5, s02], s03 on [s02, 1).
CriticalPoints find_extrema(int k, const RootOptions& options = {});

// Inverse of r(s) on one monotone branch. Branch 3 saturates at the
// clamp boundary 1 - kDegreeClamp: r(s) can only be represented up to
// r(1 - kDegreeClamp) in double precision, so larger r maps to the clamp.
double invert_branch(int k, Branch branch, double r,
                     const CriticalPoints& points, const RootOptions& options = {});
double invert_branch(int k, Branch branch, double r, const RootOptions& options = {});

// F(r) = f(s1(r)) - f(s3(r)) on [r(s03), r(s01)], and its closed-form
// derivative ln(2^k-2+s1(r)^k) - ln(2^k-2+s3(r)^k) (negative throughout).
double big_F(int k, double r, const CriticalPoints& points, const RootOptions& options = {});
double big_F_prime(int k, double r, const CriticalPoints& points, const RootOptions& options = {});
double big_F(int k, double r, const RootOptions& options = {});
double big_F_prime(int k, double r, const RootOptions& options = {});

// Bisection on big_F over the bracket; fills the full threshold record.
Thresholds find_r_cr(int k, const RootOptions& options = {});

// The dominant similarity degree at density r: the global maximum of f,
// resolved by branch logic rather than grid search.
CurvePoint major_similarity_degree(int k, double r, const CriticalPoints& points,
                                   const RootOptions& options = {});
CurvePoint major_similarity_degree(int k, double r, const RootOptions& options = {});

// Samples major_similarity_degree on the half-open grid
// {r_min + i*step | r_min + i*step < r_max}. Points are independent;
// threads > 1 computes them concurrently with deterministic output.
std::vector<CurvePoint> curve(int k, double r_min, double r_max, double step,
                              const RootOptions& options = {}, int threads = 1);

}  // namespace ksat
