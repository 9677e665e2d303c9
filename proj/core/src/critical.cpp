#include "ksat/critical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ksat/analytic.hpp"

namespace ksat {

namespace {

constexpr double kScanEnd = 1e-9;  // scans stop at 1 - kScanEnd

double checked_s(int k, double s) {
  if (k < 2) throw std::invalid_argument("r(s) machinery requires k >= 2");
  if (!(s >= 0.5 && s < 1.0)) {
    throw std::domain_error("s must lie in [0.5, 1)");
  }
  return std::min(s, 1.0 - kDegreeClamp);
}

struct ALParts {
  double A, Ap, App;  // A and derivatives
  double L, Lp, Lpp;  // L = ln s - ln(1-s) and derivatives
};

ALParts al_parts(int k, double s) {
  const double tk = std::ldexp(1.0, k) - 2.0;
  ALParts p;
  p.A = tk * std::pow(s, 1 - k) + s;
  p.Ap = (1 - k) * tk * std::pow(s, -k) + 1.0;
  p.App = static_cast<double>(k) * (k - 1) * tk * std::pow(s, -k - 1);
  const double u = 1.0 - s;
  p.L = std::log(s) - std::log(u);
  p.Lp = 1.0 / (s * u);
  p.Lpp = (2.0 * s - 1.0) / (s * s * u * u);
  return p;
}

void require_threshold_k(int k, const RootOptions& options) {
  if (k < kMinThresholdK) {
    throw regime_error(
        "threshold operations require k >= 5 (the proven regime); "
        "scan of r'(s), r''(s) attached",
        scan_roots(k, options));
  }
}

// Bisects fn (monotone on [lo, hi]) for fn = 0 given bracketing signs.
template <typename Fn>
double bisect(Fn&& fn, double lo, double hi, double f_lo, double f_hi,
              const RootOptions& options) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw std::logic_error("bisect: endpoints do not bracket a root");
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < options.max_iterations; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // double resolution floor
    const double f_mid = fn(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= options.s_tol) break;
  }
  return 0.5 * (lo + hi);
}

// Inverts r(s) = target on [lo, hi] where r is monotone; keeps halving past
// s_tol until the r-residual is met or double resolution runs out.
double invert_monotone(int k, double target, double lo, double hi, bool increasing,
                       const RootOptions& options) {
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < options.max_iterations; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double diff = r_of_s(k, mid) - target;
    if (diff == 0.0) return mid;
    if ((diff < 0.0) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= options.s_tol && std::abs(diff) <= options.r_tol) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string ScanReport::to_string() const {
  std::ostringstream out;
  out << "scan report: k=" << k << ", " << points << " points on [0.5, 1-1e-9]; "
      << "r' sign changes at {";
  for (std::size_t i = 0; i < r_prime_sign_changes.size(); ++i) {
    out << (i ? ", " : "") << r_prime_sign_changes[i];
  }
  out << "} (" << r_prime_sign_changes.size() << "), r'' sign changes at {";
  for (std::size_t i = 0; i < r_double_prime_sign_changes.size(); ++i) {
    out << (i ? ", " : "") << r_double_prime_sign_changes[i];
  }
  out << "} (" << r_double_prime_sign_changes.size() << ")";
  return out.str();
}

double r_of_s(int k, double s) {
  s = checked_s(k, s);
  const double tk = std::ldexp(1.0, k) - 2.0;
  return (tk / std::pow(s, k - 1) + s) * (std::log(s) - std::log(1.0 - s)) / k;
}

double r_prime(int k, double s) {
  s = checked_s(k, s);
  const ALParts p = al_parts(k, s);
  return (p.Ap * p.L + p.A * p.Lp) / k;
}

double r_double_prime(int k, double s) {
  s = checked_s(k, s);
  const ALParts p = al_parts(k, s);
  return (p.App * p.L + 2.0 * p.Ap * p.Lp + p.A * p.Lpp) / k;
}

double lemma2_F1(int k, double s) {
  s = checked_s(k, s);
  const double u = 1.0 - s;
  const double L = std::log(s) - std::log(u);
  return static_cast<double>(k) * (k - 1) * L * u * u - 2.0 * (k - 1) * u + 2.0 * s - 1.0;
}

double lemma2_F(int k, double s) {
  const double tk = std::ldexp(1.0, k) - 2.0;
  return lemma2_F1(k, s) + std::pow(std::min(s, 1.0 - kDegreeClamp), k) / tk;
}

ScanReport scan_roots(int k, const RootOptions& options) {
  if (k < 2) throw std::invalid_argument("scan_roots requires k >= 2");
  ScanReport report;
  report.k = k;
  report.points = options.scan_points;
  const double lo = 0.5;
  const double hi = 1.0 - kScanEnd;
  const int n = std::max(options.scan_points, 2);
  double prev_s = lo;
  double prev_p = r_prime(k, lo);
  double prev_pp = r_double_prime(k, lo);
  for (int i = 1; i < n; ++i) {
    const double s = lo + (hi - lo) * i / (n - 1);
    const double p = r_prime(k, s);
    const double pp = r_double_prime(k, s);
    if ((p > 0.0) != (prev_p > 0.0)) {
      report.r_prime_sign_changes.push_back(0.5 * (prev_s + s));
    }
    if ((pp > 0.0) != (prev_pp > 0.0)) {
      report.r_double_prime_sign_changes.push_back(0.5 * (prev_s + s));
    }
    prev_s = s;
    prev_p = p;
    prev_pp = pp;
  }
  return report;
}

double find_inflection(int k, const RootOptions& options) {
  require_threshold_k(k, options);
  const double lo = 0.5;
  const double hi = 1.0 - kScanEnd;
  const double f_lo = lemma2_F(k, lo);
  const double f_hi = lemma2_F(k, hi);
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw regime_error("find_inflection: F(s) does not change sign on [0.5, 1)",
                       scan_roots(k, options));
  }
  return bisect([k](double s) { return lemma2_F(k, s); }, lo, hi, f_lo, f_hi, options);
}

CriticalPoints find_extrema(int k, const RootOptions& options) {
  const double s02 = find_inflection(k, options);
  const double end = 1.0 - kScanEnd;
  const double rp_half = r_prime(k, 0.5);
  const double rp_s02 = r_prime(k, s02);
  const double rp_end = r_prime(k, end);
  if (!(rp_half > 0.0 && rp_s02 < 0.0 && rp_end > 0.0)) {
    throw regime_error("find_extrema: r'(s) sign pattern is not (+, -, +)",
                       scan_roots(k, options));
  }
  CriticalPoints cp;
  cp.s02 = s02;
  cp.s01 = bisect([k](double s) { return r_prime(k, s); }, 0.5, s02, rp_half, rp_s02, options);
  cp.s03 = bisect([k](double s) { return r_prime(k, s); }, s02, end, rp_s02, rp_end, options);
  cp.r_at_s01 = r_of_s(k, cp.s01);
  cp.r_at_s03 = r_of_s(k, cp.s03);
  return cp;
}

double invert_branch(int k, Branch branch, double r, const CriticalPoints& points,
                     const RootOptions& options) {
  if (!std::isfinite(r)) throw std::domain_error("invert_branch: r must be finite");
  const double slack = options.r_tol;
  switch (branch) {
    case Branch::s1: {
      if (r < -slack || r > points.r_at_s01 + slack) {
        throw std::domain_error("invert_branch: r outside [0, r(s01)] for branch 1");
      }
      const double target = std::clamp(r, 0.0, points.r_at_s01);
      return invert_monotone(k, target, 0.5, points.s01, /*increasing=*/true, options);
    }
    case Branch::s2: {
      if (r < points.r_at_s03 - slack || r > points.r_at_s01 + slack) {
        throw std::domain_error("invert_branch: r outside [r(s03), r(s01)] for branch 2");
      }
      const double target = std::clamp(r, points.r_at_s03, points.r_at_s01);
      return invert_monotone(k, target, points.s01, points.s03, /*increasing=*/false, options);
    }
    case Branch::s3: {
      if (r < points.r_at_s03 - slack) {
        throw std::domain_error("invert_branch: r below r(s03) for branch 3");
      }
      const double s_max = 1.0 - kDegreeClamp;
      if (r >= r_of_s(k, s_max)) return s_max;  // saturation past the clamp
      const double target = std::max(r, points.r_at_s03);
      return invert_monotone(k, target, points.s03, s_max, /*increasing=*/true, options);
    }
  }
  throw std::invalid_argument("invert_branch: unknown branch");
}

double invert_branch(int k, Branch branch, double r, const RootOptions& options) {
  return invert_branch(k, branch, r, find_extrema(k, options), options);
}

double big_F(int k, double r, const CriticalPoints& points, const RootOptions& options) {
  const double slack = options.r_tol;
  if (r < points.r_at_s03 - slack || r > points.r_at_s01 + slack) {
    throw std::domain_error("big_F: r outside [r(s03), r(s01)]");
  }
  const double s1 = invert_branch(k, Branch::s1, r, points, options);
  const double s3 = invert_branch(k, Branch::s3, r, points, options);
  return rate_f(k, r, s1) - rate_f(k, r, s3);
}

double big_F_prime(int k, double r, const CriticalPoints& points, const RootOptions& options) {
  const double slack = options.r_tol;
  if (r < points.r_at_s03 - slack || r > points.r_at_s01 + slack) {
    throw std::domain_error("big_F_prime: r outside [r(s03), r(s01)]");
  }
  const double s1 = invert_branch(k, Branch::s1, r, points, options);
  const double s3 = invert_branch(k, Branch::s3, r, points, options);
  const double tk = std::ldexp(1.0, k) - 2.0;
  return std::log(tk + std::pow(s1, k)) - std::log(tk + std::pow(s3, k));
}

double big_F(int k, double r, const RootOptions& options) {
  return big_F(k, r, find_extrema(k, options), options);
}

double big_F_prime(int k, double r, const RootOptions& options) {
  return big_F_prime(k, r, find_extrema(k, options), options);
}

Thresholds find_r_cr(int k, const RootOptions& options) {
  const CriticalPoints points = find_extrema(k, options);
  double lo = points.r_at_s03;
  double hi = points.r_at_s01;
  double f_lo = big_F(k, lo, points, options);
  double f_hi = big_F(k, hi, points, options);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw regime_error("find_r_cr: big_F does not change sign over the bracket",
                       scan_roots(k, options));
  }
  for (int it = 0; it < options.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f_mid = big_F(k, mid, points, options);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (f_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= options.r_tol) break;
  }
  Thresholds t;
  t.k = k;
  t.r_cr = 0.5 * (lo + hi);
  t.s1cr = invert_branch(k, Branch::s1, t.r_cr, points, options);
  t.s3cr = invert_branch(k, Branch::s3, t.r_cr, points, options);
  t.bracket_lo = points.r_at_s03;
  t.bracket_hi = points.r_at_s01;
  t.residual = std::abs(rate_f(k, t.r_cr, t.s1cr) - rate_f(k, t.r_cr, t.s3cr));
  return t;
}

CurvePoint major_similarity_degree(int k, double r, const CriticalPoints& points,
                                   const RootOptions& options) {
  if (!(r >= 0.0)) throw std::invalid_argument("major_similarity_degree: r must be >= 0");
  CurvePoint point;
  point.r = r;
  if (r < points.r_at_s03) {
    point.smj = invert_branch(k, Branch::s1, r, points, options);
    point.branch = CurveBranch::s1;
    point.f_s1 = rate_f(k, r, point.smj);
    return point;
  }
  if (r > points.r_at_s01) {
    point.smj = invert_branch(k, Branch::s3, r, points, options);
    point.branch = CurveBranch::s3;
    point.f_s3 = rate_f(k, r, point.smj);
    return point;
  }
  const double s1 = invert_branch(k, Branch::s1, r, points, options);
  const double s3 = invert_branch(k, Branch::s3, r, points, options);
  const double f1 = rate_f(k, r, s1);
  const double f3 = rate_f(k, r, s3);
  point.f_s1 = f1;
  point.f_s3 = f3;
  if (std::abs(f1 - f3) <= options.transition_tol) {
    point.branch = CurveBranch::transition;
    point.smj = s1;
    point.smj_upper = s3;
  } else if (f1 > f3) {
    point.branch = CurveBranch::s1;
    point.smj = s1;
  } else {
    point.branch = CurveBranch::s3;
    point.smj = s3;
  }
  return point;
}

CurvePoint major_similarity_degree(int k, double r, const RootOptions& options) {
  return major_similarity_degree(k, r, find_extrema(k, options), options);
}

std::vector<CurvePoint> curve(int k, double r_min, double r_max, double step,
                              const RootOptions& options, int threads) {
  if (!(step > 0.0)) throw std::invalid_argument("curve: step must be > 0");
  if (!(r_min >= 0.0) || r_min > r_max) {
    throw std::invalid_argument("curve: need 0 <= r_min <= r_max");
  }
  const double span = r_max - r_min;
  const long long count_ll = static_cast<long long>(std::ceil(span / step - 1e-9));
  if (count_ll <= 0) return {};
  const std::size_t count = static_cast<std::size_t>(count_ll);

  const CriticalPoints points = find_extrema(k, options);
  std::vector<CurvePoint> out(count);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double r = r_min + static_cast<double>(i) * step;
      out[i] = major_similarity_degree(k, r, points, options);
    }
  };

  unsigned want = threads <= 0 ? std::thread::hardware_concurrency()
                               : static_cast<unsigned>(threads);
  want = std::max(1u, std::min<unsigned>(want, static_cast<unsigned>(count)));
  if (want == 1) {
    fill(0, count);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(want);
  const std::size_t chunk = (count + want - 1) / want;
  for (unsigned t = 0; t < want; ++t) {
    const std::size_t begin = static_cast<std::size_t>(t) * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fill, begin, end);
  }
  for (auto& worker : pool) worker.join();
  return out;
}

}  // namespace ksat
