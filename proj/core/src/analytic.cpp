#include "ksat/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ksat {

namespace {

// 2^k stays an exact double up to k = 52; beyond that 2^k - 2 == 2^k and
// every formula here degenerates silently, so refuse.
constexpr int kMaxClauseLength = 52;

double two_pow(int k) {
  if (k < 1 || k > kMaxClauseLength) {
    throw std::invalid_argument("clause length k out of supported range [1, 52]");
  }
  return std::ldexp(1.0, k);
}

void check_degree(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("similarity degree s must lie in [0, 1]");
  }
}

}  // namespace

ModelParams ModelParams::from_ratio(int k, int n, double r) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  ModelParams p;
  p.k = k;
  p.n = n;
  p.m = static_cast<int>(std::llround(r * n));
  p.r = r;
  return p;
}

ModelParams ModelParams::from_counts(int k, int n, int m) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  ModelParams p;
  p.k = k;
  p.n = n;
  p.m = m;
  p.r = static_cast<double>(m) / n;
  return p;
}

SimilarityPoint SimilarityPoint::from_number(int n, int S) {
  if (n < 1 || S < 0 || S > n) throw std::invalid_argument("need 0 <= S <= n, n >= 1");
  return {S, static_cast<double>(S) / n};
}

SimilarityPoint SimilarityPoint::from_degree(int n, double s) {
  check_degree(s);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int S = static_cast<int>(std::llround(s * n));
  return {S, static_cast<double>(S) / n};
}

double entropy_h(double s) {
  check_degree(s);
  if (s == 0.0 || s == 1.0) return std::numbers::ln2;
  return std::numbers::ln2 - s * std::log(s) - (1.0 - s) * std::log(1.0 - s);
}

double log_penalty_g(int k, double s) {
  check_degree(s);
  const double tk = two_pow(k);
  return k * std::numbers::ln2 - std::log(tk - 2.0 + std::pow(s, k));
}

double rho(int k, double s) {
  check_degree(s);
  const double tk = two_pow(k);
  const double sk = std::pow(s, k);
  const double sk1 = std::pow(s, k - 1);
  return k * (k - 1) * (sk - sk1) / (2.0 * (tk - 2.0 + sk));
}

double tau(double n, double s) {
  check_degree(s);
  if (s == 0.0 || s == 1.0) return 1.0;
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * n * s * (1.0 - s));
}

double rate_f(int k, double r, double s) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  return entropy_h(s) - r * log_penalty_g(k, s);
}

RateFunctions rate_functions(int k, double r, double s, double n) {
  RateFunctions out;
  out.h = entropy_h(s);
  out.g = log_penalty_g(k, s);
  out.rho = rho(k, s);
  out.tau = tau(n, s);
  out.f = out.h - r * out.g;
  return out;
}

LogValue single_sat_probability(int k, int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  const double tk = two_pow(k);
  // (2^k - 1)/2^k is the S = n per-clause factor; the same expression keeps
  // the Eq.1/Eq.2 consistency invariant bit-exact.
  return {m * std::log((tk - 1.0) / tk)};
}

double clause_pair_agreement_probability(int n, int k, int S) {
  if (k > n) throw std::invalid_argument("clause length k must not exceed n");
  if (S < 0 || S > n) throw std::invalid_argument("need 0 <= S <= n");
  const double tk = two_pow(k);
  double falling = 0.0;
  if (S >= k) {
    falling = 1.0;
    for (int i = 0; i < k; ++i) {
      falling *= static_cast<double>(S - i) / static_cast<double>(n - i);
    }
  }
  return (tk - 2.0 + falling) / tk;
}

LogValue pair_sat_probability_exact(int n, int k, int m, int S) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return {m * std::log(clause_pair_agreement_probability(n, k, S))};
}

LogValue pair_sat_probability_asymptotic(int k, double r, double s, double n) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  return {rho(k, s) - n * r * log_penalty_g(k, s)};
}

std::uint64_t pairs_count_exact(int n, int S) {
  if (n < 0 || S < 0 || S > n) throw std::invalid_argument("need 0 <= S <= n");
  if (n > 31) {
    throw std::invalid_argument("pairs_count_exact needs n <= 31 (64-bit count); use pairs_count_log");
  }
  std::uint64_t binom = 1;
  const int j = S <= n - S ? S : n - S;
  for (int i = 0; i < j; ++i) {
    // exact at every step: prefix products of C(n, i) are integers
    binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return binom << n;
}

double pairs_count_log(int n, int S) {
  if (n < 0 || S < 0 || S > n) throw std::invalid_argument("need 0 <= S <= n");
  return n * std::numbers::ln2 + std::lgamma(n + 1.0) - std::lgamma(S + 1.0) -
         std::lgamma(n - S + 1.0);
}

LogValue pairs_count_asymptotic(double n, double s) {
  return {std::log(tau(n, s)) + n * entropy_h(s)};
}

LogValue expected_sat_pairs_exact(int n, int k, int m, int S) {
  return {pairs_count_log(n, S) + pair_sat_probability_exact(n, k, m, S).log};
}

}  // namespace ksat
