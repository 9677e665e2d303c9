#pragma once

#include <cmath>
#include <cstdint>

namespace ksat {

// A probability or count whose log is the primary representation; the
// quantities here span e^{+-n*const}, so linear doubles over/underflow
// long before the log does.
struct LogValue {
  double log = 0.0;
  double linear() const { return std::exp(log); }
};

// Random k-SAT model parameters: n variables, m clauses, density r = m/n.
struct ModelParams {
  int k = 0;
  int n = 0;
  int m = 0;
  double r = 0.0;

  // m = round(r*n), half away from zero; the m actually used is reported.
  static ModelParams from_ratio(int k, int n, double r);
  static ModelParams from_counts(int k, int n, int m);
};

// Integer similarity number S and its degree s = S/n. Analytic curves work
// in s; exact counting works in S; conversions round and report the S/n
// actually used.
struct SimilarityPoint {
  int S = 0;
  double s = 0.0;

  static SimilarityPoint from_number(int n, int S);
  static SimilarityPoint from_degree(int n, double s);
};

// h(s) = ln 2 - s ln s - (1-s) ln(1-s); ln 2 at s in {0,1}.
double entropy_h(double s);

// g(s) = ln 2^k - ln(2^k - 2 + s^k); the per-variable log penalty a clause
// imposes on an agreeing pair. Strictly decreasing in s, positive for s < 1.
double log_penalty_g(int k, double s);

// rho(s) = k(k-1)(s^k - s^{k-1}) / (2(2^k - 2 + s^k)); vanishes at s in {0,1}.
double rho(int k, double s);

// tau(n, s) = 1/sqrt(2 pi n s(1-s)) for 0 < s < 1, 1 at the endpoints.
double tau(double n, double s);

// f(s) = h(s) - r g(s); its maxima locate the dominant similarity degree.
double rate_f(int k, double r, double s);

struct RateFunctions {
  double h = 0.0;
  double g = 0.0;
  double rho = 0.0;
  double tau = 0.0;
  double f = 0.0;
};
RateFunctions rate_functions(int k, double r, double s, double n);

// P(one assignment satisfies a random formula) = (1 - 2^{-k})^m.
LogValue single_sat_probability(int k, int m);

// Probability that one uniformly random clause (k distinct variables,
// uniform polarities) is satisfied by both members of a fixed pair agreeing
// on exactly S of n variables:
//   (2^k - 2 + S(S-1)...(S-k+1) / (n(n-1)...(n-k+1))) / 2^k.
// The falling-factorial ratio is 0 whenever S < k (a zero factor).
double clause_pair_agreement_probability(int n, int k, int S);

// Pair satisfaction probability: the per-clause agreement probability to
// the power m.
LogValue pair_sat_probability_exact(int n, int k, int m, int S);

// Asymptotic pair satisfaction probability sigma(s) e^{-n r g(s)} with
// sigma = e^rho.
LogValue pair_sat_probability_asymptotic(int k, double r, double s, double n);

// Number of ordered assignment pairs with similarity number S: 2^n C(n, S).
// Exact integer form; requires n <= 31 so the count fits in 64 bits.
std::uint64_t pairs_count_exact(int n, int S);

// log(2^n C(n, S)) via log-gamma; valid for any n.
double pairs_count_log(int n, int S);

// Stirling estimate tau(s) e^{n h(s)} of the pair count.
LogValue pairs_count_asymptotic(double n, double s);

// Expected number of satisfying ordered pairs at similarity number S:
// 2^n C(n,S) * P(pair)^... computed as a sum of log terms.
LogValue expected_sat_pairs_exact(int n, int k, int m, int S);

}  // namespace ksat
