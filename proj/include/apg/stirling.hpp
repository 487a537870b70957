#pragma once

#include <functional>
#include <vector>

#include "apg/series.hpp"
#include "apg/types.hpp"

namespace apg {

// ---- remainder bounds ----

// 1 / cos(arg(z) / 2) = sqrt(1 + u^2); infinite ball if z touches (-inf, 0].
RealBall phi(const ComplexBall& z, Precision prec);

// log2 of the individual remainder bounds for R_N^(m)(z); +inf when a bound
// does not apply to the whole ball.
struct RemainderBounds {
  double real_positive;
  double stieltjes;
  double brent;
  double hare;
  double best() const;
};
RemainderBounds remainder_bound_parts(const ComplexBall& z, long N, long m);
// Upper bound for |R_N^(m)(z)|, the minimum of the applicable bounds.
Mag remainder_bound(const ComplexBall& z, long N, long m);
double remainder_bound_log2(const ComplexBall& z, long N, long m);

double brent_factor(long N, long m);  // 1 + sqrt(pi (N + m/2))
double hare_factor(long N, long m);   // 4 sqrt(pi (N + m/2))

// Upper bound for log2 |T_N^(m)(a)| where a is a lower bound for |z|.
double stirling_term_log2(long N, long m, double a);

// a^-s + 1 / ((s - 1) a^(s-1)), an upper bound for zeta(s, a).
Mag hurwitz_upper(double s, double a);

// ---- parameter selection ----

// Default 0.2; APG_BETA overrides.
double stirling_beta();

struct StirlingPlan {
  bool reflect = false;
  long r = 0;
  long N = 1;
  Mag err;           // bound on |R_N^(m)(z' + r)|, for every m used
  long p_sum = 0;    // main-sum precision
  long p_outer = 0;  // precision for the leading terms
  bool reached = true;  // false when err could not be pushed below 2^-p
};

// max_m is the highest derivative order whose remainder must be bounded
// (0 for scalar Gamma / log Gamma, 1 for digamma, order-1 for jets).
StirlingPlan select_params(const ComplexBall& z, Precision p, FunctionKind fn, double beta,
                           long max_m = 0);

// ---- main sum ----

struct SumSchedule {
  long N = 1;
  long K = 1;
  std::vector<long> M_seq;  // M_1 = N >= ... >= M_K = M
  long M = 1;
  long m1 = 1;
  long m2 = 1;
  Mag eps;
  std::vector<double> b;  // b[n] bounds log2 |T_n(z)|, nonincreasing, n = 1..N-1
};

SumSchedule schedule_sum(const ComplexBall& z, long N, Precision p);
long schedule_K(long p);

// sum_{n=1}^{N-1} B_2n / (2n (2n-1) z^(2n-1))
ComplexBall main_sum_horner(const ComplexBall& z, long N, Precision prec);
ComplexBall main_sum_fast(const ComplexBall& z, const SumSchedule& sched, Precision prec);

// ---- evaluation ----

// Gamma, RGamma or LogGamma via the Stirling series with shift and
// reflection.
ComplexBall lgamma_stirling(const ComplexBall& z, Precision p, FunctionKind fn);
ComplexBall digamma_stirling(const ComplexBall& z, Precision p);
// Jet of log Gamma(z + x) with `order` coefficients.
SeriesJet lgamma_jet_stirling(const ComplexBall& z, Precision p, size_t order);

// Upper bound for |f'| on the whole ball at low precision; inf near poles.
Mag derivative_bound(const ComplexBall& z, FunctionKind fn);

// Narrow inexact balls (radius <= 2^-16) are evaluated at the midpoint and
// widened by derivative_bound times the radius; others go through f directly.
ComplexBall propagate_midpoint(const ComplexBall& z, FunctionKind fn,
                               const std::function<ComplexBall(const ComplexBall&)>& f);

}  // namespace apg
