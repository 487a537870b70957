#pragma once

#include <gmpxx.h>

#include "apg/complex_ball.hpp"
#include "apg/types.hpp"

namespace apg {

// Gamma(z) = gamma(z, N) + Gamma(z, N), the lower part from the convergent
// 1F1 series with K terms and the upper part from the asymptotic 2F0 series
// with L terms. L = 0 means the whole upper part is bounded as an error.
struct HyperPlan {
  double alpha = 0.53;
  long N_split = 1;
  long K = 0;
  long L = 0;
};

constexpr double kHyperAlphaOpt = 0.546904;

// 0.53 unless APG_ALPHA is set.
double hyper_alpha();

// N ~ alpha log(2) p, then K and L by linear search on the certified bounds
// for |Gamma(z)| 2^-p. The upper series is planned only for real z in
// (0, 1]; elsewhere N is raised until L = 0 suffices.
HyperPlan plan_hyper(const ComplexBall& z, Precision p, double alpha);

// N^z e^-N / z sum_{k<K} N^k / (z+1)_k plus a geometric tail bound with
// ratio N / (Re z + K + 1). Throws AlgorithmUnavailable if that ratio is not
// below 1 or Re z <= 0.
ComplexBall lower_gamma_series(const ComplexBall& z, long N, long K, Precision prec);

// e^-N N^(z-1) sum_{k<L} (1-z)_k / (-N)^k plus the first omitted term.
// Only for real z in (0, 1]; throws AlgorithmUnavailable otherwise.
ComplexBall upper_gamma_asymp(const ComplexBall& z, long N, long L, Precision prec);

// Upper bound for |Gamma(z, N)| from Gamma(Re z, N).
Mag upper_gamma_bound(const ComplexBall& z, long N);

// Gamma(z) for Re z > 0 with a given plan.
ComplexBall gamma_hyper(const ComplexBall& z, Precision p, const HyperPlan& plan);

// Gamma, RGamma or LogGamma with shifts into Re z in (0, 1] and reflection
// for Re z < 1/2. Throws AlgorithmUnavailable for Digamma.
ComplexBall gamma_hyper_fn(FunctionKind fn, const ComplexBall& z, Precision p);

// sum_{k<K} N^k / (w+1)_k exactly, by binary splitting.
mpq_class lower_series_sum_exact(const mpq_class& w, long N, long K);

// Gamma(q) for rational q > 0: exact shift into (0, 1], the lower series by
// binary splitting, and the L = 0 upper bound.
RealBall gamma_rational_bs(const mpq_class& q, Precision p);

// Gamma, RGamma or LogGamma of any rational; reflection for q < 1/2.
ComplexBall gamma_rational_fn(FunctionKind fn, const mpq_class& q, Precision p);

}  // namespace apg
