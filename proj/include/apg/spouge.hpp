#pragma once

#include <memory>
#include <vector>

#include "apg/complex_ball.hpp"
#include "apg/types.hpp"

namespace apg {

struct SpougeCoeffs {
  double r = 0;
  long N = 0;                  // ceil(r) - 1
  long prec = 0;
  std::vector<RealBall> c;     // c[0] = sqrt(2 pi), c[n] for 1 <= n <= N
};

// Cached per (r, precision); the precision is rounded up to a multiple of 64.
std::shared_ptr<const SpougeCoeffs> spouge_coeffs(double r, Precision prec);

// sqrt(r) (2 pi)^(-r-1/2) / Re(z - 1 + r) for Gamma(z), i.e. the relative
// error bound of the formula for Gamma(w + 1) at w = z - 1. Infinite when
// Re(z - 1 + r) is not positive.
Mag spouge_error_bound(double r, const ComplexBall& z);

// Smallest integer r >= 3 whose bound at z is below 2^-(p+3).
long spouge_choose_r(const ComplexBall& z, Precision p);

// Bits lost to the alternating coefficient sum, from max |c_n|.
long spouge_guard_bits(double r);

// Gamma(z) with fixed r; the error bound is folded into the radius.
ComplexBall spouge_eval(const ComplexBall& z, double r, Precision prec);

// Gamma, RGamma or LogGamma with r chosen from p. Uses reflection for
// Re z < 1/2. Throws AlgorithmUnavailable for Digamma.
ComplexBall gamma_spouge(FunctionKind fn, const ComplexBall& z, Precision p);

}  // namespace apg
