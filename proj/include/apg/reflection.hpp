#pragma once

#include "apg/complex_ball.hpp"
#include "apg/types.hpp"

namespace apg {

// value - i pi n_correction is a principal-branch logarithm.
struct BranchedLog {
  ComplexBall value;
  long n_correction = 0;
};

// log sin(pi z) continued from 1/2 through the half plane containing z.
// Cuts on (1, 2), (2, 3), ... are continuous from below, those on
// (-1, 0), (-2, -1), ... from above. Balls straddling a cut get the union of
// both sides.
BranchedLog log_sin_pi_branched(const ComplexBall& z, Precision prec);
ComplexBall log_sin_pi(const ComplexBall& z, Precision prec);

enum class TrigKind { InvSinPi, CotPi };

// 1/sin(pi z) or cot(pi z); exponential forms when |Im z| > 1.
ComplexBall safe_trig(TrigKind kind, const ComplexBall& z, Precision prec);
inline ComplexBall inv_sin_pi(const ComplexBall& z, Precision prec) {
  return safe_trig(TrigKind::InvSinPi, z, prec);
}
inline ComplexBall cot_pi(const ComplexBall& z, Precision prec) {
  return safe_trig(TrigKind::CotPi, z, prec);
}

// f(z) from v = f(1 - z); for Gamma and RGamma v is Gamma(1 - z), for
// LogGamma it is log Gamma(1 - z), for Digamma psi(1 - z).
ComplexBall reflect_eval(FunctionKind fn, const ComplexBall& z, const ComplexBall& v, Precision prec);

// Estimate of Im log Gamma(z) from the leading Stirling term.
double lgamma_imag_estimate(double x, double y);

// Integer k with log Gamma(z) = log(g) + 2 pi i k, where g encloses Gamma(z).
long branch_k(const ComplexBall& z, const ComplexBall& g);

// log Gamma(z) from g = Gamma(z). Picks log(g) or log(-g) by the phase of g
// so the principal logarithm is evaluated away from its cut. The branch is
// checked against a low-precision Stirling value; on mismatch the full
// Stirling log Gamma is returned instead.
ComplexBall branch_correction(const ComplexBall& z, const ComplexBall& g, Precision prec);

// Gamma, RGamma or LogGamma of z from g = Gamma(z), or from g = Gamma(1 - z)
// when `reflected`. Shared tail of the Gamma-only algorithms.
ComplexBall gamma_variant(FunctionKind fn, const ComplexBall& z, const ComplexBall& g, bool reflected,
                          Precision p);

}  // namespace apg
