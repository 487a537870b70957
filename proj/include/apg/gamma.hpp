#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "apg/complex_ball.hpp"
#include "apg/types.hpp"

namespace apg {

// A ball argument, or an exact rational together with its ball image.
struct GammaArg {
  ComplexBall z;
  std::optional<mpq_class> exact;

  static GammaArg ball(ComplexBall z) { return GammaArg{std::move(z), std::nullopt}; }
  static GammaArg rational(const mpq_class& q, Precision p);
};

struct EvalResult {
  ComplexBall value;
  AlgoKind algo = AlgoKind::Auto;  // the algorithm that produced value
  std::string note;                // selection reason or diagnostic
};

// Real window (lo, hi) for round(z) where Taylor beats Stirling at p >= 40.
// APG_TAYLOR_WINDOW scales both ends.
std::pair<double, double> taylor_window(long p);

// Exact rationals go to HyperRationalBS at or above this many bits
// (APG_RATIONAL_BS_BITS, default 6000).
long rational_bs_threshold();

AlgoKind select_algorithm(FunctionKind fn, const GammaArg& arg, Precision p, std::string* reason = nullptr);

// Throws AlgorithmUnavailable when a forced algorithm cannot handle the
// input. Pole-containing input gives an indeterminate ball and a note.
EvalResult evaluate(FunctionKind fn, const GammaArg& arg, Precision p, AlgoKind algo = AlgoKind::Auto);

inline ComplexBall evaluate(FunctionKind fn, const ComplexBall& z, Precision p) {
  return evaluate(fn, GammaArg::ball(z), p).value;
}

// Auto resolutions are written to stderr when enabled (or APG_LOG=1).
void set_selection_logging(bool on);

}  // namespace apg
