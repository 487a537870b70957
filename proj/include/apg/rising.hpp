#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "apg/series.hpp"

namespace apg {

struct RisingSpec {
  unsigned long n = 0;
  unsigned long m = 1;                // rectangular block size
  unsigned long basecase_cutoff = 10;
};

// Tuned block size for rectangular splitting; the single tuning table.
unsigned long default_block_size(unsigned long n, Precision prec);

ComplexBall rising_bs(const ComplexBall& z, unsigned long n, Precision prec,
                      unsigned long basecase_cutoff = 10);
// Exact; numerator and denominator stay unreduced until the end.
mpq_class rising_bs(const mpq_class& z, unsigned long n);

ComplexBall rising_rs(const ComplexBall& z, unsigned long n, Precision prec, const RisingSpec& spec);

// Picks between the two by argument type and size.
ComplexBall rising(const ComplexBall& z, unsigned long n, Precision prec);

// Jet of (z + x)_n with `order` coefficients.
SeriesJet rising_jet(const ComplexBall& z, unsigned long n, size_t order, Precision prec);

struct LogRisingUnavailable : std::domain_error {
  using std::domain_error::domain_error;
};

// sum_{k<n} log(z + k) with principal branches in each term. Requires z off
// the real axis; throws LogRisingUnavailable outside the validity envelope
// (n <= 1e6, |z| < 1e6, |Im z| > 1e-6, 30 accurate bits).
ComplexBall log_rising(const ComplexBall& z, unsigned long n, Precision prec);
// Sum of n principal logarithms; works everywhere off the poles.
ComplexBall log_rising_termwise(const ComplexBall& z, unsigned long n, Precision prec);
// log_rising when available, otherwise termwise.
ComplexBall log_rising_any(const ComplexBall& z, unsigned long n, Precision prec);

}  // namespace apg
