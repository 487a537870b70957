#pragma once

#include <vector>

#include "apg/complex_ball.hpp"

namespace apg {

// c[0] + c[1] x + ... + c[n-1] x^(n-1) mod x^n.
struct SeriesJet {
  std::vector<ComplexBall> c;

  SeriesJet() : c(1) {}
  explicit SeriesJet(size_t n) : c(n == 0 ? 1 : n) {}

  static SeriesJet constant(const ComplexBall& v, size_t n);
  // z + x truncated to n terms.
  static SeriesJet variable(const ComplexBall& z, size_t n);
  static SeriesJet indeterminate(size_t n);

  size_t size() const { return c.size(); }
  ComplexBall& operator[](size_t i) { return c[i]; }
  const ComplexBall& operator[](size_t i) const { return c[i]; }
  bool is_finite() const;
};

SeriesJet jet_truncate(const SeriesJet& a, size_t n);
SeriesJet jet_neg(const SeriesJet& a);
SeriesJet jet_add(const SeriesJet& a, const SeriesJet& b, Precision prec);
SeriesJet jet_sub(const SeriesJet& a, const SeriesJet& b, Precision prec);
SeriesJet jet_scale(const SeriesJet& a, const ComplexBall& s, Precision prec);
SeriesJet jet_add_scalar(const SeriesJet& a, const ComplexBall& s, Precision prec);
SeriesJet jet_mul(const SeriesJet& a, const SeriesJet& b, Precision prec);
SeriesJet jet_inv(const SeriesJet& a, Precision prec);
SeriesJet jet_div(const SeriesJet& a, const SeriesJet& b, Precision prec);
SeriesJet jet_log(const SeriesJet& a, Precision prec);
SeriesJet jet_exp(const SeriesJet& a, Precision prec);
SeriesJet jet_sqrt(const SeriesJet& a, Precision prec);
// Length n-1 (a length-1 jet differentiates to the zero jet of length 1).
SeriesJet jet_derivative(const SeriesJet& a, Precision prec);
// Length n+1 with constant term c0.
SeriesJet jet_integral(const SeriesJet& a, const ComplexBall& c0, Precision prec);

}  // namespace apg
