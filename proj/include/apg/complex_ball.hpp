#pragma once

#include "apg/ball.hpp"

namespace apg {

// Rectangle re x im. A ball whose imaginary part is an exact zero is
// treated as real and stays real under real-closed operations.
struct ComplexBall {
  RealBall re;
  RealBall im;

  ComplexBall() = default;
  ComplexBall(long v) : re(v) {}  // NOLINT
  ComplexBall(RealBall r) : re(std::move(r)) {}  // NOLINT
  ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexBall indeterminate() {
    return ComplexBall(RealBall::indeterminate(), RealBall::indeterminate());
  }
  static ComplexBall from_strings(std::string_view re, std::string_view im, Precision prec);

  bool is_real() const { return im.is_exact_zero(); }
  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_exact_zero() const { return re.is_exact_zero() && im.is_exact_zero(); }

  ComplexBall mid_ball() const { return ComplexBall(re.mid_ball(), im.mid_ball()); }
  // Euclidean radius: an upper bound for hypot(rad re, rad im).
  Mag rad_abs() const;
  double re_d() const { return re.mid_d(); }
  double im_d() const { return im.mid_d(); }
};

Mag mag_abs_upper(const ComplexBall& a);
Mag mag_abs_lower(const ComplexBall& a);

bool contains(const ComplexBall& a, const ComplexBall& b);
bool overlaps(const ComplexBall& a, const ComplexBall& b);
bool contains_zero(const ComplexBall& a);
// True if the rectangle may contain a real integer <= 0.
bool contains_nonpositive_integer(const ComplexBall& a);
bool contains_integer(const ComplexBall& a);

ComplexBall conj(const ComplexBall& a);
ComplexBall neg(const ComplexBall& a);
ComplexBall mul_i(const ComplexBall& a);      // i * a, exact
ComplexBall mul_2exp(const ComplexBall& a, long k);
ComplexBall round_to(const ComplexBall& a, Precision prec);
ComplexBall add_error(const ComplexBall& a, const Mag& err);  // both parts

ComplexBall add(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall sub(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall mul(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall mul(const ComplexBall& a, const RealBall& b, Precision prec);
ComplexBall sqr(const ComplexBall& a, Precision prec);
ComplexBall div(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall div(const ComplexBall& a, const RealBall& b, Precision prec);
ComplexBall inv(const ComplexBall& a, Precision prec);
ComplexBall sqrt(const ComplexBall& a, Precision prec);
ComplexBall pow_int(const ComplexBall& a, long n, Precision prec);
ComplexBall add_si(const ComplexBall& a, long k, Precision prec);
ComplexBall mul_si(const ComplexBall& a, long k, Precision prec);
ComplexBall div_si(const ComplexBall& a, long k, Precision prec);
ComplexBall mul_z(const ComplexBall& a, const mpz_class& k, Precision prec);
ComplexBall div_z(const ComplexBall& a, const mpz_class& k, Precision prec);
ComplexBall add(const ComplexBall& a, const RealBall& b, Precision prec);

ComplexBall exp(const ComplexBall& a, Precision prec);
// Principal branch. On the negative real axis the value from above is
// used; a rectangle straddling the cut gets the union of both sides.
ComplexBall log(const ComplexBall& a, Precision prec);
ComplexBall sin(const ComplexBall& a, Precision prec);
ComplexBall cos(const ComplexBall& a, Precision prec);
ComplexBall sinpi(const ComplexBall& a, Precision prec);
ComplexBall cospi(const ComplexBall& a, Precision prec);
ComplexBall cotpi(const ComplexBall& a, Precision prec);
ComplexBall atan(const ComplexBall& a, Precision prec);
RealBall abs(const ComplexBall& a, Precision prec);
RealBall arg(const ComplexBall& a, Precision prec);

}  // namespace apg
