#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <string_view>

#include "apg/mag.hpp"

namespace apg {

struct Precision {
  long bits;
  constexpr explicit Precision(long b) : bits(b) {
    if (b < 2) throw std::invalid_argument("precision must be at least 2 bits");
  }
  constexpr Precision operator+(long k) const { return Precision(bits + k); }
  constexpr Precision operator-(long k) const { return Precision(bits - k); }
  friend constexpr bool operator==(Precision a, Precision b) { return a.bits == b.bits; }
  friend constexpr bool operator<(Precision a, Precision b) { return a.bits < b.bits; }
};

// Decimal digits to bits, rounded up.
Precision precision_from_digits(long digits);

// [mid - rad, mid + rad] with an MPFR midpoint and a Mag radius. A ball
// with infinite radius is indeterminate and absorbs every operation.
class RealBall {
public:
  RealBall();
  RealBall(long v);  // NOLINT: exact integers convert implicitly
  RealBall(const RealBall& o);
  RealBall(RealBall&& o) noexcept;
  RealBall& operator=(const RealBall& o);
  RealBall& operator=(RealBall&& o) noexcept;
  ~RealBall();

  static RealBall from_double(double x);
  static RealBall from_mpfr(mpfr_srcptr x);  // exact copy
  static RealBall from_mpz(const mpz_class& z);
  static RealBall from_mpq(const mpq_class& q, Precision prec);
  static RealBall from_string(std::string_view s, Precision prec);
  static RealBall from_mid_rad(mpfr_srcptr mid, const Mag& rad);
  static RealBall indeterminate();
  // Exact zero whose midpoint is allocated with prec bits.
  static RealBall with_prec(Precision prec);

  mpfr_srcptr mid() const { return mid_; }
  mpfr_ptr mid_mut() { return mid_; }
  const Mag& rad() const { return rad_; }
  long mid_prec() const { return mpfr_get_prec(mid_); }
  double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }

  void set_rad(const Mag& r) { rad_ = r; }
  void add_error(const Mag& e) { rad_ += e; }
  // Adds the rounding error implied by an MPFR ternary value.
  void add_rounding(int ternary);

  bool is_exact() const { return rad_.is_zero(); }
  bool is_finite() const { return rad_.is_finite() && mpfr_number_p(mid_); }
  bool is_exact_zero() const { return rad_.is_zero() && mpfr_zero_p(mid_); }

  RealBall mid_ball() const { return from_mpfr(mid_); }

private:
  mpfr_t mid_;
  Mag rad_;
};

// Upper and lower bounds of |x| over the ball.
Mag mag_abs_upper(const RealBall& a);
Mag mag_abs_lower(const RealBall& a);

bool contains(const RealBall& a, const RealBall& b);
bool contains(const RealBall& a, const mpq_class& q);
bool contains(const RealBall& a, mpfr_srcptr x);
bool overlaps(const RealBall& a, const RealBall& b);
bool contains_zero(const RealBall& a);
bool is_positive(const RealBall& a);
bool is_negative(const RealBall& a);
bool contains_integer(const RealBall& a);

RealBall neg(const RealBall& a);
RealBall abs(const RealBall& a);
RealBall add(const RealBall& a, const RealBall& b, Precision prec);
RealBall sub(const RealBall& a, const RealBall& b, Precision prec);
RealBall mul(const RealBall& a, const RealBall& b, Precision prec);
RealBall div(const RealBall& a, const RealBall& b, Precision prec);
RealBall sqr(const RealBall& a, Precision prec);
RealBall inv(const RealBall& a, Precision prec);
RealBall sqrt(const RealBall& a, Precision prec);
RealBall add_si(const RealBall& a, long k, Precision prec);
RealBall mul_si(const RealBall& a, long k, Precision prec);
RealBall div_si(const RealBall& a, long k, Precision prec);
RealBall mul_z(const RealBall& a, const mpz_class& k, Precision prec);
RealBall div_z(const RealBall& a, const mpz_class& k, Precision prec);
RealBall mul_q(const RealBall& a, const mpq_class& q, Precision prec);
RealBall mul_2exp(const RealBall& a, long k);  // exact
RealBall pow_ui(const RealBall& a, unsigned long n, Precision prec);
RealBall round_to(const RealBall& a, Precision prec);
RealBall hypot(const RealBall& a, const RealBall& b, Precision prec);
RealBall ball_union(const RealBall& a, const RealBall& b, Precision prec);
// a with err added to its radius.
RealBall add_error_ball(const RealBall& a, const Mag& err);

RealBall exp(const RealBall& a, Precision prec);
RealBall log(const RealBall& a, Precision prec);
RealBall sin(const RealBall& a, Precision prec);
RealBall cos(const RealBall& a, Precision prec);
RealBall sinpi(const RealBall& a, Precision prec);
RealBall cospi(const RealBall& a, Precision prec);
RealBall atan(const RealBall& a, Precision prec);
RealBall atan2(const RealBall& y, const RealBall& x, Precision prec);
RealBall sinh(const RealBall& a, Precision prec);
RealBall cosh(const RealBall& a, Precision prec);

RealBall const_pi(Precision prec);
RealBall const_log2(Precision prec);
RealBall const_euler(Precision prec);

}  // namespace apg
