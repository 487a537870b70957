#pragma once

#include <cstdint>
#include <mpfr.h>

namespace apg {

// Widens the MPFR exponent range for the calling thread. Cheap after the
// first call.
void init_mpfr_thread();

// Nonnegative magnitude m * 2^e with 0.5 <= m < 1, or zero, or +inf.
// Used for ball radii and error bounds. Arithmetic rounds up unless the
// function name says otherwise, so results stay upper bounds.
class Mag {
public:
  Mag() = default;

  static Mag zero() { return Mag(); }
  static Mag inf();
  static Mag pow2(int64_t e);
  static Mag from_double(double x);        // >= |x|
  static Mag from_mpfr(mpfr_srcptr x);     // >= |x|
  static Mag lower_from_mpfr(mpfr_srcptr x);  // <= |x|
  static Mag from_log2(double l);          // >= 2^l

  bool is_zero() const { return m_ == 0.0 && !inf_; }
  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  double mantissa() const { return m_; }
  int64_t exponent() const { return e_; }

  // Approximate log2; -inf for zero.
  double log2() const;
  // Upper bound as a double; saturates to +inf, tiny values round up to
  // the smallest subnormal.
  double to_double() const;
  // Exact conversion; out must have at least 53 bits.
  void to_mpfr(mpfr_ptr out) const;

  Mag mul_2exp(int64_t k) const;

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  Mag& operator+=(const Mag& b) { return *this = *this + b; }
  Mag& operator*=(const Mag& b) { return *this = *this * b; }

  friend bool operator<(const Mag& a, const Mag& b);
  friend bool operator<=(const Mag& a, const Mag& b) { return !(b < a); }
  friend bool operator>(const Mag& a, const Mag& b) { return b < a; }
  friend bool operator==(const Mag& a, const Mag& b) {
    return a.inf_ == b.inf_ && a.m_ == b.m_ && a.e_ == b.e_;
  }

private:
  Mag(double m, int64_t e) : m_(m), e_(e) {}
  static Mag normalize_up(double x, int64_t e);
  static Mag normalize_down(double x, int64_t e);
  friend Mag mag_add_lower(const Mag&, const Mag&);
  friend Mag mag_mul_lower(const Mag&, const Mag&);
  friend Mag mag_sub_lower(const Mag&, const Mag&);
  friend Mag mag_div(const Mag&, const Mag&);
  friend Mag mag_div_lower(const Mag&, const Mag&);
  friend Mag mag_sqrt(const Mag&);
  friend Mag mag_sqrt_lower(const Mag&);

  double m_ = 0.0;
  int64_t e_ = 0;
  bool inf_ = false;
};

Mag mag_max(const Mag& a, const Mag& b);
Mag mag_min(const Mag& a, const Mag& b);

// a / b rounded up; b is expected to be a lower bound of the divisor.
Mag mag_div(const Mag& a, const Mag& b);
Mag mag_sqrt(const Mag& a);

// Lower-bound variants (rounded toward zero).
Mag mag_add_lower(const Mag& a, const Mag& b);
Mag mag_mul_lower(const Mag& a, const Mag& b);
Mag mag_sub_lower(const Mag& a, const Mag& b);  // max(a - b, 0)
Mag mag_div_lower(const Mag& a, const Mag& b);
Mag mag_sqrt_lower(const Mag& a);

// Transcendental helpers, evaluated with MPFR at 64 bits and directed
// rounding.
Mag mag_exp(const Mag& a);
Mag mag_expm1(const Mag& a);
Mag mag_exp_lower(const Mag& a);
Mag mag_pow_ui(const Mag& a, unsigned long n);
Mag mag_pow_ui_lower(const Mag& a, unsigned long n);

}  // namespace apg
