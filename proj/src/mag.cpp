#include "apg/mag.hpp"

#include <cmath>
#include <limits>

namespace apg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Scratch MPFR variable at 64 bits, one per thread.
struct Scratch {
  mpfr_t a, b;
  Scratch() {
    init_mpfr_thread();
    mpfr_init2(a, 64);
    mpfr_init2(b, 64);
  }
  ~Scratch() {
    mpfr_clear(a);
    mpfr_clear(b);
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

}  // namespace

void init_mpfr_thread() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

Mag Mag::inf() {
  Mag r;
  r.inf_ = true;
  return r;
}

Mag Mag::pow2(int64_t e) { return Mag(0.5, e + 1); }

Mag Mag::normalize_up(double x, int64_t e) {
  if (x == 0.0) return Mag();
  if (std::isinf(x) || std::isnan(x)) return inf();
  int k;
  double m = std::frexp(x, &k);
  return Mag(m, e + k);
}

Mag Mag::normalize_down(double x, int64_t e) {
  if (x <= 0.0 || std::isnan(x)) return Mag();
  int k;
  double m = std::frexp(x, &k);
  return Mag(m, e + k);
}

Mag Mag::from_double(double x) {
  x = std::fabs(x);
  if (std::isinf(x) || std::isnan(x)) return inf();
  return normalize_up(x, 0);
}

Mag Mag::from_mpfr(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Mag();
  if (!mpfr_number_p(x)) return inf();
  long ex;
  double d = mpfr_get_d_2exp(&ex, x, mpfr_sgn(x) > 0 ? MPFR_RNDU : MPFR_RNDD);
  d = std::fabs(d);
  if (d >= 1.0) return Mag(0.5, static_cast<int64_t>(ex) + 1);
  return Mag(d, ex);
}

Mag Mag::lower_from_mpfr(mpfr_srcptr x) {
  if (mpfr_zero_p(x) || mpfr_nan_p(x)) return Mag();
  if (mpfr_inf_p(x)) return inf();
  long ex;
  double d = mpfr_get_d_2exp(&ex, x, mpfr_sgn(x) > 0 ? MPFR_RNDD : MPFR_RNDU);
  d = std::fabs(d);
  if (d >= 1.0) return Mag(0.5, static_cast<int64_t>(ex) + 1);
  return Mag(d, ex);
}

Mag Mag::from_log2(double l) {
  if (std::isnan(l) || l == kInf) return inf();
  if (l == -kInf) return Mag();
  double fl = std::floor(l);
  double m = std::exp2(l - fl) * (1.0 + 1e-14);
  Mag r = normalize_up(std::nextafter(m, kInf), 0);
  return r.mul_2exp(static_cast<int64_t>(fl));
}

double Mag::log2() const {
  if (inf_) return kInf;
  if (m_ == 0.0) return -kInf;
  return std::log2(m_) + static_cast<double>(e_);
}

double Mag::to_double() const {
  if (inf_) return kInf;
  if (m_ == 0.0) return 0.0;
  if (e_ > 1024) return kInf;
  if (e_ < -1073) return std::numeric_limits<double>::denorm_min();
  double r = std::ldexp(m_, static_cast<int>(e_));
  if (r == 0.0) return std::numeric_limits<double>::denorm_min();
  return r;
}

void Mag::to_mpfr(mpfr_ptr out) const {
  if (inf_) {
    mpfr_set_inf(out, 1);
    return;
  }
  mpfr_set_d(out, m_, MPFR_RNDU);
  mpfr_mul_2si(out, out, static_cast<long>(e_), MPFR_RNDU);
}

Mag Mag::mul_2exp(int64_t k) const {
  if (inf_ || m_ == 0.0) return *this;
  return Mag(m_, e_ + k);
}

Mag operator+(const Mag& a, const Mag& b) {
  if (a.inf_ || b.inf_) return Mag::inf();
  if (a.m_ == 0.0) return b;
  if (b.m_ == 0.0) return a;
  const Mag& hi = a.e_ >= b.e_ ? a : b;
  const Mag& lo = a.e_ >= b.e_ ? b : a;
  int64_t d = hi.e_ - lo.e_;
  if (d > 60) return Mag::normalize_up(std::nextafter(hi.m_, kInf), hi.e_);
  double s = hi.m_ + std::ldexp(lo.m_, static_cast<int>(-d));
  return Mag::normalize_up(std::nextafter(s, kInf), hi.e_);
}

Mag operator*(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0 && !a.inf_) return Mag();
  if (b.m_ == 0.0 && !b.inf_) return Mag();
  if (a.inf_ || b.inf_) return Mag::inf();
  return Mag::normalize_up(std::nextafter(a.m_ * b.m_, kInf), a.e_ + b.e_);
}

bool operator<(const Mag& a, const Mag& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  if (b.m_ == 0.0) return false;
  if (a.m_ == 0.0) return true;
  if (a.e_ != b.e_) return a.e_ < b.e_;
  return a.m_ < b.m_;
}

Mag mag_max(const Mag& a, const Mag& b) { return a < b ? b : a; }
Mag mag_min(const Mag& a, const Mag& b) { return a < b ? a : b; }

Mag mag_div(const Mag& a, const Mag& b) {
  if (a.is_zero()) return Mag();
  if (b.is_zero() || a.is_inf()) return Mag::inf();
  if (b.is_inf()) return Mag();
  return Mag::normalize_up(std::nextafter(a.m_ / b.m_, kInf), a.e_ - b.e_);
}

Mag mag_sqrt(const Mag& a) {
  if (a.is_zero() || a.is_inf()) return a;
  double m = a.m_;
  int64_t e = a.e_;
  if (e & 1) {
    m *= 2.0;
    e -= 1;
  }
  return Mag::normalize_up(std::nextafter(std::sqrt(m), kInf), e / 2);
}

Mag mag_add_lower(const Mag& a, const Mag& b) {
  if (a.inf_ || b.inf_) return Mag::inf();
  if (a.m_ == 0.0) return b;
  if (b.m_ == 0.0) return a;
  const Mag& hi = a.e_ >= b.e_ ? a : b;
  const Mag& lo = a.e_ >= b.e_ ? b : a;
  int64_t d = hi.e_ - lo.e_;
  if (d > 60) return hi;
  double s = hi.m_ + std::ldexp(lo.m_, static_cast<int>(-d));
  return Mag::normalize_down(std::nextafter(s, 0.0), hi.e_);
}

Mag mag_mul_lower(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag();
  if (a.inf_ || b.inf_) return Mag::inf();
  return Mag::normalize_down(std::nextafter(a.m_ * b.m_, 0.0), a.e_ + b.e_);
}

Mag mag_sub_lower(const Mag& a, const Mag& b) {
  if (b.inf_) return Mag();
  if (a.inf_) return Mag::inf();
  if (b.m_ == 0.0) return a;
  if (!(b < a)) return Mag();
  int64_t d = a.e_ - b.e_;
  if (d > 60) return Mag::normalize_down(std::nextafter(a.m_, 0.0), a.e_);
  double s = a.m_ - std::ldexp(b.m_, static_cast<int>(-d));
  return Mag::normalize_down(std::nextafter(s, 0.0), a.e_);
}

Mag mag_div_lower(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_inf()) return Mag();
  if (b.is_zero() || a.inf_) return Mag::inf();
  return Mag::normalize_down(std::nextafter(a.m_ / b.m_, 0.0), a.e_ - b.e_);
}

Mag mag_sqrt_lower(const Mag& a) {
  if (a.is_zero() || a.is_inf()) return a;
  double m = a.m_;
  int64_t e = a.e_;
  if (e & 1) {
    m *= 2.0;
    e -= 1;
  }
  return Mag::normalize_down(std::nextafter(std::sqrt(m), 0.0), e / 2);
}

Mag mag_exp(const Mag& a) {
  if (a.is_inf()) return Mag::inf();
  Scratch& s = scratch();
  a.to_mpfr(s.a);
  mpfr_exp(s.b, s.a, MPFR_RNDU);
  return Mag::from_mpfr(s.b);
}

Mag mag_expm1(const Mag& a) {
  if (a.is_inf()) return Mag::inf();
  if (a.is_zero()) return Mag();
  Scratch& s = scratch();
  a.to_mpfr(s.a);
  mpfr_expm1(s.b, s.a, MPFR_RNDU);
  return Mag::from_mpfr(s.b);
}

Mag mag_exp_lower(const Mag& a) {
  if (a.is_inf()) return Mag::inf();
  Scratch& s = scratch();
  a.to_mpfr(s.a);
  mpfr_exp(s.b, s.a, MPFR_RNDD);
  return Mag::lower_from_mpfr(s.b);
}

Mag mag_pow_ui(const Mag& a, unsigned long n) {
  if (n == 0) return Mag::from_double(1.0);
  if (a.is_zero() || a.is_inf()) return a;
  Scratch& s = scratch();
  a.to_mpfr(s.a);
  mpfr_pow_ui(s.b, s.a, n, MPFR_RNDU);
  return Mag::from_mpfr(s.b);
}

Mag mag_pow_ui_lower(const Mag& a, unsigned long n) {
  if (n == 0) return Mag::from_double(1.0);
  if (a.is_zero() || a.is_inf()) return a;
  Scratch& s = scratch();
  a.to_mpfr(s.a);
  mpfr_pow_ui(s.b, s.a, n, MPFR_RNDD);
  return Mag::lower_from_mpfr(s.b);
}

}  // namespace apg
