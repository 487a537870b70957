#include "apg/ball.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace apg {

namespace {

// RAII temporary.
struct Tmp {
  mpfr_t v;
  explicit Tmp(long prec) { mpfr_init2(v, std::max<long>(prec, MPFR_PREC_MIN)); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  operator mpfr_ptr() { return v; }
};

Mag ulp_of(mpfr_srcptr x) {
  if (mpfr_zero_p(x) || !mpfr_number_p(x)) return Mag();
  return Mag::pow2(mpfr_get_exp(x) - mpfr_get_prec(x));
}

Mag mag_from_mpz(const mpz_class& z) {
  if (z == 0) return Mag();
  long ex;
  double d = std::fabs(mpz_get_d_2exp(&ex, z.get_mpz_t()));
  return Mag::from_double(std::nextafter(d, 2.0)).mul_2exp(ex);
}

Mag mag_from_mpz_lower(const mpz_class& z) {
  if (z == 0) return Mag();
  long ex;
  double d = std::fabs(mpz_get_d_2exp(&ex, z.get_mpz_t()));
  Tmp t(64);
  mpfr_set_d(t, d, MPFR_RNDN);
  mpfr_mul_2si(t, t, ex, MPFR_RNDN);
  return Mag::lower_from_mpfr(t);
}

// Upper bound on |x - y| for exact values.
Mag abs_diff_upper(mpfr_srcptr x, mpfr_srcptr y) {
  Tmp d(64);
  int sgn = mpfr_cmp(x, y);
  if (sgn == 0) return Mag();
  mpfr_sub(d, x, y, sgn > 0 ? MPFR_RNDU : MPFR_RNDD);
  return Mag::from_mpfr(d);
}

Mag abs_diff_lower(mpfr_srcptr x, mpfr_srcptr y) {
  Tmp d(64);
  int sgn = mpfr_cmp(x, y);
  if (sgn == 0) return Mag();
  mpfr_sub(d, x, y, MPFR_RNDZ);
  return Mag::lower_from_mpfr(d);
}

const Mag kPiUpper = Mag::from_double(3.1415926535897936);

bool finite2(const RealBall& a, const RealBall& b) { return a.is_finite() && b.is_finite(); }

}  // namespace

Precision precision_from_digits(long digits) {
  return Precision(static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)));
}

RealBall::RealBall() {
  init_mpfr_thread();
  mpfr_init2(mid_, 64);
  mpfr_set_zero(mid_, 1);
}

RealBall::RealBall(long v) {
  init_mpfr_thread();
  mpfr_init2(mid_, 64);
  mpfr_set_si(mid_, v, MPFR_RNDN);
}

RealBall::RealBall(const RealBall& o) : rad_(o.rad_) {
  init_mpfr_thread();
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
}

RealBall::RealBall(RealBall&& o) noexcept : rad_(o.rad_) {
  init_mpfr_thread();
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_swap(mid_, o.mid_);
}

RealBall& RealBall::operator=(const RealBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    rad_ = o.rad_;
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  std::swap(rad_, o.rad_);
  return *this;
}

RealBall::~RealBall() { mpfr_clear(mid_); }

RealBall RealBall::with_prec(Precision prec) {
  RealBall r;
  mpfr_set_prec(r.mid_, prec.bits);
  mpfr_set_zero(r.mid_, 1);
  return r;
}

RealBall RealBall::from_double(double x) {
  RealBall r;
  mpfr_set_d(r.mid_, x, MPFR_RNDN);
  if (!std::isfinite(x)) return indeterminate();
  return r;
}

RealBall RealBall::from_mpfr(mpfr_srcptr x) {
  RealBall r = with_prec(Precision(std::max<long>(mpfr_get_prec(x), 2)));
  mpfr_set(r.mid_, x, MPFR_RNDN);
  if (!mpfr_number_p(x)) return indeterminate();
  return r;
}

RealBall RealBall::from_mpz(const mpz_class& z) {
  long bits = std::max<long>(static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)), 2);
  RealBall r = with_prec(Precision(bits));
  mpfr_set_z(r.mid_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

RealBall RealBall::from_mpq(const mpq_class& q, Precision prec) {
  RealBall r = with_prec(prec);
  r.add_rounding(mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN));
  return r;
}

RealBall RealBall::from_string(std::string_view s, Precision prec) {
  RealBall r = with_prec(prec);
  std::string str(s);
  char* end = nullptr;
  int t = mpfr_strtofr(r.mid_, str.c_str(), &end, 0, MPFR_RNDN);
  if (end == str.c_str() || *end != '\0' || !mpfr_number_p(r.mid_))
    throw std::invalid_argument("not a number: " + str);
  r.add_rounding(t);
  return r;
}

RealBall RealBall::from_mid_rad(mpfr_srcptr mid, const Mag& rad) {
  RealBall r = from_mpfr(mid);
  r.rad_ = rad;
  return r;
}

RealBall RealBall::indeterminate() {
  RealBall r;
  r.rad_ = Mag::inf();
  return r;
}

void RealBall::add_rounding(int ternary) {
  if (ternary != 0) rad_ += ulp_of(mid_);
}

Mag mag_abs_upper(const RealBall& a) { return Mag::from_mpfr(a.mid()) + a.rad(); }

Mag mag_abs_lower(const RealBall& a) {
  if (!a.is_finite()) return Mag();
  return mag_sub_lower(Mag::lower_from_mpfr(a.mid()), a.rad());
}

bool contains(const RealBall& a, const RealBall& b) {
  if (!a.is_finite()) return true;
  if (!b.is_finite()) return false;
  return abs_diff_upper(a.mid(), b.mid()) + b.rad() <= a.rad();
}

bool contains(const RealBall& a, mpfr_srcptr x) {
  if (!a.is_finite()) return true;
  if (!mpfr_number_p(x)) return false;
  return abs_diff_upper(a.mid(), x) <= a.rad();
}

bool contains(const RealBall& a, const mpq_class& q) {
  if (!a.is_finite()) return true;
  mpq_class m;
  mpfr_get_q(m.get_mpq_t(), a.mid());
  mpq_class d = abs(q - m);
  if (d == 0) return true;
  if (a.rad().is_zero()) return false;
  mpq_class r(a.rad().mantissa());
  long e = a.rad().exponent();
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return d <= r;
}

bool overlaps(const RealBall& a, const RealBall& b) {
  if (!a.is_finite() || !b.is_finite()) return true;
  return abs_diff_lower(a.mid(), b.mid()) <= a.rad() + b.rad();
}

bool is_positive(const RealBall& a) {
  return a.is_finite() && mpfr_sgn(a.mid()) > 0 && a.rad() < Mag::lower_from_mpfr(a.mid());
}

bool is_negative(const RealBall& a) {
  return a.is_finite() && mpfr_sgn(a.mid()) < 0 && a.rad() < Mag::lower_from_mpfr(a.mid());
}

bool contains_zero(const RealBall& a) { return !is_positive(a) && !is_negative(a); }

bool contains_integer(const RealBall& a) {
  if (!a.is_finite()) return true;
  long prec = std::max<long>(a.mid_prec(), 64) + 8;
  Tmp lo(prec), hi(prec), r(64);
  a.rad().to_mpfr(r);
  mpfr_sub(lo, a.mid(), r, MPFR_RNDD);
  mpfr_add(hi, a.mid(), r, MPFR_RNDU);
  mpfr_ceil(lo, lo);
  mpfr_floor(hi, hi);
  return mpfr_cmp(lo, hi) <= 0;
}

RealBall neg(const RealBall& a) {
  RealBall r(a);
  mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);
  return r;
}

RealBall abs(const RealBall& a) {
  if (!contains_zero(a)) {
    RealBall r(a);
    mpfr_abs(r.mid_mut(), r.mid(), MPFR_RNDN);
    return r;
  }
  if (!a.is_finite()) return RealBall::indeterminate();
  // [0, |m| + r]
  Mag hi = mag_abs_upper(a);
  Tmp h(64);
  hi.to_mpfr(h);
  mpfr_div_2ui(h, h, 1, MPFR_RNDU);
  RealBall r = RealBall::from_mpfr(h);
  r.set_rad(Mag::from_mpfr(h));
  return r;
}

RealBall add(const RealBall& a, const RealBall& b, Precision prec) {
  if (!finite2(a, b)) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_add(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  r.set_rad(a.rad() + b.rad());
  r.add_rounding(t);
  return r;
}

RealBall sub(const RealBall& a, const RealBall& b, Precision prec) {
  if (!finite2(a, b)) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_sub(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  r.set_rad(a.rad() + b.rad());
  r.add_rounding(t);
  return r;
}

RealBall mul(const RealBall& a, const RealBall& b, Precision prec) {
  if (a.is_exact_zero() || b.is_exact_zero()) return RealBall::with_prec(prec);
  if (!finite2(a, b)) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_mul(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  Mag ma = Mag::from_mpfr(a.mid()), mb = Mag::from_mpfr(b.mid());
  r.set_rad(ma * b.rad() + mb * a.rad() + a.rad() * b.rad());
  r.add_rounding(t);
  return r;
}

RealBall sqr(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_sqr(r.mid_mut(), a.mid(), MPFR_RNDN);
  Mag ma = Mag::from_mpfr(a.mid());
  r.set_rad((ma * a.rad()).mul_2exp(1) + a.rad() * a.rad());
  r.add_rounding(t);
  return r;
}

RealBall div(const RealBall& a, const RealBall& b, Precision prec) {
  if (!finite2(a, b) || contains_zero(b)) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_div(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    Mag ma = Mag::from_mpfr(a.mid());
    Mag mb = Mag::from_mpfr(b.mid());
    Mag mbl = Mag::lower_from_mpfr(b.mid());
    Mag den = mag_mul_lower(mbl, mag_sub_lower(mbl, b.rad()));
    r.set_rad(mag_div(ma * b.rad() + mb * a.rad(), den));
  }
  r.add_rounding(t);
  return r;
}

RealBall inv(const RealBall& a, Precision prec) { return div(RealBall(1), a, prec); }

RealBall sqrt(const RealBall& a, Precision prec) {
  if (!a.is_finite() || is_negative(a)) return RealBall::indeterminate();
  if (!is_positive(a)) {
    if (a.is_exact_zero()) return RealBall::with_prec(prec);
    // Ball reaches zero: enclose [0, sqrt(m + r)].
    Tmp hi(64), r(64);
    a.rad().to_mpfr(r);
    mpfr_add(hi, a.mid(), r, MPFR_RNDU);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
    RealBall out = RealBall::from_mpfr(hi);
    out.set_rad(Mag::from_mpfr(hi));
    return out;
  }
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_sqrt(r.mid_mut(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    Mag lo = mag_abs_lower(a);
    Mag den = mag_add_lower(mag_sqrt_lower(lo), mag_sqrt_lower(Mag::lower_from_mpfr(a.mid())));
    r.set_rad(mag_div(a.rad(), den));
  }
  r.add_rounding(t);
  return r;
}

RealBall add_si(const RealBall& a, long k, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_add_si(r.mid_mut(), a.mid(), k, MPFR_RNDN);
  r.set_rad(a.rad());
  r.add_rounding(t);
  return r;
}

RealBall mul_si(const RealBall& a, long k, Precision prec) {
  if (k == 0) return RealBall::with_prec(prec);
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_mul_si(r.mid_mut(), a.mid(), k, MPFR_RNDN);
  r.set_rad(a.rad() * Mag::from_double(static_cast<double>(k)));
  if (std::labs(k) > (1L << 52)) r.set_rad(r.rad() * Mag::from_double(1.0 + 1e-15));
  r.add_rounding(t);
  return r;
}

RealBall div_si(const RealBall& a, long k, Precision prec) {
  if (k == 0 || !a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_div_si(r.mid_mut(), a.mid(), k, MPFR_RNDN);
  Mag kl = mag_mul_lower(Mag::from_double(std::fabs(static_cast<double>(k))), Mag::from_double(1.0 - 1e-15));
  r.set_rad(mag_div(a.rad(), kl));
  r.add_rounding(t);
  return r;
}

RealBall mul_z(const RealBall& a, const mpz_class& k, Precision prec) {
  if (k == 0) return RealBall::with_prec(prec);
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_mul_z(r.mid_mut(), a.mid(), k.get_mpz_t(), MPFR_RNDN);
  r.set_rad(a.rad() * mag_from_mpz(k));
  r.add_rounding(t);
  return r;
}

RealBall div_z(const RealBall& a, const mpz_class& k, Precision prec) {
  if (k == 0 || !a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_div_z(r.mid_mut(), a.mid(), k.get_mpz_t(), MPFR_RNDN);
  r.set_rad(mag_div(a.rad(), mag_from_mpz_lower(k)));
  r.add_rounding(t);
  return r;
}

RealBall mul_q(const RealBall& a, const mpq_class& q, Precision prec) {
  return div_z(mul_z(a, q.get_num(), prec + 16), q.get_den(), prec);
}

RealBall mul_2exp(const RealBall& a, long k) {
  RealBall r(a);
  mpfr_mul_2si(r.mid_mut(), r.mid(), k, MPFR_RNDN);
  r.set_rad(r.rad().mul_2exp(k));
  return r;
}

RealBall pow_ui(const RealBall& a, unsigned long n, Precision prec) {
  if (n == 0) return RealBall(1);
  if (n == 1) return round_to(a, prec);
  Precision wp = prec + static_cast<long>(std::log2(static_cast<double>(n))) + 4;
  RealBall result(1), base(a);
  bool first = true;
  while (n) {
    if (n & 1) {
      result = first ? base : mul(result, base, wp);
      first = false;
    }
    n >>= 1;
    if (n) base = sqr(base, wp);
  }
  return round_to(result, prec);
}

RealBall round_to(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_set(r.mid_mut(), a.mid(), MPFR_RNDN);
  r.set_rad(a.rad());
  r.add_rounding(t);
  return r;
}

RealBall hypot(const RealBall& a, const RealBall& b, Precision prec) {
  if (!finite2(a, b)) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  int t = mpfr_hypot(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  r.set_rad(a.rad() + b.rad());
  r.add_rounding(t);
  return r;
}

RealBall ball_union(const RealBall& a, const RealBall& b, Precision prec) {
  if (!finite2(a, b)) return RealBall::indeterminate();
  long wp = std::max({a.mid_prec(), b.mid_prec(), prec.bits}) + 8;
  Tmp lo(wp), hi(wp), t(wp), r(64);
  a.rad().to_mpfr(r);
  mpfr_sub(lo, a.mid(), r, MPFR_RNDD);
  mpfr_add(hi, a.mid(), r, MPFR_RNDU);
  b.rad().to_mpfr(r);
  mpfr_sub(t, b.mid(), r, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_add(t, b.mid(), r, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  RealBall out = RealBall::with_prec(prec);
  mpfr_add(t, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(out.mid_mut(), t, 1, MPFR_RNDN);
  Tmp d1(64), d2(64);
  mpfr_sub(d1, hi, out.mid(), MPFR_RNDU);
  mpfr_sub(d2, out.mid(), lo, MPFR_RNDU);
  mpfr_max(d1, d1, d2, MPFR_RNDU);
  out.set_rad(Mag::from_mpfr(d1));
  return out;
}

RealBall add_error_ball(const RealBall& a, const Mag& err) {
  RealBall r(a);
  r.add_error(err);
  return r;
}

RealBall exp(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_exp(r.mid_mut(), a.mid(), MPFR_RNDN));
  if (!a.is_exact()) r.add_error(mag_abs_upper(r) * mag_expm1(a.rad()));
  return r;
}

RealBall log(const RealBall& a, Precision prec) {
  if (!is_positive(a)) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_log(r.mid_mut(), a.mid(), MPFR_RNDN));
  if (!a.is_exact()) r.add_error(mag_div(a.rad(), mag_abs_lower(a)));
  return r;
}

RealBall sin(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_sin(r.mid_mut(), a.mid(), MPFR_RNDN));
  r.add_error(mag_min(a.rad(), Mag::from_double(2.0)));
  return r;
}

RealBall cos(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_cos(r.mid_mut(), a.mid(), MPFR_RNDN));
  r.add_error(mag_min(a.rad(), Mag::from_double(2.0)));
  return r;
}

RealBall sinh(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_sinh(r.mid_mut(), a.mid(), MPFR_RNDN));
  if (!a.is_exact()) r.add_error(mag_exp(mag_abs_upper(a)) * a.rad());
  return r;
}

RealBall cosh(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_cosh(r.mid_mut(), a.mid(), MPFR_RNDN));
  if (!a.is_exact()) r.add_error(mag_exp(mag_abs_upper(a)) * a.rad());
  return r;
}

RealBall atan(const RealBall& a, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_atan(r.mid_mut(), a.mid(), MPFR_RNDN));
  r.add_error(a.rad());
  return r;
}

RealBall atan2(const RealBall& y, const RealBall& x, Precision prec) {
  if (!finite2(y, x)) return RealBall::indeterminate();
  bool exact = y.is_exact() && x.is_exact();
  if (!exact && contains_zero(y) && !is_positive(x)) {
    // The box meets the cut or the origin.
    RealBall pi = const_pi(prec);
    RealBall r = RealBall::with_prec(prec);
    r.set_rad(mag_abs_upper(pi));
    return r;
  }
  if (exact && mpfr_zero_p(y.mid()) && mpfr_zero_p(x.mid())) return RealBall::indeterminate();
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_atan2(r.mid_mut(), y.mid(), x.mid(), MPFR_RNDN));
  if (!exact) {
    Mag lx = mag_abs_lower(x), ly = mag_abs_lower(y);
    Mag dist = mag_sqrt_lower(mag_add_lower(mag_mul_lower(lx, lx), mag_mul_lower(ly, ly)));
    r.add_error(mag_div(x.rad() + y.rad(), dist));
  }
  return r;
}

RealBall const_pi(Precision prec) {
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_const_pi(r.mid_mut(), MPFR_RNDN));
  return r;
}

RealBall const_log2(Precision prec) {
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_const_log2(r.mid_mut(), MPFR_RNDN));
  return r;
}

RealBall const_euler(Precision prec) {
  RealBall r = RealBall::with_prec(prec);
  r.add_rounding(mpfr_const_euler(r.mid_mut(), MPFR_RNDN));
  return r;
}

namespace {

// sin(pi u) or cos(pi u) for exact |u| <= 1/4.
RealBall trig_pi_kernel(mpfr_srcptr u, bool want_cos, Precision prec) {
  if (mpfr_zero_p(u)) return want_cos ? RealBall(1) : RealBall::with_prec(prec);
  Precision wp = prec + 8;
  RealBall x = mul(const_pi(wp), RealBall::from_mpfr(u), wp);
  return want_cos ? cos(x, prec) : sin(x, prec);
}

RealBall sincospi_exact(mpfr_srcptr x, bool want_cos, Precision prec) {
  long px = std::max<long>(mpfr_get_prec(x), 2) + 4;
  Tmp h(px), t(px), a(px);
  mpfr_div_2ui(h, x, 1, MPFR_RNDN);
  mpfr_rint(h, h, MPFR_RNDN);
  mpfr_mul_2ui(h, h, 1, MPFR_RNDN);
  mpfr_sub(t, x, h, MPFR_RNDN);  // exact, |t| <= 1
  int sign = mpfr_sgn(t.v);
  mpfr_abs(a, t, MPFR_RNDN);

  // Octant reduction on a in [0, 1].
  int sgn_out = want_cos ? 1 : (sign < 0 ? -1 : 1);
  if (mpfr_zero_p(a.v)) return want_cos ? RealBall(1) : RealBall::with_prec(prec);
  if (mpfr_cmp_ui(a, 1) == 0) return want_cos ? RealBall(-1) : RealBall::with_prec(prec);
  if (mpfr_cmp_d(a, 0.5) == 0) return want_cos ? RealBall::with_prec(prec) : RealBall(sgn_out);

  RealBall v;
  if (mpfr_cmp_d(a, 0.25) <= 0) {
    v = trig_pi_kernel(a, want_cos, prec);
  } else if (mpfr_cmp_d(a, 0.75) <= 0) {
    mpfr_sub_d(t, a, 0.5, MPFR_RNDN);
    if (want_cos) {
      v = neg(trig_pi_kernel(t, false, prec));
    } else {
      v = trig_pi_kernel(t, true, prec);
    }
  } else {
    mpfr_ui_sub(t, 1, a, MPFR_RNDN);
    v = want_cos ? neg(trig_pi_kernel(t, true, prec)) : trig_pi_kernel(t, false, prec);
  }
  return sgn_out < 0 ? neg(v) : v;
}

RealBall sincospi(const RealBall& a, bool want_cos, Precision prec) {
  if (!a.is_finite()) return RealBall::indeterminate();
  RealBall r = sincospi_exact(a.mid(), want_cos, prec);
  if (!a.is_exact()) r.add_error(mag_min(kPiUpper * a.rad(), Mag::from_double(2.0)));
  return r;
}

}  // namespace

RealBall sinpi(const RealBall& a, Precision prec) { return sincospi(a, false, prec); }
RealBall cospi(const RealBall& a, Precision prec) { return sincospi(a, true, prec); }

}  // namespace apg
