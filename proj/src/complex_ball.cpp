#include "apg/complex_ball.hpp"

#include <cmath>

namespace apg {

namespace {

struct Tmp {
  mpfr_t v;
  explicit Tmp(long prec) { mpfr_init2(v, prec); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  operator mpfr_ptr() { return v; }
};

// Upper bound for exp(c * (x + r)) where x is exact and c >= 0.
Mag exp_upper(mpfr_srcptr x, const Mag& r, double c = 1.0) {
  if (r.is_inf()) return Mag::inf();
  Tmp t(64), rr(64);
  r.to_mpfr(rr);
  mpfr_add(t, x, rr, MPFR_RNDU);
  mpfr_mul_d(t, t, c, MPFR_RNDU);
  mpfr_exp(t, t, MPFR_RNDU);
  return Mag::from_mpfr(t);
}

// Upper bound for |x| + r as an exact mpfr value.
void abs_plus(mpfr_ptr out, const RealBall& a) {
  Tmp rr(64);
  a.rad().to_mpfr(rr);
  mpfr_abs(out, a.mid(), MPFR_RNDU);
  mpfr_add(out, out, rr, MPFR_RNDU);
}

const double kPiUp = 3.1415926535897936;

bool straddles_cut(const ComplexBall& a) { return contains_zero(a.im) && !is_positive(a.re); }

}  // namespace

ComplexBall ComplexBall::from_strings(std::string_view re, std::string_view im, Precision prec) {
  return ComplexBall(RealBall::from_string(re, prec), RealBall::from_string(im, prec));
}

Mag ComplexBall::rad_abs() const { return mag_sqrt(re.rad() * re.rad() + im.rad() * im.rad()); }

Mag mag_abs_upper(const ComplexBall& a) {
  Mag x = mag_abs_upper(a.re), y = mag_abs_upper(a.im);
  return mag_sqrt(x * x + y * y);
}

Mag mag_abs_lower(const ComplexBall& a) {
  Mag x = mag_abs_lower(a.re), y = mag_abs_lower(a.im);
  return mag_sqrt_lower(mag_add_lower(mag_mul_lower(x, x), mag_mul_lower(y, y)));
}

bool contains(const ComplexBall& a, const ComplexBall& b) {
  return contains(a.re, b.re) && contains(a.im, b.im);
}

bool overlaps(const ComplexBall& a, const ComplexBall& b) {
  return overlaps(a.re, b.re) && overlaps(a.im, b.im);
}

bool contains_zero(const ComplexBall& a) { return contains_zero(a.re) && contains_zero(a.im); }

bool contains_integer(const ComplexBall& a) { return contains_zero(a.im) && contains_integer(a.re); }

bool contains_nonpositive_integer(const ComplexBall& a) {
  return contains_zero(a.im) && contains_integer(a.re) && !is_positive(a.re);
}

ComplexBall conj(const ComplexBall& a) {
  if (a.is_real()) return a;
  return ComplexBall(a.re, neg(a.im));
}

ComplexBall neg(const ComplexBall& a) {
  if (a.is_real()) return ComplexBall(neg(a.re));
  return ComplexBall(neg(a.re), neg(a.im));
}

ComplexBall mul_i(const ComplexBall& a) { return ComplexBall(neg(a.im), a.re); }

ComplexBall mul_2exp(const ComplexBall& a, long k) {
  if (a.is_real()) return ComplexBall(mul_2exp(a.re, k));
  return ComplexBall(mul_2exp(a.re, k), mul_2exp(a.im, k));
}

ComplexBall round_to(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(round_to(a.re, prec));
  return ComplexBall(round_to(a.re, prec), round_to(a.im, prec));
}

ComplexBall add_error(const ComplexBall& a, const Mag& err) {
  if (err.is_zero()) return a;
  return ComplexBall(add_error_ball(a.re, err), add_error_ball(a.im, err));
}

ComplexBall add(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  if (a.is_real() && b.is_real()) return ComplexBall(add(a.re, b.re, prec));
  return ComplexBall(add(a.re, b.re, prec), add(a.im, b.im, prec));
}

ComplexBall add(const ComplexBall& a, const RealBall& b, Precision prec) {
  if (a.is_real()) return ComplexBall(add(a.re, b, prec));
  return ComplexBall(add(a.re, b, prec), round_to(a.im, prec));
}

ComplexBall sub(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  if (a.is_real() && b.is_real()) return ComplexBall(sub(a.re, b.re, prec));
  return ComplexBall(sub(a.re, b.re, prec), sub(a.im, b.im, prec));
}

ComplexBall mul(const ComplexBall& a, const RealBall& b, Precision prec) {
  if (a.is_real()) return ComplexBall(mul(a.re, b, prec));
  return ComplexBall(mul(a.re, b, prec), mul(a.im, b, prec));
}

ComplexBall mul(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  if (b.is_real()) return mul(a, b.re, prec);
  if (a.is_real()) return mul(b, a.re, prec);
  Precision wp = prec + 4;
  RealBall ac = mul(a.re, b.re, wp), bd = mul(a.im, b.im, wp);
  RealBall ad = mul(a.re, b.im, wp), bc = mul(a.im, b.re, wp);
  return ComplexBall(sub(ac, bd, prec), add(ad, bc, prec));
}

ComplexBall sqr(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(sqr(a.re, prec));
  Precision wp = prec + 4;
  RealBall x2 = sqr(a.re, wp), y2 = sqr(a.im, wp);
  RealBall xy = mul(a.re, a.im, prec);
  return ComplexBall(sub(x2, y2, prec), mul_2exp(xy, 1));
}

ComplexBall div(const ComplexBall& a, const RealBall& b, Precision prec) {
  if (a.is_real()) return ComplexBall(div(a.re, b, prec));
  return ComplexBall(div(a.re, b, prec), div(a.im, b, prec));
}

ComplexBall div(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  if (b.is_real()) return div(a, b.re, prec);
  if (contains_zero(b)) return ComplexBall::indeterminate();
  Precision wp = prec + 8;
  RealBall den = add(sqr(b.re, wp), sqr(b.im, wp), wp);
  if (a.is_real()) {
    RealBall re = mul(a.re, b.re, wp);
    RealBall im = neg(mul(a.re, b.im, wp));
    return ComplexBall(div(re, den, prec), div(im, den, prec));
  }
  RealBall re = add(mul(a.re, b.re, wp), mul(a.im, b.im, wp), wp);
  RealBall im = sub(mul(a.im, b.re, wp), mul(a.re, b.im, wp), wp);
  return ComplexBall(div(re, den, prec), div(im, den, prec));
}

ComplexBall inv(const ComplexBall& a, Precision prec) { return div(ComplexBall(1), a, prec); }

ComplexBall sqrt(const ComplexBall& a, Precision prec) {
  if (a.is_real() && !is_negative(a.re)) {
    if (is_positive(a.re) || a.re.is_exact_zero()) return ComplexBall(sqrt(a.re, prec));
  }
  if (!a.is_finite()) return ComplexBall::indeterminate();
  if (contains_zero(a)) {
    Mag r = mag_sqrt(mag_abs_upper(a));
    RealBall z;
    z.set_rad(r);
    return ComplexBall(z, z);
  }
  Precision wp = prec + 8;
  RealBall x = a.re.mid_ball(), y = a.im.mid_ball();
  ComplexBall v;
  if (mpfr_zero_p(y.mid()) && mpfr_sgn(x.mid()) < 0) {
    v = ComplexBall(RealBall::with_prec(prec), sqrt(neg(x), prec));
  } else {
    RealBall r = hypot(x, y, wp);
    if (mpfr_sgn(x.mid()) >= 0) {
      RealBall t = sqrt(mul_2exp(add(r, x, wp), -1), wp);
      v = ComplexBall(round_to(t, prec), div(y, mul_2exp(t, 1), prec));
    } else {
      RealBall t = sqrt(mul_2exp(sub(r, x, wp), -1), wp);
      RealBall re = div(abs(y), mul_2exp(t, 1), prec);
      v = ComplexBall(re, mpfr_sgn(y.mid()) < 0 ? neg(round_to(t, prec)) : round_to(t, prec));
    }
  }
  if (a.is_exact()) return v;
  Mag err = mag_div(a.rad_abs(), mag_sqrt_lower(mag_abs_lower(a)).mul_2exp(1));
  if (straddles_cut(a)) {
    RealBall im;
    im.set_rad(mag_abs_upper(v.im) + err);
    return ComplexBall(add_error_ball(v.re, err), im);
  }
  return add_error(v, err);
}

ComplexBall pow_int(const ComplexBall& a, long n, Precision prec) {
  if (n < 0) return inv(pow_int(a, -n, prec + 8), prec);
  if (n == 0) return ComplexBall(1);
  Precision wp = prec + static_cast<long>(std::log2(static_cast<double>(n))) + 4;
  ComplexBall result(1), base(a);
  bool first = true;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) {
      result = first ? base : mul(result, base, wp);
      first = false;
    }
    k >>= 1;
    if (k) base = sqr(base, wp);
  }
  return round_to(result, prec);
}

ComplexBall add_si(const ComplexBall& a, long k, Precision prec) {
  if (a.is_real()) return ComplexBall(add_si(a.re, k, prec));
  return ComplexBall(add_si(a.re, k, prec), round_to(a.im, prec));
}

ComplexBall mul_si(const ComplexBall& a, long k, Precision prec) {
  if (a.is_real()) return ComplexBall(mul_si(a.re, k, prec));
  return ComplexBall(mul_si(a.re, k, prec), mul_si(a.im, k, prec));
}

ComplexBall div_si(const ComplexBall& a, long k, Precision prec) {
  if (a.is_real()) return ComplexBall(div_si(a.re, k, prec));
  return ComplexBall(div_si(a.re, k, prec), div_si(a.im, k, prec));
}

ComplexBall mul_z(const ComplexBall& a, const mpz_class& k, Precision prec) {
  if (a.is_real()) return ComplexBall(mul_z(a.re, k, prec));
  return ComplexBall(mul_z(a.re, k, prec), mul_z(a.im, k, prec));
}

ComplexBall div_z(const ComplexBall& a, const mpz_class& k, Precision prec) {
  if (a.is_real()) return ComplexBall(div_z(a.re, k, prec));
  return ComplexBall(div_z(a.re, k, prec), div_z(a.im, k, prec));
}

ComplexBall exp(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(exp(a.re, prec));
  if (!a.is_finite()) return ComplexBall::indeterminate();
  Precision wp = prec + 4;
  RealBall x = a.re.mid_ball(), y = a.im.mid_ball();
  RealBall e = exp(x, wp);
  ComplexBall v(mul(e, cos(y, wp), prec), mul(e, sin(y, wp), prec));
  if (a.is_exact()) return v;
  return add_error(v, exp_upper(a.re.mid(), a.re.rad()) * a.rad_abs());
}

ComplexBall log(const ComplexBall& a, Precision prec) {
  if (!a.is_finite() || contains_zero(a)) return ComplexBall::indeterminate();
  if (a.is_real()) {
    if (is_positive(a.re)) return ComplexBall(log(a.re, prec));
    if (is_negative(a.re)) return ComplexBall(log(neg(a.re), prec), const_pi(prec));
  }
  Precision wp = prec + 4;
  RealBall x = a.re.mid_ball(), y = a.im.mid_ball();
  ComplexBall v(log(hypot(x, y, wp), prec), atan2(y, x, prec));
  if (a.is_exact()) return v;
  Mag err = mag_div(a.rad_abs(), mag_abs_lower(a));
  if (straddles_cut(a)) {
    RealBall im;
    im.set_rad(Mag::from_double(kPiUp) + err);
    return ComplexBall(add_error_ball(v.re, err), im);
  }
  return add_error(v, err);
}

namespace {

// Shared body for sin, cos, sinpi, cospi: f(x + iy) from real parts.
ComplexBall trig_complex(const ComplexBall& a, bool is_cos, bool scaled, Precision prec) {
  if (!a.is_finite()) return ComplexBall::indeterminate();
  Precision wp = prec + 6;
  RealBall x = a.re.mid_ball(), y = a.im.mid_ball();
  RealBall yy = scaled ? mul(const_pi(wp + 4), y, wp) : y;
  RealBall s = scaled ? sinpi(x, wp) : sin(x, wp);
  RealBall c = scaled ? cospi(x, wp) : cos(x, wp);
  RealBall ch = cosh(yy, wp), sh = sinh(yy, wp);
  ComplexBall v;
  if (is_cos)
    v = ComplexBall(mul(c, ch, prec), neg(mul(s, sh, prec)));
  else
    v = ComplexBall(mul(s, ch, prec), mul(c, sh, prec));
  if (a.is_exact()) return v;
  Tmp t(64);
  abs_plus(t, a.im);
  double factor = scaled ? kPiUp : 1.0;
  Mag err = exp_upper(t, Mag(), factor) * a.rad_abs();
  if (scaled) err *= Mag::from_double(kPiUp);
  return add_error(v, err);
}

}  // namespace

ComplexBall sin(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(sin(a.re, prec));
  return trig_complex(a, false, false, prec);
}

ComplexBall cos(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(cos(a.re, prec));
  return trig_complex(a, true, false, prec);
}

ComplexBall sinpi(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(sinpi(a.re, prec));
  return trig_complex(a, false, true, prec);
}

ComplexBall cospi(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(cospi(a.re, prec));
  return trig_complex(a, true, true, prec);
}

ComplexBall cotpi(const ComplexBall& a, Precision prec) {
  Precision wp = prec + 8;
  return div(cospi(a, wp), sinpi(a, wp), prec);
}

ComplexBall atan(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return ComplexBall(atan(a.re, prec));
  Precision wp = prec + 8;
  ComplexBall iz = mul_i(a);
  ComplexBall l1 = log(sub(ComplexBall(1), iz, wp), wp);
  ComplexBall l2 = log(add(ComplexBall(1), iz, wp), wp);
  return round_to(mul_2exp(mul_i(sub(l1, l2, wp)), -1), prec);
}

RealBall abs(const ComplexBall& a, Precision prec) {
  if (a.is_real()) return round_to(abs(a.re), prec);
  return hypot(a.re, a.im, prec);
}

RealBall arg(const ComplexBall& a, Precision prec) { return atan2(a.im, a.re, prec); }

}  // namespace apg
