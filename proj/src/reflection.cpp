#include "apg/reflection.hpp"

#include <cmath>

#include "apg/stirling.hpp"

namespace apg {

namespace {

// Largest |Re z| for which the strip index fits comfortably in a long.
constexpr double kMaxStrip = 4.0e18;

long floor_long(mpfr_srcptr x) { return mpfr_get_si(x, MPFR_RNDD); }
long round_long(mpfr_srcptr x) { return mpfr_get_si(x, MPFR_RNDN); }

// Shift by an integer with enough precision to be exact for exact input.
ComplexBall shift_exact(const ComplexBall& z, long n) {
  long bits = std::max<long>(z.re.mid_prec(), 64) + 66;
  return ComplexBall(add_si(z.re, n, Precision(bits)), z.im);
}

ComplexBall two_pi_i(const ComplexBall& w, int sign, Precision prec) {
  ComplexBall t = mul(w, mul_2exp(const_pi(prec), 1), prec);
  t = mul_i(t);
  return sign > 0 ? t : neg(t);
}

// Principal log(sin(pi w)) for 0 <= Re w < 1.
ComplexBall strip_log_sin(const ComplexBall& w, Precision prec) {
  double y = w.im_d();
  if (y > 1.0 || y < -1.0) {
    int s = y > 1.0 ? 1 : -1;
    ComplexBall e = exp(two_pi_i(w, s, prec), prec);
    ComplexBall a = log(mul_2exp(sub(ComplexBall(1), e, prec), -1), prec);
    ComplexBall h = mul_i(mul(add(w, RealBall::from_double(-0.5), prec), const_pi(prec), prec));
    return s > 0 ? sub(a, h, prec) : add(a, h, prec);
  }
  return log(sinpi(w, prec), prec);
}

bool above_real_axis(const ComplexBall& m) {
  int si = mpfr_sgn(m.im.mid());
  return si > 0 || (si == 0 && mpfr_sgn(m.re.mid()) < 0);
}

}  // namespace

BranchedLog log_sin_pi_branched(const ComplexBall& z, Precision prec) {
  BranchedLog out;
  if (!z.is_finite() || std::fabs(z.re_d()) > kMaxStrip) {
    out.value = ComplexBall::indeterminate();
    return out;
  }
  Precision wp = prec + 16;
  Mag err;
  if (!z.is_exact()) {
    ComplexBall c = cot_pi(z, Precision(32));
    if (!c.is_finite()) {
      out.value = ComplexBall::indeterminate();
      return out;
    }
    err = Mag::from_double(3.1415926535897936) * mag_abs_upper(c) * z.rad_abs();
  }
  ComplexBall m = z.mid_ball();
  long n = floor_long(m.re.mid());
  ComplexBall base = strip_log_sin(shift_exact(m, -n), wp);
  RealBall npi = mul_si(const_pi(wp), n, wp);
  bool up = above_real_axis(m);
  out.n_correction = up ? -n : n;
  RealBall im_up = sub(base.im, npi, wp), im_dn = add(base.im, npi, wp);
  ComplexBall v(base.re, up ? im_up : im_dn);
  if (n != 0 && contains_zero(z.im) && !z.im.is_exact_zero()) v.im = ball_union(im_up, im_dn, wp);
  if (!err.is_zero()) {
    if (z.is_real()) v.re.add_error(err);
    else v = add_error(v, err);
  }
  out.value = round_to(v, prec);
  return out;
}

ComplexBall log_sin_pi(const ComplexBall& z, Precision prec) { return log_sin_pi_branched(z, prec).value; }

ComplexBall safe_trig(TrigKind kind, const ComplexBall& z, Precision prec) {
  if (!z.is_finite() || std::fabs(z.re_d()) > kMaxStrip) return ComplexBall::indeterminate();
  Precision wp = prec + 16;
  long n = round_long(z.re.mid());
  ComplexBall w = shift_exact(z, -n);
  bool flip = kind == TrigKind::InvSinPi && (n & 1);
  ComplexBall r;
  RealBall one_re = add_si(z.im, -1, Precision(32)), one_im = add_si(z.im, 1, Precision(32));
  bool hi = is_positive(one_re), lo = is_negative(one_im);
  if (hi || lo) {
    int s = hi ? 1 : -1;
    ComplexBall e2 = exp(two_pi_i(w, s, wp), wp);
    if (kind == TrigKind::CotPi) {
      ComplexBall q = div(mul_2exp(e2, 1), sub(e2, ComplexBall(1), wp), wp);
      ComplexBall t = sub(q, ComplexBall(1), wp);
      r = s > 0 ? mul_i(t) : neg(mul_i(t));
    } else {
      ComplexBall e1 = exp(mul_2exp(two_pi_i(w, s, wp), -1), wp);
      ComplexBall den = s > 0 ? sub(e2, ComplexBall(1), wp) : sub(ComplexBall(1), e2, wp);
      r = mul_i(div(mul_2exp(e1, 1), den, wp));
    }
  } else {
    ComplexBall s = sinpi(w, wp);
    if (contains_zero(s)) return ComplexBall::indeterminate();
    r = kind == TrigKind::CotPi ? div(cospi(w, wp), s, wp) : inv(s, wp);
  }
  if (flip) r = neg(r);
  return round_to(r, prec);
}

ComplexBall reflect_eval(FunctionKind fn, const ComplexBall& z, const ComplexBall& v, Precision prec) {
  Precision wp = prec + 8;
  RealBall pi = const_pi(wp);
  ComplexBall r;
  switch (fn) {
    case FunctionKind::Gamma:
      r = div(mul(inv_sin_pi(z, wp), pi, wp), v, wp);
      break;
    case FunctionKind::RGamma:
      r = div(mul(sinpi(z, wp), v, wp), pi, wp);
      break;
    case FunctionKind::LogGamma:
      r = sub(sub(ComplexBall(log(pi, wp)), log_sin_pi(z, wp), wp), v, wp);
      break;
    case FunctionKind::Digamma:
      r = sub(v, mul(cot_pi(z, wp), pi, wp), wp);
      break;
  }
  return round_to(r, prec);
}

double lgamma_imag_estimate(double x, double y) {
  if (y == 0.0 && x > 0.0) return 0.0;
  return (x - 0.5) * std::atan2(y, x) + y * (std::log(std::hypot(x, y)) - 1.0);
}

long branch_k(const ComplexBall& z, const ComplexBall& g) {
  double L = lgamma_imag_estimate(z.re_d(), z.im_d());
  double a = std::atan2(g.im_d(), g.re_d());
  return std::lround((L - a) / (2.0 * M_PI));
}

ComplexBall branch_correction(const ComplexBall& z, const ComplexBall& g, Precision prec) {
  if (!g.is_finite() || contains_zero(g)) return ComplexBall::indeterminate();
  Precision wp = prec + 8;
  if (z.is_real() && is_positive(z.re) && g.is_real()) return log(g, prec);
  double L = lgamma_imag_estimate(z.re_d(), z.im_d());
  double gr = g.re_d(), gi = g.im_d();
  ComplexBall res;
  if (gr >= 0.0) {
    long k = std::lround((L - std::atan2(gi, gr)) / (2.0 * M_PI));
    res = log(g, wp);
    res.im = add(res.im, mul_si(const_pi(wp), 2 * k, wp), wp);
  } else {
    long j = std::lround((L - std::atan2(-gi, -gr) + M_PI) / (2.0 * M_PI));
    res = log(neg(g), wp);
    res.im = add(res.im, mul_si(const_pi(wp), 2 * j - 1, wp), wp);
  }
  ComplexBall chk = lgamma_stirling(z.mid_ball(), Precision(64), FunctionKind::LogGamma);
  if (!chk.is_finite() || std::fabs(chk.im_d() - res.im_d()) > 1.0) return lgamma_stirling(z, prec, FunctionKind::LogGamma);
  return round_to(res, prec);
}

ComplexBall gamma_variant(FunctionKind fn, const ComplexBall& z, const ComplexBall& g, bool reflected,
                          Precision p) {
  if (!g.is_finite()) return ComplexBall::indeterminate();
  Precision wp = p + 8;
  auto log_gamma_of = [&](const ComplexBall& w) {
    if (w.is_real() && is_positive(w.re) && is_positive(g.re)) return log(g, wp);
    return branch_correction(w, g, wp);
  };
  switch (fn) {
    case FunctionKind::Gamma:
      return round_to(reflected ? reflect_eval(fn, z, g, wp) : g, p);
    case FunctionKind::RGamma:
      return round_to(reflected ? reflect_eval(fn, z, g, wp) : inv(g, wp), p);
    case FunctionKind::LogGamma: {
      if (!reflected) return round_to(log_gamma_of(z), p);
      Precision hp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 64);
      ComplexBall w = sub(ComplexBall(1), z, hp);
      return round_to(reflect_eval(fn, z, log_gamma_of(w), wp), p);
    }
    case FunctionKind::Digamma:
      break;
  }
  throw AlgorithmUnavailable("digamma cannot be recovered from Gamma");
}

}  // namespace apg
