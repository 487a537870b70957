#include <cmath>

#include "apg/bernoulli.hpp"
#include "apg/reflection.hpp"
#include "apg/rising.hpp"
#include "apg/stirling.hpp"

namespace apg {

namespace {

RealBall half_log_2pi(Precision prec) {
  return mul_2exp(log(mul_2exp(const_pi(prec + 4), 1), prec + 4), -1);
}

ComplexBall add_err_like(const ComplexBall& v, const ComplexBall& z, const Mag& err) {
  if (z.is_real()) return ComplexBall(add_error_ball(v.re, err), v.im);
  return add_error(v, err);
}

// log Gamma(w) from the truncated Stirling series plus remainder.
ComplexBall stirling_core(const ComplexBall& w, const StirlingPlan& plan, Precision po) {
  SumSchedule sched = schedule_sum(w, plan.N, Precision(plan.p_sum));
  ComplexBall s = main_sum_fast(w, sched, Precision(plan.p_sum));
  ComplexBall t = mul(add(w, RealBall::from_double(-0.5), po), log(w, po), po);
  t = sub(t, w, po);
  t = add(t, half_log_2pi(po), po);
  t = add(t, s, po);
  return add_err_like(t, w, plan.err);
}

// Taylor expansion of log Gamma around 1 or 2 for arguments very close to
// them. Coefficients past the linear one are below 1 in magnitude.
ComplexBall lgamma_near_one_two(const ComplexBall& z, long c, long e, Precision p) {
  long target = p.bits + e + 10;
  size_t K = static_cast<size_t>(std::max(2L, (target + e - 1) / e + 1));
  Precision wp(target + 8);
  SeriesJet jet = lgamma_jet_stirling(ComplexBall(c), wp, K);
  ComplexBall h = add_si(z, -c, Precision(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 8));
  ComplexBall s = jet[K - 1];
  for (size_t k = K - 1; k-- > 0;) s = add(mul(s, h, wp), jet[k], wp);
  Mag ah = mag_abs_upper(h);
  Mag tail = mag_div(mag_pow_ui(ah, K), mag_sub_lower(Mag::from_double(1.0), ah));
  return round_to(add_err_like(s, z, tail), p);
}

ComplexBall lgamma_core(const ComplexBall& z, Precision p, FunctionKind fn) {
  if (!z.is_finite()) return ComplexBall::indeterminate();
  if (fn != FunctionKind::RGamma && contains_nonpositive_integer(z)) return ComplexBall::indeterminate();
  long pb = p.bits;
  if (fn == FunctionKind::LogGamma) {
    Precision hp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 8);
    Mag d1 = mag_abs_upper(add_si(z, -1, hp)), d2 = mag_abs_upper(add_si(z, -2, hp));
    Mag d = mag_min(d1, d2);
    if (d.is_zero()) return ComplexBall(0);
    long e = static_cast<long>(std::floor(std::max(0.0, -d.log2())));
    if (e > pb / 2) return lgamma_near_one_two(z, d1 <= d2 ? 1 : 2, e, p);
    pb += e;
  }
  StirlingPlan plan = select_params(z, Precision(pb), fn, stirling_beta());
  Precision po(plan.p_outer + 4);
  Precision zp_prec(std::max<long>({z.re.mid_prec(), z.im.mid_prec(), po.bits}) + 16);
  ComplexBall zp = plan.reflect ? sub(ComplexBall(1), z, zp_prec) : z;
  ComplexBall w = add_si(zp, plan.r, zp_prec);
  ComplexBall t = stirling_core(w, plan, po);
  unsigned long r = static_cast<unsigned long>(plan.r);

  ComplexBall res;
  if (plan.reflect) {
    RealBall pi = const_pi(po);
    switch (fn) {
      case FunctionKind::Gamma:
        res = mul(mul(exp(neg(t), po), rising(zp, r, po), po), inv_sin_pi(z, po), po);
        res = mul(res, pi, po);
        break;
      case FunctionKind::RGamma:
        res = div(mul(exp(t, po), sinpi(z, po), po), mul(rising(zp, r, po), pi, po), po);
        break;
      default:
        res = sub(log_rising_any(zp, r, po), t, po);
        res = sub(res, log_sin_pi(z, po), po);
        res = add(res, log(pi, po), po);
        break;
    }
  } else {
    switch (fn) {
      case FunctionKind::Gamma:
        res = div(exp(t, po), rising(z, r, po), po);
        break;
      case FunctionKind::RGamma:
        res = mul(exp(neg(t), po), rising(z, r, po), po);
        break;
      default:
        res = sub(t, log_rising_any(z, r, po), po);
        break;
    }
  }
  return round_to(res, p);
}

ComplexBall digamma_core(const ComplexBall& z, Precision p) {
  if (!z.is_finite() || contains_nonpositive_integer(z)) return ComplexBall::indeterminate();
  StirlingPlan plan = select_params(z, p, FunctionKind::Digamma, stirling_beta());
  Precision po(plan.p_outer + 8);
  Precision zp_prec(std::max<long>({z.re.mid_prec(), z.im.mid_prec(), po.bits}) + 16);
  ComplexBall zp = plan.reflect ? sub(ComplexBall(1), z, zp_prec) : z;
  ComplexBall w = add_si(zp, plan.r, zp_prec);

  // sum_{n<N} B_2n / (2n w^2n) by Horner in 1/w^2
  long N = plan.N;
  BernoulliCache::global().ensure(static_cast<size_t>(N));
  ComplexBall w2 = inv(sqr(w, po), po);
  ComplexBall h;
  for (long n = N - 1; n >= 1; n--) {
    mpq_class q = BernoulliCache::global().get(static_cast<size_t>(n));
    q /= 2 * n;
    h = add(mul(h, w2, po), RealBall::from_mpq(q, po), po);
  }
  h = mul(h, w2, po);
  ComplexBall psi = sub(log(w, po), mul_2exp(inv(w, po), -1), po);
  psi = add_err_like(sub(psi, h, po), w, plan.err);
  for (long k = 0; k < plan.r; k++) psi = sub(psi, inv(add_si(zp, k, po), po), po);
  if (plan.reflect) psi = reflect_eval(FunctionKind::Digamma, z, psi, po);
  return round_to(psi, p);
}

// Jet of log Gamma(w + x) from the Stirling series, w large.
SeriesJet stirling_jet(const ComplexBall& w, const StirlingPlan& plan, size_t n, Precision po) {
  SeriesJet v = SeriesJet::variable(w, n);
  SeriesJet lw = jet_log(v, po);
  SeriesJet res = jet_mul(jet_add_scalar(v, ComplexBall(RealBall::from_double(-0.5)), po), lw, po);
  res = jet_sub(res, v, po);
  res = jet_add_scalar(res, ComplexBall(half_log_2pi(po)), po);

  long N = plan.N;
  BernoulliCache::global().ensure(static_cast<size_t>(std::max(N, 1L)));
  std::vector<RealBall> qk(static_cast<size_t>(std::max(N, 1L)));
  std::vector<mpz_class> binom(qk.size(), mpz_class(1));  // C(2k - 2 + j, j)
  for (long k = 1; k < N; k++) {
    mpq_class q = BernoulliCache::global().get(static_cast<size_t>(k));
    q /= 2 * k * (2 * k - 1);
    qk[k] = RealBall::from_mpq(q, po);
  }
  ComplexBall iw = inv(w, po);
  ComplexBall iw2 = sqr(iw, po);
  ComplexBall iwj = iw;  // w^(-1-j)
  for (size_t j = 0; j < n; j++) {
    ComplexBall h;
    for (long k = N - 1; k >= 1; k--) {
      if (j > 0) {
        binom[k] *= static_cast<unsigned long>(2 * k - 2 + static_cast<long>(j));
        mpz_divexact_ui(binom[k].get_mpz_t(), binom[k].get_mpz_t(), j);
      }
      h = add(mul(h, iw2, po), mul_z(qk[k], binom[k], po), po);
    }
    h = mul(h, iwj, po);
    if (j & 1) h = neg(h);
    res[j] = add_err_like(add(res[j], h, po), w, plan.err);
    iwj = mul(iwj, iw, po);
  }
  return res;
}

// Jet of log (z + x)_r.
SeriesJet log_rising_jet(const ComplexBall& z, unsigned long r, size_t n, Precision po) {
  SeriesJet res(n);
  res[0] = log_rising_any(z, r, po);
  if (n == 1 || r == 0) return res;
  std::vector<ComplexBall> sums(n);
  for (unsigned long k = 0; k < r; k++) {
    ComplexBall ik = inv(add_si(z, static_cast<long>(k), po), po), pw = ik;
    for (size_t j = 1; j < n; j++) {
      sums[j] = add(sums[j], pw, po);
      pw = mul(pw, ik, po);
    }
  }
  for (size_t j = 1; j < n; j++) {
    ComplexBall c = div_si(sums[j], static_cast<long>(j), po);
    res[j] = (j & 1) ? c : neg(c);
  }
  return res;
}

// Jet of log sin(pi (z + x)).
SeriesJet log_sin_pi_jet(const ComplexBall& z, size_t n, Precision po) {
  SeriesJet s(n), c(n);
  ComplexBall sz = sinpi(z, po), cz = cospi(z, po);
  RealBall pi = const_pi(po), pj(1);
  mpz_class fac = 1;
  for (size_t j = 0; j < n; j++) {
    if (j > 0) {
      pj = mul(pj, pi, po);
      fac *= static_cast<unsigned long>(j);
    }
    RealBall f = div_z(pj, fac, po);
    const ComplexBall* base[4] = {&sz, &cz, &sz, &cz};
    bool neg_s[4] = {false, false, true, true};
    bool neg_c[4] = {false, true, true, false};
    ComplexBall sv = mul(*base[j % 4], f, po);
    ComplexBall cv = mul(*base[(j + 1) % 4], f, po);
    s[j] = neg_s[j % 4] ? neg(sv) : sv;
    c[j] = neg_c[j % 4] ? neg(cv) : cv;
  }
  if (n == 1) return SeriesJet::constant(log_sin_pi(z, po), 1);
  SeriesJet cot = jet_div(jet_truncate(c, n - 1), jet_truncate(s, n - 1), po);
  cot = jet_scale(cot, ComplexBall(pi), po);
  return jet_integral(cot, log_sin_pi(z, po), po);
}

}  // namespace

Mag derivative_bound(const ComplexBall& z, FunctionKind fn) {
  Precision lp(32);
  ComplexBall d;
  switch (fn) {
    case FunctionKind::LogGamma:
      d = digamma_core(z, lp);
      break;
    case FunctionKind::Gamma:
    case FunctionKind::RGamma:
      d = mul(lgamma_core(z, lp, fn), digamma_core(z, lp), lp);
      break;
    case FunctionKind::Digamma: {
      SeriesJet j = lgamma_jet_stirling(z, lp, 3);
      d = mul_2exp(j[2], 1);
      break;
    }
  }
  if (!d.is_finite()) return Mag::inf();
  return mag_abs_upper(d);
}

ComplexBall propagate_midpoint(const ComplexBall& z, FunctionKind fn,
                               const std::function<ComplexBall(const ComplexBall&)>& f) {
  if (z.is_exact()) return f(z);
  Mag rad = z.rad_abs();
  if (Mag::pow2(-16) < rad) return f(z);
  Mag d = derivative_bound(z, fn);
  if (!d.is_finite()) return f(z);
  ComplexBall v = f(z.mid_ball());
  if (!v.is_finite()) return v;
  return add_err_like(v, z, d * rad);
}

ComplexBall lgamma_stirling(const ComplexBall& z, Precision p, FunctionKind fn) {
  if (fn == FunctionKind::Digamma) return digamma_stirling(z, p);
  return propagate_midpoint(z, fn, [&](const ComplexBall& x) { return lgamma_core(x, p, fn); });
}

ComplexBall digamma_stirling(const ComplexBall& z, Precision p) {
  return propagate_midpoint(z, FunctionKind::Digamma, [&](const ComplexBall& x) { return digamma_core(x, p); });
}

SeriesJet lgamma_jet_stirling(const ComplexBall& z, Precision p, size_t order) {
  size_t n = std::max<size_t>(order, 1);
  if (!z.is_finite() || contains_nonpositive_integer(z)) return SeriesJet::indeterminate(n);
  StirlingPlan plan = select_params(z, p, FunctionKind::LogGamma, stirling_beta(), static_cast<long>(n) - 1);
  Precision po(plan.p_outer + 8 + static_cast<long>(n));
  Precision zp_prec(std::max<long>({z.re.mid_prec(), z.im.mid_prec(), po.bits}) + 16);
  ComplexBall zp = plan.reflect ? sub(ComplexBall(1), z, zp_prec) : z;
  ComplexBall w = add_si(zp, plan.r, zp_prec);
  unsigned long r = static_cast<unsigned long>(plan.r);
  SeriesJet L = jet_sub(stirling_jet(w, plan, n, po), log_rising_jet(zp, r, n, po), po);
  if (plan.reflect) {
    for (size_t j = 1; j < n; j += 2) L[j] = neg(L[j]);
    SeriesJet ls = log_sin_pi_jet(z, n, po);
    L = jet_neg(jet_add(L, ls, po));
    L[0] = add(L[0], log(const_pi(po), po), po);
  }
  for (size_t j = 0; j < n; j++) L[j] = round_to(L[j], p);
  return L;
}

}  // namespace apg
