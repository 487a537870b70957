#include "apg/hypergeom.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "apg/kernels.hpp"
#include "apg/reflection.hpp"
#include "apg/rising.hpp"

namespace apg {

namespace {

constexpr double kLog2e = 1.4426950408889634;

// log2 |Gamma(x + iy)| to a few bits, for planning only.
double log2_abs_gamma_est(double x, double y) {
  std::complex<double> w(x, y);
  double acc = 0;
  while (w.real() < 10) {
    acc -= std::log(std::abs(w));
    w += 1.0;
  }
  std::complex<double> l = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * M_PI) + 1.0 / (12.0 * w);
  return (l.real() + acc) * kLog2e;
}

bool real_unit_interval(const ComplexBall& z) {
  if (!z.is_real() || !is_positive(z.re)) return false;
  RealBall d = sub(RealBall(1), z.re, Precision(z.re.mid_prec() + 8));
  return d.is_exact_zero() || is_positive(d);
}

double upper_log2(double x, long N) {
  double n = static_cast<double>(N);
  double l = (x - 1.0) * std::log2(n) - n * kLog2e;
  if (x > 1.0) l -= std::log2(1.0 - (x - 1.0) / n);
  return l;
}

// Smallest L whose first omitted term is below 2^target, or -1 if the
// terms start growing first.
long plan_L(double x, long N, double target) {
  double n = static_cast<double>(N);
  double base = (x - 1.0) * std::log2(n) - n * kLog2e;
  double lt = 0;
  for (long L = 0; L <= 10 * N + 10; L++) {
    if (base + lt <= target) return L;
    double f = 1.0 - x + static_cast<double>(L);
    if (f >= n) return -1;
    lt += std::log2(f / n);
  }
  return -1;
}

long plan_K(double x, double y, long N, double target) {
  double n = static_cast<double>(N);
  double lpref = x * std::log2(n) - n * kLog2e - std::log2(std::hypot(x, y));
  double lt = 0;
  for (long K = 0;; K++) {
    double d = x + static_cast<double>(K) + 1.0;
    double q = n / d;
    if (K >= 1 && q < 1.0 && lpref + lt - std::log2(1.0 - q) + 1.0 <= target) return K;
    lt += std::log2(n / d);
  }
}

double re_lower(const ComplexBall& z) {
  return z.re_d() - z.re.rad().to_double() * (1 + 1e-12);
}

}  // namespace

double hyper_alpha() {
  static const double alpha = [] {
    const char* s = std::getenv("APG_ALPHA");
    double a = s ? std::atof(s) : 0.53;
    return a > 0.0 && a < 2.0 ? a : 0.53;
  }();
  return alpha;
}

HyperPlan plan_hyper(const ComplexBall& z, Precision p, double alpha) {
  double x = z.re_d(), y = z.im_d();
  if (!(x > 0)) throw AlgorithmUnavailable("hyper: requires Re z > 0");
  HyperPlan plan;
  plan.alpha = alpha;
  double target = log2_abs_gamma_est(x, y) - static_cast<double>(p.bits) - 6.0;
  long N = std::max(1L, std::lround(alpha * M_LN2 * static_cast<double>(p.bits)));
  if (real_unit_interval(z)) {
    long L;
    while ((L = plan_L(x, N, target)) < 0) N++;
    plan.L = L;
  } else {
    while (upper_log2(x + z.re.rad().to_double(), N) > target) N++;
    plan.L = 0;
  }
  plan.N_split = N;
  plan.K = plan_K(x, y, N, target);
  return plan;
}

ComplexBall lower_gamma_series(const ComplexBall& z, long N, long K, Precision prec) {
  double xl = re_lower(z);
  if (!(xl > 0) || N < 1) throw AlgorithmUnavailable("hyper: lower series needs Re z > 0 and N >= 1");
  double d = xl + static_cast<double>(K) + 1.0;
  double q = static_cast<double>(N) / d * (1 + 1e-14);
  if (!(q < 1.0)) throw AlgorithmUnavailable("hyper: lower series tail ratio is not below 1");

  ComplexBall t(1), s;
  for (long k = 0; k < K; k++) {
    s = add(s, t, prec);
    t = div(mul_si(t, N, prec), add_si(z, k + 1, prec), prec);
  }
  Mag tail = mag_abs_upper(t) * Mag::from_double(1.0 / (1.0 - q) * (1 + 1e-14));
  s = z.is_real() ? ComplexBall(add_error_ball(s.re, tail), s.im) : add_error(s, tail);

  RealBall logn = log(RealBall(N), prec);
  ComplexBall pref = div(exp(sub(mul(z, logn, prec), ComplexBall(RealBall(N)), prec), prec), z, prec);
  return mul(pref, s, prec);
}

ComplexBall upper_gamma_asymp(const ComplexBall& z, long N, long L, Precision prec) {
  if (!real_unit_interval(z) || N < 1)
    throw AlgorithmUnavailable("hyper: asymptotic series is certified only for real z in (0, 1]");
  RealBall x = z.re;
  RealBall a = sub(RealBall(1), x, prec);
  RealBall t(1), s;
  for (long k = 0; k < L; k++) {
    s = add(s, t, prec);
    t = div_si(mul(t, add_si(a, k, prec), prec), -N, prec);
  }
  s = add_error_ball(s, mag_abs_upper(t));
  RealBall logn = log(RealBall(N), prec);
  RealBall pref = exp(sub(mul(add_si(x, -1, prec), logn, prec), RealBall(N), prec), prec);
  return ComplexBall(mul(pref, s, prec));
}

Mag upper_gamma_bound(const ComplexBall& z, long N) {
  double x = z.re_d() + z.re.rad().to_double() * (1 + 1e-12);
  if (x > 1.0 && x - 1.0 >= static_cast<double>(N)) return Mag::inf();
  double l = upper_log2(x, N);
  return Mag::from_log2(l + 1e-9 * (1.0 + std::fabs(l)));
}

ComplexBall gamma_hyper(const ComplexBall& z, Precision p, const HyperPlan& plan) {
  double x = z.re_d(), y = z.im_d();
  double loss = std::max(0.0, log2_abs_gamma_est(x, 0) - log2_abs_gamma_est(x, y));
  Precision wp(p.bits + 30 + static_cast<long>(std::ceil(loss + std::log2(plan.K + 2.0))));
  ComplexBall res = lower_gamma_series(z, plan.N_split, plan.K, wp);
  if (plan.L > 0) {
    res = add(res, upper_gamma_asymp(z, plan.N_split, plan.L, wp), wp);
  } else {
    Mag u = upper_gamma_bound(z, plan.N_split);
    res = z.is_real() ? ComplexBall(add_error_ball(res.re, u), res.im) : add_error(res, u);
  }
  return round_to(res, p);
}

ComplexBall gamma_hyper_fn(FunctionKind fn, const ComplexBall& z, Precision p) {
  if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("hyper: digamma is not supported");
  if (!z.is_finite()) return ComplexBall::indeterminate();
  if (fn != FunctionKind::RGamma && contains_nonpositive_integer(z)) return ComplexBall::indeterminate();
  long pb = p.bits;
  Precision hp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 64);
  if (fn == FunctionKind::LogGamma) {
    Mag d = mag_min(mag_abs_upper(add_si(z, -1, hp)), mag_abs_upper(add_si(z, -2, hp)));
    if (d.is_zero()) return ComplexBall(0);
    pb += static_cast<long>(std::floor(std::max(0.0, -d.log2())));
  }
  bool reflect = z.re_d() < 0.5;
  ComplexBall arg = reflect ? sub(ComplexBall(1), z, hp) : z;
  double x = arg.re_d();
  long m = x > 1.0 ? static_cast<long>(std::ceil(x)) - 1 : 0;
  if (m > 1000000) throw AlgorithmUnavailable("hyper: argument too large to shift");
  Precision wp(pb + 10 + static_cast<long>(std::ceil(std::log2(m + 1.0))));
  ComplexBall w = add_si(arg, -m, hp);
  ComplexBall g = gamma_hyper(w, wp, plan_hyper(w, wp, hyper_alpha()));
  if (m > 0) g = mul(g, rising(w, static_cast<unsigned long>(m), wp), wp);
  return gamma_variant(fn, z, g, reflect, p);
}

namespace {

kernels::PQT lower_bsplit(const mpq_class& w, long N, long K) {
  mpz_class a = w.get_num(), b = w.get_den();
  mpz_class nb = b * N;
  auto term = [&](unsigned long j, mpz_class& pj, mpz_class& qj) {
    pj = nb;
    qj = a + b * j;
  };
  return kernels::bsplit_parallel(term, 1, static_cast<unsigned long>(K));
}

}  // namespace

mpq_class lower_series_sum_exact(const mpq_class& w, long N, long K) {
  if (K <= 0) return 0;
  if (K == 1) return 1;
  kernels::PQT r = lower_bsplit(w, N, K);
  mpq_class s(r.T, r.Q);
  s.canonicalize();
  return s + 1;
}

RealBall gamma_rational_bs(const mpq_class& q, Precision p) {
  if (sgn(q) <= 0) throw AlgorithmUnavailable("hyper-bs: requires a positive rational");
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  long m = std::max(0L, c.get_si() - 1);
  if (c > 1000000) throw AlgorithmUnavailable("hyper-bs: argument too large to shift");
  mpq_class w = q - m;
  double xd = w.get_d();

  // Gamma(w) >= 1 on (0, 1], so an absolute 2^-(p+8) is relative.
  double target = -static_cast<double>(p.bits) - 8.0;
  long N = std::max(1L, std::lround(M_LN2 * static_cast<double>(p.bits)));
  while (upper_log2(xd, N) > target) N++;
  long K = std::max(2L, plan_K(xd, 0, N, target));
  Precision wp(p.bits + 20 + static_cast<long>(std::ceil(std::log2(K + 2.0) + std::log2(m + 1.0))));

  kernels::PQT r = lower_bsplit(w, N, K);
  RealBall Q = RealBall::from_mpz(r.Q);
  RealBall s = add_si(div(RealBall::from_mpz(r.T), Q, wp), 1, wp);

  // t_K = (P/Q) N / (w + K), then a geometric tail with ratio N / (w + K + 1).
  Precision lp(64);
  RealBall wb = RealBall::from_mpq(w, wp);
  RealBall tk = div(mul_si(div(RealBall::from_mpz(r.P), Q, lp), N, lp), add_si(wb, K, lp), lp);
  double ratio = static_cast<double>(N) / (xd + static_cast<double>(K) + 1.0) * (1 + 1e-14);
  s = add_error_ball(s, mag_abs_upper(tk) * Mag::from_double(1.0 / (1.0 - ratio) * (1 + 1e-14)));

  RealBall pref = div(exp(sub(mul(wb, log(RealBall(N), wp), wp), RealBall(N), wp), wp), wb, wp);
  RealBall g = add_error_ball(mul(pref, s, wp), upper_gamma_bound(ComplexBall(wb), N));
  if (m > 0) g = mul_q(g, rising_bs(w, static_cast<unsigned long>(m)), wp);
  return round_to(g, p);
}

ComplexBall gamma_rational_fn(FunctionKind fn, const mpq_class& q, Precision p) {
  if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("hyper-bs: digamma is not supported");
  if (q.get_den() == 1 && sgn(q) <= 0) {
    return fn == FunctionKind::RGamma ? ComplexBall(0) : ComplexBall::indeterminate();
  }
  long pb = p.bits;
  if (fn == FunctionKind::LogGamma) {
    if (q == 1 || q == 2) return ComplexBall(0);
    double d = std::min(std::fabs(mpq_class(q - 1).get_d()), std::fabs(mpq_class(q - 2).get_d()));
    pb += static_cast<long>(std::floor(std::max(0.0, -std::log2(d))));
  }
  bool reflect = q < mpq_class(1, 2);
  Precision wp(pb + 10);
  RealBall g = gamma_rational_bs(reflect ? mpq_class(1 - q) : q, wp);
  long zb = std::max<long>(wp.bits + 64, static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) + 64);
  ComplexBall z(RealBall::from_mpq(q, Precision(zb)));
  return gamma_variant(fn, z, ComplexBall(g), reflect, p);
}

}  // namespace apg
