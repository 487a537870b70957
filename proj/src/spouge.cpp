#include "apg/spouge.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "apg/reflection.hpp"
#include "apg/rising.hpp"

namespace apg {

namespace {

double re_lower(const ComplexBall& z) {
  double x = z.re_d();
  double r = z.re.rad().to_double();
  return x - r - 1e-15 * (1.0 + std::fabs(x));
}

double bound_log2(double r, double re_arg) {
  double l = 0.5 * std::log2(r) - (r + 0.5) * std::log2(2.0 * M_PI) - std::log2(re_arg);
  return l + 1e-9 * (1.0 + std::fabs(l));
}

std::mutex cache_mu;
std::map<std::pair<double, long>, std::shared_ptr<const SpougeCoeffs>> cache;

}  // namespace

long spouge_guard_bits(double r) {
  double best = 0;
  long N = static_cast<long>(std::ceil(r)) - 1;
  for (long n = 1; n <= N; n++) {
    double rn = r - static_cast<double>(n);
    double l = (rn + (static_cast<double>(n) - 0.5) * std::log(rn) - std::lgamma(static_cast<double>(n))) / M_LN2;
    best = std::max(best, l);
  }
  return static_cast<long>(std::ceil(best)) + 8;
}

std::shared_ptr<const SpougeCoeffs> spouge_coeffs(double r, Precision prec) {
  long bits = (prec.bits + 63) / 64 * 64;
  auto key = std::make_pair(r, bits);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto co = std::make_shared<SpougeCoeffs>();
  Precision wp(bits + 8);
  co->r = r;
  co->N = static_cast<long>(std::ceil(r)) - 1;
  co->prec = bits;
  co->c.resize(static_cast<size_t>(co->N) + 1);
  co->c[0] = round_to(sqrt(mul_2exp(const_pi(wp), 1), wp), Precision(bits));
  mpz_class fac = 1;  // (n - 1)!
  for (long n = 1; n <= co->N; n++) {
    if (n > 1) fac *= static_cast<unsigned long>(n - 1);
    RealBall rn = RealBall::from_double(r - static_cast<double>(n));
    RealBall e = exp(rn, wp);
    RealBall pw = exp(mul(RealBall::from_double(static_cast<double>(n) - 0.5), log(rn, wp), wp), wp);
    RealBall c = div_z(mul(e, pw, wp), fac, wp);
    co->c[n] = round_to(n % 2 == 1 ? c : neg(c), Precision(bits));
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  auto [it, inserted] = cache.emplace(key, co);
  return it->second;
}

Mag spouge_error_bound(double r, const ComplexBall& z) {
  double a = re_lower(z) - 1.0 + r;
  if (!(a > 0) || !z.is_finite()) return Mag::inf();
  return Mag::from_log2(bound_log2(r, a));
}

long spouge_choose_r(const ComplexBall& z, Precision p) {
  double x = re_lower(z);
  double target = -static_cast<double>(p.bits) - 3.0;
  for (long r = 3;; r++) {
    double a = x - 1.0 + static_cast<double>(r);
    if (a > 0 && bound_log2(static_cast<double>(r), a) <= target) return r;
  }
}

namespace {

// Spouge's bound is proven for Re(z - 1) >= 0 only.
ComplexBall spouge_eval_right(const ComplexBall& z, double r, Precision prec) {
  Mag eb = spouge_error_bound(r, z);
  double size = std::hypot(z.re_d(), z.im_d()) + r + 2.0;
  long extra = static_cast<long>(std::ceil(std::log2(size * std::log(size) + 1.0)));
  Precision wp(prec.bits + spouge_guard_bits(r) + extra + 10);
  auto co = spouge_coeffs(r, wp);
  Precision zp(std::max<long>({z.re.mid_prec(), z.im.mid_prec(), wp.bits}) + 8);
  ComplexBall w = add_si(z, -1, zp);
  ComplexBall s(co->c[0]);
  for (long n = 1; n <= co->N; n++) s = add(s, div(ComplexBall(co->c[n]), add_si(w, n, wp), wp), wp);
  ComplexBall wr = add(w, RealBall::from_double(r), wp);
  ComplexBall ex = sub(mul(add(w, RealBall::from_double(0.5), wp), log(wr, wp), wp), wr, wp);
  ComplexBall g = mul(exp(ex, wp), s, wp);
  if (!g.is_finite()) return ComplexBall::indeterminate();
  Mag err = mag_abs_upper(g) * eb;
  g = z.is_real() ? ComplexBall(add_error_ball(g.re, err), g.im) : add_error(g, err);
  return round_to(g, prec);
}

}  // namespace

ComplexBall spouge_eval(const ComplexBall& z, double r, Precision prec) {
  if (!z.is_finite()) return ComplexBall::indeterminate();
  if (spouge_error_bound(r, z).is_inf()) throw AlgorithmUnavailable("spouge: Re(z - 1 + r) must be positive");
  double x = re_lower(z);
  if (x >= 1.0) return spouge_eval_right(z, r, prec);
  // Gamma(z) = Gamma(z + m) / (z)_m with Re(z + m) >= 1.
  auto m = static_cast<unsigned long>(std::ceil(1.0 - x));
  Precision wp(prec.bits + 16 + static_cast<long>(std::ceil(std::log2(static_cast<double>(m) + 1.0))));
  Precision zp(std::max<long>({z.re.mid_prec(), z.im.mid_prec(), wp.bits}) + 8);
  ComplexBall g = spouge_eval_right(add_si(z, static_cast<long>(m), zp), r, wp);
  return round_to(div(g, rising(z, m, wp), wp), prec);
}

ComplexBall gamma_spouge(FunctionKind fn, const ComplexBall& z, Precision p) {
  if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("spouge: digamma is not supported");
  if (!z.is_finite()) return ComplexBall::indeterminate();
  if (fn != FunctionKind::RGamma && contains_nonpositive_integer(z)) return ComplexBall::indeterminate();
  long pb = p.bits;
  Precision hp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 8);
  if (fn == FunctionKind::LogGamma) {
    Mag d = mag_min(mag_abs_upper(add_si(z, -1, hp)), mag_abs_upper(add_si(z, -2, hp)));
    if (d.is_zero()) return ComplexBall(0);
    pb += static_cast<long>(std::floor(std::max(0.0, -d.log2())));
  }
  Precision wp(pb + 10);
  bool reflect = z.re_d() < 0.5;
  ComplexBall arg = reflect ? sub(ComplexBall(1), z, Precision(hp.bits + 64)) : z;
  double x = arg.re_d();
  Precision target(pb + 4 + static_cast<long>(std::ceil(std::log2(std::fabs(x) + 2.0))));
  long r = spouge_choose_r(arg, target);
  ComplexBall g1 = spouge_eval(arg, static_cast<double>(r), wp);
  return gamma_variant(fn, z, g1, reflect, p);
}

}  // namespace apg
