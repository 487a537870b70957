#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "apg/bernoulli.hpp"
#include "apg/stirling.hpp"

namespace apg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Slack added to machine-precision log2 estimates so they stay upper bounds.
constexpr double kSlack = 1e-9;

double log2_lower(const Mag& m) { return m.is_zero() ? -kInf : m.log2() - kSlack; }
double log2_upper(const Mag& m) { return m.is_zero() ? -kInf : m.log2() + kSlack; }

// log2 of the rising factorial (a)_m for real a > 0.
double log2_rising(double a, long m) {
  if (m < 16) {
    double s = 0;
    for (long i = 0; i < m; i++) s += std::log2(a + static_cast<double>(i));
    return s;
  }
  return (std::lgamma(a + static_cast<double>(m)) - std::lgamma(a)) / M_LN2;
}

double log2_factorial(long m) { return log2_rising(1.0, m); }

bool re_nonnegative(const ComplexBall& z) {
  return is_positive(z.re) || (z.re.is_exact_zero() && !contains_zero(z.im));
}

bool touches_cut(const ComplexBall& z) {
  return contains_zero(z.im) && !is_positive(z.re);
}

double term_log2_l(long N, long m, double log2a) {
  double n2 = 2.0 * static_cast<double>(N);
  return bern_mag_bound(static_cast<unsigned long>(N)) + log2_rising(n2 - 1.0, m) - std::log2(n2 * (n2 - 1.0)) -
         (n2 + static_cast<double>(m) - 1.0) * log2a;
}

}  // namespace

RealBall phi(const ComplexBall& z, Precision prec) {
  if (touches_cut(z)) return RealBall::indeterminate();
  if (z.is_real()) return RealBall(1);
  Precision wp = prec + 8;
  RealBall az = abs(z, wp);
  RealBall u = is_negative(z.re) ? div(sub(az, z.re, wp), z.im, wp) : div(z.im, add(az, z.re, wp), wp);
  return sqrt(add_si(sqr(u, wp), 1, wp), prec);
}

double RemainderBounds::best() const { return std::min({real_positive, stieltjes, brent, hare}); }

double brent_factor(long N, long m) {
  return 1.0 + std::sqrt(M_PI * (static_cast<double>(N) + 0.5 * static_cast<double>(m)));
}

double hare_factor(long N, long m) {
  return 4.0 * std::sqrt(M_PI * (static_cast<double>(N) + 0.5 * static_cast<double>(m)));
}

double stirling_term_log2(long N, long m, double a) { return term_log2_l(N, m, std::log2(a)) + kSlack; }

RemainderBounds remainder_bound_parts(const ComplexBall& z, long N, long m) {
  RemainderBounds rb{kInf, kInf, kInf, kInf};
  if (!z.is_finite()) return rb;
  double la = log2_lower(mag_abs_lower(z));
  if (la == -kInf) return rb;
  double tz = term_log2_l(N, m, la);
  double extra = kSlack * (1.0 + std::fabs(tz));
  if (z.is_real() && is_positive(z.re)) rb.real_positive = tz + extra;
  if (!touches_cut(z)) {
    RealBall ph = phi(z, Precision(64));
    if (ph.is_finite()) {
      double lp = log2_upper(mag_abs_upper(ph));
      rb.stieltjes = tz + (2.0 * static_cast<double>(N) + static_cast<double>(m)) * lp + extra;
    }
  }
  if (re_nonnegative(z)) rb.brent = tz + std::log2(brent_factor(N, m)) + extra + kSlack;
  if (!contains_zero(z.im)) {
    double ly = log2_lower(mag_abs_lower(z.im));
    double ty = term_log2_l(N, m, ly);
    rb.hare = ty + std::log2(hare_factor(N, m)) + kSlack * (2.0 + std::fabs(ty));
  }
  return rb;
}

double remainder_bound_log2(const ComplexBall& z, long N, long m) {
  return remainder_bound_parts(z, N, m).best();
}

Mag remainder_bound(const ComplexBall& z, long N, long m) {
  double l = remainder_bound_log2(z, N, m);
  if (l == kInf) return Mag::inf();
  return Mag::from_log2(l);
}

Mag hurwitz_upper(double s, double a) {
  double l1 = -s * std::log2(a);
  double l2 = -std::log2(s - 1.0) - (s - 1.0) * std::log2(a);
  auto up = [](double l) { return Mag::from_log2(l + kSlack * (1.0 + std::fabs(l))); };
  return up(l1) + up(l2);
}

double stirling_beta() {
  static const double beta = [] {
    const char* s = std::getenv("APG_BETA");
    double b = s ? std::atof(s) : 0.2;
    return b > 0.1104 ? b : 0.2;
  }();
  return beta;
}

StirlingPlan select_params(const ComplexBall& z, Precision p, FunctionKind fn, double beta, long max_m) {
  if (beta <= 0.110318) throw std::invalid_argument("select_params: beta must exceed log(2)/(2 pi)");
  StirlingPlan plan;
  double x = z.re_d(), y = std::fabs(z.im_d());
  double bp = beta * static_cast<double>(p.bits);
  plan.reflect = x < -5.0 && y < bp;
  double xp = plan.reflect ? 1.0 - x : x;

  long r = 0;
  if (y < bp) {
    double need = std::max(-xp, std::sqrt(std::max(0.0, bp * bp - y * y)) - xp);
    r = std::max(0L, static_cast<long>(std::ceil(need)));
    while (xp + static_cast<double>(r) < 0 || std::hypot(xp + static_cast<double>(r), y) < bp) r++;
  }

  long m_lo = fn == FunctionKind::Digamma ? 1 : 0;
  long m_hi = std::max(m_lo, max_m);
  Precision wp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 64);
  ComplexBall zp = plan.reflect ? sub(ComplexBall(1), z, wp) : z;

  double target = -static_cast<double>(p.bits) - 2.0;
  auto bound_at = [&](const ComplexBall& w, long N) {
    double l = -kInf;
    for (long m = m_lo; m <= m_hi; m++) l = std::max(l, remainder_bound_log2(w, N, m) - log2_factorial(m));
    return l;
  };

  double best = kInf;
  long bestN = 1, bestR = r;
  for (int restart = 0; restart < 40; restart++) {
    ComplexBall w = add_si(zp, r, wp);
    double prev = kInf;
    bool done = false;
    for (long N = 1;; N++) {
      double l = bound_at(w, N);
      if (l < best) {
        best = l;
        bestN = N;
        bestR = r;
      }
      if (l < target) {
        done = true;
        break;
      }
      if (!(l < prev)) break;
      prev = l;
    }
    if (done) break;
    r = std::max(1L, 2 * r);
  }
  plan.r = bestR;
  plan.N = bestN;
  plan.reached = best < target;
  plan.err = best == kInf ? Mag::inf() : Mag::from_log2(best);

  double az = std::hypot(xp, y) + static_cast<double>(plan.r);
  double X = fn == FunctionKind::LogGamma ? static_cast<double>(plan.r) : az;
  double Y = az;
  plan.p_sum = p.bits + 5;
  double extra = std::log2(std::max(1.0, X * std::log(std::max(1.0, Y))));
  plan.p_outer = plan.p_sum + static_cast<long>(std::floor(extra));
  return plan;
}

}  // namespace apg
