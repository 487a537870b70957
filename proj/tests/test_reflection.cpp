#include <doctest.h>

#include <cmath>
#include <random>

#include "apg/reflection.hpp"
#include "apg/spouge.hpp"
#include "apg/stirling.hpp"
#include "apg/taylor.hpp"
#include "test_util.hpp"

using namespace apg;
using tu::cexact;

namespace {

const Precision P(128);

ComplexBall log_pi(Precision p) { return ComplexBall(log(const_pi(p), p)); }

}  // namespace

TEST_SUITE("reflection") {

TEST_CASE("log sine examples") {
  CHECK(contains(log_sin_pi(cexact(0.5), P), ComplexBall(0)));
  RealBall half_log2 = neg(mul_2exp(const_log2(P), -1));
  CHECK(overlaps(log_sin_pi(cexact(0.25), P), ComplexBall(half_log2)));
  RealBall two_pi = mul_2exp(tu::pi(128), 1);
  ComplexBall l = log_sin_pi(cexact(2.5), P);
  CHECK(contains(l.re, RealBall(0L)));
  CHECK(overlaps(l.im, two_pi));
  BranchedLog b = log_sin_pi_branched(cexact(2.5), P);
  CHECK(b.n_correction == 2);
  CHECK_FALSE(log_sin_pi(cexact(3), P).is_finite());
}

TEST_CASE("log sine is the principal logarithm on the central strip") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> ux(-0.49, 1.49), uy(-6, 6);
  for (int i = 0; i < 300; i++) {
    ComplexBall z = cexact(ux(rng), uy(rng));
    CHECK(overlaps(log_sin_pi(z, P), log(sinpi(z, P), P)));
  }
}

TEST_CASE("log sine conjugation symmetry and derivative") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> ux(-12, 12), uy(0.05, 8);
  for (int i = 0; i < 300; i++) {
    ComplexBall z = cexact(ux(rng), uy(rng));
    CHECK(overlaps(log_sin_pi(conj(z), P), conj(log_sin_pi(z, P))));
    // exp recovers sin(pi z) everywhere
    CHECK(overlaps(exp(log_sin_pi(z, P), P), sinpi(z, P)));
  }
  // continuity along Im z = 0.3 across several strips
  double prev = NAN;
  for (double x = 4.0; x >= -4.0; x -= 0.01) {
    double im = log_sin_pi(cexact(x, 0.3), P).im_d();
    if (!std::isnan(prev)) CHECK(std::fabs(im - prev) < 0.5);
    prev = im;
  }
}

TEST_CASE("safe trigonometric forms") {
  CHECK(contains(cot_pi(cexact(0.25), P), ComplexBall(1)));
  CHECK(contains(inv_sin_pi(cexact(0.5), P), ComplexBall(1)));
  CHECK_FALSE(inv_sin_pi(cexact(2), P).is_finite());
  CHECK_FALSE(cot_pi(cexact(-1), P).is_finite());

  ComplexBall z = cexact(0.3, 40);
  ComplexBall fast = inv_sin_pi(z, P);
  ComplexBall direct = inv(sinpi(z, Precision(4 * 128)), Precision(4 * 128));
  CHECK(overlaps(fast, direct));
  ComplexBall naive = inv(sinpi(z, P), P);
  CHECK(overlaps(fast, naive));
  // The direct form here only loses a few bits, since sinpi already avoids
  // the blowup; the exponential form must still be tighter.
  CHECK(fast.rad_abs() < naive.rad_abs());
  CHECK(tu::rel_rad_log2(fast) <= -P.bits + 1);

  ComplexBall c = cot_pi(z, P);
  ComplexBall cd = div(cospi(z, Precision(512)), sinpi(z, Precision(512)), Precision(512));
  CHECK(overlaps(c, cd));
  CHECK(c.rad_abs() < div(cospi(z, P), sinpi(z, P), P).rad_abs());
}

TEST_CASE("reflection examples") {
  RealBall sp = sqrt(tu::pi(160), Precision(160));
  ComplexBall g = reflect_eval(FunctionKind::Gamma, cexact(-0.5), ComplexBall(mul_2exp(sp, -1)), P);
  CHECK(overlaps(g.re, neg(mul_2exp(sp, 1))));

  ComplexBall r = reflect_eval(FunctionKind::RGamma, ComplexBall(0), ComplexBall(1), P);
  CHECK(contains(r, ComplexBall(0)));
  CHECK(r.rad_abs() <= Mag::pow2(4 - 128));

  ComplexBall psi34 = digamma_stirling(cexact(0.75), P);
  ComplexBall psi14 = reflect_eval(FunctionKind::Digamma, cexact(0.25), psi34, P);
  CHECK(overlaps(sub(psi34, psi14, P), ComplexBall(tu::pi(128))));
  CHECK(overlaps(psi14, digamma_stirling(cexact(0.25), P)));
}

TEST_CASE("reflection formula on random points") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-30, 30);
  int bad = 0;
  for (int i = 0; i < 1000; i++) {
    double x = u(rng), y = (i % 4 == 0) ? 0.0 : u(rng) / 3;
    if (y == 0 && std::fabs(x - std::round(x)) < 1e-3) continue;
    ComplexBall z = cexact(x, y);
    ComplexBall a = lgamma_stirling(z, P, FunctionKind::Gamma);
    ComplexBall b = lgamma_stirling(sub(ComplexBall(1), z, P), P, FunctionKind::Gamma);
    ComplexBall prod = mul(mul(a, b, P), sinpi(z, P), P);
    bad += !overlaps(prod, ComplexBall(tu::pi(128)));
  }
  CHECK(bad == 0);
}

TEST_CASE("log Gamma reflection in the upper half plane") {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> ux(-25, 25), uy(0.01, 25);
  for (int i = 0; i < 300; i++) {
    ComplexBall z = cexact(ux(rng), uy(rng));
    ComplexBall s = add(add(lgamma_stirling(z, P, FunctionKind::LogGamma),
                            lgamma_stirling(sub(ComplexBall(1), z, P), P, FunctionKind::LogGamma), P),
                        log_sin_pi(z, P), P);
    CHECK(overlaps(s, log_pi(P)));
  }
}

TEST_CASE("branch correction integer") {
  ComplexBall z = cexact(1.5);
  CHECK(branch_k(z, lgamma_stirling(z, P, FunctionKind::Gamma)) == 0);
  ComplexBall w = cexact(10, 10);
  ComplexBall gw = lgamma_stirling(w, P, FunctionKind::Gamma);
  CHECK(branch_k(w, gw) == 4);
  CHECK(overlaps(branch_correction(w, gw, P), lgamma_stirling(w, P, FunctionKind::LogGamma)));
  CHECK(lgamma_imag_estimate(10, 10) == doctest::Approx(23.95).epsilon(0.01));
}

TEST_CASE("branch correction follows log Gamma across the cut of log") {
  // Gamma(x + 2i) winds around the origin as x decreases, so log(Gamma)
  // crosses the negative real axis repeatedly.
  const TaylorTable& t = shipped_taylor_table();
  double prev = NAN;
  for (double x = 6; x >= -12; x -= 0.05) {
    ComplexBall z = cexact(x, 2);
    ComplexBall g = gamma_spouge(FunctionKind::Gamma, z, P);
    ComplexBall l = branch_correction(z, g, P);
    CHECK(overlaps(l, lgamma_stirling(z, P, FunctionKind::LogGamma)));
    if (x > -4) CHECK(overlaps(exp(l, P), eval_taylor(FunctionKind::Gamma, z, P, t)));
    if (!std::isnan(prev)) CHECK(std::fabs(l.im_d() - prev) < M_PI / 4);
    prev = l.im_d();
  }
}

}  // TEST_SUITE
