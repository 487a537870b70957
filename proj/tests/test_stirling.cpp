#include <doctest.h>

#include <cmath>
#include <random>

#include "apg/bernoulli.hpp"
#include "apg/stirling.hpp"
#include "apg/taylor.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace apg;
using tu::cexact;

namespace {

// Exact sum_{n<N} B_2n / (2n (2n-1) z^(2n-1)) for rational z.
mpq_class main_sum_exact(const mpq_class& z, long N) {
  auto b = oracle::bernoulli(static_cast<unsigned long>(2 * N));
  mpq_class s = 0, zp = z, z2 = z * z;
  for (long n = 1; n < N; n++) {
    s += b[static_cast<size_t>(2 * n)] / (mpq_class(2 * n * (2 * n - 1)) * zp);
    zp *= z2;
  }
  return s;
}

ComplexBall random_z(std::mt19937_64& rng, double re, double im) {
  std::uniform_real_distribution<double> ux(-re, re), uy(-im, im);
  for (;;) {
    double x = ux(rng), y = (rng() % 5 == 0) ? 0.0 : uy(rng);
    if (y == 0 && x <= 0.5 && std::fabs(x - std::round(x)) < 1e-3) continue;
    return cexact(x, y);
  }
}

}  // namespace

TEST_SUITE("stirling") {

TEST_CASE("phi") {
  CHECK(contains(phi(cexact(3.5), Precision(64)), RealBall(1L)));
  RealBall pi_ = phi(cexact(0, 1), Precision(64));
  CHECK(overlaps(pi_, sqrt(RealBall(2L), Precision(64))));
  CHECK(mpfr_cmp_d(pi_.mid(), 1.415) <= 0);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int i = 0; i < 200; i++) {
    double x = u(rng), y = u(rng);
    // 1 / cos(arg(z) / 2) from atan2 at high precision
    RealBall a = atan2(tu::exact(y), tu::exact(x), Precision(128));
    RealBall want = inv(cos(mul_2exp(a, -1), Precision(128)), Precision(128));
    CHECK(overlaps(phi(cexact(x, y), Precision(128)), want));
  }
  CHECK_FALSE(phi(cexact(-2.0), Precision(64)).is_finite());
}

TEST_CASE("remainder bound examples") {
  mpq_class t5 = oracle::bernoulli(10)[10] / (mpq_class(90) * mpz_class("1000000000"));
  Mag b = remainder_bound(cexact(10), 5, 0);
  // The bound is the omitted term itself, rounded upward.
  CHECK(b.to_double() >= std::fabs(t5.get_d()));
  CHECK(b.to_double() <= std::fabs(t5.get_d()) * (1 + 1e-6));
  CHECK(brent_factor(4, 0) == doctest::Approx(4.5449).epsilon(1e-4));
  CHECK(hare_factor(4, 0) == doctest::Approx(4 * std::sqrt(4 * M_PI)).epsilon(1e-12));
  RemainderBounds rb = remainder_bound_parts(cexact(-20, 5), 10, 0);
  CHECK(std::isfinite(rb.hare));
  CHECK(std::isinf(rb.brent));
  CHECK(std::isinf(remainder_bound_parts(cexact(-20), 10, 0).best()));
}

TEST_CASE("remainder bound decreases until its minimum") {
  for (ComplexBall z : {cexact(30), cexact(12, 7), cexact(0.5, 40), cexact(3, 0.25)}) {
    double prev = INFINITY;
    long N = 1;
    for (; N < 2000; N++) {
      double l = remainder_bound_log2(z, N, 0);
      if (!(l < prev)) break;
      prev = l;
    }
    for (long M = N; M < N + 20; M++) CHECK(remainder_bound_log2(z, M, 0) >= prev - 1e-9);
  }
}

TEST_CASE("hurwitz upper bound") {
  CHECK(hurwitz_upper(2, 2).to_double() == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(hurwitz_upper(2, 2).to_double() >= M_PI * M_PI / 6 - 1);
  CHECK(hurwitz_upper(4, 1).to_double() == doctest::Approx(4.0 / 3).epsilon(1e-9));
  CHECK(hurwitz_upper(4, 1).to_double() >= std::pow(M_PI, 4) / 90);
  for (double s : {1.5, 3.0, 40.0})
    for (double a = 0.5; a < 50; a *= 1.7) CHECK(hurwitz_upper(s, a * 1.7) <= hurwitz_upper(s, a));
}

TEST_CASE("parameter selection") {
  StirlingPlan pl = select_params(cexact(89.1), Precision(333), FunctionKind::Gamma, 0.2);
  CHECK(pl.r == 0);
  CHECK(pl.N >= 38);
  CHECK(pl.N <= 44);
  CHECK(pl.reached);
  CHECK(pl.err <= Mag::pow2(-333));

  CHECK(select_params(cexact(400), Precision(333), FunctionKind::Gamma, 0.2).r == 0);
  CHECK(select_params(cexact(3, 500), Precision(333), FunctionKind::Gamma, 0.2).r == 0);

  StirlingPlan q = select_params(cexact(1.3), Precision(333), FunctionKind::Gamma, 0.2);
  CHECK(1.3 + static_cast<double>(q.r) >= 66.6);
  ComplexBall w = cexact(1.3 + static_cast<double>(q.r));
  CHECK(remainder_bound_log2(w, q.N, 0) < -335);
  CHECK(remainder_bound_log2(w, q.N - 1, 0) >= -335);

  CHECK(select_params(cexact(-30, 2), Precision(128), FunctionKind::Gamma, 0.2).reflect);
  CHECK_FALSE(select_params(cexact(-3, 2), Precision(128), FunctionKind::Gamma, 0.2).reflect);
  CHECK_THROWS(select_params(cexact(5), Precision(128), FunctionKind::Gamma, 0.1));
}

TEST_CASE("Horner main sum") {
  ComplexBall z = cexact(7.25);
  CHECK(overlaps(main_sum_horner(z, 2, Precision(128)).re, inv(mul_si(z.re, 12, Precision(128)), Precision(128))));
  CHECK(main_sum_horner(z, 1, Precision(128)).is_exact_zero());
  BernoulliCache::global().ensure(64);
  mpq_class zq(891, 10);
  ComplexBall s = main_sum_horner(ComplexBall(RealBall::from_mpq(zq, Precision(700))), 40, Precision(666));
  CHECK(contains(s.re, main_sum_exact(zq, 40)));
  CHECK(tu::rel_rad_log2(s) < -640);
}

TEST_CASE("sum schedule") {
  CHECK(schedule_K(333) == 2);
  CHECK(schedule_K(1024) == 2);
  CHECK(schedule_K(33220) == 21);
  CHECK(schedule_K(10000000) == 100);

  SumSchedule s = schedule_sum(cexact(89.1), 41, Precision(333));
  CHECK(s.K == 2);
  CHECK(s.M >= 27);
  CHECK(s.M <= 33);

  StirlingPlan big = select_params(cexact(8969.1), Precision(33220), FunctionKind::LogGamma, 0.2);
  SumSchedule t = schedule_sum(cexact(8969.1), big.N, Precision(33220));
  CHECK(t.K == 21);
  CHECK(std::fabs(static_cast<double>(t.M) - 1678) <= 0.05 * 1678);
  CHECK(t.M < 0.6 * static_cast<double>(big.N));
  for (size_t i = 1; i < t.M_seq.size(); i++) CHECK(t.M_seq[i] <= t.M_seq[i - 1]);
  CHECK(t.M_seq.front() == big.N);
  CHECK(t.eps.is_finite());
}

TEST_CASE("Bernoulli saving at high precision") {
  for (long p : {4096L, 8000L, 20000L}) {
    // |z| = beta p, where select_params puts a shifted argument.
    ComplexBall z = cexact(0.2 * static_cast<double>(p) + 0.1);
    StirlingPlan pl = select_params(z, Precision(p), FunctionKind::LogGamma, 0.2);
    SumSchedule s = schedule_sum(z, pl.N, Precision(p));
    CHECK(static_cast<double>(s.M) < 0.6 * static_cast<double>(pl.N));
  }
}

TEST_CASE("fast main sum agrees with Horner") {
  std::mt19937_64 rng(42);
  BernoulliCache::global().ensure(2000);
  for (int i = 0; i < 30; i++) {
    long p = 64 + static_cast<long>(rng() % 10000);
    double mag = (0.2 + 0.2 * static_cast<double>(rng() % 1000) / 1000) * static_cast<double>(p);
    double t = static_cast<double>(rng() % 1000) / 1000 * 1.2;
    ComplexBall z = cexact(mag * std::cos(t), (i % 4 == 0) ? 0 : mag * std::sin(t));
    StirlingPlan pl = select_params(z, Precision(p), FunctionKind::LogGamma, 0.2);
    SumSchedule s = schedule_sum(z, pl.N, Precision(p));
    ComplexBall f = main_sum_fast(z, s, Precision(p + 5));
    ComplexBall h = main_sum_horner(z, pl.N, Precision(p + 5));
    CHECK_MESSAGE(overlaps(f, h), "p=" << p << " z=" << tu::show(z));
  }
}

TEST_CASE("degenerate schedule is the Horner sum") {
  ComplexBall z = cexact(30.5, 2);
  SumSchedule s = schedule_sum(z, 12, Precision(128));
  s.K = 1;
  s.M = s.N;
  s.M_seq = {s.N};
  s.eps = Mag::zero();
  CHECK(overlaps(main_sum_fast(z, s, Precision(128)), main_sum_horner(z, 12, Precision(128))));
}

TEST_CASE("scalar values") {
  const Precision p(128);
  CHECK(contains(lgamma_stirling(ComplexBall(5), p, FunctionKind::Gamma), ComplexBall(24)));
  CHECK(contains(lgamma_stirling(ComplexBall(1), p, FunctionKind::LogGamma), ComplexBall(0)));
  CHECK(contains(lgamma_stirling(ComplexBall(2), p, FunctionKind::LogGamma), ComplexBall(0)));
  CHECK(contains(lgamma_stirling(ComplexBall(-3), p, FunctionKind::RGamma), ComplexBall(0)));
  CHECK(lgamma_stirling(ComplexBall(-3), p, FunctionKind::RGamma).is_finite());
  CHECK_FALSE(lgamma_stirling(ComplexBall(-3), p, FunctionKind::Gamma).is_finite());
  CHECK_FALSE(lgamma_stirling(ComplexBall(0), p, FunctionKind::LogGamma).is_finite());

  ComplexBall g = lgamma_stirling(cexact(2, 3), p, FunctionKind::Gamma);
  CHECK(overlaps(g, tu::approx("-0.08239527266561188367387031436462597748929", "0.09177428743525931459566741729377691773838", 1e-38)));
  ComplexBall lg = lgamma_stirling(cexact(2, 3), p, FunctionKind::LogGamma);
  ComplexBall gt = eval_taylor(FunctionKind::Gamma, cexact(2, 3), p, shipped_taylor_table());
  CHECK(overlaps(exp(lg, p), gt));
  CHECK(overlaps(lgamma_stirling(cexact(10, 10), p, FunctionKind::LogGamma),
                 tu::approx("8.236131750448717843686451903586886904125", "23.94870341378203736014987510275510461321", 1e-36)));
  CHECK(overlaps(lgamma_stirling(cexact(-7.5, 3), p, FunctionKind::LogGamma),
                 tu::approx("-16.58680083079932953304821926790366176052", "-18.82517778982108240106481219657635367063", 1e-35)));
  CHECK(overlaps(lgamma_stirling(cexact(-3.2, 0.7), p, FunctionKind::RGamma),
                 tu::approx("-2.890003271083027822727253713414818962699", "-9.977427469018981510102630978986839769239", 1e-35)));
}

TEST_CASE("Gamma against MPFR on the real line") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-60, 170);
  for (int i = 0; i < 200; i++) {
    double x = u(rng);
    if (x < 0.5 && std::fabs(x - std::round(x)) < 1e-6) continue;
    for (long p : {53L, 200L}) {
      ComplexBall g = lgamma_stirling(cexact(x), Precision(p), FunctionKind::Gamma);
      CHECK(overlaps(g.re, oracle::gamma(x, p + 60)));
      CHECK(tu::rel_rad_log2(g) <= -p + 12);
    }
  }
}

TEST_CASE("digamma") {
  const Precision p(160);
  ComplexBall d = sub(digamma_stirling(ComplexBall(2), p), digamma_stirling(ComplexBall(1), p), p);
  CHECK(contains(d, ComplexBall(1)));
  CHECK(overlaps(digamma_stirling(ComplexBall(1), p).re, oracle::neg_euler_by_limit()));
  CHECK(overlaps(digamma_stirling(cexact(1, 2), p),
                 tu::approx("0.7145915153739775266568698704630848201639", "1.320807282642230228386087649852887219223", 1e-38)));
  CHECK_FALSE(digamma_stirling(ComplexBall(-2), p).is_finite());
}

TEST_CASE("log Gamma jet") {
  const Precision p(128);
  SeriesJet j = lgamma_jet_stirling(ComplexBall(5), p, 3);
  REQUIRE(j.size() == 3);
  CHECK(overlaps(j[0].re, log(RealBall(24L), p)));
  CHECK(overlaps(j[1], digamma_stirling(ComplexBall(5), p)));
  // psi'(5) / 2! with psi'(5) = pi^2/6 - 1 - 1/4 - 1/9 - 1/16
  RealBall pi2 = sqr(tu::pi(200), Precision(200));
  RealBall trig = sub(div_si(pi2, 6, Precision(200)), RealBall::from_mpq(mpq_class(205, 144), Precision(200)), Precision(200));
  CHECK(overlaps(j[2].re, mul_2exp(trig, -1)));
  // central difference of psi at four times the precision
  const Precision hp(512);
  RealBall h = RealBall::from_mpq(mpq_class(1, 1L << 40), hp);
  ComplexBall dp = sub(digamma_stirling(ComplexBall(add(RealBall(5L), h, hp)), hp),
                       digamma_stirling(ComplexBall(sub(RealBall(5L), h, hp)), hp), hp);
  RealBall fd = div(dp.re, mul_2exp(h, 1), hp);
  fd.add_error(Mag::pow2(-70));  // h^2 psi'''(5) / 6
  CHECK(overlaps(j[2].re, mul_2exp(fd, -1)));
}

TEST_CASE("containment under precision increase and recurrence") {
  std::mt19937_64 rng(44);
  int bad_c = 0, bad_r = 0;
  for (int i = 0; i < 150; i++) {
    ComplexBall z = random_z(rng, 50, 50);
    long p = (i % 3 == 0) ? 64 : (i % 3 == 1) ? 256 : 1024;
    ComplexBall g = lgamma_stirling(z, Precision(p), FunctionKind::Gamma);
    ComplexBall gh = lgamma_stirling(z, Precision(p + 64), FunctionKind::Gamma);
    bad_c += !contains(g, gh.mid_ball());
    ComplexBall g1 = lgamma_stirling(add_si(z, 1, Precision(p + 64)), Precision(p), FunctionKind::Gamma);
    bad_r += !overlaps(g1, mul(z, g, Precision(p)));
  }
  CHECK(bad_c == 0);
  CHECK(bad_r == 0);
}

TEST_CASE("wide balls are widened by the derivative bound") {
  const Precision p(128);
  ComplexBall z = cexact(3.7, 1.1);
  z.re.add_error(Mag::pow2(-30));
  z.im.add_error(Mag::pow2(-30));
  auto f = [&](const ComplexBall& w) { return lgamma_stirling(w, p, FunctionKind::Gamma); };
  ComplexBall g = propagate_midpoint(z, FunctionKind::Gamma, f);
  for (double dx : {-1.0, 1.0})
    for (double dy : {-1.0, 1.0}) {
      ComplexBall c = add(z.mid_ball(), cexact(dx * std::ldexp(1.0, -30), dy * std::ldexp(1.0, -30)), p);
      CHECK(contains(g, f(c).mid_ball()));
    }
  CHECK(tu::rel_rad_log2(g) > -40);
  CHECK(tu::rel_rad_log2(g) < -25);
}

}  // TEST_SUITE
