#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "apg/format.hpp"
#include "apg/gamma.hpp"
#include "apg/selftest.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace apg;
using tu::cexact;

namespace {

const AlgoKind kConcrete[] = {AlgoKind::Stirling, AlgoKind::Taylor, AlgoKind::Spouge, AlgoKind::Hyper};

// Standard sample grid: real and complex points of different sizes.
std::vector<ComplexBall> grid() {
  return {cexact(0.7), cexact(1.3), tu::pi(256), cexact(2.5, 0.5), cexact(-3.7), cexact(-2.25, 1.5),
          cexact(12.5), cexact(0.25, 6), cexact(-0.4, -0.9), cexact(33.3, 2)};
}

}  // namespace

TEST_SUITE("api") {

TEST_CASE("names round-trip") {
  for (FunctionKind f : {FunctionKind::Gamma, FunctionKind::RGamma, FunctionKind::LogGamma, FunctionKind::Digamma})
    CHECK(parse_function_kind(to_string(f)) == f);
  for (AlgoKind a : {AlgoKind::Auto, AlgoKind::Stirling, AlgoKind::Taylor, AlgoKind::Spouge, AlgoKind::Hyper,
                     AlgoKind::HyperRationalBS})
    CHECK(parse_algo_kind(to_string(a)) == a);
  CHECK(parse_function_kind("loggamma") == FunctionKind::LogGamma);
  CHECK(parse_function_kind("psi") == FunctionKind::Digamma);
  CHECK_THROWS_AS(parse_function_kind("beta"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algo_kind("lanczos"), std::invalid_argument);
  CHECK_THROWS_AS(Precision(1), std::invalid_argument);
}

TEST_CASE("evaluation examples") {
  for (long p : {2L, 10L, 64L, 1000L}) CHECK(contains(evaluate(FunctionKind::Gamma, ComplexBall(5), Precision(p)), ComplexBall(24)));
  EvalResult h = evaluate(FunctionKind::Gamma, GammaArg::rational(mpq_class(1, 2), Precision(3325)), Precision(3325));
  CHECK(overlaps(h.value.re, oracle::sqrt_pi(3400)));
  CHECK(tu::rel_rad_log2(h.value) <= -3325 + 12);

  const Precision p(333);
  ComplexBall z = cexact(10, 10);
  ComplexBall lg = evaluate(FunctionKind::LogGamma, z, p), g = evaluate(FunctionKind::Gamma, z, p);
  CHECK(overlaps(exp(lg, p), g));
  CHECK(overlaps(lg, tu::approx("8.236131750448717843686451903586886904125", "23.94870341378203736014987510275510461321", 1e-36)));
}

TEST_CASE("selection examples") {
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(1.3)), Precision(333)) == AlgoKind::Taylor);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(1.3, 20)), Precision(333)) == AlgoKind::Stirling);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::rational(mpq_class(13, 10), Precision(33220)), Precision(33220)) ==
        AlgoKind::HyperRationalBS);
  CHECK(select_algorithm(FunctionKind::Digamma, GammaArg::ball(cexact(1.3)), Precision(333)) == AlgoKind::Stirling);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(500)), Precision(333)) == AlgoKind::Stirling);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(1.3)), Precision(20000)) == AlgoKind::Stirling);
  // low precision: |round(z)| < 160
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(150.2)), Precision(30)) == AlgoKind::Taylor);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(170.2)), Precision(30)) == AlgoKind::Stirling);
  // complex: near the origin Taylor, far out Stirling
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(2, 3)), Precision(333)) == AlgoKind::Taylor);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(40, 3)), Precision(333)) == AlgoKind::Stirling);
  CHECK(select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(1, 4.5)), Precision(100)) == AlgoKind::Stirling);
  std::string why;
  select_algorithm(FunctionKind::Gamma, GammaArg::ball(cexact(1.3, 20)), Precision(333), &why);
  CHECK_FALSE(why.empty());

  auto [lo, hi] = taylor_window(333);
  CHECK(lo == doctest::Approx(-40 - 293.0 / 4));
  CHECK(hi == doctest::Approx(70 + 293.0 / 8));
  CHECK(rational_bs_threshold() == 6000);
}

TEST_CASE("poles and forced algorithms") {
  EvalResult r = evaluate(FunctionKind::Gamma, GammaArg::ball(ComplexBall(-3)), Precision(64));
  CHECK_FALSE(r.value.is_finite());
  CHECK_FALSE(r.note.empty());
  CHECK_FALSE(evaluate(FunctionKind::LogGamma, GammaArg::ball(ComplexBall(0)), Precision(64)).value.is_finite());
  CHECK_FALSE(evaluate(FunctionKind::Digamma, GammaArg::ball(ComplexBall(-1)), Precision(64)).value.is_finite());
  CHECK(contains(evaluate(FunctionKind::RGamma, GammaArg::ball(ComplexBall(-3)), Precision(64)).value, ComplexBall(0)));
  ComplexBall wide = tu::approx("-2", "0", 0.1);
  CHECK_FALSE(evaluate(FunctionKind::Gamma, GammaArg::ball(wide), Precision(64)).value.is_finite());

  CHECK_THROWS_AS(evaluate(FunctionKind::Digamma, GammaArg::ball(cexact(2.5)), Precision(64), AlgoKind::Taylor),
                  AlgorithmUnavailable);
  CHECK_THROWS_AS(evaluate(FunctionKind::Gamma, GammaArg::ball(cexact(2.5)), Precision(64), AlgoKind::HyperRationalBS),
                  AlgorithmUnavailable);
  CHECK_THROWS_AS(evaluate(FunctionKind::Gamma, GammaArg::ball(cexact(2.5)), Precision(9000), AlgoKind::Taylor),
                  AlgorithmUnavailable);
  EvalResult f = evaluate(FunctionKind::Gamma, GammaArg::ball(cexact(2.5)), Precision(64), AlgoKind::Spouge);
  CHECK(f.algo == AlgoKind::Spouge);
  CHECK(evaluate(FunctionKind::Gamma, GammaArg::rational(mpq_class(5, 2), Precision(64)), Precision(64),
                 AlgoKind::HyperRationalBS).algo == AlgoKind::HyperRationalBS);
}

TEST_CASE("forced algorithms overlap pairwise") {
  for (long p : {64L, 200L, 700L}) {
    for (const ComplexBall& z : grid()) {
      for (FunctionKind fn : {FunctionKind::Gamma, FunctionKind::RGamma, FunctionKind::LogGamma}) {
        std::vector<std::pair<AlgoKind, ComplexBall>> got;
        for (AlgoKind a : kConcrete) {
          try {
            got.emplace_back(a, evaluate(fn, GammaArg::ball(z), Precision(p), a).value);
          } catch (const AlgorithmUnavailable&) {
          }
        }
        CHECK(got.size() >= 3);
        for (size_t i = 0; i < got.size(); i++)
          for (size_t j = i + 1; j < got.size(); j++)
            CHECK_MESSAGE(overlaps(got[i].second, got[j].second),
                          to_string(fn) << " z=" << tu::show(z) << " p=" << p << " " << to_string(got[i].first) << " vs "
                                        << to_string(got[j].first));
      }
    }
  }
}

TEST_CASE("Auto is never much wider than the widest concrete algorithm") {
  for (long p : {64L, 200L, 700L}) {
    for (const ComplexBall& z : grid()) {
      for (FunctionKind fn : {FunctionKind::Gamma, FunctionKind::RGamma, FunctionKind::LogGamma}) {
        double widest = -INFINITY;
        for (AlgoKind a : kConcrete) {
          try {
            widest = std::max(widest, evaluate(fn, GammaArg::ball(z), Precision(p), a).value.rad_abs().log2());
          } catch (const AlgorithmUnavailable&) {
          }
        }
        double automatic = evaluate(fn, GammaArg::ball(z), Precision(p)).value.rad_abs().log2();
        CHECK_MESSAGE(automatic <= widest + 8, to_string(fn) << " z=" << tu::show(z) << " p=" << p);
      }
    }
  }
}

TEST_CASE("digamma through the API") {
  const Precision p(200);
  ComplexBall d = sub(evaluate(FunctionKind::Digamma, cexact(0.75), p), evaluate(FunctionKind::Digamma, cexact(0.25), p), p);
  CHECK(overlaps(d, ComplexBall(tu::pi(200))));
  CHECK(overlaps(evaluate(FunctionKind::Digamma, ComplexBall(1), p).re, neg(oracle::euler(300))));
}

TEST_CASE("printed enclosures parse back to containing balls") {
  for (const ComplexBall& z : grid()) {
    for (long p : {64L, 333L}) {
      ComplexBall v = evaluate(FunctionKind::Gamma, z, Precision(p));
      for (int digits : {10, static_cast<int>(std::ceil(0.30103 * static_cast<double>(p)))}) {
        ComplexBall back = parse_complex_ball(to_string(v, digits), Precision(p + 64));
        CHECK(contains(back, v));
      }
    }
  }
}

TEST_CASE("exact integers") {
  for (long n = 1; n <= 30; n++) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n - 1));
    EvalResult r = evaluate(FunctionKind::Gamma, GammaArg::ball(ComplexBall(n)), Precision(64));
    CHECK(contains(r.value.re, f));
  }
}

TEST_CASE("fast selftest") {
  std::vector<std::string> lines;
  SelftestReport rep = run_selftest(false, [&](const std::string& l) { lines.push_back(l); });
  CHECK(rep.failed == 0);
  CHECK(rep.passed >= 5);
  CHECK(lines.size() >= static_cast<size_t>(rep.passed));
}

}  // TEST_SUITE
