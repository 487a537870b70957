// Acceptance criteria AC1..AC11, one PASS/FAIL line each.
//
// Exit status is 0 when the set of failing gating criteria equals the set
// given with --expect-red (empty by default). AC11 is informative and never
// gates.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "apg/bernoulli.hpp"
#include "apg/gamma.hpp"
#include "apg/reflection.hpp"
#include "apg/rising.hpp"
#include "apg/spouge.hpp"
#include "apg/stirling.hpp"
#include "apg/taylor.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace apg;
using tu::cexact;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

bool near_rel(double got, double want, double tol) { return std::fabs(got / want - 1) <= tol; }

ComplexBall eval(FunctionKind fn, const ComplexBall& z, long p, AlgoKind a = AlgoKind::Auto) {
  return evaluate(fn, GammaArg::ball(z), Precision(p), a).value;
}

// Random point with Re in [-50, 50], |Im| <= 50, about 20% real, away from poles.
ComplexBall ac1_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-50, 50);
  for (;;) {
    double x = u(rng), y = (rng() % 5 == 0) ? 0.0 : u(rng);
    if (std::fabs(y) < 1e-3 && x < 0.5 && std::fabs(x - std::round(x)) < 1e-3) continue;
    return cexact(x, y);
  }
}

void ac1(Outcome& o, bool slow) {
  std::mt19937_64 rng(1001);
  const int count = slow ? 3000 : 1000;
  int checked = 0;
  for (int i = 0; i < count; i++) {
    ComplexBall z = ac1_point(rng);
    for (long p : {64L, 256L, 1024L}) {
      const Precision pp(p), hp(p + 64);
      ComplexBall g = eval(FunctionKind::Gamma, z, p);
      ComplexBall g1 = eval(FunctionKind::Gamma, add_si(z, 1, hp), p);
      ComplexBall gr = eval(FunctionKind::Gamma, sub(ComplexBall(1), z, hp), p);
      ComplexBall lg = eval(FunctionKind::LogGamma, z, p);
      std::string at = "z=" + tu::show(z) + " p=" + std::to_string(p);
      o.require(overlaps(g1, mul(z, g, pp)), "recurrence " + at);
      o.require(overlaps(mul(mul(g, gr, pp), sinpi(z, pp), pp), ComplexBall(const_pi(pp))), "reflection " + at);
      o.require(overlaps(exp(lg, pp), g), "exp(log Gamma) " + at);
      o.require(tu::rel_rad_log2(g) <= -p + 12, "radius " + at);
      checked++;
    }
  }
  o.detail << checked << " (z, p) pairs";
}

void ac2(Outcome& o, bool) {
  const std::vector<ComplexBall> zs = {cexact(0.7), cexact(1.3), ComplexBall(const_pi(Precision(3400))).mid_ball(),
                                       cexact(2.5, 0.5)};
  int pairs = 0;
  for (long p : {128L, 333L, 1024L, 3325L}) {
    for (const ComplexBall& z : zs) {
      std::vector<std::pair<AlgoKind, ComplexBall>> got;
      for (AlgoKind a : {AlgoKind::Stirling, AlgoKind::Taylor, AlgoKind::Spouge, AlgoKind::Hyper}) {
        try {
          got.emplace_back(a, eval(FunctionKind::Gamma, z, p, a));
        } catch (const AlgorithmUnavailable&) {
          o.require(a == AlgoKind::Taylor, std::string(to_string(a)) + " unavailable");
        }
      }
      std::string at = " z=" + tu::show(z) + " p=" + std::to_string(p);
      for (auto& [a, v] : got) o.require(tu::rel_rad_log2(v) <= -p + 12, std::string("radius ") + to_string(a) + at);
      for (size_t i = 0; i < got.size(); i++)
        for (size_t j = i + 1; j < got.size(); j++) {
          o.require(overlaps(got[i].second, got[j].second),
                    std::string(to_string(got[i].first)) + " vs " + to_string(got[j].first) + at);
          pairs++;
        }
    }
  }
  o.detail << pairs << " overlapping pairs";
}

void ac3(Outcome& o, bool slow) {
  const unsigned long n = slow ? 2000 : 500;
  auto ref = oracle::bernoulli(n);
  unsigned long seen = 0;
  bernoulli_batch(n, [&](unsigned long k, const mpq_class& b) {
    o.require(b == ref[k], "B_" + std::to_string(k));
    seen++;
    return true;
  });
  o.require(seen == n / 2, "stream length");
  o.detail << "B_2..B_" << n << " exact";
}

void ac4(Outcome& o, bool) {
  std::mt19937_64 rng(1004);
  int agree = 0;
  for (int i = 0; i < 100; i++) {
    long p = static_cast<long>(std::exp(std::log(64.0) + (std::log(30000.0) - std::log(64.0)) * static_cast<double>(rng() % 10000) / 9999));
    double mag = (0.2 + 0.2 * static_cast<double>(rng() % 1000) / 999) * static_cast<double>(p);
    double t = (rng() % 5 == 0) ? 0.0 : static_cast<double>(rng() % 1000) / 999 * 1.4 - 0.7;
    ComplexBall z = cexact(mag * std::cos(t), t == 0 ? 0 : mag * std::sin(t));
    StirlingPlan plan = select_params(z, Precision(p), FunctionKind::LogGamma, stirling_beta());
    SumSchedule s = schedule_sum(z, plan.N, Precision(p));
    ComplexBall f = main_sum_fast(z, s, Precision(p + 5));
    ComplexBall h = main_sum_horner(z, plan.N, Precision(p + 5));
    bool ok = overlaps(f, h);
    o.require(ok, "p=" + std::to_string(p) + " z=" + tu::show(z));
    agree += ok;
  }
  ComplexBall z = cexact(8969.1);
  StirlingPlan plan = select_params(z, Precision(33220), FunctionKind::LogGamma, stirling_beta());
  SumSchedule s = schedule_sum(z, plan.N, Precision(33220));
  o.require(s.K == 21, "K at p=33220");
  o.require(std::fabs(static_cast<double>(s.M) - 1678) <= 0.05 * 1678, "M at p=33220");
  o.detail << agree << "/100 agree; p=33220: N=" << plan.N << " K=" << s.K << " M=" << s.M;
}

void ac5(Outcome& o, bool) {
  ComplexBall z = cexact(89.1);
  StirlingPlan plan = select_params(z, Precision(333), FunctionKind::Gamma, stirling_beta());
  SumSchedule s = schedule_sum(z, plan.N, Precision(333));
  o.require(plan.r == 0, "r");
  o.require(plan.N >= 38 && plan.N <= 44, "N");
  o.require(s.M >= 27 && s.M <= 33, "M");
  o.detail << "N=" << plan.N << " M=" << s.M << " K=" << s.K;
}

void ac6(Outcome& o, bool) {
  const long prec = 4 * 10 + 128;
  ComplexBall pi = ComplexBall(const_pi(Precision(prec + 64))).mid_ball();
  ComplexBall s = spouge_eval(pi, 10, Precision(prec));
  ComplexBall ref = lgamma_stirling(pi, Precision(256), FunctionKind::Gamma);
  RealBall d = div(sub(s.re.mid_ball(), ref.re.mid_ball(), Precision(512)), ref.re.mid_ball(), Precision(64));
  double err = std::fabs(d.mid_d());
  double b10 = spouge_error_bound(10, pi).to_double();
  double b100 = spouge_error_bound(100, pi).to_double();
  o.require(err >= 5.0e-14 / 3 && err <= 5.0e-14 * 3, "measured error at r=10");
  o.require(near_rel(b10, 1.1e-9, 0.01), "bound at r=10 within 1% of 1.1e-9");
  o.require(near_rel(b100, 5.9e-82, 0.01), "bound at r=100 within 1% of 5.9e-82");
  char buf[160];
  std::snprintf(buf, sizeof buf, "error(r=10)=%.3g bound(r=10)=%.5g (%.2f%% off) bound(r=100)=%.4g", err, b10,
                100 * std::fabs(b10 / 1.1e-9 - 1), b100);
  o.detail << buf;
}

void ac7(Outcome& o, bool) {
  const TaylorTable& t = shipped_taylor_table();
  o.require(t.N >= 100, "table length");
  if (t.N < 100) return;
  o.require(contains(tu::approx("-2.1524e-4", 0.5e-8), t.coeffs[9]), "a_10 digits");
  o.require(contains(tu::approx("6.6158e-106", 0.5e-110), t.coeffs[99]), "a_100 digits");
  double opt10 = coeff_bound_optimal(10).to_double(), n8 = coeff_bound(100).to_double();
  o.require(near_rel(opt10, 8.13e-2, 0.01), "optimal-R bound at n=10");
  o.require(near_rel(n8, 1.25e-87, 0.01), "R=n/8 bound at n=100");
  char buf[160];
  std::snprintf(buf, sizeof buf, "a_10=%.5g a_100=%.5g bound_opt(10)=%.4g bound_n/8(100)=%.4g", t.coeffs[9].mid_d(),
                t.coeffs[99].mid_d(), opt10, n8);
  o.detail << buf;
}

void ac8(Outcome& o, bool) {
  std::mt19937_64 rng(1008);
  std::uniform_real_distribution<double> ur(0, 30), ut(-M_PI, M_PI);
  const Precision p(128);
  RealBall half_pi = mul_2exp(const_pi(p), -1);
  for (int i = 0; i < 1000; i++) {
    double R = ur(rng), th = ut(rng);
    ComplexBall z = cexact(R * std::cos(th), R * std::sin(th));
    ComplexBall rg = eval(FunctionKind::RGamma, z, p.bits);
    RealBall Rb = abs(z, p);
    RealBall rhs = Rb.is_exact_zero()
                       ? RealBall(1L)
                       : exp(add(mul(Rb, half_pi, p), mul(add(RealBall::from_double(0.5), Rb, p), log(Rb, p), p), p), p);
    o.require(rg.is_finite() && mag_abs_upper(abs(rg, p)) <= mag_abs_lower(rhs), "z=" + tu::show(z));
  }
  o.detail << "1000 points, |z| <= 30";
}

void ac9(Outcome& o, bool) {
  for (long n = 1; n <= 20; n++) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n - 1));
    for (long p : {64L, 256L})
      o.require(contains(eval(FunctionKind::Gamma, ComplexBall(n), p).re, f), "Gamma(" + std::to_string(n) + ")");
  }
  const long p = precision_from_digits(1000).bits + 8;
  EvalResult h = evaluate(FunctionKind::Gamma, GammaArg::rational(mpq_class(1, 2), Precision(p)), Precision(p),
                          AlgoKind::HyperRationalBS);
  o.require(overlaps(h.value.re, oracle::sqrt_pi(p + 64)), "Gamma(1/2) = sqrt(pi)");
  o.require(tu::rel_rad_log2(h.value) <= -1000 * std::log2(10.0), "Gamma(1/2) to 1000 digits");
  const Precision q(256);
  ComplexBall d1 = sub(eval(FunctionKind::Digamma, ComplexBall(2), 256), eval(FunctionKind::Digamma, ComplexBall(1), 256), q);
  o.require(contains(d1, ComplexBall(1)), "psi(2) - psi(1)");
  GammaArg a34 = GammaArg::rational(mpq_class(3, 4), q), a14 = GammaArg::rational(mpq_class(1, 4), q);
  ComplexBall d2 = sub(evaluate(FunctionKind::Digamma, a34, q).value, evaluate(FunctionKind::Digamma, a14, q).value, q);
  o.require(overlaps(d2, ComplexBall(oracle::pi(300))), "psi(3/4) - psi(1/4)");
  o.detail << "Gamma(1/2) at " << p << " bits, relative radius 2^" << tu::rel_rad_log2(h.value);
}

void ac10(Outcome& o, bool) {
  const Precision p(128), hp(192);
  double prev = NAN, worst = 0;
  int pts = 0;
  for (int i = 0; i <= 400; i++) {
    double x = 10.0 - 0.05 * i;
    ComplexBall z = cexact(x, 3);
    ComplexBall l = eval(FunctionKind::LogGamma, z, p.bits, AlgoKind::Stirling);
    if (!std::isnan(prev)) worst = std::max(worst, std::fabs(l.im_d() - prev));
    prev = l.im_d();
    // log Gamma(z) = log Gamma(z + 20) - sum_{k<20} log(z + k)
    ComplexBall shifted = lgamma_stirling(add_si(z, 20, hp), hp, FunctionKind::LogGamma);
    ComplexBall rec = sub(shifted, log_rising(z, 20, hp), hp);
    o.require(overlaps(l, rec), "recombination at x=" + std::to_string(x));
    pts++;
  }
  o.require(worst < M_PI / 4, "continuity");
  ComplexBall w = cexact(10, 10);
  long k = branch_k(w, eval(FunctionKind::Gamma, w, p.bits));
  o.require(k == 4, "branch_k(10+10i)");
  o.detail << pts << " points, largest jump " << worst << ", k(10+10i)=" << k;
}

void ac11(Outcome& o, bool) {
  const Precision p(33220);
  ComplexBall z = cexact(8969.1);
  StirlingPlan plan = select_params(z, p, FunctionKind::LogGamma, stirling_beta());
  SumSchedule s = schedule_sum(z, plan.N, p);
  BernoulliCache::global().ensure(static_cast<size_t>(plan.N));
  auto time = [](const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  double th = time([&] { main_sum_horner(z, plan.N, p + 5); });
  double tf = time([&] { main_sum_fast(z, s, p + 5); });
  double ratio = static_cast<double>(s.M) / static_cast<double>(plan.N);
  o.require(tf < th, "fast sum slower than Horner");
  o.require(ratio <= 0.6, "M/N");
  char buf[160];
  std::snprintf(buf, sizeof buf, "horner %.3fs fast %.3fs, M/N = %d/%ld = %.3f", th, tf, static_cast<int>(s.M), plan.N, ratio);
  o.detail << buf;
}

struct Criterion {
  int id;
  double budget_s;
  void (*run)(Outcome&, bool);
  bool gating;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool slow = false;
  std::vector<int> expect_red, only;
  app.add_flag("--slow", slow, "extended ranges");
  app.add_option("--expect-red", expect_red, "criteria known to fail");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const Criterion all[] = {{1, 120, ac1, true},  {2, 60, ac2, true}, {3, 10, ac3, true},  {4, 180, ac4, true},
                           {5, 1, ac5, true},    {6, 5, ac6, true},  {7, 5, ac7, true},   {8, 30, ac8, true},
                           {9, 10, ac9, true},   {10, 10, ac10, true}, {11, 1e9, ac11, false}};
  std::set<int> red, expected;
  for (const Criterion& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    if (std::find(expect_red.begin(), expect_red.end(), c.id) != expect_red.end()) expected.insert(c.id);
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o, slow);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.gating && !slow && secs > c.budget_s) o.require(false, "runtime over budget");
    std::printf("AC%-2d %s  %.2fs  %s%s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str(),
                c.gating ? "" : "  (informative)");
    std::fflush(stdout);
    if (!o.pass && c.gating) red.insert(c.id);
  }
  std::printf("failing: %zu gating criteria", red.size());
  for (int id : red) std::printf(" AC%d", id);
  std::printf("\n");
  if (red != expected) {
    std::printf("expected failing set differs from the observed one\n");
    return 1;
  }
  return 0;
}
