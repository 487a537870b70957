#include "bench_tables.hpp"

#include <mpfr.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "apg/bernoulli.hpp"
#include "apg/format.hpp"
#include "apg/gamma.hpp"
#include "apg/hypergeom.hpp"
#include "apg/spouge.hpp"
#include "apg/stirling.hpp"
#include "apg/taylor.hpp"

namespace apgtool {

using namespace apg;

namespace {

struct Table {
  std::vector<std::string> head;
  std::vector<std::vector<std::string>> rows;

  void print(bool csv, std::ostream& out) const {
    if (csv) {
      emit_csv(head, out);
      for (const auto& r : rows) emit_csv(r, out);
      return;
    }
    std::vector<size_t> w(head.size());
    for (size_t i = 0; i < head.size(); i++) w[i] = head[i].size();
    for (const auto& r : rows)
      for (size_t i = 0; i < r.size() && i < w.size(); i++) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (size_t i = 0; i < r.size(); i++) {
        out << r[i];
        if (i + 1 < r.size()) out << std::string(w[i] - r[i].size() + 2, ' ');
      }
      out << "\n";
    };
    line(head);
    for (const auto& r : rows) line(r);
  }

  static void emit_csv(const std::vector<std::string>& r, std::ostream& out) {
    for (size_t i = 0; i < r.size(); i++) out << r[i] << (i + 1 < r.size() ? "," : "\n");
  }
};

double seconds_once(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Mean over enough repetitions to fill ~50 ms.
double seconds_avg(const std::function<void()>& f) {
  double total = 0;
  long reps = 0;
  while (total < 0.05 && reps < 100000) {
    total += seconds_once(f);
    reps++;
  }
  return total / static_cast<double>(reps);
}

std::string sci(mpfr_srcptr x, int digits = 2) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits - 1, x);
  std::string r(s);
  mpfr_free_str(s);
  return r;
}

std::string sci(const Mag& m, int digits = 2) {
  if (m.is_inf()) return "inf";
  mpfr_t t;
  mpfr_init2(t, 64);
  m.to_mpfr(t);
  std::string r = sci(t, digits);
  mpfr_clear(t);
  return r;
}

std::string fmt(double v, const char* f = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

long bits_for_digits(long d) { return precision_from_digits(d).bits; }

}  // namespace

void bench_stirling_sum(const std::vector<long>& digits, bool csv, std::ostream& out) {
  Table t{{"d", "z", "N", "horner_s", "bernoulli_N_s", "K", "M", "fast_s", "bernoulli_M_s", "M/N"}, {}};
  for (long d : digits) {
    long p = bits_for_digits(d);
    double zd = std::floor(0.8969 * static_cast<double>(d)) + 0.1;
    ComplexBall z(RealBall::from_double(zd));
    StirlingPlan plan = select_params(z, Precision(p), FunctionKind::LogGamma, stirling_beta());
    long N = plan.N;
    SumSchedule s = schedule_sum(z, N, Precision(p));
    unsigned long nmax = 2 * static_cast<unsigned long>(N - 1), mmax = 2 * static_cast<unsigned long>(s.M - 1);
    auto noop = [](unsigned long, const mpq_class&) { return true; };
    double tbn = seconds_once([&] { bernoulli_batch(nmax, noop); });
    double tbm = seconds_once([&] { bernoulli_batch(mmax, noop); });
    BernoulliCache::global().ensure(static_cast<size_t>(N));
    double th = seconds_avg([&] { main_sum_horner(z, N, Precision(p + 5)); });
    double tf = seconds_avg([&] { main_sum_fast(z, s, Precision(p + 5)); });
    t.rows.push_back({std::to_string(d), fmt(zd, "%.1f"), std::to_string(N), fmt(th), fmt(tbn), std::to_string(s.K),
                      std::to_string(s.M), fmt(tf), fmt(tbm), fmt(static_cast<double>(s.M) / N, "%.3f")});
  }
  t.print(csv, out);
}

void bench_spouge_error(const std::vector<long>& rs, bool csv, std::ostream& out) {
  Table t{{"r", "error_pi", "bound_pi", "error_1e6+pi", "bound_1e6+pi", "bits_per_r"}, {}};
  for (long r : rs) {
    double rd = static_cast<double>(r);
    long prec = static_cast<long>(std::ceil(4.5 * rd)) + 64;
    std::vector<std::string> row{std::to_string(r)};
    double bits_pi = 0;
    for (int which = 0; which < 2; which++) {
      Precision hp(prec + 64);
      RealBall pi = const_pi(hp);
      ComplexBall z(which == 0 ? pi : add_si(pi, 1000000, hp));
      ComplexBall s = spouge_eval(z.mid_ball(), rd, Precision(prec));
      ComplexBall ref = lgamma_stirling(z.mid_ball(), Precision(prec + 32), FunctionKind::Gamma);
      Precision lp(64);
      RealBall rel = abs(div(sub(s.re.mid_ball(), ref.re, Precision(prec + 32)), ref.re, lp));
      row.push_back(sci(rel.mid()));
      row.push_back(sci(spouge_error_bound(rd, z)));
      if (which == 0) {
        Mag m = Mag::from_mpfr(rel.mid());
        bits_pi = m.is_zero() ? 0 : -m.log2() / rd;
      }
    }
    row.push_back(fmt(bits_pi, "%.3f"));
    t.rows.push_back(row);
  }
  t.print(csv, out);
}

void bench_taylor_coeffs(const std::vector<long>& ns, bool csv, std::ostream& out) {
  const TaylorTable& tab = shipped_taylor_table();
  Table t{{"n", "a_n", "bound_optimal_R", "bound_R=n/8"}, {}};
  for (long n : ns) {
    if (n < 1) continue;
    size_t i = static_cast<size_t>(n - 1);
    std::string a = i < tab.N ? sci(tab.coeffs[i].mid(), 5) : "-";
    unsigned long un = static_cast<unsigned long>(n);
    t.rows.push_back({std::to_string(n), a, sci(coeff_bound_optimal(un), 3), sci(coeff_bound(un), 3)});
  }
  t.print(csv, out);
}

void bench_timings(const std::vector<long>& digits, bool csv, std::ostream& out) {
  Table t{{"d", "spouge_first", "spouge_repeated", "stirling_first", "stirling_repeated", "taylor", "hyper",
           "hyper_bs_13/10"},
          {}};
  mpq_class q(13, 10);
  for (long d : digits) {
    Precision p(bits_for_digits(d));
    GammaArg arg = GammaArg::rational(q, p);
    auto run = [&](AlgoKind a) { evaluate(FunctionKind::Gamma, arg, p, a); };
    auto timed = [&](AlgoKind a, bool repeat) -> std::string {
      try {
        return fmt(repeat ? seconds_avg([&] { run(a); }) : seconds_once([&] { run(a); }));
      } catch (const AlgorithmUnavailable&) {
        return "-";
      }
    };
    std::string sf = timed(AlgoKind::Spouge, false), sr = timed(AlgoKind::Spouge, true);
    std::string tf = timed(AlgoKind::Stirling, false), tr = timed(AlgoKind::Stirling, true);
    t.rows.push_back({std::to_string(d), sf, sr, tf, tr, timed(AlgoKind::Taylor, true), timed(AlgoKind::Hyper, true),
                      timed(AlgoKind::HyperRationalBS, true)});
  }
  t.print(csv, out);
}

void bench_hyper_alpha(const std::vector<long>& digits, bool csv, std::ostream& out) {
  Table t{{"d", "alpha", "N", "K", "L", "seconds"}, {}};
  ComplexBall z(RealBall::from_mpq(mpq_class(3, 10), Precision(256)));
  for (long d : digits) {
    Precision p(bits_for_digits(d));
    for (double a : {0.5, 0.51, 0.52, 0.53, 0.54, kHyperAlphaOpt}) {
      HyperPlan plan = plan_hyper(z, p, a);
      double s = seconds_avg([&] { gamma_hyper(z, p, plan); });
      t.rows.push_back({std::to_string(d), fmt(a, "%.6g"), std::to_string(plan.N_split), std::to_string(plan.K),
                        std::to_string(plan.L), fmt(s)});
    }
  }
  t.print(csv, out);
}

}  // namespace apgtool
