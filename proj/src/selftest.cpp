#include "apg/selftest.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "apg/bernoulli.hpp"
#include "apg/gamma.hpp"
#include "apg/reflection.hpp"
#include "apg/taylor.hpp"

namespace apg {

namespace {

// B_0 .. B_n from sum_{k<=m} C(m+1, k) B_k = 0.
std::vector<mpq_class> bernoulli_classical(unsigned long n) {
  std::vector<mpq_class> b(n + 1);
  b[0] = 1;
  for (unsigned long m = 1; m <= n; m++) {
    mpz_class c = 1;  // C(m+1, k)
    mpq_class s = 0;
    for (unsigned long k = 0; k < m; k++) {
      s += c * b[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    b[m] = -s / (m + 1);
    b[m].canonicalize();
  }
  return b;
}

ComplexBall G(FunctionKind fn, const ComplexBall& z, long p, AlgoKind a = AlgoKind::Auto) {
  return evaluate(fn, GammaArg::ball(z), Precision(p), a).value;
}

ComplexBall pt(double x, double y = 0) {
  return y == 0 ? ComplexBall(RealBall::from_double(x)) : ComplexBall(RealBall::from_double(x), RealBall::from_double(y));
}

}  // namespace

SelftestReport run_selftest(bool slow, const std::function<void(const std::string&)>& out) {
  SelftestReport rep;
  auto check = [&](const std::string& name, const std::function<bool(std::string&)>& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok;
    try {
      ok = f(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    (ok ? rep.passed : rep.failed)++;
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs)", dt);
    out(std::string(ok ? "PASS " : "FAIL ") + name + buf + (detail.empty() ? "" : ": " + detail));
  };

  check("bernoulli batch equals the classical recurrence", [&](std::string& d) {
    unsigned long n = slow ? 2000 : 500;
    auto ref = bernoulli_classical(n);
    bool ok = true;
    unsigned long seen = 0;
    bernoulli_batch(n, [&](unsigned long k, const mpq_class& b) {
      seen++;
      if (b != ref[k]) {
        ok = false;
        d = "mismatch at B_" + std::to_string(k);
      }
      return true;
    });
    return ok && seen == n / 2;
  });

  check("functional identities on random points", [&](std::string& d) {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> re(-50, 50), im(-50, 50);
    int count = slow ? 200 : 40;
    long p = 128;
    Precision wp(p + 16);
    for (int i = 0; i < count; i++) {
      ComplexBall z = pt(re(rng), im(rng));
      if (i % 4 == 0) z.im = RealBall();
      if (contains_integer(z) && z.is_real()) continue;
      ComplexBall g = G(FunctionKind::Gamma, z, p);
      ComplexBall g1 = G(FunctionKind::Gamma, add_si(z, 1, wp), p);
      if (!overlaps(g1, mul(z, g, wp))) { d = "recurrence"; return false; }
      ComplexBall lg = G(FunctionKind::LogGamma, z, p);
      if (!overlaps(exp(lg, wp), g)) { d = "exp(log Gamma)"; return false; }
      ComplexBall gm = G(FunctionKind::Gamma, sub(ComplexBall(1), z, wp), p);
      if (!overlaps(mul(mul(g, gm, wp), sinpi(z, wp), wp), ComplexBall(const_pi(wp)))) { d = "reflection"; return false; }
    }
    return true;
  });

  check("forced algorithms overlap", [&](std::string& d) {
    std::vector<long> precs = slow ? std::vector<long>{128, 333, 1024, 3325} : std::vector<long>{128, 333};
    std::vector<ComplexBall> zs = {pt(0.7), pt(1.3), pt(M_PI), pt(2.5, 0.5)};
    for (long p : precs)
      for (auto& z : zs) {
        std::vector<ComplexBall> vals;
        for (AlgoKind a : {AlgoKind::Stirling, AlgoKind::Taylor, AlgoKind::Spouge, AlgoKind::Hyper}) {
          try {
            vals.push_back(G(FunctionKind::Gamma, z, p, a));
          } catch (const AlgorithmUnavailable&) {
          }
        }
        for (size_t i = 0; i < vals.size(); i++)
          for (size_t j = i + 1; j < vals.size(); j++)
            if (!overlaps(vals[i], vals[j])) {
              d = "p=" + std::to_string(p) + " z=" + std::to_string(z.re_d());
              return false;
            }
      }
    return true;
  });

  check("known values", [&](std::string& d) {
    mpz_class f = 1;
    for (long n = 1; n <= 20; n++) {
      if (n > 1) f *= n - 1;
      for (AlgoKind a : {AlgoKind::Stirling, AlgoKind::Taylor})
        if (!contains(G(FunctionKind::Gamma, ComplexBall(n), 128, a).re, mpq_class(f))) {
          d = "Gamma(" + std::to_string(n) + ")";
          return false;
        }
    }
    Precision p(3400);
    RealBall half = evaluate(FunctionKind::Gamma, GammaArg::rational(mpq_class(1, 2), p), p, AlgoKind::HyperRationalBS).value.re;
    if (!overlaps(half, sqrt(const_pi(p), p))) { d = "Gamma(1/2)"; return false; }
    ComplexBall dd = sub(G(FunctionKind::Digamma, pt(2), 128), G(FunctionKind::Digamma, pt(1), 128), Precision(128));
    if (!overlaps(dd, ComplexBall(1))) { d = "psi(2) - psi(1)"; return false; }
    return true;
  });

  check("shipped Taylor table matches the recurrence", [&](std::string& d) {
    const TaylorTable& t = shipped_taylor_table();
    if (t.N == 0) { d = "no table"; return false; }
    size_t n = slow ? std::min<size_t>(t.N, 120) : std::min<size_t>(t.N, 40);
    auto ref = rgamma_coeffs_recurrence(n, Precision(t.prec_bits));
    for (size_t i = 0; i < n; i++)
      if (!overlaps(ref[i], t.coeffs[i])) {
        d = "coefficient " + std::to_string(i);
        return false;
      }
    return true;
  });

  return rep;
}

}  // namespace apg
