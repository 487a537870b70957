#include "apg/gamma.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "apg/hypergeom.hpp"
#include "apg/spouge.hpp"
#include "apg/stirling.hpp"
#include "apg/taylor.hpp"

namespace apg {

const char* to_string(FunctionKind f) {
  switch (f) {
    case FunctionKind::Gamma: return "gamma";
    case FunctionKind::RGamma: return "rgamma";
    case FunctionKind::LogGamma: return "lgamma";
    case FunctionKind::Digamma: return "digamma";
  }
  return "?";
}

const char* to_string(AlgoKind a) {
  switch (a) {
    case AlgoKind::Auto: return "auto";
    case AlgoKind::Stirling: return "stirling";
    case AlgoKind::Taylor: return "taylor";
    case AlgoKind::Spouge: return "spouge";
    case AlgoKind::Hyper: return "hyper";
    case AlgoKind::HyperRationalBS: return "hyper-bs";
  }
  return "?";
}

FunctionKind parse_function_kind(const std::string& s) {
  if (s == "gamma") return FunctionKind::Gamma;
  if (s == "rgamma") return FunctionKind::RGamma;
  if (s == "lgamma" || s == "loggamma") return FunctionKind::LogGamma;
  if (s == "digamma" || s == "psi") return FunctionKind::Digamma;
  throw std::invalid_argument("unknown function: " + s);
}

AlgoKind parse_algo_kind(const std::string& s) {
  for (AlgoKind a : {AlgoKind::Auto, AlgoKind::Stirling, AlgoKind::Taylor, AlgoKind::Spouge, AlgoKind::Hyper,
                     AlgoKind::HyperRationalBS})
    if (s == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm: " + s);
}

namespace {

std::atomic<bool> log_on{std::getenv("APG_LOG") && std::string(std::getenv("APG_LOG")) == "1"};

double env_double(const char* name, double dflt) {
  const char* s = std::getenv(name);
  if (!s) return dflt;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  return end != s && v > 0 ? v : dflt;
}

bool small_rational(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 64 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 64;
}

// Gamma(n) for a small positive integer n, exactly.
std::optional<ComplexBall> integer_shortcut(FunctionKind fn, const ComplexBall& z, Precision p) {
  if (!z.is_real() || !z.re.is_exact() || !mpfr_integer_p(z.re.mid())) return std::nullopt;
  if (mpfr_cmp_ui(z.re.mid(), 1) < 0 || mpfr_cmp_ui(z.re.mid(), 2000) > 0) return std::nullopt;
  unsigned long n = mpfr_get_ui(z.re.mid(), MPFR_RNDN);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n - 1);
  RealBall g = RealBall::from_mpz(f);
  switch (fn) {
    case FunctionKind::Gamma: return ComplexBall(round_to(g, p));
    case FunctionKind::RGamma: return ComplexBall(inv(g, p));
    case FunctionKind::LogGamma:
      if (n <= 2) return ComplexBall(0);
      return ComplexBall(log(g, p));
    case FunctionKind::Digamma: return std::nullopt;
  }
  return std::nullopt;
}

ComplexBall run(AlgoKind algo, FunctionKind fn, const GammaArg& arg, Precision p) {
  const ComplexBall& z = arg.z;
  switch (algo) {
    case AlgoKind::Stirling:
      return lgamma_stirling(z, p, fn);
    case AlgoKind::Taylor:
      if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("taylor: digamma is not supported");
      return propagate_midpoint(z, fn, [&](const ComplexBall& x) {
        return eval_taylor(fn, x, p, shipped_taylor_table());
      });
    case AlgoKind::Spouge:
      if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("spouge: digamma is not supported");
      return propagate_midpoint(z, fn, [&](const ComplexBall& x) { return gamma_spouge(fn, x, p); });
    case AlgoKind::Hyper:
      if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("hyper: digamma is not supported");
      return propagate_midpoint(z, fn, [&](const ComplexBall& x) { return gamma_hyper_fn(fn, x, p); });
    case AlgoKind::HyperRationalBS:
      if (!arg.exact) throw AlgorithmUnavailable("hyper-bs: needs an exact rational argument");
      return gamma_rational_fn(fn, *arg.exact, p);
    case AlgoKind::Auto:
      break;
  }
  throw std::logic_error("run: unresolved algorithm");
}

}  // namespace

GammaArg GammaArg::rational(const mpq_class& q, Precision p) {
  mpq_class c = q;
  c.canonicalize();
  long bits = std::max<long>(p.bits + 64, static_cast<long>(mpz_sizeinbase(c.get_den_mpz_t(), 2)) + 64);
  return GammaArg{ComplexBall(RealBall::from_mpq(c, Precision(bits))), c};
}

std::pair<double, double> taylor_window(long p) {
  double s = env_double("APG_TAYLOR_WINDOW", 1.0);
  double pd = static_cast<double>(p);
  return {s * (-40.0 - (pd - 40.0) / 4.0), s * (70.0 + (pd - 40.0) / 8.0)};
}

long rational_bs_threshold() {
  return static_cast<long>(env_double("APG_RATIONAL_BS_BITS", 6000.0));
}

void set_selection_logging(bool on) { log_on = on; }

AlgoKind select_algorithm(FunctionKind fn, const GammaArg& arg, Precision p, std::string* reason) {
  auto pick = [&](AlgoKind a, const std::string& why) {
    if (reason) *reason = why;
    return a;
  };
  if (fn == FunctionKind::Digamma) return pick(AlgoKind::Stirling, "digamma always uses the Stirling series");
  if (arg.exact && p.bits >= rational_bs_threshold() && small_rational(*arg.exact))
    return pick(AlgoKind::HyperRationalBS, "small exact rational at high precision");

  const ComplexBall& z = arg.z;
  if (!z.is_finite()) return pick(AlgoKind::Stirling, "non-finite argument");
  const TaylorTable& table = shipped_taylor_table();
  long pb = p.bits;
  bool want_taylor;
  if (z.is_real()) {
    double r = std::floor(z.re_d() + 0.5);
    if (pb < 40 || Mag::pow2(-16) < z.re.rad()) {
      want_taylor = std::fabs(r) < 160;
    } else {
      auto [lo, hi] = taylor_window(pb);
      want_taylor = lo < r && r < hi;
    }
    if (!want_taylor) return pick(AlgoKind::Stirling, "real argument outside the Taylor window");
  } else {
    double x = std::fabs(z.re_d()), y = std::fabs(z.im_d());
    bool capped = (pb < 128 && y > 4) || (pb < 256 && y > 5) || (pb < 512 && y > 8) || (pb < 1024 && y > 9) ||
                  y > 10;
    if (capped) return pick(AlgoKind::Stirling, "imaginary part above the Taylor cap");
    if (!(x * (1.0 + 0.75 * y) < 8.0 + 0.15 * static_cast<double>(pb)))
      return pick(AlgoKind::Stirling, "complex argument too far from the origin for Taylor");
  }
  if (!taylor_supports(z, p, table)) return pick(AlgoKind::Stirling, "Taylor table cannot reach the precision");
  return pick(AlgoKind::Taylor, "inside the Taylor window");
}

EvalResult evaluate(FunctionKind fn, const GammaArg& arg, Precision p, AlgoKind algo) {
  EvalResult res;
  const ComplexBall& z = arg.z;
  if (!z.is_finite()) {
    res.value = ComplexBall::indeterminate();
    res.algo = algo;
    res.note = "argument is not finite";
    return res;
  }
  if (fn != FunctionKind::RGamma && contains_nonpositive_integer(z)) {
    res.value = ComplexBall::indeterminate();
    res.algo = algo;
    res.note = "argument contains a pole";
    return res;
  }
  if (algo != AlgoKind::Auto) {
    res.algo = algo;
    res.value = run(algo, fn, arg, p);
    return res;
  }

  if (auto v = integer_shortcut(fn, z, p)) {
    res.value = *v;
    res.algo = AlgoKind::Auto;
    res.note = "exact integer argument";
    return res;
  }
  res.algo = select_algorithm(fn, arg, p, &res.note);
  try {
    res.value = run(res.algo, fn, arg, p);
  } catch (const AlgorithmUnavailable& e) {
    res.note += std::string("; ") + e.what() + "; falling back to stirling";
    res.algo = AlgoKind::Stirling;
    res.value = run(res.algo, fn, arg, p);
  }
  if (log_on) std::fprintf(stderr, "apg: %s auto -> %s (%s)\n", to_string(fn), to_string(res.algo), res.note.c_str());
  return res;
}

}  // namespace apg
