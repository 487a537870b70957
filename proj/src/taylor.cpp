#include "apg/taylor.hpp"

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "apg/bernoulli.hpp"
#include "apg/reflection.hpp"
#include "apg/rising.hpp"
#include "apg/stirling.hpp"

namespace apg {

namespace detail {
extern const char* const kTaylorTableText;
}

namespace {

constexpr const char* kMagic = "apg-rgamma-taylor";
constexpr size_t kCheckCount = 32;
constexpr long kMaxShift = 100000;

// zeta(k) for k >= 2: even k from Bernoulli numbers, odd k from MPFR.
RealBall zeta_ball(unsigned long k, Precision prec) {
  Precision wp = prec + 16;
  if (k % 2 == 0) {
    BernoulliCache::global().ensure(k / 2 + 1);
    mpq_class b = abs(BernoulliCache::global().get(k / 2));
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), k);
    RealBall tp = pow_ui(mul_2exp(const_pi(wp), 1), k, wp);
    return round_to(mul_2exp(div_z(mul_q(tp, b, wp), fac, wp), -1), prec);
  }
  RealBall r = RealBall::with_prec(wp);
  mpfr_zeta_ui(r.mid_mut(), k, MPFR_RNDN);
  r.set_rad(Mag::pow2(mpfr_get_exp(r.mid()) - wp.bits));
  return round_to(r, prec);
}

long inflate_for_imag(double y) {
  y = std::fabs(y);
  if (y == 0.0) return 0;
  double a = std::ceil(M_PI * y / (2.0 * M_LN2));
  double b = std::ceil(std::lgamma(y + 2.0) / M_LN2);
  return static_cast<long>(a + std::max(b, 0.0));
}

}  // namespace

std::vector<RealBall> rgamma_coeffs_recurrence(size_t n, Precision prec) {
  Precision wp = prec + 32;
  std::vector<RealBall> a(n + 1);
  std::vector<RealBall> zeta(n + 1);
  for (size_t k = 2; k < n; k++) zeta[k] = zeta_ball(k, wp);
  RealBall gamma = const_euler(wp);
  if (n >= 1) a[1] = RealBall(1);
  for (size_t k = 2; k <= n; k++) {
    RealBall s = mul(gamma, a[k - 1], wp);
    for (size_t j = 2; j < k; j++) {
      RealBall t = mul(zeta[j], a[k - j], wp);
      s = (j % 2 == 1) ? add(s, t, wp) : sub(s, t, wp);
    }
    a[k] = div_si(s, static_cast<long>(k - 1), wp);
  }
  std::vector<RealBall> out;
  for (size_t k = 1; k <= n; k++) out.push_back(round_to(a[k], prec));
  return out;
}

TaylorTable build_taylor_table(size_t N, Precision prec) {
  if (N < 2) throw std::invalid_argument("build_taylor_table: N must be at least 2");
  // The exponential loses about -log2 |b_N| bits to cancellation.
  long extra = 64 + static_cast<long>(std::max(0.0, -coeff_bound_log2(N + 1, (N + 1) / 8.0)));
  TaylorTable t;
  t.N = N;
  t.prec_bits = prec.bits;
  for (int attempt = 0; attempt < 4; attempt++, extra *= 2) {
    Precision wp = prec + extra;
    SeriesJet lg = lgamma_jet_stirling(ComplexBall(1), wp, N);
    SeriesJet b = jet_exp(jet_neg(lg), wp);
    t.coeffs.clear();
    bool tight = true;
    for (size_t n = 0; n < N; n++) {
      RealBall c = round_to(b[n].re, prec);
      Mag lim = mag_abs_lower(c).mul_2exp(-prec.bits + 2);
      if (!(c.rad() <= lim)) tight = false;
      t.coeffs.push_back(std::move(c));
    }
    if (tight) break;
  }
  std::vector<RealBall> ref = rgamma_coeffs_recurrence(std::min(N, kCheckCount), prec);
  for (size_t n = 0; n < ref.size(); n++) {
    if (!overlaps(ref[n], t.coeffs[n]))
      throw std::logic_error("build_taylor_table: coefficient " + std::to_string(n) +
                             " disagrees with the zeta recurrence");
  }
  return t;
}

std::string serialize_taylor_table(const TaylorTable& t) {
  std::ostringstream os;
  os << kMagic << " 1 " << t.N << " " << t.prec_bits << "\n";
  for (const RealBall& c : t.coeffs) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", c.mid());
    long e = c.rad().is_zero() ? -(1L << 40) : static_cast<long>(std::ceil(c.rad().log2() + 1e-9));
    os << s << " " << e << "\n";
    mpfr_free_str(s);
  }
  return os.str();
}

TaylorTable parse_taylor_table(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string magic;
  int version = 0;
  TaylorTable t;
  if (!(is >> magic >> version >> t.N >> t.prec_bits) || magic != kMagic || version != 1)
    throw std::runtime_error("taylor table: bad header");
  for (size_t n = 0; n < t.N; n++) {
    std::string mid;
    long e = 0;
    if (!(is >> mid >> e)) throw std::runtime_error("taylor table: truncated at entry " + std::to_string(n));
    RealBall c = RealBall::with_prec(Precision(t.prec_bits + 8));
    if (mpfr_set_str(c.mid_mut(), mid.c_str(), 0, MPFR_RNDN) != 0)
      throw std::runtime_error("taylor table: bad midpoint at entry " + std::to_string(n));
    c.set_rad(e <= -(1L << 39) ? Mag() : Mag::pow2(e));
    t.coeffs.push_back(std::move(c));
  }
  return t;
}

const TaylorTable& shipped_taylor_table() {
  static const TaylorTable table = [] {
    std::string_view text = detail::kTaylorTableText;
    if (text.find_first_not_of(" \n\t\r") == std::string_view::npos) return TaylorTable{};
    return parse_taylor_table(text);
  }();
  return table;
}

double coeff_bound_log2(unsigned long n, double R) {
  if (R <= 0) return n == 0 ? 0.0 : -INFINITY;
  double l = M_PI * R / 2.0 / M_LN2 + (0.5 + R - static_cast<double>(n)) * std::log2(R);
  return l + 1e-9 * (1.0 + std::fabs(l));
}

Mag coeff_bound(unsigned long n) {
  if (n == 0) return Mag();
  return Mag::from_log2(coeff_bound_log2(n, static_cast<double>(n) / 8.0));
}

Mag coeff_bound_optimal(unsigned long n) {
  if (n == 0) return Mag();
  double nn = static_cast<double>(n);
  double R = (nn - 0.5) / boost::math::lambert_w0((nn + 0.5) * std::exp(M_PI / 2.0 + 1.0));
  return Mag::from_log2(coeff_bound_log2(n, R));
}

std::optional<Mag> taylor_tail_bound(const TaylorTable& t, const Mag& z_mag, size_t N) {
  if (Mag::from_double(20.0) < z_mag || N > 1000 || N >= t.coeffs.size()) return std::nullopt;
  if (z_mag.is_zero()) return Mag();
  Mag b = mag_abs_upper(t.coeffs[N]);
  Mag bound = Mag::from_double(8.0) * mag_max(Mag::from_double(0.5), z_mag) * b * mag_pow_ui(z_mag, N);
  if (!(bound < Mag::pow2(-8))) return std::nullopt;
  return bound;
}

// Term count for a tail below 2^-target and c[n] bounding log2 of the
// largest term from n onwards. Returns the reason on failure.
static const char* plan_terms(const TaylorTable& table, const Mag& um, long target, Mag& tail, std::vector<double>& c) {
  double lu = um.is_zero() ? -1e300 : um.log2();
  size_t N = 0;
  for (size_t n = 1; n < table.coeffs.size() && n <= 1000; n++) {
    auto tb = taylor_tail_bound(table, um, n);
    if (tb && tb->log2() < -static_cast<double>(target)) {
      N = n;
      tail = *tb;
      break;
    }
  }
  if (N == 0) return "taylor: table too short for this precision and argument";
  c.assign(N + 1, -1e300);
  for (size_t n = N; n-- > 0;) {
    Mag b = mag_abs_upper(table.coeffs[n]);
    double cn = b.is_zero() ? -1e300 : b.log2() + static_cast<double>(n) * lu;
    c[n] = std::max(cn, c[n + 1]);
  }
  double lgN = std::log2(static_cast<double>(N) + 1.0);
  if (static_cast<double>(target) + std::max(0.0, c[0]) + lgN + 4 > static_cast<double>(table.prec_bits))
    return "taylor: table precision too low";
  return nullptr;
}

ComplexBall eval_taylor(FunctionKind fn, const ComplexBall& z, Precision p, const TaylorTable& table) {
  if (fn == FunctionKind::Digamma) throw AlgorithmUnavailable("taylor: digamma is not supported");
  if (table.N < 2) throw AlgorithmUnavailable("taylor: no coefficient table");
  if (!z.is_finite()) return ComplexBall::indeterminate();
  if (std::fabs(z.im_d()) > 10.0) throw AlgorithmUnavailable("taylor: |Im z| > 10");
  if (std::fabs(z.re_d()) > static_cast<double>(kMaxShift)) throw AlgorithmUnavailable("taylor: |Re z| too large");
  if (fn != FunctionKind::RGamma && contains_nonpositive_integer(z)) return ComplexBall::indeterminate();

  long pb = p.bits;
  Precision hp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 8);
  if (fn == FunctionKind::LogGamma) {
    Mag d = mag_min(mag_abs_upper(add_si(z, -1, hp)), mag_abs_upper(add_si(z, -2, hp)));
    if (d.is_zero()) return ComplexBall(0);
    pb += static_cast<long>(std::floor(std::max(0.0, -d.log2())));
  }

  long m = mpfr_get_si(z.re.mid(), MPFR_RNDN);
  ComplexBall u = add_si(z, -m, Precision(hp.bits + 64));
  Mag um = mag_abs_upper(u);
  long target = pb + 6 + inflate_for_imag(z.im_d());
  Mag tail;
  std::vector<double> c;
  const char* why = plan_terms(table, um, target, tail, c);
  if (why) throw AlgorithmUnavailable(why);
  size_t N = c.size() - 1;
  double lgN = std::log2(static_cast<double>(N) + 1.0);
  auto prec_at = [&](size_t n) {
    return Precision(std::max<long>(24, target + static_cast<long>(std::ceil(std::max(c[n], -1e6) + lgN)) + 8));
  };

  // Rectangular splitting: blocks of size mb, Horner across blocks.
  size_t mb = std::max<size_t>(1, static_cast<size_t>(std::sqrt(static_cast<double>(N))));
  Precision top = prec_at(0);
  std::vector<ComplexBall> up(mb + 1);
  up[0] = ComplexBall(1);
  for (size_t i = 1; i <= mb; i++) up[i] = mul(up[i - 1], u, top);
  size_t blocks = (N + mb - 1) / mb;
  ComplexBall S;
  for (size_t blk = blocks; blk-- > 0;) {
    size_t lo = blk * mb, hi = std::min(N, lo + mb);
    Precision bp = prec_at(lo);
    ComplexBall inner;
    for (size_t n = lo; n < hi; n++) {
      RealBall b = round_to(table.coeffs[n], bp);
      inner = add(inner, n == lo ? ComplexBall(b) : mul(up[n - lo], b, bp), bp);
    }
    S = (blk + 1 == blocks) ? inner : add(mul(S, up[mb], bp), inner, bp);
  }
  S = u.is_real() ? ComplexBall(add_error_ball(S.re, tail), S.im) : add_error(S, tail);

  // S encloses 1/Gamma(w) with w = 1 + u; shift back by s = m - 1.
  long s = m - 1;
  Precision wp(pb + 16);
  ComplexBall w = add_si(u, 1, Precision(hp.bits + 64));
  ComplexBall res;
  bool want_r = fn == FunctionKind::RGamma;
  if (s >= 0) {
    ComplexBall rf = rising(w, static_cast<unsigned long>(s), wp);
    res = want_r ? div(S, rf, wp) : div(rf, S, wp);
  } else {
    ComplexBall rf = rising(z, static_cast<unsigned long>(-s), wp);
    ComplexBall d = mul(S, rf, wp);
    res = want_r ? d : inv(d, wp);
  }
  if (fn == FunctionKind::LogGamma) {
    if (z.is_real() && is_positive(z.re)) return round_to(log(res, wp), p);
    return branch_correction(z, res, p);
  }
  return round_to(res, p);
}


bool taylor_supports(const ComplexBall& z, Precision p, const TaylorTable& table) {
  if (table.N < 2 || !z.is_finite()) return false;
  if (std::fabs(z.im_d()) > 10.0 || std::fabs(z.re_d()) > static_cast<double>(kMaxShift)) return false;
  Precision hp(std::max<long>(z.re.mid_prec(), z.im.mid_prec()) + 72);
  ComplexBall u = add_si(z, -mpfr_get_si(z.re.mid(), MPFR_RNDN), hp);
  Mag tail;
  std::vector<double> c;
  return plan_terms(table, mag_abs_upper(u), p.bits + 6 + inflate_for_imag(z.im_d()), tail, c) == nullptr;
}

}  // namespace apg
