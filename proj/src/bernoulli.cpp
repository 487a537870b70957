#include "apg/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "apg/ball.hpp"
#include "apg/kernels.hpp"

namespace apg {

namespace {

constexpr double kLog2TwoPiE = 4.0942478837220995;  // log2(2 pi e)
constexpr double kTwoPiE = 17.079468445347132;

// ceil(1e9 log2 |B_2n|) / 1e9 for 2n <= 64.
constexpr double kSmallMag[32] = {
    -2.5849625,   -4.906890595, -5.392317422, -4.906890595, -3.722466024, -1.982143335, 0.222392422,
    2.826224446,  5.78060349,   9.047462708,  12.596218458, 16.401750398, 20.443053983, 24.702304132,
    29.16418346,  33.81538751,  38.644252211, 43.640467971, 48.794856591, 54.099194646, 59.546071814,
    65.128775929, 70.841198722, 76.677757816, 82.63333159,  88.703204392, 94.883020089, 101.168742466,
    107.556621216, 114.043162602, 120.625103991, 127.299391656};

std::vector<unsigned long> primes_upto(unsigned long n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= n; i++) {
    if (comp[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

// (r + 2)^-n + (r + 2)^(1 - n) / (n - 1), bound on sum_{k >= r+2} k^-n
// (first term plus the integral of the rest).
Mag dirichlet_tail(unsigned long n, unsigned long r) {
  double a = static_cast<double>(r + 2);
  double l1 = -static_cast<double>(n) * std::log2(a);
  double l2 = (1.0 - static_cast<double>(n)) * std::log2(a) - std::log2(static_cast<double>(n - 1));
  auto up = [](double l) { return Mag::from_log2(l + 1e-9 * std::fabs(l) + 1e-9); };
  return up(l1) + up(l2);
}

}  // namespace

long bernoulli_batch_prec(unsigned long n) {
  double ln = std::log2(static_cast<double>(n));
  double p = (static_cast<double>(n) + 1.0) * ln - static_cast<double>(n) * kLog2TwoPiE + 10.0 + 3.0 * ln;
  return std::max(32L, static_cast<long>(std::ceil(p)));
}

unsigned long bernoulli_batch_cutoff(unsigned long n) {
  auto r = static_cast<unsigned long>(std::ceil(static_cast<double>(n) / kTwoPiE));
  if (r % 2 == 0) r++;
  return r;
}

bool bernoulli_cutoff_sufficient(unsigned long n) {
  return dirichlet_tail(n, bernoulli_batch_cutoff(n)).log2() + bern_mag_bound(n / 2) < -2.0;
}

void bernoulli_batch(unsigned long n, const BernoulliSink& sink, bool parallel) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("bernoulli_batch: n must be even and >= 2");
  init_mpfr_thread();
  auto scale = parallel ? kernels::scale_parallel : kernels::scale_serial;
  auto sum = parallel ? kernels::sum_parallel : kernels::sum_serial;

  long p = bernoulli_batch_prec(n);
  unsigned long r = bernoulli_batch_cutoff(n);
  const long guard = 16;

  // Dirichlet terms for k = 3, 5, ..., r as p-bit fixed point, with the
  // accumulated truncation error of each in units of 2^-p.
  std::vector<mpz_class> t;
  std::vector<unsigned long> ksq;
  std::vector<Mag> terr;
  for (unsigned long k = 3; k <= r; k += 2) {
    mpz_class kn, one = 1;
    mpz_ui_pow_ui(kn.get_mpz_t(), k, n);
    mpz_class q;
    mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(p));
    mpz_fdiv_q(q.get_mpz_t(), one.get_mpz_t(), kn.get_mpz_t());
    t.push_back(q);
    ksq.push_back(k * k);
    terr.push_back(Mag::from_double(1.0));
  }

  Precision wp(p + guard);
  RealBall twopi = mul_2exp(const_pi(wp), 1);
  RealBall u = sqr(twopi, wp);
  mpz_class fac;
  mpz_fac_ui(fac.get_mpz_t(), n);
  RealBall v = mul_2exp(div(RealBall::from_mpz(fac), pow_ui(twopi, n, wp), wp), 1);

  std::vector<unsigned long> primes = primes_upto(n + 1);

  while (n >= 2) {
    RealBall s = mul_2exp(RealBall::from_mpz(sum(t)), -p);
    Mag err;
    for (const Mag& e : terr) err += e;
    s.add_error(err.mul_2exp(-p) + dirichlet_tail(n, r));

    // |B_n| = v (1 + s)(1 + 1/(2^n - 1))
    RealBall denom = add_si(mul_2exp(RealBall(1), static_cast<long>(n)), -1, wp);
    RealBall inner = add(s, div(add_si(s, 1, wp), denom, wp), wp);
    RealBall babs = add(v, mul(v, inner, wp), wp);

    // Von Staudt-Clausen: B_n + a/b is an integer.
    mpz_class b = 1;
    std::vector<unsigned long> qs;
    for (unsigned long q : primes) {
      if (q - 1 > n) break;
      if (n % (q - 1) == 0) {
        qs.push_back(q);
        b *= q;
      }
    }
    mpz_class a = 0;
    for (unsigned long q : qs) a += b / q;

    bool negative = (n % 4 == 0);
    RealBall bval = negative ? neg(babs) : babs;
    RealBall x = add(bval, RealBall::from_mpq(mpq_class(a, b), wp), wp);
    mpfr_t nr;
    mpfr_init2(nr, x.mid_prec());
    mpfr_round(nr, x.mid());
    mpz_class nint;
    mpfr_get_z(nint.get_mpz_t(), nr, MPFR_RNDN);
    mpfr_clear(nr);
    if (!(x.rad() < Mag::pow2(-1)) || !contains(x, mpq_class(nint)))
      throw std::logic_error("bernoulli_batch: integer recovery not certified at n = " + std::to_string(n));
    mpq_class out(nint * b - a, b);
    out.canonicalize();
    if (!sink(n, out)) return;

    n -= 2;
    if (n == 0) break;
    v = div_si(mul(u, v, wp), static_cast<long>((n + 1) * (n + 2)), wp);
    scale(t, ksq);
    for (size_t i = 0; i < terr.size(); i++) terr[i] *= Mag::from_double(static_cast<double>(ksq[i]));

    if (n % 64 == 0) {
      long p2 = bernoulli_batch_prec(n);
      unsigned long r2 = bernoulli_batch_cutoff(n);
      size_t keep = r2 >= 3 ? (r2 - 1) / 2 : 0;
      keep = std::min(keep, t.size());
      t.resize(keep);
      ksq.resize(keep);
      terr.resize(keep);
      if (p2 < p) {
        auto shift = static_cast<mp_bitcnt_t>(p - p2);
        for (size_t i = 0; i < keep; i++) {
          mpz_fdiv_q_2exp(t[i].get_mpz_t(), t[i].get_mpz_t(), shift);
          terr[i] = terr[i].mul_2exp(-static_cast<int64_t>(shift)) + Mag::from_double(1.0);
        }
        p = p2;
        wp = Precision(p + guard);
        u = round_to(u, wp);
        v = round_to(v, wp);
      }
      r = 2 * keep + 1;
    }
  }
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

size_t BernoulliCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

const mpq_class& BernoulliCache::get(size_t i) const {
  std::shared_lock lock(mu_);
  if (i >= entries_.size()) throw std::out_of_range("BernoulliCache::get");
  return entries_[i];
}

void BernoulliCache::ensure(size_t count) {
  {
    std::shared_lock lock(mu_);
    if (entries_.size() >= count) return;
  }
  std::unique_lock lock(mu_);
  if (entries_.empty()) entries_.emplace_back(1);
  while (entries_.size() < count) {
    size_t have = entries_.size();  // next index is `have`, i.e. B_{2 have}
    size_t top = std::max(count, have + kBatch) - 1;
    std::vector<mpq_class> batch(top - have + 1);
    bernoulli_batch(2 * top, [&](unsigned long n, const mpq_class& b) {
      size_t idx = n / 2;
      batch[idx - have] = b;
      return idx > have;
    });
    for (auto& b : batch) entries_.push_back(std::move(b));
  }
}

double bern_mag_bound(unsigned long n) {
  if (n == 0) return 0.0;
  if (n <= 32) return kSmallMag[n - 1];
  double m = 2.0 * static_cast<double>(n);
  return (m + 1.0) * std::log2(m) - m * kLog2TwoPiE + 1e-9 * m;
}

}  // namespace apg
