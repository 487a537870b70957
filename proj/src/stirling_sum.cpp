#include <algorithm>
#include <cmath>

#include "apg/bernoulli.hpp"
#include "apg/stirling.hpp"

namespace apg {

namespace {

// Precision that keeps the absolute error of a term of size 2^b near 2^-p.
Precision prec_at(long p, double b) {
  return Precision(std::max<long>(p + static_cast<long>(std::ceil(b)) + 6, 24));
}

std::vector<double> term_bounds(const ComplexBall& z, long N) {
  std::vector<double> b(static_cast<size_t>(std::max(N, 1L)), 0.0);
  double la = mag_abs_lower(z).log2() - 1e-9;
  for (long n = 1; n < N; n++) {
    double n2 = 2.0 * static_cast<double>(n);
    b[n] = bern_mag_bound(static_cast<unsigned long>(n)) - std::log2(n2 * (n2 - 1.0)) - (n2 - 1.0) * la + 1e-9;
  }
  for (long n = N - 2; n >= 1; n--) b[n] = std::max(b[n], b[n + 1]);
  return b;
}

RealBall bern_coeff(long n, Precision prec) {
  mpq_class q = BernoulliCache::global().get(static_cast<size_t>(n));
  q /= static_cast<long>(2 * n * (2 * n - 1));
  return RealBall::from_mpq(q, prec);
}

}  // namespace

long schedule_K(long p) {
  if (p <= 1024) return 2;
  double s = std::sqrt(static_cast<double>(std::max(p - 4096, 0L)));
  return std::min(4L + static_cast<long>(std::floor(0.1 * s)), 100L);
}

SumSchedule schedule_sum(const ComplexBall& z, long N, Precision p) {
  SumSchedule s;
  s.N = std::max(N, 1L);
  s.b = term_bounds(z, s.N);
  long K = schedule_K(p.bits);
  std::vector<long> M(static_cast<size_t>(K) + 1, s.N);
  double target = -static_cast<double>(p.bits);
  for (long k = 2; k <= K; k++) {
    long& mk = M[static_cast<size_t>(k)];
    mk = s.N;
    double lk = std::log2(static_cast<double>(k));
    while (mk > 2 && s.b[mk - 1] - 2.0 * static_cast<double>(mk - 1) * lk +
                             std::log2(static_cast<double>(s.N - (mk - 1))) <
                         target)
      mk--;
  }
  for (long k = 2; k <= K; k++) M[k] = std::min(M[k], M[k - 1]);
  while (K >= 2 && M[K] == M[K - 1]) K--;
  s.K = K;
  s.M_seq.assign(M.begin() + 1, M.begin() + K + 1);
  s.M = M[K];

  auto b_at = [&](long n) { return n < s.N ? s.b[n] : 0.0; };
  Mag eps;
  if (s.N > s.M) {
    Mag tail = hurwitz_upper(2.0 * static_cast<double>(s.M), static_cast<double>(K));
    eps += tail * Mag::from_double(static_cast<double>(s.N - s.M)) * Mag::from_log2(b_at(s.M));
  }
  for (long k = 1; k < K; k++) {
    long mk = M[k];
    if (mk >= s.N) continue;
    double l = b_at(mk) - 2.0 * static_cast<double>(mk) * std::log2(static_cast<double>(k)) +
               std::log2(static_cast<double>(s.N - mk));
    eps += Mag::from_log2(l + 1e-9 * (1.0 + std::fabs(l)));
  }
  s.eps = eps;
  s.m1 = std::max(1L, static_cast<long>(std::sqrt(static_cast<double>(s.N - s.M))));
  s.m2 = std::max(1L, static_cast<long>(std::sqrt(static_cast<double>(s.M))));
  return s;
}

ComplexBall main_sum_horner(const ComplexBall& z, long N, Precision prec) {
  if (N <= 1) return ComplexBall(0);
  BernoulliCache::global().ensure(static_cast<size_t>(N));
  std::vector<double> b = term_bounds(z, N);
  Precision wp = prec + 8;
  ComplexBall w = inv(sqr(z, wp), wp);
  ComplexBall h;
  for (long n = N - 1; n >= 1; n--) {
    Precision pn = prec_at(prec.bits, b[n]);
    RealBall c = bern_coeff(n, pn);
    h = (n == N - 1) ? ComplexBall(c) : add(mul(h, w, pn), c, pn);
  }
  return div(h, z, prec);
}

ComplexBall main_sum_fast(const ComplexBall& z, const SumSchedule& s, Precision prec) {
  long N = s.N, M = s.M, K = s.K;
  if (N <= 1) return ComplexBall(0);
  long p = prec.bits;
  BernoulliCache::global().ensure(static_cast<size_t>(std::max(M, 1L)));
  auto b_at = [&](long n) { return n < N ? s.b[n] : s.b[N - 1]; };

  // Trailing sum S_2 of the re-expanded series.
  ComplexBall s3;
  if (M < N) {
    Precision pt = prec_at(p, b_at(M));
    Precision wpt = pt + 8;
    ComplexBall twopiz = mul(ComplexBall(mul_2exp(const_pi(wpt), 1)), z, wpt);
    ComplexBall u = neg(inv(sqr(twopiz, wpt), wpt));
    long m1 = s.m1;
    std::vector<ComplexBall> upow(static_cast<size_t>(m1) + 1);
    upow[0] = ComplexBall(1);
    for (long j = 1; j <= m1; j++) upow[j] = mul(upow[j - 1], u, wpt);

    for (long kodd = 1; kodd < K; kodd += 2) {
      // v_j = u^j / k^(2j) for the odd k; even multiples rescale by 4^-j.
      long jmax_odd = std::min(s.M_seq[kodd - 1] - M - 1, m1);
      if (jmax_odd < 0) continue;
      std::vector<ComplexBall> v(static_cast<size_t>(jmax_odd) + 1);
      mpz_class k2 = static_cast<long>(kodd * kodd), kp = 1;
      for (long j = 0; j <= jmax_odd; j++) {
        v[j] = (j == 0) ? ComplexBall(1) : div_z(upow[j], kp, wpt);
        kp *= k2;
      }
      for (long k = kodd, twos = 0; k < K; k *= 2, twos++) {
        long mk = s.M_seq[k - 1];
        long jmax = std::min(mk - M - 1, m1);
        if (jmax < 0) break;
        std::vector<ComplexBall> vk(static_cast<size_t>(jmax) + 1);
        for (long j = 0; j <= jmax; j++) vk[j] = mul_2exp(v[j], -2 * twos * j);
        ComplexBall s4;
        for (long n = mk - 1; n >= M; n--) {
          Precision pn = prec_at(p, b_at(n));
          long j = n - M;
          s4 = add(mul_si(s4, 2 * n * (2 * n - 1), pn), vk[j % m1], pn);
          if (j != 0 && j % m1 == 0) s4 = mul(vk[m1], s4, pn);
        }
        mpz_class kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(kodd), static_cast<unsigned long>(2 * M));
        ComplexBall term = mul_2exp(div_z(s4, kpow, wpt), -2 * twos * M);
        s3 = add(s3, term, wpt);
        if (jmax < std::min(mk - M - 1, m1)) break;
      }
    }
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(2 * M - 2));
    ComplexBall pre = mul(mul_z(pow_int(u, M, wpt), fac, wpt), z, wpt);
    s3 = neg(mul_2exp(mul(pre, s3, wpt), 1));
    s3 = z.is_real() ? ComplexBall(add_error_ball(s3.re, s.eps), s3.im) : add_error(s3, s.eps);
  }

  // Leading sum by rectangular splitting in w = 1 / z^2.
  ComplexBall s2;
  if (M > 1) {
    Precision wp = prec + 8;
    ComplexBall w = inv(sqr(z, wp), wp);
    long m2 = s.m2;
    std::vector<ComplexBall> wpow(static_cast<size_t>(m2) + 1);
    wpow[0] = ComplexBall(1);
    for (long j = 1; j <= m2; j++) wpow[j] = mul(wpow[j - 1], w, wp);
    for (long n = M - 1; n >= 1; n--) {
      Precision pn = prec_at(p, b_at(n));
      long j = (n - 1) % m2;
      RealBall c = bern_coeff(n, pn);
      s2 = add(s2, j == 0 ? ComplexBall(c) : mul(wpow[j], c, pn), pn);
      if (n - 1 != 0 && j == 0) s2 = mul(wpow[m2], s2, pn);
    }
    s2 = div(s2, z, prec + 4);
  }
  return round_to(add(s2, s3, prec + 4), prec);
}

}  // namespace apg
