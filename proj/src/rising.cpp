#include "apg/rising.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace apg {

unsigned long default_block_size(unsigned long n, Precision prec) {
  if (n <= 4) return 1;
  if (n <= 12) return 2;
  if (n <= 24) return 4;
  if (n <= 50) return 6;
  double extra = 8.0 + 0.2 * std::pow(std::max(0.0, static_cast<double>(prec.bits) - 4096.0), 0.4);
  double m = std::min({std::sqrt(static_cast<double>(n)), extra, 60.0});
  return std::max(1UL, static_cast<unsigned long>(m));
}

namespace {

ComplexBall rising_direct(const ComplexBall& z, unsigned long a, unsigned long b, Precision prec) {
  ComplexBall r = add_si(z, static_cast<long>(a), prec);
  for (unsigned long k = a + 1; k < b; k++) r = mul(r, add_si(z, static_cast<long>(k), prec), prec);
  return r;
}

ComplexBall rising_bs_rec(const ComplexBall& z, unsigned long a, unsigned long b, Precision prec,
                          unsigned long cutoff) {
  if (b - a <= cutoff) return rising_direct(z, a, b, prec);
  unsigned long m = a + (b - a) / 2;
  return mul(rising_bs_rec(z, a, m, prec, cutoff), rising_bs_rec(z, m, b, prec, cutoff), prec);
}

// prod_{k=a}^{b-1} (num + k den)
mpz_class linear_product(const mpz_class& num, const mpz_class& den, unsigned long a, unsigned long b) {
  if (b - a == 1) return num + den * a;
  if (b - a <= 8) {
    mpz_class r = num + den * a;
    for (unsigned long k = a + 1; k < b; k++) r *= num + den * k;
    return r;
  }
  unsigned long m = a + (b - a) / 2;
  return linear_product(num, den, a, m) * linear_product(num, den, m, b);
}

SeriesJet jet_rising_rec(const ComplexBall& z, unsigned long a, unsigned long b, size_t order,
                         Precision prec) {
  if (b - a == 1) return SeriesJet::variable(add_si(z, static_cast<long>(a), prec), order);
  unsigned long m = a + (b - a) / 2;
  return jet_mul(jet_rising_rec(z, a, m, order, prec), jet_rising_rec(z, m, b, order, prec), prec);
}

// Coefficients of (X+k)(X+k+1)...(X+k+l-1), lowest degree first.
template <typename Int>
std::vector<Int> block_poly(unsigned long k, unsigned long l) {
  std::vector<Int> f(l + 1, Int(0));
  f[0] = Int(1);
  for (unsigned long j = 0; j < l; j++) {
    Int c = Int(k + j);
    for (unsigned long i = j + 1; i >= 1; i--) f[i] = f[i - 1] + c * f[i];
    f[0] = c * f[0];
  }
  return f;
}

bool fits_word(unsigned long k, unsigned long l) {
  // Every coefficient is at most f(1) = (k+1)_l <= (k+l)^l.
  return static_cast<double>(l) * std::log2(static_cast<double>(k + l) + 1.0) < 62.0;
}

}  // namespace

ComplexBall rising_bs(const ComplexBall& z, unsigned long n, Precision prec, unsigned long cutoff) {
  if (n == 0) return ComplexBall(1);
  return rising_bs_rec(z, 0, n, prec, std::max(1UL, cutoff));
}

mpq_class rising_bs(const mpq_class& z, unsigned long n) {
  if (n == 0) return mpq_class(1);
  mpz_class den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), z.get_den_mpz_t(), n);
  mpq_class r(linear_product(z.get_num(), z.get_den(), 0, n), den_pow);
  r.canonicalize();
  return r;
}

ComplexBall rising_rs(const ComplexBall& z, unsigned long n, Precision prec, const RisingSpec& spec) {
  if (n == 0) return ComplexBall(1);
  if (n <= spec.basecase_cutoff) return rising_direct(z, 0, n, prec);
  unsigned long m = std::clamp(spec.m, 1UL, n);
  Precision wp = prec + 8;
  std::vector<ComplexBall> pw(m + 1);
  pw[0] = ComplexBall(1);
  pw[1] = z;
  for (unsigned long i = 2; i <= m; i++)
    pw[i] = (i % 2 == 0) ? sqr(pw[i / 2], wp) : mul(pw[i - 1], z, wp);

  ComplexBall r(1);
  for (unsigned long k = 0; k < n; k += m) {
    unsigned long l = std::min(m, n - k);
    ComplexBall t = pw[l];
    if (fits_word(k, l)) {
      auto f = block_poly<uint64_t>(k, l);
      for (unsigned long i = 0; i < l; i++) {
        if (f[i] == 0) continue;
        if (f[i] <= static_cast<uint64_t>(INT64_MAX)) {
          t = add(t, mul_si(pw[i], static_cast<long>(f[i]), wp), wp);
        } else {
          mpz_class c;
          mpz_import(c.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &f[i]);
          t = add(t, mul_z(pw[i], c, wp), wp);
        }
      }
    } else {
      auto f = block_poly<mpz_class>(k, l);
      for (unsigned long i = 0; i < l; i++) {
        if (f[i] == 0) continue;
        t = add(t, mul_z(pw[i], f[i], wp), wp);
      }
    }
    r = (k == 0) ? t : mul(r, t, wp);
  }
  return round_to(r, prec);
}

ComplexBall rising(const ComplexBall& z, unsigned long n, Precision prec) {
  if (n <= 10) return rising_bs(z, n, prec);
  if (z.is_real() && n > 50) {
    RisingSpec spec{n, default_block_size(n, prec), 10};
    return rising_rs(z, n, prec, spec);
  }
  return rising_bs(z, n, prec);
}

SeriesJet rising_jet(const ComplexBall& z, unsigned long n, size_t order, Precision prec) {
  if (order == 0) order = 1;
  if (n == 0) return SeriesJet::constant(ComplexBall(1), order);
  return jet_rising_rec(z, 0, n, order, prec);
}

ComplexBall log_rising_termwise(const ComplexBall& z, unsigned long n, Precision prec) {
  Precision wp = prec + 4 + static_cast<long>(std::log2(static_cast<double>(n) + 1.0));
  ComplexBall s;
  for (unsigned long k = 0; k < n; k++) s = add(s, log(add_si(z, static_cast<long>(k), wp), wp), wp);
  return round_to(s, prec);
}

ComplexBall log_rising(const ComplexBall& z_in, unsigned long n, Precision prec) {
  if (n == 0) return ComplexBall(0);
  if (!z_in.is_finite() || contains_zero(z_in.im))
    throw LogRisingUnavailable("log_rising: argument touches the real axis");
  bool lower = is_negative(z_in.im);
  ComplexBall z = lower ? conj(z_in) : z_in;

  double x = z.re_d(), y = z.im_d();
  double az = std::hypot(x, y);
  if (n > 1000000 || az >= 1e6 || y <= 1e-6)
    throw LogRisingUnavailable("log_rising: outside the validity envelope");
  if (!(z.rad_abs() <= Mag::from_double(az).mul_2exp(-30)))
    throw LogRisingUnavailable("log_rising: input ball too wide");

  Precision wp = prec + 10;
  ComplexBall f = rising(z, n, wp);
  ComplexBall out;
  if (n == 1) {
    out = log(f, prec);
  } else {
    std::complex<double> s(x, y);
    long m = 0;
    for (unsigned long k = 1; k < n; k++) {
      std::complex<double> t = s * std::complex<double>(x + static_cast<double>(k), y);
      if (s.imag() >= 0 && t.imag() < 0) m += 2;
      int e;
      std::frexp(std::abs(t), &e);
      s = std::complex<double>(std::ldexp(t.real(), -e), std::ldexp(t.imag(), -e));
    }
    ComplexBall l;
    if (s.real() < 0) {
      m += s.imag() >= 0 ? 1 : -1;
      l = log(neg(f), wp);
    } else {
      l = log(f, wp);
    }
    RealBall pim = mul_si(const_pi(wp), m, wp);
    out = round_to(ComplexBall(l.re, add(l.im, pim, wp)), prec);
  }
  return lower ? conj(out) : out;
}

ComplexBall log_rising_any(const ComplexBall& z, unsigned long n, Precision prec) {
  if (n == 0) return ComplexBall(0);
  if (z.is_real() && is_positive(z.re)) return log(rising(z, n, prec + 8), prec);
  try {
    return log_rising(z, n, prec);
  } catch (const LogRisingUnavailable&) {
    return log_rising_termwise(z, n, prec);
  }
}

}  // namespace apg
