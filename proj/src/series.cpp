#include "apg/series.hpp"

#include <algorithm>

namespace apg {

SeriesJet SeriesJet::constant(const ComplexBall& v, size_t n) {
  SeriesJet r(n);
  r.c[0] = v;
  return r;
}

SeriesJet SeriesJet::variable(const ComplexBall& z, size_t n) {
  SeriesJet r(n);
  r.c[0] = z;
  if (n > 1) r.c[1] = ComplexBall(1);
  return r;
}

SeriesJet SeriesJet::indeterminate(size_t n) {
  SeriesJet r(n);
  for (auto& x : r.c) x = ComplexBall::indeterminate();
  return r;
}

bool SeriesJet::is_finite() const {
  return std::all_of(c.begin(), c.end(), [](const ComplexBall& x) { return x.is_finite(); });
}

SeriesJet jet_truncate(const SeriesJet& a, size_t n) {
  SeriesJet r(n);
  for (size_t i = 0; i < std::min(n, a.size()); i++) r.c[i] = a.c[i];
  return r;
}

SeriesJet jet_neg(const SeriesJet& a) {
  SeriesJet r(a.size());
  for (size_t i = 0; i < a.size(); i++) r.c[i] = neg(a.c[i]);
  return r;
}

SeriesJet jet_add(const SeriesJet& a, const SeriesJet& b, Precision prec) {
  size_t n = std::min(a.size(), b.size());
  SeriesJet r(n);
  for (size_t i = 0; i < n; i++) r.c[i] = add(a.c[i], b.c[i], prec);
  return r;
}

SeriesJet jet_sub(const SeriesJet& a, const SeriesJet& b, Precision prec) {
  size_t n = std::min(a.size(), b.size());
  SeriesJet r(n);
  for (size_t i = 0; i < n; i++) r.c[i] = sub(a.c[i], b.c[i], prec);
  return r;
}

SeriesJet jet_scale(const SeriesJet& a, const ComplexBall& s, Precision prec) {
  SeriesJet r(a.size());
  for (size_t i = 0; i < a.size(); i++) r.c[i] = mul(a.c[i], s, prec);
  return r;
}

SeriesJet jet_add_scalar(const SeriesJet& a, const ComplexBall& s, Precision prec) {
  SeriesJet r = a;
  r.c[0] = add(a.c[0], s, prec);
  return r;
}

SeriesJet jet_mul(const SeriesJet& a, const SeriesJet& b, Precision prec) {
  size_t n = std::min(a.size(), b.size());
  SeriesJet r(n);
  for (size_t k = 0; k < n; k++) {
    ComplexBall s;
    for (size_t i = 0; i <= k; i++) {
      if (a.c[i].is_exact_zero() || b.c[k - i].is_exact_zero()) continue;
      s = add(s, mul(a.c[i], b.c[k - i], prec), prec);
    }
    r.c[k] = std::move(s);
  }
  return r;
}

SeriesJet jet_inv(const SeriesJet& a, Precision prec) {
  size_t n = a.size();
  if (contains_zero(a.c[0])) return SeriesJet::indeterminate(n);
  SeriesJet r(n);
  ComplexBall i0 = inv(a.c[0], prec);
  r.c[0] = i0;
  for (size_t k = 1; k < n; k++) {
    ComplexBall s;
    for (size_t j = 1; j <= k; j++) {
      if (a.c[j].is_exact_zero()) continue;
      s = add(s, mul(a.c[j], r.c[k - j], prec), prec);
    }
    r.c[k] = neg(mul(s, i0, prec));
  }
  return r;
}

SeriesJet jet_div(const SeriesJet& a, const SeriesJet& b, Precision prec) {
  size_t n = std::min(a.size(), b.size());
  return jet_mul(jet_truncate(a, n), jet_inv(jet_truncate(b, n), prec), prec);
}

SeriesJet jet_derivative(const SeriesJet& a, Precision prec) {
  size_t n = a.size();
  if (n == 1) return SeriesJet(1);
  SeriesJet r(n - 1);
  for (size_t k = 1; k < n; k++) r.c[k - 1] = mul_si(a.c[k], static_cast<long>(k), prec);
  return r;
}

SeriesJet jet_integral(const SeriesJet& a, const ComplexBall& c0, Precision prec) {
  size_t n = a.size();
  SeriesJet r(n + 1);
  r.c[0] = c0;
  for (size_t k = 0; k < n; k++) r.c[k + 1] = div_si(a.c[k], static_cast<long>(k + 1), prec);
  return r;
}

SeriesJet jet_log(const SeriesJet& a, Precision prec) {
  size_t n = a.size();
  if (contains_zero(a.c[0])) return SeriesJet::indeterminate(n);
  ComplexBall l0 = log(a.c[0], prec);
  if (n == 1) return SeriesJet::constant(l0, 1);
  SeriesJet q = jet_mul(jet_derivative(a, prec), jet_inv(jet_truncate(a, n - 1), prec), prec);
  return jet_integral(q, l0, prec);
}

SeriesJet jet_exp(const SeriesJet& a, Precision prec) {
  size_t n = a.size();
  if (!a.c[0].is_finite()) return SeriesJet::indeterminate(n);
  SeriesJet r(n);
  r.c[0] = exp(a.c[0], prec);
  for (size_t k = 1; k < n; k++) {
    ComplexBall s;
    for (size_t j = 1; j <= k; j++) {
      if (a.c[j].is_exact_zero()) continue;
      s = add(s, mul(mul_si(a.c[j], static_cast<long>(j), prec), r.c[k - j], prec), prec);
    }
    r.c[k] = div_si(s, static_cast<long>(k), prec);
  }
  return r;
}

SeriesJet jet_sqrt(const SeriesJet& a, Precision prec) {
  size_t n = a.size();
  SeriesJet r(n);
  r.c[0] = sqrt(a.c[0], prec);
  if (n == 1) return r;
  if (contains_zero(r.c[0])) return SeriesJet::indeterminate(n);
  ComplexBall inv2 = inv(mul_2exp(r.c[0], 1), prec);
  for (size_t k = 1; k < n; k++) {
    ComplexBall s = a.c[k];
    for (size_t j = 1; j < k; j++) s = sub(s, mul(r.c[j], r.c[k - j], prec), prec);
    r.c[k] = mul(s, inv2, prec);
  }
  return r;
}

}  // namespace apg
