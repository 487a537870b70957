#include "apg/format.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace apg {

namespace {

struct Tmp {
  mpfr_t v;
  explicit Tmp(long prec) { mpfr_init2(v, prec); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  operator mpfr_ptr() { return v; }
};

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\n");
  size_t e = s.find_last_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

// Formats 0.D * 10^e (D a digit string, possibly with a leading '-').
std::string place_digits(std::string d, long e) {
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  long sci = e - 1;
  std::string out;
  if (sci >= -5 && sci <= 20) {
    long n = static_cast<long>(d.size());
    if (e <= 0) {
      out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
    } else if (e >= n) {
      out = d + std::string(static_cast<size_t>(e - n), '0');
    } else {
      out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
    }
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  } else {
    std::string frac = d.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = d.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(sci);
  }
  return sign + out;
}

std::string get_digits(mpfr_srcptr x, int digits, mpfr_rnd_t rnd, long* e) {
  mpfr_exp_t ex;
  char* s = mpfr_get_str(nullptr, &ex, 10, static_cast<size_t>(digits), x, rnd);
  std::string out(s);
  mpfr_free_str(s);
  *e = ex;
  return out;
}

Mag parse_rad(const std::string& s) {
  Tmp t(64);
  char* end = nullptr;
  mpfr_strtofr(t, s.c_str(), &end, 0, MPFR_RNDU);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("bad radius: " + s);
  if (mpfr_inf_p(t.v)) return Mag::inf();
  return Mag::from_mpfr(t);
}

}  // namespace

std::string mid_decimal(const RealBall& a, int digits) {
  if (mpfr_nan_p(a.mid())) return "nan";
  if (mpfr_zero_p(a.mid())) return "0";
  long e;
  std::string d = get_digits(a.mid(), std::max(digits, 1), MPFR_RNDN, &e);
  return place_digits(d, e);
}

std::string rad_decimal(const Mag& r, int digits) {
  if (r.is_zero()) return "0";
  if (r.is_inf()) return "inf";
  Tmp t(64);
  r.to_mpfr(t);
  long e;
  std::string d = get_digits(t, std::max(1, digits), MPFR_RNDU, &e);
  std::string frac = d.substr(1);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return d.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(e - 1);
}

std::string to_string(const RealBall& a, int digits, int rad_digits) {
  if (!a.is_finite()) return "[0 ± inf]";
  std::string m = mid_decimal(a, digits);
  Mag total = a.rad();
  long wp = a.mid_prec() + 64;
  Tmp lo(wp), hi(wp), d(64);
  mpfr_set_str(lo, m.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(hi, m.c_str(), 10, MPFR_RNDU);
  if (mpfr_cmp(lo, a.mid()) != 0 || mpfr_cmp(hi, a.mid()) != 0) {
    mpfr_sub(lo, a.mid(), lo, MPFR_RNDU);
    mpfr_sub(hi, hi, a.mid(), MPFR_RNDU);
    mpfr_abs(lo, lo, MPFR_RNDU);
    mpfr_abs(hi, hi, MPFR_RNDU);
    mpfr_max(d, lo, hi, MPFR_RNDU);
    total += Mag::from_mpfr(d);
  }
  return "[" + m + " ± " + rad_decimal(total, rad_digits) + "]";
}

std::string to_string(const ComplexBall& a, int digits, int rad_digits) {
  if (a.is_real()) return to_string(a.re, digits, rad_digits);
  return to_string(a.re, digits, rad_digits) + " + " + to_string(a.im, digits, rad_digits) + "i";
}

RealBall parse_ball(std::string_view s, Precision prec) {
  std::string t = trim(s);
  if (t.empty()) throw std::invalid_argument("empty ball");
  if (t.front() != '[') return RealBall::from_string(t, prec);
  if (t.back() != ']') throw std::invalid_argument("unterminated ball: " + t);
  t = t.substr(1, t.size() - 2);
  size_t pos = t.find("±");
  size_t len = std::strlen("±");
  if (pos == std::string::npos) {
    pos = t.find("+/-");
    len = 3;
  }
  if (pos == std::string::npos) return RealBall::from_string(trim(t), prec);
  RealBall mid = RealBall::from_string(trim(t.substr(0, pos)), prec);
  Mag r = parse_rad(trim(t.substr(pos + len)));
  if (r.is_inf()) return RealBall::indeterminate();
  mid.add_error(r);
  return mid;
}

ComplexBall parse_complex_ball(std::string_view s, Precision prec) {
  std::string t = trim(s);
  if (t.empty() || t.back() != 'i') return ComplexBall(parse_ball(t, prec));
  size_t close = t.find(']');
  if (close == std::string::npos) throw std::invalid_argument("bad complex ball: " + t);
  std::string rest = trim(t.substr(close + 1));
  if (rest.size() < 3 || (rest[0] != '+' && rest[0] != '-'))
    throw std::invalid_argument("bad complex ball: " + t);
  bool negate = rest[0] == '-';
  std::string im = trim(rest.substr(1, rest.size() - 2));
  RealBall imb = parse_ball(im, prec);
  return ComplexBall(parse_ball(t.substr(0, close + 1), prec), negate ? neg(imb) : imb);
}

std::string to_hex(const RealBall& a) {
  char* m = nullptr;
  char* r = nullptr;
  mpfr_asprintf(&m, "%Ra", a.mid());
  Tmp t(64);
  a.rad().to_mpfr(t);
  mpfr_asprintf(&r, "%Ra", static_cast<mpfr_ptr>(t));
  std::string out = std::string(m) + " " + std::string(r);
  mpfr_free_str(m);
  mpfr_free_str(r);
  return out;
}

RealBall from_hex(std::string_view mid, std::string_view rad) {
  std::string m(mid);
  long bits = static_cast<long>(m.size()) * 4 + 8;
  Tmp t(bits);
  char* end = nullptr;
  if (mpfr_strtofr(t, m.c_str(), &end, 16, MPFR_RNDN) != 0 || *end != '\0')
    throw std::invalid_argument("inexact hex midpoint: " + m);
  RealBall out = RealBall::from_mpfr(t);
  mpfr_prec_round(out.mid_mut(), std::max<long>(mpfr_min_prec(out.mid()), 2), MPFR_RNDN);
  out.set_rad(parse_rad(std::string(rad)));
  return out;
}

}  // namespace apg
