#include <doctest.h>

#include <random>

#include "apg/series.hpp"
#include "apg/stirling.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace apg;

namespace {

const Precision P(128);

SeriesJet from_ints(std::initializer_list<long> v) {
  SeriesJet j(v.size());
  size_t i = 0;
  for (long x : v) j[i++] = ComplexBall(x);
  return j;
}

struct QJet {
  std::vector<mpq_class> re, im;
};

QJet random_qjet(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<long> num(-999, 999), den(1, 97);
  QJet q;
  for (size_t i = 0; i < n; i++) {
    q.re.emplace_back(num(rng), den(rng));
    q.im.emplace_back(num(rng), den(rng));
    q.re.back().canonicalize();
    q.im.back().canonicalize();
  }
  return q;
}

SeriesJet to_jet(const QJet& q) {
  SeriesJet j(q.re.size());
  for (size_t i = 0; i < q.re.size(); i++) j[i] = ComplexBall(RealBall::from_mpq(q.re[i], P), RealBall::from_mpq(q.im[i], P));
  return j;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("jet_mul examples") {
  SeriesJet a = from_ints({1, 1, 0}), b = from_ints({1, -1, 0});
  SeriesJet c = jet_mul(a, b, P);
  REQUIRE(c.size() == 3);
  CHECK(contains(c[0], ComplexBall(1)));
  CHECK(contains(c[1], ComplexBall(0)));
  CHECK(contains(c[2], ComplexBall(-1)));

  SeriesJet one = from_ints({1, 0, 0, 0});
  SeriesJet x(4);
  for (size_t i = 0; i < 4; i++) x[i] = tu::cexact(0.5 + i, -1.25 * i);
  SeriesJet y = jet_mul(x, one, P);
  for (size_t i = 0; i < 4; i++) CHECK(contains(y[i], x[i]));
}

TEST_CASE("truncation to the shorter operand") {
  SeriesJet a = from_ints({1, 2, 3, 4, 5}), b = from_ints({1, 1, 1});
  CHECK(jet_mul(a, b, P).size() == 3);
  CHECK(jet_add(a, b, P).size() == 3);
}

TEST_CASE("Leibniz rule against exact convolution") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; t++) {
    size_t n = 1 + rng() % 8;
    QJet qa = random_qjet(rng, n), qb = random_qjet(rng, n);
    SeriesJet c = jet_mul(to_jet(qa), to_jet(qb), P);
    for (size_t k = 0; k < n; k++) {
      mpq_class re = 0, im = 0;
      for (size_t i = 0; i <= k; i++) {
        re += qa.re[i] * qb.re[k - i] - qa.im[i] * qb.im[k - i];
        im += qa.re[i] * qb.im[k - i] + qa.im[i] * qb.re[k - i];
      }
      CHECK(contains(c[k].re, re));
      CHECK(contains(c[k].im, im));
    }
  }
}

TEST_CASE("inv of 1 - x is the geometric series") {
  SeriesJet g = jet_inv(from_ints({1, -1, 0, 0}), P);
  for (size_t i = 0; i < 4; i++) CHECK(contains(g[i], ComplexBall(1)));
}

TEST_CASE("exp(log(1 + x)) round trip") {
  SeriesJet r = jet_exp(jet_log(from_ints({1, 1, 0, 0, 0, 0}), P), P);
  CHECK(contains(r[0], ComplexBall(1)));
  CHECK(contains(r[1], ComplexBall(1)));
  for (size_t i = 2; i < 6; i++) CHECK(contains(r[i], ComplexBall(0)));
}

TEST_CASE("sqrt squares back") {
  SeriesJet a(5);
  for (size_t i = 0; i < 5; i++) a[i] = tu::cexact(2.0 + i, 0.5 * i);
  SeriesJet s = jet_sqrt(a, P);
  SeriesJet b = jet_mul(s, s, P);
  for (size_t i = 0; i < 5; i++) CHECK(overlaps(b[i], a[i]));
}

TEST_CASE("inv and log of a jet whose constant contains zero are indeterminate") {
  SeriesJet a = from_ints({0, 1, 2});
  CHECK_FALSE(jet_inv(a, P).is_finite());
  CHECK_FALSE(jet_log(a, P).is_finite());
}

TEST_CASE("log of the Gamma jet at 3 gives psi(3)") {
  SeriesJet lg = lgamma_jet_stirling(ComplexBall(3), Precision(160), 3);
  SeriesJet g = jet_exp(lg, Precision(160));
  SeriesJet l = jet_log(g, Precision(160));
  // psi(3) = psi(1) + 1 + 1/2 with psi(1) from the limit oracle
  RealBall psi3 = add(oracle::neg_euler_by_limit(), RealBall::from_mpq(mpq_class(3, 2), Precision(160)), Precision(160));
  CHECK(overlaps(l[1], ComplexBall(psi3)));
  CHECK(contains(g[0], ComplexBall(2)));
}

TEST_CASE("derivative and integral are inverse") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; t++) {
    SeriesJet a = to_jet(random_qjet(rng, 6));
    SeriesJet b = jet_derivative(jet_integral(a, a[0], P), P);
    REQUIRE(b.size() == a.size());
    for (size_t i = 0; i < a.size(); i++) CHECK(overlaps(b[i], a[i]));
    SeriesJet c = jet_integral(jet_derivative(a, P), a[0], P);
    REQUIRE(c.size() == a.size());
    for (size_t i = 0; i < a.size(); i++) CHECK(overlaps(c[i], a[i]));
  }
}

TEST_CASE("length-1 jets reduce to scalar operations") {
  ComplexBall z = tu::cexact(1.5, 0.25), w = tu::cexact(-0.75, 2);
  SeriesJet a = SeriesJet::constant(z, 1), b = SeriesJet::constant(w, 1);
  CHECK(overlaps(jet_mul(a, b, P)[0], mul(z, w, P)));
  CHECK(overlaps(jet_inv(a, P)[0], inv(z, P)));
  CHECK(overlaps(jet_log(a, P)[0], log(z, P)));
  CHECK(overlaps(jet_exp(a, P)[0], exp(z, P)));
  CHECK(overlaps(jet_sqrt(a, P)[0], sqrt(z, P)));
}

}  // TEST_SUITE
