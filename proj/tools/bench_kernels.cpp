// Serial reference vs OpenMP kernels: timings and result equality.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>

#include "apg/kernels.hpp"

using namespace apg::kernels;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel benchmark"};
  size_t n = 20000;
  unsigned long terms = 20000;
  app.add_option("-n,--size", n, "vector length for scale/sum");
  app.add_option("-k,--terms", terms, "binary splitting terms");
  CLI11_PARSE(app, argc, argv);

  std::printf("openmp %s, threads %d\n", openmp_enabled() ? "on" : "off", max_threads());
  std::mt19937_64 rng(1);
  std::vector<mpz_class> base(n);
  std::vector<unsigned long> mult(n);
  for (size_t i = 0; i < n; i++) {
    base[i] = mpz_class(rng()) << static_cast<unsigned long>(i % 4096);
    mult[i] = rng() | 1;
  }

  auto a = base, b = base;
  double ts = seconds([&] { scale_serial(a, mult); });
  double tp = seconds([&] { scale_parallel(b, mult); });
  std::printf("scale   serial %.4fs  parallel %.4fs  equal %d\n", ts, tp, static_cast<int>(a == b));

  mpz_class s1, s2;
  ts = seconds([&] { s1 = sum_serial(a); });
  tp = seconds([&] { s2 = sum_parallel(a); });
  std::printf("sum     serial %.4fs  parallel %.4fs  equal %d\n", ts, tp, static_cast<int>(s1 == s2));

  // exp(1) partial sums: p(j) = 1, q(j) = j
  TermFn term = [](unsigned long j, mpz_class& p, mpz_class& q) {
    p = 1;
    q = j;
  };
  PQT r1, r2;
  ts = seconds([&] { r1 = bsplit_serial(term, 1, terms); });
  tp = seconds([&] { r2 = bsplit_parallel(term, 1, terms); });
  bool eq = r1.P == r2.P && r1.Q == r2.Q && r1.T == r2.T;
  std::printf("bsplit  serial %.4fs  parallel %.4fs  equal %d\n", ts, tp, static_cast<int>(eq));
  return eq && a == b && s1 == s2 ? 0 : 1;
}
