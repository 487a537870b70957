#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

// Hot integer kernels, each with an OpenMP version and a serial reference
// that the tests and the kernel bench compare against.

namespace apg::kernels {

bool openmp_enabled();
int max_threads();

// t[i] <- t[i] * mult[i]
void scale_serial(std::vector<mpz_class>& t, const std::vector<unsigned long>& mult);
void scale_parallel(std::vector<mpz_class>& t, const std::vector<unsigned long>& mult);

mpz_class sum_serial(const std::vector<mpz_class>& t);
mpz_class sum_parallel(const std::vector<mpz_class>& t);

// Binary splitting of sum_{k=a}^{b-1} prod_{j=a}^{k} p(j)/q(j) = T/Q with
// P = prod p(j), Q = prod q(j).
struct PQT {
  mpz_class P, Q, T;
};
using TermFn = std::function<void(unsigned long k, mpz_class& p, mpz_class& q)>;

PQT bsplit_serial(const TermFn& term, unsigned long a, unsigned long b);
PQT bsplit_parallel(const TermFn& term, unsigned long a, unsigned long b);

}  // namespace apg::kernels
