#include "apg/kernels.hpp"

#ifdef APG_HAVE_OPENMP
#include <omp.h>
#endif

namespace apg::kernels {

namespace {

constexpr unsigned long kLeaf = 16;
// Below this many terms task creation costs more than it saves.
constexpr unsigned long kTaskCutoff = 256;

void leaf(const TermFn& term, unsigned long a, unsigned long b, PQT& out) {
  mpz_class p, q;
  term(a, p, q);
  out.P = p;
  out.Q = q;
  out.T = p;
  for (unsigned long k = a + 1; k < b; k++) {
    term(k, p, q);
    // Append one term: T <- T q + P p, P <- P p, Q <- Q q.
    out.P *= p;
    out.T = out.T * q + out.P;
    out.Q *= q;
  }
}

void merge(PQT& left, PQT& right) {
  left.T = left.T * right.Q + left.P * right.T;
  left.P *= right.P;
  left.Q *= right.Q;
}

void bs_rec(const TermFn& term, unsigned long a, unsigned long b, PQT& out, bool spawn) {
  if (b - a <= kLeaf) {
    leaf(term, a, b, out);
    return;
  }
  unsigned long m = a + (b - a) / 2;
  PQT right;
  if (spawn && b - a > kTaskCutoff) {
#ifdef APG_HAVE_OPENMP
#pragma omp task shared(right) firstprivate(m, b)
    bs_rec(term, m, b, right, true);
    bs_rec(term, a, m, out, true);
#pragma omp taskwait
#else
    bs_rec(term, m, b, right, false);
    bs_rec(term, a, m, out, false);
#endif
  } else {
    bs_rec(term, a, m, out, spawn);
    bs_rec(term, m, b, right, spawn);
  }
  merge(out, right);
}

}  // namespace

bool openmp_enabled() {
#ifdef APG_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef APG_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void scale_serial(std::vector<mpz_class>& t, const std::vector<unsigned long>& mult) {
  for (size_t i = 0; i < t.size(); i++) mpz_mul_ui(t[i].get_mpz_t(), t[i].get_mpz_t(), mult[i]);
}

void scale_parallel(std::vector<mpz_class>& t, const std::vector<unsigned long>& mult) {
  long n = static_cast<long>(t.size());
#pragma omp parallel for schedule(static) if (n > 64)
  for (long i = 0; i < n; i++) mpz_mul_ui(t[i].get_mpz_t(), t[i].get_mpz_t(), mult[i]);
}

mpz_class sum_serial(const std::vector<mpz_class>& t) {
  mpz_class s = 0;
  for (size_t i = t.size(); i-- > 0;) s += t[i];
  return s;
}

mpz_class sum_parallel(const std::vector<mpz_class>& t) {
  long n = static_cast<long>(t.size());
  if (n <= 64 || max_threads() == 1) return sum_serial(t);
  std::vector<mpz_class> partial(static_cast<size_t>(max_threads()));
#pragma omp parallel
  {
#ifdef APG_HAVE_OPENMP
    size_t id = static_cast<size_t>(omp_get_thread_num());
#else
    size_t id = 0;
#endif
    mpz_class local = 0;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; i++) local += t[static_cast<size_t>(i)];
    partial[id] = std::move(local);
  }
  return sum_serial(partial);
}

PQT bsplit_serial(const TermFn& term, unsigned long a, unsigned long b) {
  PQT out;
  if (a >= b) {
    out.P = 1;
    out.Q = 1;
    out.T = 0;
    return out;
  }
  bs_rec(term, a, b, out, false);
  return out;
}

PQT bsplit_parallel(const TermFn& term, unsigned long a, unsigned long b) {
  if (a >= b || max_threads() == 1) return bsplit_serial(term, a, b);
  PQT out;
#pragma omp parallel
#pragma omp single
  bs_rec(term, a, b, out, true);
  return out;
}

}  // namespace apg::kernels
