#pragma once

#include <gmpxx.h>

#include <deque>
#include <functional>
#include <shared_mutex>

namespace apg {

// Receives (n, B_n); returning false stops the stream.
using BernoulliSink = std::function<bool(unsigned long n, const mpq_class& b)>;

// Emits B_{n_max}, B_{n_max-2}, ..., B_2 as exact reduced fractions via the
// zeta-function multi-evaluation. The floating-point part runs in ball
// arithmetic and every integer recovery is certified; a failed
// certification throws std::logic_error.
void bernoulli_batch(unsigned long n_max, const BernoulliSink& sink, bool parallel = true);

// Working precision and Dirichlet cutoff used by bernoulli_batch at index n.
long bernoulli_batch_prec(unsigned long n);
unsigned long bernoulli_batch_cutoff(unsigned long n);
// Whether the cutoff at n keeps |B_n| times the Dirichlet tail below 1/4,
// inside the 1/2 that integer recovery allows.
bool bernoulli_cutoff_sufficient(unsigned long n);

// Append-only table of B_0, B_2, B_4, ... shared by all evaluations.
class BernoulliCache {
public:
  static constexpr size_t kBatch = 128;

  static BernoulliCache& global();

  // Makes at least `count` entries (B_0 .. B_{2 count - 2}) available.
  void ensure(size_t count);
  size_t size() const;
  // B_{2i}; i must be below size(). The reference stays valid.
  const mpq_class& get(size_t i) const;

private:
  mutable std::shared_mutex mu_;
  std::deque<mpq_class> entries_;
};

// Upper bound for log2 |B_{2n}|, n >= 1.
double bern_mag_bound(unsigned long n);

}  // namespace apg
