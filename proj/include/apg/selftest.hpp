#pragma once

#include <functional>
#include <string>

namespace apg {

struct SelftestReport {
  int passed = 0;
  int failed = 0;
};

// Runs the invariant suites (Bernoulli exactness, functional identities,
// cross-algorithm overlap, known values, table consistency) and reports one
// line per check to `out`. `slow` extends the ranges and precisions.
SelftestReport run_selftest(bool slow, const std::function<void(const std::string&)>& out);

}  // namespace apg
