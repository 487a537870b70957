#pragma once

#include <ostream>
#include <vector>

namespace apgtool {

// Each prints one table, CSV when `csv`, else aligned text.
void bench_stirling_sum(const std::vector<long>& digits, bool csv, std::ostream& out);
void bench_spouge_error(const std::vector<long>& rs, bool csv, std::ostream& out);
void bench_taylor_coeffs(const std::vector<long>& ns, bool csv, std::ostream& out);
void bench_timings(const std::vector<long>& digits, bool csv, std::ostream& out);
void bench_hyper_alpha(const std::vector<long>& digits, bool csv, std::ostream& out);

}  // namespace apgtool
