#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apg/complex_ball.hpp"
#include "apg/types.hpp"

namespace apg {

// 1/Gamma(1 + u) = sum b_n u^n, b_n = a_{n+1}.
struct TaylorTable {
  std::vector<RealBall> coeffs;
  long prec_bits = 0;
  size_t N = 0;
};

// Coefficients from the log Gamma jet at 1, cross-checked against the zeta
// recurrence for n <= 32. Throws std::logic_error on disagreement.
TaylorTable build_taylor_table(size_t N, Precision prec);

// a_1 .. a_n from (k-1) a_k = gamma a_{k-1} - zeta(2) a_{k-2} + ...; entry i
// holds a_{i+1}.
std::vector<RealBall> rgamma_coeffs_recurrence(size_t n, Precision prec);

// Text format: header line "apg-rgamma-taylor 1 <N> <prec_bits>", then one
// line per coefficient "<hex midpoint> <e>" with radius <= 2^e.
std::string serialize_taylor_table(const TaylorTable& t);
TaylorTable parse_taylor_table(std::string_view text);

// The table compiled into the library (N = 0 if none was shipped).
const TaylorTable& shipped_taylor_table();

// e^(pi R / 2) R^(1/2 + R - n), an upper bound for |a_n| for any R > 0.
double coeff_bound_log2(unsigned long n, double R);
Mag coeff_bound(unsigned long n);          // R = n/8
Mag coeff_bound_optimal(unsigned long n);  // R = (n - 1/2) / W0((n + 1/2) e^(pi/2 + 1))

// 8 max(1/2, |u|) |b_N| |u|^N. Empty when |u| > 20, N > 1000, N is outside
// the table, or the bound is not below 2^-8.
std::optional<Mag> taylor_tail_bound(const TaylorTable& t, const Mag& z_mag, size_t N);

// Whether eval_taylor can deliver p bits of Gamma(z) from the table.
bool taylor_supports(const ComplexBall& z, Precision p, const TaylorTable& table);

// Gamma, RGamma or LogGamma on any strip via shifts to Re z in [0.5, 1.5].
// Throws AlgorithmUnavailable when the table cannot deliver p bits.
ComplexBall eval_taylor(FunctionKind fn, const ComplexBall& z, Precision p, const TaylorTable& table);

}  // namespace apg
