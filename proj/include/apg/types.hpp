#pragma once

#include <stdexcept>
#include <string>

namespace apg {

enum class FunctionKind { Gamma, RGamma, LogGamma, Digamma };
enum class AlgoKind { Auto, Stirling, Taylor, Spouge, Hyper, HyperRationalBS };

const char* to_string(FunctionKind f);
const char* to_string(AlgoKind a);
FunctionKind parse_function_kind(const std::string& s);
AlgoKind parse_algo_kind(const std::string& s);

// A forced algorithm cannot handle the argument, precision or function.
struct AlgorithmUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace apg
