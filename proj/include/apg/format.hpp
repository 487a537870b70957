#pragma once

#include <string>
#include <string_view>

#include "apg/complex_ball.hpp"

namespace apg {

// "[m ± r]" with m printed to `digits` significant digits. The printed
// radius is rounded up and absorbs the decimal conversion error, so the
// printed interval always contains the ball.
std::string to_string(const RealBall& a, int digits, int rad_digits = 3);
std::string to_string(const ComplexBall& a, int digits, int rad_digits = 3);

// Parses "[m ± r]", "[m +/- r]" or a plain number into a containing ball.
RealBall parse_ball(std::string_view s, Precision prec);
// Parses the complex form produced by to_string.
ComplexBall parse_complex_ball(std::string_view s, Precision prec);

// Exact hexadecimal rendering "mid rad" ("0x1.8p+1 0x1p-60").
std::string to_hex(const RealBall& a);
RealBall from_hex(std::string_view mid, std::string_view rad);

// Midpoint rendered to `digits` significant decimal digits.
std::string mid_decimal(const RealBall& a, int digits);
// Radius bound rendered with `digits` significant digits, rounded up.
std::string rad_decimal(const Mag& r, int digits = 3);

}  // namespace apg
