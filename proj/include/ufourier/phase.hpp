#pragma once

#include <cstdint>

#include "ufourier/rational.hpp"

namespace ufourier {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// k*t reduced to [-pi, pi]. The product is formed exactly as a double-double
// and reduced against a three-part split of 2*pi, so the result stays
// accurate to a few ulps of pi for |k| up to 2^31 and |t| up to ~2^20.
double reduce_phase(std::int64_t k, double t);

// t reduced to (-pi, pi].
double reduce_angle(double t);

// e^{ikt} through reduce_phase.
Complex unit_phase(std::int64_t k, double t);

}  // namespace ufourier
