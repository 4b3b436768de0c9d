#pragma once

#include <cstdint>

#include "excedance/integer.hpp"

namespace excedance {

/// C(n, k); zero when k lies outside [0, n].
Integer binomial(std::uint32_t n, std::int64_t k);

Integer factorial(std::uint32_t n);

} // namespace excedance
