#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace gdeutsch::detail {

/// exp(i 2 pi numerator / period) with the numerator reduced first.
inline std::complex<double> unit_phase(std::uint64_t numerator, std::uint32_t period) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator % period) / period;
  return std::polar(1.0, angle);
}

}  // namespace gdeutsch::detail
