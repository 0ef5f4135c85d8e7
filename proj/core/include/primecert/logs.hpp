#pragma once

#include "primecert/interval.hpp"

namespace primecert {

/// Knobs for the series-based enclosures.  The cap bounds the number of
/// series terms; precision requests that would need more terms raise
/// PrecisionError instead of silently returning a wide interval.
struct LogConfig {
    long series_cap = 10000;
};

/// Encloses ln(x) for rational x > 0 with width <= `precision`.
///
/// x is reduced by exact powers of two into [3/4, 3/2), then
/// ln(y) = 2*atanh(u) with u = (y-1)/(y+1) is summed with the geometric
/// remainder bound |R_N| <= |u|^(2N+1) / ((2N+1)(1-u^2)); the power-of-two
/// part contributes through an enclosure of ln 2 from the same series at 2.
Interval log_enclosure(const Rational& x, const Rational& precision, const LogConfig& cfg = {});

/// Enclosure of ln 2 with width <= precision.
Interval log2_enclosure(const Rational& precision, const LogConfig& cfg = {});

/// Enclosure of ln 10 with width <= precision.
Interval log10_enclosure(const Rational& precision, const LogConfig& cfg = {});

/// Encloses ln(10^d) = d * ln 10 without materializing the power; the exact
/// power is only ever needed for digit counts, which are integer comparisons.
Interval log_pow10(unsigned long d, const Rational& precision, const LogConfig& cfg = {});

/// Encloses ln(ln(x)).  Requires ln(x) > 1 certifiable by enclosure; inputs
/// whose inner enclosure cannot be placed strictly above 1 are rejected.
Interval loglog_enclosure(const Rational& x, const Rational& precision, const LogConfig& cfg = {});

/// ln(ln(10^d)) for d >= 1, through the d * ln 10 route.
Interval loglog_pow10(unsigned long d, const Rational& precision, const LogConfig& cfg = {});

/// eps(y) = 1/(10 ln^2 y) + 4/(15 ln^3 y), evaluated on an enclosure L of
/// ln y with L.lo > 0.  Decreasing in ln y, so the endpoints swap; exact.
Interval epsilon_from_log(const Interval& log_y);

/// Encloses eps(y) for rational y > 1 with width <= precision.
Interval epsilon_enclosure(const Rational& y, const Rational& precision, const LogConfig& cfg = {});

/// eps(10^d) through the d * ln 10 route.
Interval epsilon_pow10(unsigned long d, const Rational& precision, const LogConfig& cfg = {});

} // namespace primecert
