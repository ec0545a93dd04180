#pragma once

namespace stapulse {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Frequencies cross the API boundary in ordinary MHz; everything internal
// runs in angular units (rad/us) so Rabi rates compose with detunings
// without stray 2*pi factors. Time is in microseconds throughout.
constexpr double mhz_to_angular(double f_mhz) { return kTwoPi * f_mhz; }
constexpr double angular_to_mhz(double w_rad_per_us) { return w_rad_per_us / kTwoPi; }

}  // namespace stapulse
