#pragma once

#include <cmath>

// Unit conventions, centralized. All internal computation is SI with angular
// frequencies (rad/s). Config files and CSV outputs use MHz, kHz, V, G, us, ms
// for readability; every conversion goes through these helpers.

namespace iontrap {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Fundamental constants (CODATA 2018).
inline constexpr double kHbar = 1.054571817e-34;          // J s
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kBohrMagnetonHzPerG = 1.3996245e6;    // mu_B/h, Hz per gauss

namespace units {

constexpr double mhz_to_rad(double f_mhz) { return kTwoPi * f_mhz * 1e6; }
constexpr double rad_to_mhz(double w) { return w / (kTwoPi * 1e6); }

constexpr double khz_to_rad(double f_khz) { return kTwoPi * f_khz * 1e3; }
constexpr double rad_to_khz(double w) { return w / (kTwoPi * 1e3); }

constexpr double hz_to_rad(double f_hz) { return kTwoPi * f_hz; }
constexpr double rad_to_hz(double w) { return w / kTwoPi; }

constexpr double us_to_s(double t_us) { return t_us * 1e-6; }
constexpr double s_to_us(double t_s) { return t_s * 1e6; }

constexpr double ms_to_s(double t_ms) { return t_ms * 1e-3; }
constexpr double s_to_ms(double t_s) { return t_s * 1e3; }

constexpr double mm_to_m(double d_mm) { return d_mm * 1e-3; }
constexpr double m_to_mm(double d_m) { return d_m * 1e3; }

constexpr double ug_to_g(double b_ug) { return b_ug * 1e-6; }

// Zeeman angular frequency of a sublevel: g-factor, magnetic quantum number,
// field in gauss.
constexpr double zeeman_rad(double g_factor, double m, double b_gauss) {
    return kTwoPi * kBohrMagnetonHzPerG * g_factor * m * b_gauss;
}

}  // namespace units
}  // namespace iontrap
