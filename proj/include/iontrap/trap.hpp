#pragma once

#include <array>
#include <vector>

#include "iontrap/constants.hpp"
#include "iontrap/units.hpp"

namespace iontrap::trap {

// Electrode voltages, rf drive, geometry and calibration factors defining the
// trapping potential. The kappa_* factors are free geometric-efficiency
// constants fixed by calibrate_geometry against measured frequencies; trap
// drawings alone do not determine them.
struct TrapConfig {
    double rf_amplitude = 200.0;                      // V on the rf electrodes
    double rf_frequency = units::mhz_to_rad(21.0);    // rad/s
    double endcap_voltage = 50.0;                     // V
    double radial_bias = 0.5;                         // V, lifts radial degeneracy
    double ion_electrode_distance = 0.27e-3;          // m (r0)
    double ion_endcap_distance = 0.65e-3;             // m (z0)
    double kappa_radial = 0.9839;
    double kappa_axial = 0.1520;
    double kappa_bias = 0.9537;
    // Cubic force term F_nl = -alpha * x^3 along the axial coordinate.
    double cubic_coefficient_alpha = (kTwoPi * kTwoPi) * 1.74e-7;  // kg (rad/s)^2 / m^2
    double ion_mass = 1.4599315e-25;                  // kg
    double ion_charge = 1.602176634e-19;              // C

    void validate() const;  // throws ModelError
};

struct SecularFrequencies {
    double omega_ax = 0.0;    // rad/s
    double omega_rad1 = 0.0;  // rad/s, higher radial branch
    double omega_rad2 = 0.0;  // rad/s, lower radial branch
};

// Dimensionless Mathieu coefficients per axis, order {rad1, rad2, axial}.
// The static a components satisfy the Laplace constraint sum(a) = 0; the rf
// q vanishes on the axial direction (no rf on the end-caps).
struct MathieuParams {
    std::array<double, 3> a{};
    std::array<double, 3> q{};
};

struct DuffingResponse {
    std::vector<double> drive_frequency_grid;  // rad/s, ascending
    std::vector<double> amplitude_up;          // m, up-sweep branch
    std::vector<double> amplitude_down;        // m, down-sweep branch
    bool bistable = false;
};

enum class SweepDirection { up, down };

// Detection lineshape plus the lumped drive-coupling constants of the
// micromotion-compensation scan. The paper gives the mechanism but not the
// magnitudes, so mixing strength, damping and frequency slope are knobs here.
struct MicromotionParams {
    double laser_detuning = units::mhz_to_rad(-10.0);    // rad/s, 422 detuning
    double natural_linewidth = 1.353e8;                  // rad/s (Gamma_P)
    double saturation = 0.6;
    double k_axial = kTwoPi / 422e-9 * 0.7071067811865476;  // 1/m, 45 deg beam
    double baseline_counts_per_ms = 54.0;                // fluorescence far from resonance
    double force_per_volt = 6e-14;                       // N per volt of miscompensation
    double damping = kTwoPi * 1.0e4;                     // 1/s, cooling damping rate
    double freq_slope = kTwoPi * 3.0e4;                  // rad/s per volt of V_comp
};

// Long-format 2D scan: counts[i_v * f_grid.size() + i_f].
struct MicromotionMap {
    std::vector<double> v_grid;     // V
    std::vector<double> f_grid;     // rad/s
    std::vector<double> counts;     // counts per ms
    SweepDirection sweep = SweepDirection::up;

    double at(std::size_t iv, std::size_t jf) const {
        return counts[iv * f_grid.size() + jf];
    }
};

struct FieldNoise {
    double s_e = 0.0;        // (V/m)^2 / Hz
    double omega_s_e = 0.0;  // (V/m)^2
};

// Secular frequencies from the pseudopotential model:
//   omega_ax^2  = 2 e k_ax V_end / (m z0^2)
//   omega_ps    = e k_rad V_rf / (sqrt(2) m Omega_rf r0^2)
//   omega_rad^2 = omega_ps^2 +/- delta_bias^2 - omega_ax^2 / 2
// Throws UnstableTrap when any squared frequency <= 0 or q >= 0.908.
SecularFrequencies secular_frequencies(const TrapConfig& cfg);

// Inverts secular_frequencies for the three kappa factors at the voltages in
// cfg. Throws NoSolution when the targets cannot be met (non-positive target,
// zero voltage on a needed electrode, or an unstable result).
TrapConfig calibrate_geometry(const SecularFrequencies& targets, const TrapConfig& cfg);

MathieuParams mathieu_params(const TrapConfig& cfg);

// Steady-state response branches of the driven Duffing oscillator
//   m x'' + m gamma x' + m omega0^2 x + alpha x^3 = F cos(w t)
// from the harmonic-balance amplitude equation
//   A^2 [ (omega0^2 - w^2 + (3/4)(alpha/m) A^2)^2 + (gamma w)^2 ] = (F/m)^2.
// omega0 is the axial secular frequency of cfg. freq_grid must be ascending.
DuffingResponse duffing_response(const TrapConfig& cfg, double drive_force,
                                 double damping, const std::vector<double>& freq_grid);

// Same, with an explicit resonance frequency (used by the micromotion scan
// where the trap frequency shifts with the compensation voltage).
DuffingResponse duffing_response_at(double omega0, double alpha, double mass,
                                    double drive_force, double damping,
                                    const std::vector<double>& freq_grid);

// Fluorescence map of the compensation scan: resonant drive force grows as
// |V_comp - v_opt|, the trap frequency tilts linearly with V_comp, and each
// (V, f) point averages the Lorentzian scattering rate over the Doppler shift
// of the steady-state Duffing orbit on the requested sweep branch.
MicromotionMap micromotion_scan(const TrapConfig& cfg, double v_opt,
                                const std::vector<double>& v_grid,
                                const std::vector<double>& f_grid,
                                SweepDirection sweep,
                                const MicromotionParams& params);

// S_E = 4 m hbar omega_ax nbar_dot / e^2, and omega_ax * S_E.
FieldNoise field_noise_from_heating(double heating_rate, double omega_ax,
                                    const TrapConfig& cfg);

}  // namespace iontrap::trap
