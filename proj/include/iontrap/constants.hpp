#pragma once

#include <string>

namespace iontrap {

// Atomic constants for 88Sr+ that are not experiment knobs. Compiled-in
// defaults below; a plain-text key-value file (same keys, units in key names)
// can override them, either via load_constants() or the IONTRAP_CONSTANTS
// environment variable. See data/constants_sr88.txt for the shipped file with
// source annotations.
struct AtomicConstants {
    int version = 1;

    double ion_mass_kg = 87.905619 * 1.66053906660e-27;  // 88Sr atomic mass
    double ion_charge_c = 1.602176634e-19;

    // P1/2 total decay rate (1/tau, tau = 7.39 ns) and the branching fraction
    // of P1/2 decay into D3/2. The experiment observes one D3/2 capture per
    // ~14 scattering events, so branching = 1/14.
    double gamma_p12_per_s = 1.353e8;
    double branching_p_to_d = 1.0 / 14.0;

    double d32_lifetime_s = 0.37;   // metastable D3/2
    double d52_lifetime_s = 0.39;   // metastable D5/2 (shelving level)

    // Lande g-factors: S1/2, P1/2, D3/2.
    double g_s12 = 2.0;
    double g_p12 = 2.0 / 3.0;
    double g_d32 = 4.0 / 5.0;

    // Ground-state Zeeman qubit gyromagnetic slope, g_s * mu_B / h.
    double qubit_hz_per_g = 2.7992490e6;

    // 674 nm quadrupole transition: Lamb-Dicke parameter at the 1 MHz axial
    // mode for the beam geometry used here.
    double eta_674 = 0.05;

    double wavelength_422_m = 422e-9;
    double wavelength_1092_m = 1092e-9;
};

// Process-wide constants. Defaults unless overridden.
const AtomicConstants& constants();

// Replace the process-wide constants from a key-value file. Throws
// ConfigError on unreadable file or unknown key.
void load_constants(const std::string& path);

// Apply the IONTRAP_CONSTANTS environment variable if set. Called by the CLI
// on startup; safe to call repeatedly.
void load_constants_from_env();

// Parse a constants file into a struct without installing it.
AtomicConstants parse_constants_file(const std::string& path);

}  // namespace iontrap
