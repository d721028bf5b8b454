#include "iontrap/constants.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "iontrap/errors.hpp"

namespace iontrap {

namespace {

AtomicConstants& mutable_constants() {
    static AtomicConstants c;
    return c;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

const AtomicConstants& constants() { return mutable_constants(); }

AtomicConstants parse_constants_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open constants file: " + path);
    AtomicConstants c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        // Strip trailing same-line comment.
        auto hash = val.find('#');
        if (hash != std::string::npos) val = trim(val.substr(0, hash));
        double x = 0.0;
        try {
            std::size_t pos = 0;
            x = std::stod(val, &pos);
            if (pos != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ParseError("bad numeric value for " + key + ": " + val, lineno);
        }
        if (key == "version") c.version = static_cast<int>(x);
        else if (key == "ion_mass_kg") c.ion_mass_kg = x;
        else if (key == "ion_charge_C") c.ion_charge_c = x;
        else if (key == "gamma_p12_per_s") c.gamma_p12_per_s = x;
        else if (key == "branching_p_to_d") c.branching_p_to_d = x;
        else if (key == "d32_lifetime_s") c.d32_lifetime_s = x;
        else if (key == "d52_lifetime_s") c.d52_lifetime_s = x;
        else if (key == "g_s12") c.g_s12 = x;
        else if (key == "g_p12") c.g_p12 = x;
        else if (key == "g_d32") c.g_d32 = x;
        else if (key == "qubit_hz_per_G") c.qubit_hz_per_g = x;
        else if (key == "eta_674") c.eta_674 = x;
        else if (key == "wavelength_422_m") c.wavelength_422_m = x;
        else if (key == "wavelength_1092_m") c.wavelength_1092_m = x;
        else throw UnknownKey(key + " (constants file)");
    }
    return c;
}

void load_constants(const std::string& path) {
    mutable_constants() = parse_constants_file(path);
}

void load_constants_from_env() {
    const char* p = std::getenv("IONTRAP_CONSTANTS");
    if (p != nullptr && *p != '\0') load_constants(p);
}

}  // namespace iontrap
