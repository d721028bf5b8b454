#pragma once

#include <string>
#include <vector>

namespace iontrap {

// Uniform (x, y, y_err) series used for every simulated or measured scan.
// y_err empty means "no per-point uncertainty".
struct SignalCurve {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> y_err;

    std::size_t size() const { return x.size(); }
    void validate() const;  // throws ModelError on length mismatch
};

// CSV helpers shared by the experiment commands. All writers emit a
// `# units:` comment line followed by a header row, and format numbers
// deterministically (round-trippable %.17g, C locale).

std::string format_double(double v);

// Writes `# units: <units_note>` / `x_value,probability,std_err`.
// std_err column is written as 0 when the curve has no y_err.
void write_signal_csv(const std::string& path, const SignalCurve& curve,
                      const std::string& units_note);

// Generic table writer: one units note, explicit header, row-major cells.
void write_table_csv(const std::string& path, const std::string& units_note,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

// Reads a signal CSV produced by write_signal_csv (or hand-made with the same
// shape). Ignores comment lines. Throws SchemaMismatch if the column count
// is not 2 or 3.
SignalCurve read_signal_csv(const std::string& path);

}  // namespace iontrap
