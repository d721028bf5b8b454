#include "iontrap/signal.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "iontrap/errors.hpp"

namespace iontrap {

void SignalCurve::validate() const {
    if (y.size() != x.size())
        throw ModelError("SignalCurve: x/y length mismatch");
    if (!y_err.empty() && y_err.size() != x.size())
        throw ModelError("SignalCurve: y_err length mismatch");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_signal_csv(const std::string& path, const SignalCurve& curve,
                      const std::string& units_note) {
    curve.validate();
    std::ofstream out(path);
    if (!out) throw ModelError("cannot open output file: " + path);
    out << "# units: " << units_note << "\n";
    out << "x_value,probability,std_err\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        double err = curve.y_err.empty() ? 0.0 : curve.y_err[i];
        out << format_double(curve.x[i]) << ',' << format_double(curve.y[i])
            << ',' << format_double(err) << '\n';
    }
}

void write_table_csv(const std::string& path, const std::string& units_note,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw ModelError("cannot open output file: " + path);
    out << "# units: " << units_note << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "");
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw ModelError("write_table_csv: row width != header width");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "");
        out << '\n';
    }
}

SignalCurve read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaMismatch("cannot open data file: " + path);
    SignalCurve curve;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 2 && cells.size() != 3)
            throw SchemaMismatch(path + ": expected 2 or 3 columns, got " +
                                 std::to_string(cells.size()));
        if (!saw_header) {  // header row: first non-comment line
            saw_header = true;
            // Accept headerless numeric files too.
            try {
                std::size_t pos = 0;
                (void)std::stod(cells[0], &pos);
                if (pos != cells[0].size()) continue;
            } catch (const std::exception&) {
                continue;
            }
        }
        try {
            curve.x.push_back(std::stod(cells[0]));
            curve.y.push_back(std::stod(cells[1]));
            if (cells.size() == 3) curve.y_err.push_back(std::stod(cells[2]));
        } catch (const std::exception&) {
            throw SchemaMismatch(path + ": non-numeric cell in data row");
        }
    }
    if (!curve.y_err.empty() && curve.y_err.size() != curve.x.size())
        throw SchemaMismatch(path + ": ragged std_err column");
    curve.validate();
    return curve;
}

}  // namespace iontrap
