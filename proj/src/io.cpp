#include "varigame/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace varigame {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_double(const std::string& s, const std::string& path) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ": cannot parse '" + s + "' as a number");
    }
}

bool numeric_row(const std::vector<std::string>& fields) {
    if (fields.empty()) return false;
    try {
        std::size_t pos = 0;
        std::stod(fields[0], &pos);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_sampled_fn_csv(const std::string& path, const SampledFn& f,
                          const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& line : comments) out << "# " << line << "\n";
    out << (f.has_deriv() ? "t,f,fprime\n" : "t,f\n");
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        out << format_full(f.grid.node(k)) << ',' << format_full(f.values[k]);
        if (f.has_deriv()) out << ',' << format_full(f.deriv[k]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

SampledFn read_sampled_fn_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> ts, fs, fps;
    bool saw_deriv = false;
    std::string line;
    bool first_data = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (first_data && !numeric_row(fields)) continue;  // header row
        first_data = false;
        if (fields.size() != 2 && fields.size() != 3)
            throw std::runtime_error(path + ": expected 2 or 3 columns, got " +
                                     std::to_string(fields.size()));
        ts.push_back(parse_double(fields[0], path));
        fs.push_back(parse_double(fields[1], path));
        if (fields.size() == 3) {
            fps.push_back(parse_double(fields[2], path));
            saw_deriv = true;
        } else if (saw_deriv) {
            throw std::runtime_error(path + ": inconsistent column count");
        }
    }
    if (ts.size() < 3)
        throw std::runtime_error(path + ": needs at least 3 sample rows");

    std::size_t n = ts.size() - 1;
    TimeGrid grid(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (std::abs(ts[k] - grid.node(k)) > 1e-9)
            throw std::runtime_error(path + ": t column is not the uniform grid over [0,1] (row " +
                                     std::to_string(k) + ")");
        if (!std::isfinite(fs[k]))
            throw std::runtime_error(path + ": non-finite sample");
    }
    SampledFn f;
    f.grid = grid;
    f.values = std::move(fs);
    if (saw_deriv) f.deriv = std::move(fps);
    return f;
}

void write_matrix_csv(const std::string& path,
                      const std::vector<std::vector<double>>& entries) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& row : entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << format_full(row[j]);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& s : fields) row.push_back(parse_double(s, path));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path + ": empty matrix");
    return rows;
}

}  // namespace varigame
