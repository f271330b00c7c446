// timeseries.hpp — time grid plus named real observables; common engine output
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qarray {

// Shortest round-trippable decimal form (17 significant digits).
std::string fmt_g17(double v);

std::vector<double> linspace(double t0, double t1, int n_points);

struct TimeSeries {
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::vector<std::string> warnings;

    void set_columns(std::vector<std::string> column_names);
    void append(double t, const std::vector<double>& values);

    std::size_t size() const { return times.size(); }
    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;
    double value(const std::string& name, std::size_t i) const;
    double max_of(const std::string& name) const;

    // One comment line with the resolved parameters, a header line, then rows.
    void write_csv(std::ostream& os,
                   const std::vector<std::pair<std::string, std::string>>& params) const;
};

}  // namespace qarray
