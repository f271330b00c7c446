#include <qarray/timeseries.hpp>

#include <qarray/errors.hpp>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qarray {

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> linspace(double t0, double t1, int n_points) {
    if (n_points < 2 || !(t1 > t0)) throw ConfigError("linspace: need t1 > t0, n >= 2");
    std::vector<double> t(n_points);
    for (int i = 0; i < n_points; ++i)
        t[i] = t0 + (t1 - t0) * static_cast<double>(i) / (n_points - 1);
    t.back() = t1;
    return t;
}

void TimeSeries::set_columns(std::vector<std::string> column_names) {
    names = std::move(column_names);
    columns.assign(names.size(), {});
}

void TimeSeries::append(double t, const std::vector<double>& values) {
    if (values.size() != names.size())
        throw std::invalid_argument("TimeSeries::append: column count mismatch");
    if (!times.empty() && !(t > times.back()))
        throw std::invalid_argument("TimeSeries::append: times must be strictly increasing");
    times.push_back(t);
    for (std::size_t k = 0; k < values.size(); ++k) columns[k].push_back(values[k]);
}

bool TimeSeries::has_column(const std::string& name) const {
    for (const auto& n : names)
        if (n == name) return true;
    return false;
}

const std::vector<double>& TimeSeries::column(const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return columns[k];
    throw std::out_of_range("TimeSeries: no column named " + name);
}

double TimeSeries::value(const std::string& name, std::size_t i) const {
    return column(name).at(i);
}

double TimeSeries::max_of(const std::string& name) const {
    const auto& col = column(name);
    if (col.empty()) throw std::out_of_range("TimeSeries: empty column " + name);
    double m = col.front();
    for (double v : col) m = std::max(m, v);
    return m;
}

void TimeSeries::write_csv(
    std::ostream& os,
    const std::vector<std::pair<std::string, std::string>>& params) const {
    os << "#";
    for (const auto& [k, v] : params) os << " " << k << "=" << v;
    for (const auto& w : warnings) os << " warning=\"" << w << "\"";
    os << "\n";
    os << "t";
    for (const auto& n : names) os << "," << n;
    os << "\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        os << fmt_g17(times[i]);
        for (const auto& col : columns) os << "," << fmt_g17(col[i]);
        os << "\n";
    }
}

}  // namespace qarray
