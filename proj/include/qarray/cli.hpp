// cli.hpp — flat key=value run configuration, presets, and command entry points
#pragma once

#include <qarray/errors.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qarray::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitValidation = 3;

// Precedence: built-in defaults < preset < config file < --set overrides.
// Exclusive choices (r-direct vs (delta_a, eta); Delta vs delta_q; scalar vs
// list vs range sweeps) are checked against explicitly assigned keys only.
class RunConfig {
public:
    RunConfig();

    void apply_preset(const std::string& name);
    void apply_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    void set_assignment(const std::string& key_equals_value);

    bool is_set(const std::string& key) const;  // explicitly assigned
    std::string get(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_flag(const std::string& key) const;

    // The full resolved parameter set, sorted by key (for CSV comments).
    std::vector<std::pair<std::string, std::string>> resolved() const;

private:
    std::map<std::string, std::string> defaults_;
    std::map<std::string, std::string> explicit_;
};

int run_boundstate(const RunConfig& cfg, const std::string& out_dir);
int run_coupling(const RunConfig& cfg, const std::string& out_dir);
int run_evolve(const RunConfig& cfg, const std::string& out_dir);
int run_validate(const RunConfig& cfg, const std::string& out_dir, bool force);

// Dispatch by command name; unknown command throws ConfigError.
int run_command(const std::string& command, const RunConfig& cfg,
                const std::string& out_dir, bool force = false);

}  // namespace qarray::cli
