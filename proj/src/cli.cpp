#include <qarray/cli.hpp>

#include <qarray/boundstate.hpp>
#include <qarray/dynamics.hpp>
#include <qarray/fockcheck.hpp>
#include <qarray/interaction.hpp>
#include <qarray/model.hpp>
#include <qarray/parallel.hpp>
#include <qarray/timeseries.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace qarray::cli {

namespace fs = std::filesystem;

namespace {

const std::map<std::string, std::string>& default_values() {
    static const std::map<std::string, std::string> defaults = {
        {"phi", "0"},          {"J", "10"},
        {"gamma", "0"},        {"kappa_edge", "0"},
        {"N", "200"},          {"d", "6"},
        {"exact_delta", "0"},  {"oracle", "1"},
        {"engine", "effective"}, {"t_max", "auto"},
        {"n_out", "2400"},     {"profile_halfwidth", "auto"},
        {"n_sites", "5"},      {"n_max", "5"},
        {"ratio_list", "10,20,40"}, {"ratio_min", "10"},
        {"window", "auto"},    {"fock_J", "1"},
        {"max_trunc_error", "1e-3"}, {"fock_nnz_cap", "2000000"},
    };
    return defaults;
}

// keys without a default that may be assigned
const std::vector<std::string>& optional_keys() {
    static const std::vector<std::string> keys = {
        "r",      "delta_a", "eta",    "Delta",  "delta_q", "j", "l",
        "r_list", "r_range", "d_list", "d_range",
    };
    return keys;
}

bool known_key(const std::string& key) {
    if (default_values().count(key)) return true;
    const auto& opt = optional_keys();
    return std::find(opt.begin(), opt.end(), key) != opt.end();
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-numeric value '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_value_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split(text, ','))
        out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw ConfigError("config: empty list for key '" + key + "'");
    return out;
}

std::vector<double> parse_range(const std::string& key, const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        throw ConfigError("config: key '" + key + "' expects start:stop:step");
    const double a = parse_double(key, trim(parts[0]));
    const double b = parse_double(key, trim(parts[1]));
    const double step = parse_double(key, trim(parts[2]));
    if (!(step > 0.0) || b < a)
        throw ConfigError("config: key '" + key + "' needs stop >= start and step > 0");
    const long n = static_cast<long>(std::floor((b - a) / step + 1e-9));
    std::vector<double> out;
    out.reserve(n + 1);
    for (long i = 0; i <= n; ++i) out.push_back(a + step * static_cast<double>(i));
    return out;
}

}  // namespace

RunConfig::RunConfig() : defaults_(default_values()) {}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (!known_key(key)) throw ConfigError("config: unknown key '" + key + "'");
    explicit_[key] = value;
}

void RunConfig::set_assignment(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
        throw ConfigError("config: expected key=value, got '" + kv + "'");
    set(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
}

void RunConfig::apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        set_assignment(line);
    }
}

void RunConfig::apply_preset(const std::string& name) {
    auto assign = [&](std::initializer_list<std::pair<const char*, const char*>> kvs) {
        for (const auto& [k, v] : kvs) set(k, v);
    };
    if (name == "fig2") {
        assign({{"r_range", "0:3:0.05"}, {"Delta", "10"}, {"J", "10"}, {"oracle", "0"}});
    } else if (name == "fig3a") {
        assign({{"r_list", "0"}, {"d_range", "0:10:1"}, {"Delta", "10"}, {"J", "10"},
                {"gamma", "0.001"}});
    } else if (name == "fig3b") {
        assign({{"r_list", "0.3,0.723,1.2"}, {"d_range", "0:10:1"}, {"Delta", "10"},
                {"J", "10"}, {"gamma", "0.001"}});
    } else if (name == "fig3c") {
        assign({{"r_range", "0:1.5:0.01"}, {"d", "6"}, {"Delta", "10"}, {"J", "10"},
                {"gamma", "0.001"}});
    } else if (name == "fig4-weak") {
        assign({{"r", "0"}, {"d", "6"}, {"Delta", "10"}, {"J", "10"}, {"gamma", "0.001"},
                {"engine", "effective"}});
    } else if (name == "fig4-strong") {
        // r chosen so that the strong-coupling protocol clears its targets
        assign({{"r", "1.4"}, {"d", "6"}, {"Delta", "10"}, {"J", "10"},
                {"gamma", "0.001"}, {"engine", "effective"}});
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
}

bool RunConfig::is_set(const std::string& key) const { return explicit_.count(key) > 0; }

std::string RunConfig::get(const std::string& key) const {
    if (auto it = explicit_.find(key); it != explicit_.end()) return it->second;
    if (auto it = defaults_.find(key); it != defaults_.end()) return it->second;
    throw ConfigError("config: key '" + key + "' is required but not set");
}

double RunConfig::get_double(const std::string& key) const {
    return parse_double(key, get(key));
}

int RunConfig::get_int(const std::string& key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 1e-9)
        throw ConfigError("config: key '" + key + "' must be an integer");
    return i;
}

bool RunConfig::get_flag(const std::string& key) const {
    const std::string v = get(key);
    if (v == "1" || v == "true") return true;
    if (v == "0" || v == "false") return false;
    throw ConfigError("config: key '" + key + "' must be 0/1");
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
    std::map<std::string, std::string> merged = defaults_;
    for (const auto& [k, v] : explicit_) merged[k] = v;
    return {merged.begin(), merged.end()};
}

namespace {

struct FrameSpec {
    model::SqueezedFrame frame;
    double delta_q = 0.0;  // resolved atomic detuning
    double Delta = 0.0;    // detuning above the upper band edge
};

// exactly one of r-direct (r / r_list / r_range) and (delta_a, eta)
bool drive_mode(const RunConfig& cfg) {
    const bool drive = cfg.is_set("delta_a") || cfg.is_set("eta");
    int r_keys = 0;
    for (const char* k : {"r", "r_list", "r_range"})
        if (cfg.is_set(k)) ++r_keys;
    if (drive && r_keys > 0)
        throw ConfigError("config: choose either r-direct mode or (delta_a, eta), not both");
    if (drive && (!cfg.is_set("delta_a") || !cfg.is_set("eta")))
        throw ConfigError("config: drive mode needs both delta_a and eta");
    if (!drive && r_keys == 0)
        throw ConfigError("config: set r (or r_list / r_range) or (delta_a, eta)");
    if (r_keys > 1)
        throw ConfigError("config: set only one of r, r_list, r_range");
    return drive;
}

std::vector<double> r_values(const RunConfig& cfg) {
    if (cfg.is_set("r")) return {cfg.get_double("r")};
    if (cfg.is_set("r_list")) return parse_value_list("r_list", cfg.get("r_list"));
    return parse_range("r_range", cfg.get("r_range"));
}

std::vector<int> d_values(const RunConfig& cfg) {
    std::vector<double> raw;
    const int keys = cfg.is_set("d_list") + cfg.is_set("d_range");
    if (keys > 1) throw ConfigError("config: set only one of d_list, d_range");
    if (cfg.is_set("d_list"))
        raw = parse_value_list("d_list", cfg.get("d_list"));
    else if (cfg.is_set("d_range"))
        raw = parse_range("d_range", cfg.get("d_range"));
    else
        raw = {static_cast<double>(cfg.get_int("d"))};
    std::vector<int> out;
    for (double v : raw) {
        const int d = static_cast<int>(std::llround(v));
        if (std::abs(v - d) > 1e-9 || d < 0)
            throw ConfigError("config: separations must be integers >= 0");
        out.push_back(d);
    }
    return out;
}

// Resolve delta_q for a given frame from exactly one of Delta / delta_q.
double resolve_delta_q(const RunConfig& cfg, const model::SqueezedFrame& f) {
    if (cfg.is_set("Delta") && cfg.is_set("delta_q"))
        throw ConfigError("config: set Delta or delta_q, not both");
    if (cfg.is_set("delta_q")) return cfg.get_double("delta_q");
    if (cfg.is_set("Delta")) return model::track_delta_q(f, cfg.get_double("Delta"));
    throw ConfigError("config: set Delta (band-edge detuning) or delta_q");
}

FrameSpec frame_spec_for_r(const RunConfig& cfg, double r) {
    FrameSpec spec;
    spec.frame = model::frame_from_r(r, cfg.get_double("J"));
    spec.delta_q = resolve_delta_q(cfg, spec.frame);
    spec.Delta = model::band_edge_detuning(spec.delta_q, spec.frame);
    return spec;
}

FrameSpec frame_spec_for_drive(const RunConfig& cfg) {
    model::SystemParams p;
    p.delta_a = cfg.get_double("delta_a");
    p.eta = cfg.get_double("eta");
    p.J = cfg.get_double("J");
    p.phi = cfg.get_double("phi");
    FrameSpec spec;
    spec.frame = model::squeezed_frame(p);
    spec.delta_q = resolve_delta_q(cfg, spec.frame);
    spec.Delta = model::band_edge_detuning(spec.delta_q, spec.frame);
    return spec;
}

std::pair<int, int> atom_positions(const RunConfig& cfg, int d, int N) {
    if (cfg.is_set("j") != cfg.is_set("l"))
        throw ConfigError("config: set both j and l or neither");
    if (cfg.is_set("j")) return {cfg.get_int("j"), cfg.get_int("l")};
    const int j = -(d / 2);
    if (j < -N || j + d > N) throw ConfigError("config: atoms do not fit on the array");
    return {j, j + d};
}

std::ofstream open_output(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file " + path.string());
    return os;
}

void write_table(std::ostream& os,
                 const std::vector<std::pair<std::string, std::string>>& params,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
    os << "#";
    for (const auto& [k, v] : params) os << " " << k << "=" << v;
    os << "\n";
    for (std::size_t k = 0; k < header.size(); ++k)
        os << (k ? "," : "") << header[k];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            os << (k ? "," : "") << fmt_g17(row[k]);
        os << "\n";
    }
}

std::vector<std::pair<std::string, std::string>> comment_params(
    const RunConfig& cfg, const std::string& command, const std::string& schema) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"tool", "qarray"}, {"command", command}, {"schema", schema}};
    const auto resolved = cfg.resolved();
    params.insert(params.end(), resolved.begin(), resolved.end());
    return params;
}

}  // namespace

int run_boundstate(const RunConfig& cfg, const std::string& out_dir) {
    const bool drive = drive_mode(cfg);
    std::vector<FrameSpec> specs;
    if (drive)
        specs.push_back(frame_spec_for_drive(cfg));
    else
        for (double r : r_values(cfg)) specs.push_back(frame_spec_for_r(cfg, r));

    const bool want_oracle = cfg.get_flag("oracle");
    const double J = cfg.get_double("J");

    struct Row {
        FrameSpec spec;
        boundstate::BoundState bs;
        double xi_prime, G_e_prime;
        double oracle_N, oracle_delta_dev, oracle_profile_dev, atomic_weight;
    };
    std::vector<Row> rows(specs.size());

    parallel_for(specs.size(), [&](std::size_t i) {
        Row& row = rows[i];
        row.spec = specs[i];
        const auto& f = row.spec.frame;
        row.bs = boundstate::solve(f, row.spec.delta_q);
        if (row.spec.Delta > 0.0) {
            row.xi_prime = boundstate::localization_length(row.spec.Delta, f.J_mod);
            row.G_e_prime =
                boundstate::effective_jc(row.spec.Delta, row.spec.Delta, f.G_mod, f.J_mod).G_e;
        } else {
            row.xi_prime = row.G_e_prime = std::numeric_limits<double>::quiet_NaN();
        }
        row.oracle_N = row.oracle_delta_dev = row.oracle_profile_dev = row.atomic_weight =
            std::numeric_limits<double>::quiet_NaN();
        if (want_oracle) {
            const int N = std::max(cfg.get_int("N"),
                                   static_cast<int>(std::ceil(40.0 * row.bs.xi)) + 50);
            model::SystemParams p;
            if (drive) {
                p.delta_a = cfg.get_double("delta_a");
                p.eta = cfg.get_double("eta");
                p.J = J;
                p.phi = cfg.get_double("phi");
            } else {
                p = model::params_for_squeezing(f.r, row.spec.Delta, J, N, 0, 0);
            }
            p.N = N;
            p.j = p.l = 0;
            p.delta_q = row.spec.delta_q;
            const auto num = boundstate::lattice_bound_state(p, f);
            row.oracle_N = N;
            row.oracle_delta_dev = std::abs(num.delta - row.bs.delta);
            row.atomic_weight = num.atomic_weight;
            double dev = 0.0;
            for (int n = -N; n <= N; ++n)
                dev = std::max(dev, std::abs(num.photon_profile(n + N) -
                                             boundstate::amplitude(row.bs.delta, f.J_mod, n)));
            row.oracle_profile_dev = dev;
        }
    });

    {
        auto os = open_output(out_dir, "boundstate_summary.csv");
        std::vector<std::vector<double>> table;
        for (const Row& row : rows)
            table.push_back({row.spec.frame.r, J, row.spec.Delta, row.spec.delta_q,
                             row.spec.frame.J_mod, row.spec.frame.G_mod, row.bs.delta,
                             row.bs.xi, row.bs.G_e, row.bs.Delta_e, row.xi_prime,
                             row.G_e_prime, row.oracle_N, row.oracle_delta_dev,
                             row.oracle_profile_dev, row.atomic_weight});
        write_table(os, comment_params(cfg, "boundstate", "summary"),
                    {"r", "J", "Delta", "delta_q", "J_mod", "G_mod", "delta", "xi", "G_e",
                     "Delta_e", "xi_prime", "G_e_prime", "oracle_N", "oracle_delta_dev",
                     "oracle_profile_dev", "atomic_weight"},
                    table);
    }
    {
        auto os = open_output(out_dir, "boundstate.csv");
        const bool sweep = rows.size() > 1;
        std::vector<std::vector<double>> table;
        for (const Row& row : rows) {
            int hw;
            if (cfg.get("profile_halfwidth") == "auto")
                hw = std::max(10, static_cast<int>(std::ceil(8.0 * row.bs.xi)));
            else
                hw = cfg.get_int("profile_halfwidth");
            const auto prof =
                boundstate::profile(row.bs.delta, row.spec.frame.J_mod, hw);
            for (int n = -hw; n <= hw; ++n) {
                if (sweep)
                    table.push_back({row.spec.frame.r, static_cast<double>(n),
                                     prof[n + hw]});
                else
                    table.push_back({static_cast<double>(n), prof[n + hw]});
            }
        }
        write_table(os, comment_params(cfg, "boundstate", "profile"),
                    sweep ? std::vector<std::string>{"r", "offset", "c_n"}
                          : std::vector<std::string>{"offset", "c_n"},
                    table);
    }
    return kExitOk;
}

int run_coupling(const RunConfig& cfg, const std::string& out_dir) {
    interaction::SweepConfig sweep;
    sweep.J = cfg.get_double("J");
    sweep.gamma = cfg.get_double("gamma");
    sweep.exact_delta = cfg.get_flag("exact_delta");
    sweep.d_values = d_values(cfg);
    if (drive_mode(cfg)) {
        const FrameSpec spec = frame_spec_for_drive(cfg);
        sweep.Delta = spec.Delta;
        sweep.r_values = {spec.frame.r};
    } else {
        sweep.r_values = r_values(cfg);
        // Delta is held fixed across the sweep; delta_q tracks it per r
        if (sweep.r_values.size() > 1 && cfg.is_set("delta_q"))
            throw ConfigError(
                "coupling: r sweeps hold Delta fixed; set Delta instead of delta_q");
        const FrameSpec spec = frame_spec_for_r(cfg, sweep.r_values.front());
        sweep.Delta = spec.Delta;
    }
    const auto result = interaction::coupling_sweep(sweep);

    std::vector<std::vector<double>> table;
    for (const auto& row : result.rows) {
        if (!row.ok) {
            std::cerr << "qarray coupling: skipping r=" << row.r << " d=" << row.d << ": "
                      << row.error << "\n";
            continue;
        }
        table.push_back({row.r, static_cast<double>(row.d), row.G_lj, row.abs_G_lj, row.C,
                         row.xi_prime, row.G_e_prime, row.delta_exact});
    }
    auto params = comment_params(cfg, "coupling", "coupling");
    params.emplace_back("resolved_Delta", fmt_g17(sweep.Delta));
    auto os = open_output(out_dir, "coupling.csv");
    write_table(os, params,
                {"r", "d", "G_lj", "abs_G_lj", "C", "xi_prime", "G_e_prime", "delta_exact"},
                table);
    return kExitOk;
}

int run_evolve(const RunConfig& cfg, const std::string& out_dir) {
    const std::string engine = cfg.get("engine");
    if (engine != "effective" && engine != "lattice" && engine != "both")
        throw ConfigError("config: engine must be effective, lattice or both");
    const bool drive = drive_mode(cfg);
    const FrameSpec spec =
        drive ? frame_spec_for_drive(cfg) : frame_spec_for_r(cfg, r_values(cfg).front());
    const double gamma = cfg.get_double("gamma");
    const int N = cfg.get_int("N");
    int d;
    if (cfg.is_set("j")) {
        d = cfg.get_int("l") - cfg.get_int("j");  // positions win over the default d
        if (cfg.is_set("d") && cfg.get_int("d") != d)
            throw ConfigError("evolve: explicit j, l disagree with the separation d");
        if (d < 0) throw ConfigError("evolve: need j <= l");
    } else {
        const auto d_all = d_values(cfg);
        if (d_all.size() != 1) throw ConfigError("evolve: needs a single separation d");
        d = d_all.front();
    }
    const auto [j, l] = atom_positions(cfg, d, N);

    const auto ec = interaction::effective_coupling(spec.Delta, spec.frame.G_mod,
                                                    spec.frame.J_mod, d, gamma);
    const double t_max =
        cfg.get("t_max") == "auto" ? 3.0 * ec.t_ent : cfg.get_double("t_max");
    const auto grid = linspace(0.0, t_max, cfg.get_int("n_out") + 1);

    auto params = comment_params(cfg, "evolve", "trajectory");
    params.emplace_back("G_lj", fmt_g17(ec.G_lj));
    params.emplace_back("C", fmt_g17(ec.C));
    params.emplace_back("t_ent", fmt_g17(ec.t_ent));
    params.emplace_back("t_transfer", fmt_g17(ec.t_transfer));
    params.emplace_back("resolved_delta_q", fmt_g17(spec.delta_q));
    params.emplace_back("resolved_r", fmt_g17(spec.frame.r));

    if (engine == "effective" || engine == "both") {
        Eigen::Vector4cd psi0 = Eigen::Vector4cd::Zero();
        psi0(2) = 1.0;  // |e_A g_B>
        const auto res =
            dynamics::evolve_effective(ec.G_lj, gamma, dynamics::pure_density(psi0), grid);
        auto os = open_output(out_dir, "trajectory_effective.csv");
        res.series.write_csv(os, params);
    }
    if (engine == "lattice" || engine == "both") {
        model::SystemParams p;
        if (drive) {
            p.delta_a = cfg.get_double("delta_a");
            p.eta = cfg.get_double("eta");
            p.J = cfg.get_double("J");
            p.phi = cfg.get_double("phi");
            p.N = N;
            p.j = j;
            p.l = l;
            p.gamma = gamma;
            p.kappa_edge = cfg.get_double("kappa_edge");
            p.delta_q = spec.delta_q;
            p.validate();
        } else {
            p = model::params_for_squeezing(spec.frame.r, spec.Delta, cfg.get_double("J"),
                                            N, j, l, gamma, cfg.get_double("kappa_edge"));
        }
        const auto lat = lattice::SingleExcitationLattice::from_params(p, spec.frame);
        const auto res =
            dynamics::evolve_lattice(lat, dynamics::excited_atom_state(lat), grid);
        auto os = open_output(out_dir, "trajectory_lattice.csv");
        res.series.write_csv(os, params);
    }
    return kExitOk;
}

int run_validate(const RunConfig& cfg, const std::string& out_dir, bool force) {
    if (drive_mode(cfg))
        throw ConfigError("validate: r-direct mode only (the ratio ladder fixes the drive)");
    const double r = r_values(cfg).front();
    const double J = cfg.get_double("fock_J");
    const auto ratios = parse_value_list("ratio_list", cfg.get("ratio_list"));
    const double ratio_min = cfg.get_double("ratio_min");

    fockcheck::FockConfig fock;
    fock.n_sites = cfg.get_int("n_sites");
    fock.n_max = cfg.get_int("n_max");
    fock.r_target = r;
    fock.max_truncation_error = cfg.get_double("max_trunc_error");
    fock.max_nonzeros = static_cast<std::size_t>(cfg.get_double("fock_nnz_cap"));
    fock.validate();

    const double cosh2r = std::cosh(2.0 * r);
    std::vector<model::SystemParams> rungs;
    for (double ratio : ratios) {
        model::SystemParams p;
        p.J = J;
        const double J_mod = J * cosh2r;
        const double delta_s = 0.5 * ratio * J_mod;
        p.delta_a = delta_s * cosh2r;
        p.eta = 0.5 * p.delta_a * std::tanh(2.0 * r);
        p.delta_q = delta_s;  // atom resonant with the squeezed band center
        p.N = fock.half_size();
        p.j = -1;
        p.l = 1;
        p.validate();
        const auto regime = model::validate_regime(model::squeezed_frame(p), p.delta_q,
                                                   ratio_min);
        if (!regime.pass() && !force) {
            std::cerr << "qarray validate: regime check failed at ratio " << ratio
                      << " (2*Delta_s/J_mod = " << regime.ratio_band
                      << ", (Delta_s+Delta_q)/G_mod = " << regime.ratio_atom
                      << ", required >= " << ratio_min << "); use --force to override\n";
            return kExitValidation;
        }
        rungs.push_back(p);
    }

    if (cfg.get("window") != "auto") fock.t_max = cfg.get_double("window");

    std::vector<std::vector<double>> table;
    for (const auto& p : rungs) {
        const auto rep = fockcheck::frame_comparison(p, fock);
        table.push_back({rep.r, rep.ratio_band, rep.ratio_atom,
                         static_cast<double>(rep.n_sites), static_cast<double>(rep.n_max),
                         rep.max_dev});
    }
    auto os = open_output(out_dir, "validate.csv");
    write_table(os, comment_params(cfg, "validate", "deviation"),
                {"r", "ratio1", "ratio2", "n_sites", "n_max", "max_dev"}, table);
    return kExitOk;
}

int run_command(const std::string& command, const RunConfig& cfg,
                const std::string& out_dir, bool force) {
    if (command == "boundstate") return run_boundstate(cfg, out_dir);
    if (command == "coupling") return run_coupling(cfg, out_dir);
    if (command == "evolve") return run_evolve(cfg, out_dir);
    if (command == "validate") return run_validate(cfg, out_dir, force);
    throw ConfigError("unknown command '" + command + "'");
}

}  // namespace qarray::cli
