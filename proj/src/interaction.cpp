#include <qarray/interaction.hpp>

#include <qarray/boundstate.hpp>
#include <qarray/parallel.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace qarray::interaction {

double atom_atom_coupling(double Delta, double G_mod, double J_mod, int d) {
    if (!(Delta > 0.0))
        throw NotDispersiveError("not dispersive: atom-atom coupling needs Delta > 0");
    if (d < 0) throw ConfigError("atom_atom_coupling: separation must be >= 0");
    const double xi_p = boundstate::localization_length(Delta, J_mod);
    const double ge_p = boundstate::effective_jc(Delta, Delta, G_mod, J_mod).G_e;
    const double sign = (d % 2 == 0) ? 1.0 : -1.0;
    return sign * ge_p * ge_p / (2.0 * Delta) * std::exp(-d / xi_p);
}

double cooperativity(double G_lj, double gamma) {
    if (gamma < 0.0) throw ConfigError("cooperativity: gamma must be >= 0");
    if (gamma == 0.0)
        throw InfiniteCooperativityError("infinite cooperativity: gamma = 0");
    const double x = G_lj / gamma;
    return x * x;
}

ProtocolTimes protocol_times(double G_lj) {
    if (G_lj == 0.0)
        throw UndefinedTimeError("protocol times undefined at zero coupling");
    const double t_ent = std::numbers::pi / (4.0 * std::abs(G_lj));
    return {t_ent, 2.0 * t_ent};
}

EffectiveCoupling effective_coupling(double Delta, double G_mod, double J_mod, int d,
                                     double gamma) {
    EffectiveCoupling ec;
    ec.d = d;
    ec.xi_prime = boundstate::localization_length(Delta, J_mod);
    ec.G_e_prime = boundstate::effective_jc(Delta, Delta, G_mod, J_mod).G_e;
    ec.G_lj = atom_atom_coupling(Delta, G_mod, J_mod, d);
    ec.C = gamma > 0.0 ? cooperativity(ec.G_lj, gamma)
                       : std::numeric_limits<double>::infinity();
    const auto pt = protocol_times(ec.G_lj);
    ec.t_ent = pt.t_ent;
    ec.t_transfer = pt.t_transfer;
    return ec;
}

SweepResult coupling_sweep(const SweepConfig& cfg) {
    if (cfg.r_values.empty() || cfg.d_values.empty())
        throw ConfigError("coupling_sweep: empty grid");
    const std::size_t nd = cfg.d_values.size();
    SweepResult result;
    result.rows.resize(cfg.r_values.size() * nd);

    parallel_for(result.rows.size(), [&](std::size_t i) {
        SweepRow& row = result.rows[i];
        row.r = cfg.r_values[i / nd];
        row.d = cfg.d_values[i % nd];
        row.delta_exact = std::numeric_limits<double>::quiet_NaN();
        try {
            const double Jm = cfg.J * std::cosh(2.0 * row.r);
            const double Gm = cfg.G * std::cosh(row.r);
            if (cfg.exact_delta) {
                const double delta = boundstate::solve_delta(cfg.Delta, Gm, Jm);
                row.delta_exact = delta;
                row.xi_prime = boundstate::localization_length(delta, Jm);
                row.G_e_prime = boundstate::effective_jc(delta, cfg.Delta, Gm, Jm).G_e;
                if (!(cfg.Delta > 0.0))
                    throw NotDispersiveError("not dispersive: Delta <= 0");
                const double sign = (row.d % 2 == 0) ? 1.0 : -1.0;
                row.G_lj = sign * row.G_e_prime * row.G_e_prime / (2.0 * cfg.Delta) *
                           std::exp(-row.d / row.xi_prime);
            } else {
                row.xi_prime = boundstate::localization_length(cfg.Delta, Jm);
                row.G_e_prime = boundstate::effective_jc(cfg.Delta, cfg.Delta, Gm, Jm).G_e;
                row.G_lj = atom_atom_coupling(cfg.Delta, Gm, Jm, row.d);
            }
            row.abs_G_lj = std::abs(row.G_lj);
            row.C = cfg.gamma > 0.0 ? cooperativity(row.G_lj, cfg.gamma)
                                    : std::numeric_limits<double>::infinity();
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
    });

    // monotonicity diagnostics over the valid rows
    auto& diag = result.diagnostics;
    for (std::size_t k = 0; k < nd; ++k) {
        for (std::size_t ir = 1; ir < cfg.r_values.size(); ++ir) {
            const SweepRow& a = result.rows[(ir - 1) * nd + k];
            const SweepRow& b = result.rows[ir * nd + k];
            if (a.ok && b.ok && !(b.abs_G_lj > a.abs_G_lj))
                diag.coupling_increasing_in_r = false;
        }
    }
    for (std::size_t ir = 0; ir < cfg.r_values.size(); ++ir) {
        for (std::size_t k = 1; k < nd; ++k) {
            const SweepRow& a = result.rows[ir * nd + k - 1];
            const SweepRow& b = result.rows[ir * nd + k];
            if (!a.ok || !b.ok || b.d != a.d + 1) continue;
            const double res = std::abs(std::log(b.abs_G_lj) - std::log(a.abs_G_lj) +
                                        1.0 / a.xi_prime);
            diag.max_log_slope_residual = std::max(diag.max_log_slope_residual, res);
        }
    }
    return result;
}

}  // namespace qarray::interaction
