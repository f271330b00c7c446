// interaction.hpp — photon-mediated atom-atom coupling, cooperativity, protocol times
#pragma once

#include <qarray/model.hpp>

#include <string>
#include <vector>

namespace qarray::interaction {

// G_lj = (-1)^d · 𝒢_e'²/(2Δ) · exp(-d/ξ') with ξ' and 𝒢_e' evaluated at δ -> Δ.
double atom_atom_coupling(double Delta, double G_mod, double J_mod, int d);

// C = (G_lj/γ)². Throws InfiniteCooperativityError at γ = 0.
double cooperativity(double G_lj, double gamma);

struct ProtocolTimes {
    double t_ent;       // π / (4|G_lj|)
    double t_transfer;  // π / (2|G_lj|)
};
ProtocolTimes protocol_times(double G_lj);

struct EffectiveCoupling {
    double G_lj = 0.0;
    int d = 0;
    double xi_prime = 0.0;
    double G_e_prime = 0.0;
    double C = 0.0;  // +inf when gamma = 0
    double t_ent = 0.0;
    double t_transfer = 0.0;
};
EffectiveCoupling effective_coupling(double Delta, double G_mod, double J_mod, int d,
                                     double gamma);

struct SweepConfig {
    double Delta = 10.0;
    double J = 10.0;
    double G = 1.0;
    double gamma = 0.0;
    std::vector<double> r_values;
    std::vector<int> d_values;
    bool exact_delta = false;  // solve δ and evaluate ξ, 𝒢_e at δ instead of Δ
};

struct SweepRow {
    double r = 0.0;
    int d = 0;
    double G_lj = 0.0;
    double abs_G_lj = 0.0;
    double C = 0.0;
    double xi_prime = 0.0;
    double G_e_prime = 0.0;
    double delta_exact = 0.0;  // NaN unless exact_delta was requested
    bool ok = true;
    std::string error;
};

struct SweepDiagnostics {
    // |G_lj| strictly increasing in r at every d
    bool coupling_increasing_in_r = true;
    // max over rows of |ln|G(d+1)| - ln|G(d)| + 1/ξ'|
    double max_log_slope_residual = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // grid order: r outer, d inner
    SweepDiagnostics diagnostics;
};

// Rows are computed in parallel (QARRAY_THREADS) and returned in grid order.
SweepResult coupling_sweep(const SweepConfig& cfg);

}  // namespace qarray::interaction
