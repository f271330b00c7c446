// dynamics.hpp — time evolution: effective two-qubit Lindblad model and exact
// single-excitation lattice dynamics
#pragma once

#include <qarray/lattice.hpp>
#include <qarray/timeseries.hpp>

#include <Eigen/Dense>

#include <vector>

namespace qarray::dynamics {

// Two-qubit basis order {gg, ge, eg, ee}; first letter is atom A.
using DensityMatrix4 = Eigen::Matrix4cd;

// |S> = (|eg> - i(-1)^d |ge>)/sqrt(2)
Eigen::Vector4cd bell_state(int separation);

// F = <target|rho|target>
double fidelity(const DensityMatrix4& rho, const Eigen::Vector4cd& target);

// Hermiticity to 1e-12, trace 1 to 1e-9, eigenvalues >= -1e-10.
void validate_density_matrix(const DensityMatrix4& rho);

DensityMatrix4 pure_density(const Eigen::Vector4cd& psi);

// dρ/dt = -i[H_AB, ρ] + γ Σ_x D[σ_-^x]ρ with H_AB = G_lj(σ_+^A σ_-^B + h.c.).
// Fixed-step RK4 with h <= min(0.02/max(|G_lj|, γ), t_ent/2000), refined by a
// half-step Richardson check. Columns: P_eA, P_eB, fidelity_S, trace.
struct EffectiveResult {
    TimeSeries series;
    DensityMatrix4 final_rho;
};
EffectiveResult evolve_effective(double G_lj, double gamma, const DensityMatrix4& rho0,
                                 const std::vector<double>& t_grid);

// Pure trajectory in the single-excitation sector; every jump operator maps it
// to the unique global vacuum, so the norm deficit is the vacuum population.
struct LatticeState {
    Eigen::VectorXcd amplitudes;  // [atoms..., sites -N..N]
    double vacuum_pop = 0.0;
};
LatticeState excited_atom_state(const lattice::SingleExcitationLattice& lat,
                                int which_atom = 0);

enum class Propagator {
    Spectral,     // exact eigendecomposition of the time-independent H_eff
    FixedStepRk4  // cross-check path
};

// Columns: P_eA, [P_eB, fidelity_S,] photon_pop, vacuum_pop, trace.
// Emits a warning flag when the bound-state cloud (40ξ) touches the boundary.
struct LatticeResult {
    TimeSeries series;
    LatticeState final_state;
};
LatticeResult evolve_lattice(const lattice::SingleExcitationLattice& lat,
                             const LatticeState& psi0,
                             const std::vector<double>& t_grid,
                             Propagator method = Propagator::Spectral);

}  // namespace qarray::dynamics
