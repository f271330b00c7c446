// lattice.hpp — single-excitation sector of the squeezed-frame tight-binding model
#pragma once

#include <qarray/model.hpp>

#include <Eigen/Dense>

#include <vector>

namespace qarray::lattice {

// Basis order: [atoms..., photon at site -N..N]. One or two atoms.
struct SingleExcitationLattice {
    int N = 1;
    std::vector<int> atom_sites;
    double delta_s = 0.0;
    double delta_q = 0.0;
    double J_mod = 0.0;
    double G_mod = 0.0;
    double gamma = 0.0;       // atomic decay, enters as -i γ/2 on atom entries
    double kappa_edge = 0.0;  // edge damping, -i κ/2 on sites ±N

    int n_atoms() const { return static_cast<int>(atom_sites.size()); }
    int n_sites() const { return 2 * N + 1; }
    int dim() const { return n_atoms() + n_sites(); }
    int site_index(int n) const { return n_atoms() + n + N; }
    bool dissipative() const { return gamma > 0.0 || kappa_edge > 0.0; }
    void validate() const;

    // Hermitian part, all diagonal entries shifted down by energy_shift.
    Eigen::MatrixXd hamiltonian(double energy_shift = 0.0) const;
    // Non-Hermitian effective operator including the -i/2 loss terms.
    Eigen::MatrixXcd effective_hamiltonian(double energy_shift = 0.0) const;

    static SingleExcitationLattice from_params(const model::SystemParams& p,
                                               const model::SqueezedFrame& f);
    static SingleExcitationLattice single_atom(const model::SqueezedFrame& f,
                                               double delta_q, int N, int j);
};

}  // namespace qarray::lattice
