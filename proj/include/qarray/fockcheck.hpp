// fockcheck.hpp — brute-force validation of the squeezed-frame mapping: the full
// non-number-conserving Hamiltonian on a tiny array in a truncated Fock space
#pragma once

#include <qarray/model.hpp>
#include <qarray/timeseries.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <cstddef>
#include <vector>

namespace qarray::fockcheck {

using SparseOp = Eigen::SparseMatrix<std::complex<double>>;

struct FockConfig {
    int n_sites = 5;  // odd, 3..7; sites run -N..N with N = (n_sites-1)/2
    int n_max = 5;    // per-site Fock cutoff, >= 4
    double r_target = 0.0;
    double t_max = 0.0;  // 0 -> one exchange window 2π/𝒢
    double dt = 0.0;     // output spacing; 0 -> t_max/200
    double max_truncation_error = 1e-3;  // per-site squeezed-vacuum truncation gate
    std::size_t max_nonzeros = 2'000'000;

    void validate() const;
    int half_size() const { return (n_sites - 1) / 2; }
};

struct FockBasis {
    int n_sites = 0;
    int n_max = 0;
    std::size_t photon_dim = 0;           // (n_max+1)^n_sites
    std::vector<std::size_t> stride;      // photon index strides per site

    static FockBasis make(const FockConfig& cfg);
    std::size_t dim() const { return 4 * photon_dim; }
    // atom block index: 2*(A excited) + (B excited); order {gg, ge, eg, ee}
    int atom_block(std::size_t idx) const { return static_cast<int>(idx / photon_dim); }
    int occupation(std::size_t idx, int site) const {
        return static_cast<int>((idx % photon_dim) / stride[site] % (n_max + 1));
    }
};

// Rotating-frame Hamiltonian with two-photon drives on each site,
// open boundaries, two atoms at p.j and p.l. Throws SizeError past the
// nonzero cap and ConfigError for atoms outside the tiny array.
SparseOp build_full_hamiltonian(const model::SystemParams& p, const FockConfig& cfg);

// Truncated single-mode squeezed vacuum (normalized after truncation).
Eigen::VectorXcd single_site_squeezed_vacuum(double r, double phi, int n_max);
// 1 - sum of kept probabilities of the untruncated state.
double squeezed_truncation_error(double r, int n_max);

// Product of single-site squeezed vacua over the photon space.
Eigen::VectorXcd squeezed_vacuum_photons(double r, double phi, const FockConfig& cfg);
// Full-space state: photon product ⊗ atom block (0=gg, 1=ge, 2=eg, 3=ee).
Eigen::VectorXcd squeezed_vacuum_product(double r, double phi, const FockConfig& cfg,
                                         int atom_block = 0);

// Photon-space ladder operators of one site and the transformed mode
// β = a cosh r + a† e^{-iφ} sinh r (annihilates the squeezed vacuum).
SparseOp site_annihilation(const FockConfig& cfg, int site);
SparseOp beta_operator(const FockConfig& cfg, int site, double r, double phi);

// Diagnostic diagonals over the full space.
Eigen::VectorXd total_excitation_diagonal(const FockConfig& cfg);  // photons + atoms
Eigen::VectorXd parity_diagonal(const FockConfig& cfg);            // (-1)^{N_exc}
Eigen::VectorXd atom_population_diagonal(const FockConfig& cfg, int which);

// Unitary evolution by Hermitian Lanczos stepping; records P_eA, P_eB,
// parity expectation and norm. Norm is conserved to 1e-8 over the run.
TimeSeries full_model_evolve(const SparseOp& H, const Eigen::VectorXcd& psi0,
                             const FockConfig& cfg, const std::vector<double>& t_grid);

struct DeviationReport {
    double r = 0.0;
    double ratio_band = 0.0;
    double ratio_atom = 0.0;
    int n_sites = 0;
    int n_max = 0;
    bool in_regime = false;
    double max_dev = 0.0;  // max_t |P_eA(full) - P_eA(tight-binding)|
};

// Evolves the full model from squeezed vacuum + atom A excited and the
// squeezed-frame single-excitation model from its vacuum + atom A excited,
// and reports the worst atomic-population deviation over the window.
DeviationReport frame_comparison(const model::SystemParams& p, const FockConfig& cfg);

}  // namespace qarray::fockcheck
