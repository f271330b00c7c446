#include <qarray/lattice.hpp>

#include <complex>

namespace qarray::lattice {

void SingleExcitationLattice::validate() const {
    if (N < 1) throw ConfigError("lattice: N must be >= 1");
    if (atom_sites.empty() || atom_sites.size() > 2)
        throw ConfigError("lattice: need one or two atoms");
    for (int s : atom_sites)
        if (s < -N || s > N) throw ConfigError("lattice: atom site outside -N..N");
    if (!(J_mod > 0.0)) throw ConfigError("lattice: J_mod must be > 0");
    if (G_mod < 0.0 || gamma < 0.0 || kappa_edge < 0.0)
        throw ConfigError("lattice: couplings and rates must be >= 0");
}

Eigen::MatrixXd SingleExcitationLattice::hamiltonian(double energy_shift) const {
    validate();
    const int na = n_atoms();
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim(), dim());
    for (int a = 0; a < na; ++a) H(a, a) = delta_q - energy_shift;
    for (int n = -N; n <= N; ++n) H(site_index(n), site_index(n)) = delta_s - energy_shift;
    for (int n = -N; n < N; ++n) {
        H(site_index(n), site_index(n + 1)) = -J_mod;
        H(site_index(n + 1), site_index(n)) = -J_mod;
    }
    for (int a = 0; a < na; ++a) {
        const int s = site_index(atom_sites[a]);
        H(a, s) = G_mod;
        H(s, a) = G_mod;
    }
    return H;
}

Eigen::MatrixXcd SingleExcitationLattice::effective_hamiltonian(double energy_shift) const {
    using namespace std::complex_literals;
    Eigen::MatrixXcd H = hamiltonian(energy_shift).cast<std::complex<double>>();
    for (int a = 0; a < n_atoms(); ++a) H(a, a) -= 0.5i * gamma;
    H(site_index(-N), site_index(-N)) -= 0.5i * kappa_edge;
    H(site_index(N), site_index(N)) -= 0.5i * kappa_edge;
    return H;
}

SingleExcitationLattice SingleExcitationLattice::from_params(
    const model::SystemParams& p, const model::SqueezedFrame& f) {
    p.validate();
    SingleExcitationLattice lat;
    lat.N = p.N;
    lat.atom_sites = {p.j, p.l};
    lat.delta_s = f.delta_s;
    lat.delta_q = p.delta_q;
    lat.J_mod = f.J_mod;
    lat.G_mod = f.G_mod;
    lat.gamma = p.gamma;
    lat.kappa_edge = p.kappa_edge;
    lat.validate();
    return lat;
}

SingleExcitationLattice SingleExcitationLattice::single_atom(
    const model::SqueezedFrame& f, double delta_q, int N, int j) {
    SingleExcitationLattice lat;
    lat.N = N;
    lat.atom_sites = {j};
    lat.delta_s = f.delta_s;
    lat.delta_q = delta_q;
    lat.J_mod = f.J_mod;
    lat.G_mod = f.G_mod;
    lat.validate();
    return lat;
}

}  // namespace qarray::lattice
