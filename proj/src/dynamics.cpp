#include <qarray/dynamics.hpp>

#include <qarray/boundstate.hpp>
#include <qarray/integrate.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>

namespace qarray::dynamics {

using namespace std::complex_literals;

namespace {

constexpr int kGG = 0, kGE = 1, kEG = 2, kEE = 3;

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw ConfigError("evolve: empty time grid");
    if (t_grid.front() < 0.0) throw ConfigError("evolve: time grid must start at t >= 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw ConfigError("evolve: time grid must be strictly increasing");
}

}  // namespace

Eigen::Vector4cd bell_state(int separation) {
    const double sign = (std::abs(separation) % 2 == 0) ? 1.0 : -1.0;
    Eigen::Vector4cd s = Eigen::Vector4cd::Zero();
    s(kEG) = 1.0 / std::numbers::sqrt2;
    s(kGE) = -1.0i * sign / std::numbers::sqrt2;
    return s;
}

double fidelity(const DensityMatrix4& rho, const Eigen::Vector4cd& target) {
    const std::complex<double> f = target.dot(rho * target);
    if (std::abs(f.imag()) > 1e-12)
        throw SolverError("fidelity: expectation has a non-real part");
    return f.real();
}

void validate_density_matrix(const DensityMatrix4& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ConfigError("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-12)
        throw ConfigError("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw ConfigError("density matrix has a negative eigenvalue");
}

DensityMatrix4 pure_density(const Eigen::Vector4cd& psi) {
    return psi * psi.adjoint();
}

EffectiveResult evolve_effective(double G_lj, double gamma, const DensityMatrix4& rho0,
                                 const std::vector<double>& t_grid) {
    check_grid(t_grid);
    validate_density_matrix(rho0);
    if (gamma < 0.0) throw ConfigError("evolve_effective: gamma must be >= 0");

    DensityMatrix4 H = DensityMatrix4::Zero();
    H(kEG, kGE) = G_lj;
    H(kGE, kEG) = G_lj;
    DensityMatrix4 sigA = DensityMatrix4::Zero();  // sigma_-^A
    sigA(kGG, kEG) = 1.0;
    sigA(kGE, kEE) = 1.0;
    DensityMatrix4 sigB = DensityMatrix4::Zero();  // sigma_-^B
    sigB(kGG, kGE) = 1.0;
    sigB(kEG, kEE) = 1.0;
    const DensityMatrix4 nA = sigA.adjoint() * sigA;
    const DensityMatrix4 nB = sigB.adjoint() * sigB;

    auto rhs = [&](const DensityMatrix4& rho) -> DensityMatrix4 {
        DensityMatrix4 d = -1.0i * (H * rho - rho * H);
        if (gamma > 0.0) {
            d += gamma * (sigA * rho * sigA.adjoint() - 0.5 * (nA * rho + rho * nA));
            d += gamma * (sigB * rho * sigB.adjoint() - 0.5 * (nB * rho + rho * nB));
        }
        return d;
    };

    const double T = t_grid.back();
    double h = T > 0.0 ? T / 2000.0 : 1.0;
    const double scale = std::max(std::abs(G_lj), gamma);
    if (scale > 0.0) h = std::min(h, 0.02 / scale);
    if (G_lj != 0.0) h = std::min(h, std::numbers::pi / (4.0 * std::abs(G_lj)) / 2000.0);
    h = integrate::rk4_calibrate_step(rhs, rho0, h, 1e-12, [](const DensityMatrix4& m) {
        return m.cwiseAbs().maxCoeff();
    });
    if (!(h > 0.0)) throw SolverError("evolve_effective: integrator step underflow");

    const Eigen::Vector4cd target = bell_state(G_lj < 0.0 ? 1 : 0);
    TimeSeries ts;
    ts.set_columns({"P_eA", "P_eB", "fidelity_S", "trace"});

    DensityMatrix4 rho = rho0;
    double t = 0.0;
    for (double tout : t_grid) {
        integrate::rk4_span(rhs, rho, t, tout, h);
        t = tout;
        const double peA = (rho(kEG, kEG) + rho(kEE, kEE)).real();
        const double peB = (rho(kGE, kGE) + rho(kEE, kEE)).real();
        ts.append(t, {peA, peB, fidelity(rho, target), rho.trace().real()});
    }
    return {std::move(ts), rho};
}

LatticeState excited_atom_state(const lattice::SingleExcitationLattice& lat,
                                int which_atom) {
    if (which_atom < 0 || which_atom >= lat.n_atoms())
        throw ConfigError("excited_atom_state: no such atom");
    LatticeState s;
    s.amplitudes = Eigen::VectorXcd::Zero(lat.dim());
    s.amplitudes(which_atom) = 1.0;
    return s;
}

namespace {

struct LatticeObserver {
    const lattice::SingleExcitationLattice& lat;
    int parity_sign;  // (-1)^{|l-j|} for two atoms
    TimeSeries ts;

    explicit LatticeObserver(const lattice::SingleExcitationLattice& l) : lat(l) {
        const bool two = lat.n_atoms() == 2;
        parity_sign =
            two && std::abs(lat.atom_sites[1] - lat.atom_sites[0]) % 2 != 0 ? -1 : 1;
        if (two)
            ts.set_columns({"P_eA", "P_eB", "fidelity_S", "trace", "photon_pop", "vacuum_pop"});
        else
            ts.set_columns({"P_eA", "trace", "photon_pop", "vacuum_pop"});
    }

    void record(double t, const Eigen::VectorXcd& psi, double initial_norm2) {
        const double norm2 = psi.squaredNorm();
        const double vacuum = std::max(0.0, initial_norm2 - norm2);
        const double peA = std::norm(psi(0));
        double photon = norm2 - peA;
        if (lat.n_atoms() == 2) {
            const double peB = std::norm(psi(1));
            photon -= peB;
            // reduced two-qubit fidelity to |S>; the photon sector traces to |gg>
            const double fid = 0.5 * (peA + peB) +
                               parity_sign * std::imag(psi(0) * std::conj(psi(1)));
            ts.append(t, {peA, peB, fid, peA + peB + photon + vacuum, photon, vacuum});
        } else {
            ts.append(t, {peA, peA + photon + vacuum, photon, vacuum});
        }
    }
};

double cloud_extent_40xi(const lattice::SingleExcitationLattice& lat) {
    const double Delta = lat.delta_q - (lat.delta_s + 2.0 * lat.J_mod);
    if (!(Delta > 0.0) || lat.G_mod <= 0.0) return 0.0;
    const double delta = boundstate::solve_delta(Delta, lat.G_mod, lat.J_mod);
    return 40.0 * boundstate::localization_length(delta, lat.J_mod);
}

}  // namespace

LatticeResult evolve_lattice(const lattice::SingleExcitationLattice& lat,
                             const LatticeState& psi0,
                             const std::vector<double>& t_grid, Propagator method) {
    lat.validate();
    check_grid(t_grid);
    if (psi0.amplitudes.size() != lat.dim())
        throw ConfigError("evolve_lattice: state dimension mismatch");
    const double n0 = psi0.amplitudes.squaredNorm() + psi0.vacuum_pop;
    if (std::abs(n0 - 1.0) > 1e-9)
        throw ConfigError("evolve_lattice: initial state is not normalized");

    LatticeObserver obs(lat);
    const double extent = cloud_extent_40xi(lat);
    if (extent >= lat.N)
        obs.ts.warnings.push_back("bound-state cloud reaches the boundary (40*xi >= N)");

    // Global energy shift to the atomic frequency; physical observables are
    // shift-invariant and the propagator sees a smaller spectral radius.
    const double shift = lat.delta_q;
    const double init_norm2 = psi0.amplitudes.squaredNorm() + psi0.vacuum_pop;

    Eigen::VectorXcd final_psi;
    if (method == Propagator::Spectral) {
        Eigen::MatrixXcd V;
        Eigen::VectorXcd lambda, w;
        if (!lat.dissipative()) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lat.hamiltonian(shift));
            if (es.info() != Eigen::Success)
                throw SolverError("evolve_lattice: eigendecomposition failed");
            V = es.eigenvectors().cast<std::complex<double>>();
            lambda = es.eigenvalues().cast<std::complex<double>>();
            w = V.adjoint() * psi0.amplitudes;
        } else {
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(lat.effective_hamiltonian(shift));
            if (es.info() != Eigen::Success)
                throw SolverError("evolve_lattice: eigendecomposition failed");
            V = es.eigenvectors();
            lambda = es.eigenvalues();
            w = Eigen::PartialPivLU<Eigen::MatrixXcd>(V).solve(psi0.amplitudes);
        }
        Eigen::VectorXcd coeff(lambda.size());
        for (double t : t_grid) {
            for (Eigen::Index k = 0; k < lambda.size(); ++k)
                coeff(k) = std::exp(-1.0i * t * lambda(k)) * w(k);
            final_psi = V * coeff;
            obs.record(t, final_psi, init_norm2);
        }
    } else {
        const Eigen::MatrixXcd Heff = lat.effective_hamiltonian(shift);
        auto rhs = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
            return -1.0i * (Heff * v);
        };
        // Gershgorin bound on the shifted spectrum
        double radius = 0.0;
        for (int i = 0; i < Heff.rows(); ++i)
            radius = std::max(radius, Heff.row(i).cwiseAbs().sum());
        const double T = t_grid.back();
        double h = std::min(0.02 / std::max(radius, 1e-12), T / 2000.0);
        Eigen::VectorXcd psi = psi0.amplitudes;
        double t = 0.0;
        for (double tout : t_grid) {
            integrate::rk4_span(rhs, psi, t, tout, h);
            t = tout;
            obs.record(t, psi, init_norm2);
        }
        final_psi = psi;
    }

    LatticeState final_state;
    final_state.amplitudes = final_psi;
    final_state.vacuum_pop = std::max(0.0, init_norm2 - final_psi.squaredNorm());
    return {std::move(obs.ts), std::move(final_state)};
}

}  // namespace qarray::dynamics
