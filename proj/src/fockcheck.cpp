#include <qarray/fockcheck.hpp>

#include <qarray/dynamics.hpp>
#include <qarray/lattice.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace qarray::fockcheck {

using namespace std::complex_literals;
using Triplet = Eigen::Triplet<std::complex<double>>;

void FockConfig::validate() const {
    if (n_sites < 3 || n_sites > 7 || n_sites % 2 == 0)
        throw ConfigError("FockConfig: n_sites must be 3, 5 or 7");
    if (n_max < 4) throw ConfigError("FockConfig: n_max must be >= 4");
    if (r_target < 0.0) throw ConfigError("FockConfig: r_target must be >= 0");
    if (t_max < 0.0 || dt < 0.0) throw ConfigError("FockConfig: negative time window");
    if (!(max_truncation_error > 0.0) || max_truncation_error > 0.1)
        throw ConfigError("FockConfig: max_truncation_error must be in (0, 0.1]");
}

FockBasis FockBasis::make(const FockConfig& cfg) {
    cfg.validate();
    FockBasis b;
    b.n_sites = cfg.n_sites;
    b.n_max = cfg.n_max;
    b.stride.resize(cfg.n_sites);
    std::size_t s = 1;
    for (int k = 0; k < cfg.n_sites; ++k) {
        b.stride[k] = s;
        s *= static_cast<std::size_t>(cfg.n_max + 1);
    }
    b.photon_dim = s;
    return b;
}

// Operator-level builder: degenerate couplings (J = 0, G = 0) are allowed so
// single-cavity limits can be exercised directly.
SparseOp build_full_hamiltonian(const model::SystemParams& p, const FockConfig& cfg) {
    const FockBasis basis = FockBasis::make(cfg);
    const int N = cfg.half_size();
    if (p.j < -N || p.l > N || p.j > p.l)
        throw ConfigError("build_full_hamiltonian: atoms outside the tiny array");
    if (p.J < 0.0 || p.G < 0.0 || p.eta < 0.0)
        throw ConfigError("build_full_hamiltonian: couplings must be >= 0");

    const std::size_t bound =
        basis.dim() * static_cast<std::size_t>(4 * cfg.n_sites + 1);
    if (bound > cfg.max_nonzeros) {
        std::ostringstream msg;
        msg << "build_full_hamiltonian: nonzero bound " << bound << " exceeds cap "
            << cfg.max_nonzeros;
        throw SizeError(msg.str());
    }

    const int cap = cfg.n_max;
    const std::size_t pd = basis.photon_dim;
    const std::complex<double> drive_up = p.eta * std::exp(-1.0i * p.phi);
    const std::complex<double> drive_dn = p.eta * std::exp(1.0i * p.phi);
    const int site_j = p.j + N, site_l = p.l + N;

    std::vector<Triplet> trip;
    trip.reserve(bound);
    std::vector<int> n(cfg.n_sites);
    for (std::size_t col = 0; col < basis.dim(); ++col) {
        const int atom = basis.atom_block(col);
        const int bA = atom >> 1, bB = atom & 1;
        int n_tot = 0;
        for (int k = 0; k < cfg.n_sites; ++k) {
            n[k] = basis.occupation(col, k);
            n_tot += n[k];
        }
        trip.emplace_back(col, col, p.delta_a * n_tot + p.delta_q * (bA + bB));
        // hopping -J (a†_k a_{k+1} + h.c.)
        for (int k = 0; k + 1 < cfg.n_sites; ++k) {
            if (n[k] < cap && n[k + 1] > 0)
                trip.emplace_back(col + basis.stride[k] - basis.stride[k + 1], col,
                                  -p.J * std::sqrt((n[k] + 1.0) * n[k + 1]));
            if (n[k] > 0 && n[k + 1] < cap)
                trip.emplace_back(col - basis.stride[k] + basis.stride[k + 1], col,
                                  -p.J * std::sqrt(n[k] * (n[k + 1] + 1.0)));
        }
        // two-photon drive +η(a†² e^{-iφ} + a² e^{iφ}) per site
        for (int k = 0; k < cfg.n_sites; ++k) {
            if (n[k] + 2 <= cap)
                trip.emplace_back(col + 2 * basis.stride[k], col,
                                  drive_up * std::sqrt((n[k] + 1.0) * (n[k] + 2.0)));
            if (n[k] >= 2)
                trip.emplace_back(col - 2 * basis.stride[k], col,
                                  drive_dn * std::sqrt(n[k] * (n[k] - 1.0)));
        }
        // +G (a†_j σ_-^A + a_j σ_+^A) and the same for atom B at site l
        if (bA == 1 && n[site_j] < cap)
            trip.emplace_back(col - 2 * pd + basis.stride[site_j], col,
                              p.G * std::sqrt(n[site_j] + 1.0));
        if (bA == 0 && n[site_j] > 0)
            trip.emplace_back(col + 2 * pd - basis.stride[site_j], col,
                              p.G * std::sqrt(static_cast<double>(n[site_j])));
        if (bB == 1 && n[site_l] < cap)
            trip.emplace_back(col - pd + basis.stride[site_l], col,
                              p.G * std::sqrt(n[site_l] + 1.0));
        if (bB == 0 && n[site_l] > 0)
            trip.emplace_back(col + pd - basis.stride[site_l], col,
                              p.G * std::sqrt(static_cast<double>(n[site_l])));
    }

    SparseOp H(basis.dim(), basis.dim());
    H.setFromTriplets(trip.begin(), trip.end());
    H.makeCompressed();
    return H;
}

double squeezed_truncation_error(double r, int n_max) {
    if (r < 0.0) throw ConfigError("squeezed_truncation_error: r must be >= 0");
    const double t = std::tanh(r);
    double prob = 1.0, kept = 1.0;
    for (int m = 2; m <= n_max; m += 2) {
        prob *= t * t * (m - 1.0) / m;
        kept += prob;
    }
    return 1.0 - kept / std::cosh(r);
}

Eigen::VectorXcd single_site_squeezed_vacuum(double r, double phi, int n_max) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_max + 1);
    c(0) = 1.0;
    const std::complex<double> step = -std::exp(-1.0i * phi) * std::tanh(r);
    for (int m = 2; m <= n_max; m += 2)
        c(m) = step * std::sqrt((m - 1.0) / m) * c(m - 2);
    c.normalize();
    return c;
}

Eigen::VectorXcd squeezed_vacuum_photons(double r, double phi, const FockConfig& cfg) {
    cfg.validate();
    const double err = squeezed_truncation_error(r, cfg.n_max);
    if (err >= cfg.max_truncation_error) {
        std::ostringstream msg;
        msg << "squeezed vacuum truncation error " << err << " exceeds gate "
            << cfg.max_truncation_error << " (raise n_max or the gate)";
        throw ConfigError(msg.str());
    }
    const Eigen::VectorXcd site = single_site_squeezed_vacuum(r, phi, cfg.n_max);
    Eigen::VectorXcd prod = site;
    for (int k = 1; k < cfg.n_sites; ++k) {
        Eigen::VectorXcd next(prod.size() * site.size());
        for (Eigen::Index i = 0; i < prod.size(); ++i)
            next.segment(i * site.size(), site.size()) = prod(i) * site;
        prod = std::move(next);
    }
    return prod;
}

Eigen::VectorXcd squeezed_vacuum_product(double r, double phi, const FockConfig& cfg,
                                         int atom_block) {
    if (atom_block < 0 || atom_block > 3)
        throw ConfigError("squeezed_vacuum_product: atom block must be 0..3");
    const Eigen::VectorXcd photons = squeezed_vacuum_photons(r, phi, cfg);
    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(4 * photons.size());
    full.segment(atom_block * photons.size(), photons.size()) = photons;
    return full;
}

SparseOp site_annihilation(const FockConfig& cfg, int site) {
    const FockBasis basis = FockBasis::make(cfg);
    const int k = site + cfg.half_size();
    if (k < 0 || k >= cfg.n_sites) throw ConfigError("site_annihilation: site out of range");
    std::vector<Triplet> trip;
    trip.reserve(basis.photon_dim);
    for (std::size_t col = 0; col < basis.photon_dim; ++col) {
        const int nk = static_cast<int>(col / basis.stride[k] % (cfg.n_max + 1));
        if (nk > 0)
            trip.emplace_back(col - basis.stride[k], col, std::sqrt(static_cast<double>(nk)));
    }
    SparseOp a(basis.photon_dim, basis.photon_dim);
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

SparseOp beta_operator(const FockConfig& cfg, int site, double r, double phi) {
    const SparseOp a = site_annihilation(cfg, site);
    const SparseOp ad = SparseOp(a.adjoint());
    return SparseOp(std::cosh(r) * a +
                    (std::exp(-1.0i * phi) * std::sinh(r)) * ad);
}

Eigen::VectorXd total_excitation_diagonal(const FockConfig& cfg) {
    const FockBasis basis = FockBasis::make(cfg);
    Eigen::VectorXd d(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const int atom = basis.atom_block(i);
        int n = (atom >> 1) + (atom & 1);
        for (int k = 0; k < cfg.n_sites; ++k) n += basis.occupation(i, k);
        d(i) = n;
    }
    return d;
}

Eigen::VectorXd parity_diagonal(const FockConfig& cfg) {
    Eigen::VectorXd d = total_excitation_diagonal(cfg);
    for (Eigen::Index i = 0; i < d.size(); ++i)
        d(i) = (static_cast<long>(d(i)) % 2 == 0) ? 1.0 : -1.0;
    return d;
}

Eigen::VectorXd atom_population_diagonal(const FockConfig& cfg, int which) {
    if (which < 0 || which > 1) throw ConfigError("atom_population_diagonal: which is 0 or 1");
    const FockBasis basis = FockBasis::make(cfg);
    Eigen::VectorXd d(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const int atom = basis.atom_block(i);
        d(i) = which == 0 ? (atom >> 1) : (atom & 1);
    }
    return d;
}

namespace {

struct GershgorinBounds {
    double center = 0.0;
    double radius = 0.0;
};

GershgorinBounds spectral_bounds(const SparseOp& H) {
    Eigen::VectorXd diag(H.rows()), rad = Eigen::VectorXd::Zero(H.rows());
    diag.setZero();
    for (int k = 0; k < H.outerSize(); ++k) {
        for (SparseOp::InnerIterator it(H, k); it; ++it) {
            if (it.row() == it.col())
                diag(it.row()) = it.value().real();
            else
                rad(it.row()) += std::abs(it.value());
        }
    }
    const double lo = (diag - rad).minCoeff();
    const double hi = (diag + rad).maxCoeff();
    return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

// One Lanczos step psi <- exp(-i dt H) psi; returns a relative local error
// estimate (out-coupling of the last Krylov vector). Reorthogonalization runs
// as two block GEMVs against the stored basis.
double krylov_step(const SparseOp& H, double shift, Eigen::VectorXcd& psi, double dt,
                   int m_max) {
    const double nrm = psi.norm();
    if (nrm == 0.0) return 0.0;
    const int m = std::min<int>(m_max, static_cast<int>(psi.size()));

    Eigen::MatrixXcd V(psi.size(), m);
    V.col(0) = psi / nrm;
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);
    double beta_tail = 0.0;
    int used = m;
    Eigen::VectorXcd w(psi.size());
    for (int k = 0; k < m; ++k) {
        w.noalias() = H * V.col(k);
        w -= shift * V.col(k);
        if (k > 0) w -= beta(k - 1) * V.col(k - 1);
        const auto Vk = V.leftCols(k + 1);
        const std::complex<double> a = V.col(k).dot(w);
        alpha(k) = a.real();
        w -= a * V.col(k);
        w -= Vk * (Vk.adjoint() * w).eval();  // one full reorthogonalization pass
        const double b = w.norm();
        beta_tail = b;
        if (b < 1e-14) {  // happy breakdown: exact in the spanned subspace
            used = k + 1;
            beta_tail = 0.0;
            break;
        }
        if (k + 1 < m) {
            beta(k) = b;
            V.col(k + 1) = w / b;
        }
    }

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(used, used);
    for (int k = 0; k < used; ++k) {
        T(k, k) = alpha(k);
        if (k + 1 < used) T(k, k + 1) = T(k + 1, k) = beta(k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(used);
    for (int k = 0; k < used; ++k) {
        std::complex<double> acc = 0.0;
        for (int q = 0; q < used; ++q)
            acc += es.eigenvectors()(k, q) * std::exp(-1.0i * dt * es.eigenvalues()(q)) *
                   es.eigenvectors()(0, q);
        y(k) = acc;
    }

    psi.noalias() = V.leftCols(used) * y;
    psi *= nrm * std::exp(-1.0i * dt * shift);
    return beta_tail * std::abs(y(used - 1)) * dt;
}

constexpr int kKrylovDim = 30;
constexpr double kKrylovTol = 1e-12;

}  // namespace

TimeSeries full_model_evolve(const SparseOp& H, const Eigen::VectorXcd& psi0,
                             const FockConfig& cfg, const std::vector<double>& t_grid) {
    cfg.validate();
    if (t_grid.size() < 2) throw ConfigError("full_model_evolve: need at least two times");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw ConfigError("full_model_evolve: times must be strictly increasing");
    if (t_grid.front() < 0.0) throw ConfigError("full_model_evolve: negative start time");
    if (psi0.size() != H.rows())
        throw ConfigError("full_model_evolve: state dimension mismatch");
    if (std::abs(psi0.norm() - 1.0) > 1e-9)
        throw ConfigError("full_model_evolve: initial state must be normalized");

    const Eigen::VectorXd peA = atom_population_diagonal(cfg, 0);
    const Eigen::VectorXd peB = atom_population_diagonal(cfg, 1);
    const Eigen::VectorXd par = parity_diagonal(cfg);
    const GershgorinBounds gb = spectral_bounds(H);

    // deterministic step refinement from the first interval
    double step = t_grid[1] - t_grid[0];
    for (int halvings = 0; halvings < 30; ++halvings) {
        Eigen::VectorXcd trial = psi0;
        if (krylov_step(H, gb.center, trial, step, kKrylovDim) <= kKrylovTol) break;
        step *= 0.5;
    }
    if (!(step > 0.0)) throw SolverError("full_model_evolve: step underflow");

    TimeSeries ts;
    ts.set_columns({"P_eA", "P_eB", "parity", "norm"});
    Eigen::VectorXcd psi = psi0;
    double t = 0.0;
    for (double tout : t_grid) {
        double span = tout - t;
        if (span > 0.0) {
            const long n = std::max(1L, static_cast<long>(std::ceil(span / step - 1e-12)));
            const double h = span / static_cast<double>(n);
            for (long i = 0; i < n; ++i) krylov_step(H, gb.center, psi, h, kKrylovDim);
        }
        t = tout;
        const Eigen::VectorXd prob = psi.cwiseAbs2();
        ts.append(t, {peA.dot(prob), peB.dot(prob), par.dot(prob), std::sqrt(prob.sum())});
    }
    return ts;
}

DeviationReport frame_comparison(const model::SystemParams& p, const FockConfig& cfg) {
    cfg.validate();
    const model::SqueezedFrame frame = model::squeezed_frame(p);
    const model::RegimeReport regime = model::validate_regime(frame, p.delta_q);

    const double T = cfg.t_max > 0.0 ? cfg.t_max : 2.0 * std::numbers::pi / frame.G_mod;
    const int n_out = cfg.dt > 0.0 ? std::max(2, static_cast<int>(std::ceil(T / cfg.dt)))
                                   : 200;
    const std::vector<double> grid = linspace(0.0, T, n_out + 1);

    const SparseOp H = build_full_hamiltonian(p, cfg);
    const Eigen::VectorXcd psi0 =
        squeezed_vacuum_product(frame.r, p.phi, cfg, /*atom_block=*/2);
    const TimeSeries full = full_model_evolve(H, psi0, cfg, grid);

    lattice::SingleExcitationLattice lat;
    lat.N = cfg.half_size();
    lat.atom_sites = {p.j, p.l};
    lat.delta_s = frame.delta_s;
    lat.delta_q = p.delta_q;
    lat.J_mod = frame.J_mod;
    lat.G_mod = frame.G_mod;
    const auto beta = dynamics::evolve_lattice(lat, dynamics::excited_atom_state(lat), grid);

    double dev = 0.0;
    const auto& a = full.column("P_eA");
    const auto& b = beta.series.column("P_eA");
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));

    DeviationReport rep;
    rep.r = frame.r;
    rep.ratio_band = regime.ratio_band;
    rep.ratio_atom = regime.ratio_atom;
    rep.n_sites = cfg.n_sites;
    rep.n_max = cfg.n_max;
    rep.in_regime = regime.pass();
    rep.max_dev = dev;
    return rep;
}

}  // namespace qarray::fockcheck
