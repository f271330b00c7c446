#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qarray/fockcheck.hpp>
#include <qarray/model.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace qarray;
using namespace qarray::fockcheck;
using namespace std::complex_literals;

namespace {

model::SystemParams ladder_params(double r, double ratio, int n_sites, double J = 1.0) {
    model::SystemParams p;
    p.J = J;
    const double J_mod = J * std::cosh(2.0 * r);
    const double delta_s = 0.5 * ratio * J_mod;
    p.delta_a = delta_s * std::cosh(2.0 * r);
    p.eta = 0.5 * p.delta_a * std::tanh(2.0 * r);
    p.delta_q = delta_s;
    p.N = (n_sites - 1) / 2;
    p.j = -1;
    p.l = 1;
    return p;
}

Eigen::SparseMatrix<std::complex<double>> diagonal_op(const Eigen::VectorXd& d) {
    Eigen::SparseMatrix<std::complex<double>> m(d.size(), d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) m.insert(i, i) = d(i);
    m.makeCompressed();
    return m;
}

}  // namespace

TEST_CASE("config validation") {
    FockConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n_sites = 4;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.n_sites = 9;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = FockConfig{};
    cfg.n_max = 3;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = FockConfig{};
    cfg.max_truncation_error = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("bare limit: diagonal Hamiltonian") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 4;
    model::SystemParams p;
    p.delta_a = 0.7;
    p.delta_q = 1.3;
    p.J = 0.0;
    p.G = 0.0;
    const auto H = build_full_hamiltonian(p, cfg);
    const FockBasis basis = FockBasis::make(cfg);

    Eigen::VectorXcd diag = H.diagonal();
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        int n = 0;
        for (int k = 0; k < 3; ++k) n += basis.occupation(i, k);
        const int atom = basis.atom_block(i);
        const double expect = 0.7 * n + 1.3 * ((atom >> 1) + (atom & 1));
        CHECK(std::abs(diag(i) - expect) < 1e-14);
    }
    Eigen::SparseMatrix<std::complex<double>> off = H;
    for (std::size_t i = 0; i < basis.dim(); ++i) off.coeffRef(i, i) = 0.0;
    CHECK(off.norm() < 1e-14);
}

TEST_CASE("conservation laws of the full Hamiltonian") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 5;

    // eta = 0 conserves the total excitation number
    model::SystemParams p0 = ladder_params(0.0, 20.0, 3);
    const auto H0 = build_full_hamiltonian(p0, cfg);
    const auto Nop = diagonal_op(total_excitation_diagonal(cfg));
    CHECK(Eigen::SparseMatrix<std::complex<double>>(H0 * Nop - Nop * H0).norm() < 1e-12);
    CHECK(Eigen::SparseMatrix<std::complex<double>>(
              Eigen::SparseMatrix<std::complex<double>>(H0.adjoint()) - H0)
              .norm() < 1e-12);

    // eta > 0 conserves excitation-number parity instead
    model::SystemParams p = ladder_params(0.3, 20.0, 3);
    const auto H = build_full_hamiltonian(p, cfg);
    const auto Pop = diagonal_op(parity_diagonal(cfg));
    CHECK(Eigen::SparseMatrix<std::complex<double>>(H * Nop - Nop * H).norm() > 1.0);
    CHECK(Eigen::SparseMatrix<std::complex<double>>(H * Pop - Pop * H).norm() < 1e-12);
    CHECK(Eigen::SparseMatrix<std::complex<double>>(
              Eigen::SparseMatrix<std::complex<double>>(H.adjoint()) - H)
              .norm() < 1e-12);

    // the same holds with a nonzero drive phase
    p.phi = 1.3;
    const auto Hphi = build_full_hamiltonian(p, cfg);
    CHECK(Eigen::SparseMatrix<std::complex<double>>(Hphi * Pop - Pop * Hphi).norm() < 1e-12);
    CHECK(Eigen::SparseMatrix<std::complex<double>>(
              Eigen::SparseMatrix<std::complex<double>>(Hphi.adjoint()) - Hphi)
              .norm() < 1e-12);
}

TEST_CASE("size guard") {
    FockConfig cfg;
    cfg.n_sites = 7;
    cfg.n_max = 6;
    const model::SystemParams p = ladder_params(0.1, 20.0, 7);
    CHECK_THROWS_AS(build_full_hamiltonian(p, cfg), SizeError);
}

TEST_CASE("squeezed vacuum: amplitudes, truncation, mean photon number") {
    // r = 0 is the bare vacuum
    const auto vac = single_site_squeezed_vacuum(0.0, 0.0, 6);
    CHECK(std::abs(vac(0) - 1.0) < 1e-15);
    CHECK(vac.tail(6).norm() < 1e-15);
    CHECK(squeezed_truncation_error(0.0, 4) == 0.0);

    // photon-number distribution: completeness, mean, truncation error
    for (double r : {0.2, 0.3, 0.5}) {
        std::vector<double> prob{1.0 / std::cosh(r)};  // even levels 0, 2, 4, ...
        for (int k = 1; k <= 400; ++k)
            prob.push_back(prob.back() * std::pow(std::tanh(r), 2) * (2.0 * k - 1.0) /
                           (2.0 * k));
        double total = 0.0, mean_n = 0.0;
        for (std::size_t k = 0; k < prob.size(); ++k) {
            total += prob[k];
            mean_n += 2.0 * k * prob[k];
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mean_n == doctest::Approx(std::pow(std::sinh(r), 2)).epsilon(1e-10));
        for (int n_max : {4, 6, 9}) {
            double kept = 0.0;
            for (int k = 0; 2 * k <= n_max; ++k) kept += prob[k];
            CHECK(squeezed_truncation_error(r, n_max) ==
                  doctest::Approx(1.0 - kept).epsilon(1e-10));
        }
    }

    // per-site mean photon number approaches sinh^2(r)
    const auto site = single_site_squeezed_vacuum(0.3, 0.0, 8);
    double mean = 0.0;
    for (int m = 0; m <= 8; ++m) mean += m * std::norm(site(m));
    CHECK(std::abs(mean - std::pow(std::sinh(0.3), 2)) < 1e-4);

    // odd components vanish
    for (int m = 1; m <= 8; m += 2) CHECK(std::abs(site(m)) == 0.0);
}

TEST_CASE("squeezed vacuum is annihilated by the transformed mode") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 8;
    for (double phi : {0.0, 1.3}) {
        const auto psi = squeezed_vacuum_photons(0.3, phi, cfg);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        for (int site = -1; site <= 1; ++site) {
            const auto beta = beta_operator(cfg, site, 0.3, phi);
            CHECK((beta * psi).norm() < 1e-5);
            // the opposite-sign convention does not annihilate it
            const auto wrong = SparseOp(
                std::cosh(0.3) * site_annihilation(cfg, site) -
                (std::exp(-1.0i * phi) * std::sinh(0.3)) *
                    SparseOp(site_annihilation(cfg, site).adjoint()));
            CHECK((wrong * psi).norm() > 0.1 * std::sinh(0.3));
        }
    }
}

TEST_CASE("squeezed vacuum: truncation gate") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 4;
    CHECK_THROWS_AS(squeezed_vacuum_photons(1.0, 0.0, cfg), ConfigError);
    CHECK_NOTHROW(squeezed_vacuum_photons(0.1, 0.0, cfg));

    // the full-space embedding places the photons in the requested atom block
    const auto full = squeezed_vacuum_product(0.1, 0.0, cfg, 2);
    const FockBasis basis = FockBasis::make(cfg);
    CHECK(std::abs(full.segment(2 * basis.photon_dim, basis.photon_dim).norm() - 1.0) <
          1e-12);
    CHECK(full.head(2 * basis.photon_dim).norm() == 0.0);
}

TEST_CASE("full-model evolution: stationary eigenvector") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 4;
    model::SystemParams p;
    p.delta_a = 0.9;
    p.delta_q = 2.1;
    p.J = 0.0;
    p.G = 0.0;
    const auto H = build_full_hamiltonian(p, cfg);
    const auto psi0 = squeezed_vacuum_product(0.0, 0.0, cfg, 2);  // |e_A g_B, vac>
    const auto ts = full_model_evolve(H, psi0, cfg, linspace(0.0, 5.0, 21));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(std::abs(ts.value("P_eA", i) - 1.0) < 1e-12);
        CHECK(std::abs(ts.value("norm", i) - 1.0) < 1e-12);
    }
}

TEST_CASE("full-model evolution: Jaynes-Cummings limit") {
    // decoupled cavities (J = 0), each atom resonant with its own site
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 4;
    model::SystemParams p;
    p.delta_a = 5.0;
    p.delta_q = 5.0;
    p.J = 0.0;
    p.eta = 0.0;
    p.j = -1;
    p.l = 1;
    p.N = 1;
    const auto H = build_full_hamiltonian(p, cfg);
    const auto psi0 = squeezed_vacuum_product(0.0, 0.0, cfg, 2);
    const auto grid = linspace(0.0, std::numbers::pi, 101);
    const auto ts = full_model_evolve(H, psi0, cfg, grid);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double expect = std::pow(std::cos(grid[i]), 2);  // vacuum Rabi at 2G
        CHECK(std::abs(ts.value("P_eA", i) - expect) < 1e-8);
        CHECK(ts.value("P_eB", i) < 1e-12);
    }
}

TEST_CASE("full-model evolution: parity and norm are conserved under the drive") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 6;
    const model::SystemParams p = ladder_params(0.3, 20.0, 3);
    const auto H = build_full_hamiltonian(p, cfg);
    const auto psi0 = squeezed_vacuum_product(0.3, 0.0, cfg, 2);
    const auto ts = full_model_evolve(H, psi0, cfg,
                                      linspace(0.0, 2.0 * std::numbers::pi, 201));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(std::abs(ts.value("parity", i) - ts.value("parity", 0)) < 1e-8);
        CHECK(std::abs(ts.value("norm", i) - 1.0) < 1e-8);
    }
    CHECK(ts.value("parity", 0) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("frame comparison: eta = 0 control") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 4;
    const auto rep = frame_comparison(ladder_params(0.0, 20.0, 3), cfg);
    CHECK(rep.max_dev < 1e-6);
    CHECK(rep.in_regime);
    CHECK(rep.ratio_band == doctest::Approx(20.0));
}

TEST_CASE("frame comparison: deviation shrinks along the detuning ladder") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 6;
    double prev = 1e300;
    for (double ratio : {10.0, 14.0, 20.0}) {
        const auto rep = frame_comparison(ladder_params(0.3, ratio, 3), cfg);
        CHECK(rep.max_dev < 0.05);
        CHECK(rep.max_dev < prev);
        prev = rep.max_dev;
    }
}

TEST_CASE("frame comparison: violated regime is detected") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 5;
    const auto rep = frame_comparison(ladder_params(0.3, 2.0, 3), cfg);
    CHECK_FALSE(rep.in_regime);
    CHECK(rep.max_dev > 0.2);
}

TEST_CASE("frame comparison: the drive phase does not move the deviation") {
    FockConfig cfg;
    cfg.n_sites = 3;
    cfg.n_max = 5;
    auto p = ladder_params(0.3, 20.0, 3);
    const auto rep0 = frame_comparison(p, cfg);
    p.phi = 1.3;
    const auto rep1 = frame_comparison(p, cfg);
    CHECK(std::abs(rep0.max_dev - rep1.max_dev) < 1e-9);
}

TEST_CASE("cutoff robustness at a converged truncation") {
    // r = 0.3: one more Fock level moves the trajectory by less than 1e-4
    auto run = [](int n_max) {
        FockConfig cfg;
        cfg.n_sites = 3;
        cfg.n_max = n_max;
        const auto p = ladder_params(0.3, 20.0, 3);
        const auto H = build_full_hamiltonian(p, cfg);
        const auto psi0 = squeezed_vacuum_product(0.3, 0.0, cfg, 2);
        const double T = 2.0 * std::numbers::pi / std::cosh(0.3);
        return full_model_evolve(H, psi0, cfg, linspace(0.0, T, 201));
    };
    const auto a = run(11), b = run(12);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dev = std::max(dev, std::abs(a.value("P_eA", i) - b.value("P_eA", i)));
    CHECK(dev < 1e-4);
}
