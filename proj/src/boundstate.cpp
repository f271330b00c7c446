#include <qarray/boundstate.hpp>

#include <qarray/lattice.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <sstream>

namespace qarray::boundstate {

double acosh1p(double x) {
    if (x < 0.0) throw ConfigError("acosh1p: argument must be >= 0");
    return std::log1p(x + std::sqrt(x * (2.0 + x)));
}

namespace {

double relation_rhs(double delta, double Delta, double G_mod, double J_mod) {
    return Delta + G_mod * G_mod / std::sqrt(delta * (delta + 4.0 * J_mod));
}

double solve_delta_bisect(double Delta, double G_mod, double J_mod) {
    auto f = [&](double d) { return relation_rhs(d, Delta, G_mod, J_mod) - d; };
    double lo = 1e-30 * std::max({1.0, J_mod, std::abs(Delta)});
    int guard = 0;
    while (f(lo) <= 0.0) {  // f -> +inf as delta -> 0+
        lo *= 0.5;
        if (++guard > 4000) throw SolverError("solve_delta: failed to bracket the root");
    }
    double hi = std::max(Delta, 0.0) + G_mod + 1.0;
    guard = 0;
    while (f(hi) > 0.0) {
        hi *= 2.0;
        if (++guard > 200) throw SolverError("solve_delta: failed to bracket the root");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-16 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double solve_delta(double Delta, double G_mod, double J_mod) {
    if (!(J_mod > 0.0)) throw ConfigError("solve_delta: J_mod must be > 0");
    if (G_mod < 0.0) throw ConfigError("solve_delta: G_mod must be >= 0");
    if (G_mod * G_mod == 0.0) {  // including couplings whose square underflows
        if (Delta <= 0.0)
            throw NoBoundStateError("solve_delta: decoupled atom below the band edge");
        return Delta;
    }
    // Fixed point delta <- Delta + G²/sqrt(delta²+4J delta); contractive in the
    // dispersive regime. Fall back to bisection whenever it stalls or escapes.
    double d = std::max(Delta, G_mod);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const double next = relation_rhs(d, Delta, G_mod, J_mod);
        if (!(next > 0.0) || !std::isfinite(next)) break;
        if (std::abs(next - d) <= 1e-15 * std::max(1.0, next)) {
            d = next;
            converged = true;
            break;
        }
        d = next;
    }
    if (!converged) d = solve_delta_bisect(Delta, G_mod, J_mod);
    const double residual = std::abs(d - relation_rhs(d, Delta, G_mod, J_mod));
    if (!(residual < 1e-12 * std::max(1.0, std::abs(d)))) {
        std::ostringstream msg;
        msg << "solve_delta: no convergence, residual " << residual << " at delta " << d;
        throw SolverError(msg.str());
    }
    return d;
}

double localization_length(double delta, double J_mod) {
    if (!(delta > 0.0)) throw ConfigError("localization_length: delta must be > 0");
    if (!(J_mod > 0.0)) throw ConfigError("localization_length: J_mod must be > 0");
    return 1.0 / acosh1p(delta / (2.0 * J_mod));
}

double amplitude(double delta, double J_mod, int offset) {
    const double inv_xi = acosh1p(delta / (2.0 * J_mod));
    const int a = std::abs(offset);
    const double sign = (a % 2 == 0) ? 1.0 : -1.0;
    // 1/sqrt(coth(1/xi)) = sqrt(tanh(1/xi))
    return sign * std::exp(-a * inv_xi) * std::sqrt(std::tanh(inv_xi));
}

std::vector<double> profile(double delta, double J_mod, int half_width) {
    if (half_width < 0) throw ConfigError("profile: half_width must be >= 0");
    std::vector<double> c(2 * half_width + 1);
    for (int n = -half_width; n <= half_width; ++n)
        c[n + half_width] = amplitude(delta, J_mod, n);
    return c;
}

JcParams effective_jc(double delta, double Delta, double G_mod, double J_mod) {
    if (!(delta > 0.0)) throw ConfigError("effective_jc: delta must be > 0");
    JcParams jc;
    jc.G_e = std::sqrt(2.0) * G_mod / std::pow(1.0 + 4.0 * J_mod / delta, 0.25);
    jc.Delta_e = Delta + delta / (1.0 + delta / (2.0 * J_mod));
    return jc;
}

BoundState solve(const model::SqueezedFrame& frame, double delta_q) {
    const double Delta = model::band_edge_detuning(delta_q, frame);
    BoundState bs;
    bs.delta = solve_delta(Delta, frame.G_mod, frame.J_mod);
    bs.Delta_BS = model::upper_band_edge(frame) + bs.delta;
    bs.xi = localization_length(bs.delta, frame.J_mod);
    const JcParams jc = effective_jc(bs.delta, Delta, frame.G_mod, frame.J_mod);
    bs.G_e = jc.G_e;
    bs.Delta_e = jc.Delta_e;
    bs.theta = std::numeric_limits<double>::quiet_NaN();
    return bs;
}

LatticeBoundState lattice_bound_state(const model::SystemParams& p,
                                      const model::SqueezedFrame& f) {
    const auto lat = lattice::SingleExcitationLattice::single_atom(f, p.delta_q, p.N, p.j);
    const double Delta = model::band_edge_detuning(p.delta_q, f);
    if (f.G_mod > 0.0 && Delta > 0.0) {
        // cloud must not touch the boundary
        const double xi = localization_length(solve_delta(Delta, f.G_mod, f.J_mod), f.J_mod);
        if (40.0 * xi >= p.N)
            throw ConfigError("lattice_bound_state: N too small, 40*xi >= N");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lat.hamiltonian());
    if (es.info() != Eigen::Success)
        throw SolverError("lattice_bound_state: eigendecomposition failed");

    const double band_top = model::upper_band_edge(f);
    int best = -1;
    double best_weight = -1.0;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        if (es.eigenvalues()(k) <= band_top) continue;
        const double w = es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
        if (w > best_weight) {
            best_weight = w;
            best = k;
        }
    }
    if (best < 0)
        throw NoBoundStateError("no bound state resolved above the band");

    Eigen::VectorXd v = es.eigenvectors().col(best);
    if (v(0) < 0.0) v = -v;  // fix the overall sign via the atomic amplitude

    LatticeBoundState out;
    out.N = p.N;
    out.atom_site = p.j;
    out.eigenvalue = es.eigenvalues()(best);
    out.delta = out.eigenvalue - band_top;
    out.atomic_weight = v(0) * v(0);
    out.theta = std::acos(std::min(1.0, std::abs(v(0))));
    out.photon_profile = v.tail(lat.n_sites());
    const double pnorm = out.photon_profile.norm();
    if (pnorm > 0.0) out.photon_profile /= pnorm;
    return out;
}

}  // namespace qarray::boundstate
