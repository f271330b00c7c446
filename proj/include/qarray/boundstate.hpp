// boundstate.hpp — single-photon bound state of one atom on the squeezed-frame array
#pragma once

#include <qarray/model.hpp>

#include <Eigen/Dense>

#include <vector>

namespace qarray::boundstate {

// arccosh(1 + x) for x >= 0, accurate near x = 0.
double acosh1p(double x);

// Unique δ > 0 solving δ = Δ + 𝒢²/sqrt(δ² + 4𝒥δ). Fixed-point iteration
// with a bisection fallback; residual below 1e-12·max(1, δ).
double solve_delta(double Delta, double G_mod, double J_mod);

// ξ = 1 / arccosh(1 + δ/2𝒥)
double localization_length(double delta, double J_mod);

// Signed photon amplitude c_n at site offset n - j:
//   c_n = (-1)^|n-j| exp(-|n-j|/ξ) / sqrt(coth(1/ξ))
double amplitude(double delta, double J_mod, int offset);
// Amplitudes for offsets -half_width..half_width.
std::vector<double> profile(double delta, double J_mod, int half_width);

struct JcParams {
    double G_e;      // √2 𝒢 / (1 + 4𝒥/δ)^{1/4}
    double Delta_e;  // Δ + δ/(1 + δ/2𝒥)
};
JcParams effective_jc(double delta, double Delta, double G_mod, double J_mod);

struct BoundState {
    double delta = 0.0;     // eigenfrequency above the upper band edge
    double Delta_BS = 0.0;  // absolute eigenfrequency Δ_U + δ
    double xi = 0.0;        // localization length (sites)
    double G_e = 0.0;
    double Delta_e = 0.0;
    double theta;  // hybridization angle; NaN until filled from the lattice oracle
};
BoundState solve(const model::SqueezedFrame& frame, double delta_q);

// Numerically exact single-atom bound state on the finite open-boundary array,
// from dense diagonalization of the single-excitation sector. The atom sits at
// p.j; p.l is ignored.
struct LatticeBoundState {
    int N = 0;
    int atom_site = 0;
    double eigenvalue = 0.0;     // absolute, units of G
    double delta = 0.0;          // eigenvalue - Δ_U
    double atomic_weight = 0.0;  // cos²θ
    double theta = 0.0;
    Eigen::VectorXd photon_profile;  // unit-norm photon part over sites -N..N
};
LatticeBoundState lattice_bound_state(const model::SystemParams& p,
                                      const model::SqueezedFrame& f);

}  // namespace qarray::boundstate
