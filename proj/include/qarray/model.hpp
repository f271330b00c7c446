// model.hpp — physical parameters and the Bogoliubov squeezed-frame mapping
#pragma once

#include <qarray/errors.hpp>

namespace qarray::model {

// All rates and energies are in units of the bare atom-cavity coupling G
// (the unit convention fixes G = 1); time is in units of 1/G.
struct SystemParams {
    double delta_a = 0.0;     // cavity detuning Δ_a
    double delta_q = 0.0;     // atomic detuning Δ_q
    double J = 1.0;           // bare cavity-cavity hopping
    double eta = 0.0;         // two-photon drive amplitude η
    double phi = 0.0;         // drive phase (radians)
    double G = 1.0;           // bare atom-cavity coupling; the unit scale
    double gamma = 0.0;       // atomic decay rate γ
    int N = 1;                // half array size, sites -N..N
    int j = 0;                // atom A position
    int l = 0;                // atom B position
    double kappa_edge = 0.0;  // optional damping on the two edge sites

    void validate() const;  // throws ConfigError / UnstableDriveError
};

// Derived frame quantities. Invariants (all enforced by squeezed_frame):
//   r    = (1/4) ln[(Δ_a + 2η)/(Δ_a - 2η)]
//   Δ_s  = Δ_a / cosh(2r) = sqrt(Δ_a² - 4η²)
//   𝒥   = J cosh(2r),  𝒢 = G cosh(r)
struct SqueezedFrame {
    double r = 0.0;
    double delta_s = 0.0;
    double J_mod = 0.0;
    double G_mod = 0.0;
};

double squeezing_parameter(double delta_a, double eta);
SqueezedFrame squeezed_frame(const SystemParams& p);

// Frame for a requested r directly, bypassing (Δ_a, η). The squeezed-mode
// detuning is pinned at Δ_s = 50·𝒥 so the synthetic drive satisfies the
// frame-validity conditions by a wide margin.
SqueezedFrame frame_from_r(double r, double J, double G = 1.0);

struct RegimeReport {
    double ratio_band = 0.0;  // 2Δ_s / 𝒥
    double ratio_atom = 0.0;  // (Δ_s + Δ_q) / 𝒢, +inf for a decoupled atom
    double ratio_min = 10.0;
    bool band_ok = false;
    bool atom_ok = false;
    bool pass() const { return band_ok && atom_ok; }
};
RegimeReport validate_regime(const SqueezedFrame& f, double delta_q,
                             double ratio_min = 10.0);

double upper_band_edge(const SqueezedFrame& f);  // Δ_U = Δ_s + 2𝒥
double band_edge_detuning(double delta_q, const SqueezedFrame& f);  // Δ_q - Δ_U
double track_delta_q(const SqueezedFrame& f, double Delta);  // Δ_q holding Δ fixed

// Full parameter set realizing squeezing r with the atom a detuning Delta
// above the upper band edge; the drive is synthesized per frame_from_r.
SystemParams params_for_squeezing(double r, double Delta, double J, int N, int j,
                                  int l, double gamma = 0.0,
                                  double kappa_edge = 0.0);

}  // namespace qarray::model
