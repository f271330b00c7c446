#include <qarray/model.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace qarray::model {

void SystemParams::validate() const {
    if (!(delta_a > 2.0 * eta) || eta < 0.0)
        throw UnstableDriveError("unstable drive: requires Delta_a > 2*eta >= 0");
    if (!(J > 0.0)) throw ConfigError("SystemParams: J must be > 0");
    if (G != 1.0) throw ConfigError("SystemParams: G is the unit scale and must be 1");
    if (gamma < 0.0) throw ConfigError("SystemParams: gamma must be >= 0");
    if (kappa_edge < 0.0) throw ConfigError("SystemParams: kappa_edge must be >= 0");
    if (N < 1) throw ConfigError("SystemParams: N must be >= 1");
    if (j < -N || l > N || j > l)
        throw ConfigError("SystemParams: atom positions must satisfy -N <= j <= l <= N");
}

double squeezing_parameter(double delta_a, double eta) {
    if (eta < 0.0) throw ConfigError("squeezing_parameter: eta must be >= 0");
    if (2.0 * eta >= delta_a)
        throw UnstableDriveError(
            "unstable drive: 2*eta >= Delta_a, squeezing diverges (no stable squeezed frame)");
    return 0.25 * std::log((delta_a + 2.0 * eta) / (delta_a - 2.0 * eta));
}

SqueezedFrame squeezed_frame(const SystemParams& p) {
    SqueezedFrame f;
    f.r = squeezing_parameter(p.delta_a, p.eta);
    f.delta_s = p.delta_a / std::cosh(2.0 * f.r);
    f.J_mod = p.J * std::cosh(2.0 * f.r);
    f.G_mod = p.G * std::cosh(f.r);
    return f;
}

SqueezedFrame frame_from_r(double r, double J, double G) {
    if (r < 0.0) throw ConfigError("frame_from_r: r must be >= 0");
    if (!(J > 0.0)) throw ConfigError("frame_from_r: J must be > 0");
    SqueezedFrame f;
    f.r = r;
    f.J_mod = J * std::cosh(2.0 * r);
    f.G_mod = G * std::cosh(r);
    f.delta_s = 50.0 * f.J_mod;
    return f;
}

RegimeReport validate_regime(const SqueezedFrame& f, double delta_q, double ratio_min) {
    if (!(ratio_min > 1.0)) throw ConfigError("validate_regime: ratio_min must be > 1");
    RegimeReport rep;
    rep.ratio_min = ratio_min;
    rep.ratio_band = 2.0 * f.delta_s / f.J_mod;
    rep.ratio_atom = f.G_mod > 0.0 ? (f.delta_s + delta_q) / f.G_mod
                                   : std::numeric_limits<double>::infinity();
    rep.band_ok = rep.ratio_band >= ratio_min;
    rep.atom_ok = rep.ratio_atom >= ratio_min;
    return rep;
}

double upper_band_edge(const SqueezedFrame& f) { return f.delta_s + 2.0 * f.J_mod; }

double band_edge_detuning(double delta_q, const SqueezedFrame& f) {
    return delta_q - upper_band_edge(f);
}

double track_delta_q(const SqueezedFrame& f, double Delta) {
    return upper_band_edge(f) + Delta;
}

SystemParams params_for_squeezing(double r, double Delta, double J, int N, int j,
                                  int l, double gamma, double kappa_edge) {
    SqueezedFrame f = frame_from_r(r, J);
    SystemParams p;
    p.delta_a = f.delta_s * std::cosh(2.0 * r);
    p.eta = 0.5 * p.delta_a * std::tanh(2.0 * r);
    p.delta_q = track_delta_q(f, Delta);
    p.J = J;
    p.gamma = gamma;
    p.kappa_edge = kappa_edge;
    p.N = N;
    p.j = j;
    p.l = l;
    p.validate();
    return p;
}

}  // namespace qarray::model
