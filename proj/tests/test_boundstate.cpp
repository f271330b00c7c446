#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qarray/boundstate.hpp>
#include <qarray/model.hpp>

#include <cmath>
#include <random>

using namespace qarray;
using namespace qarray::boundstate;

namespace {

// test-local oracle for the eigenvalue relation, pure bisection
double bisect_delta(double Delta, double G, double J) {
    auto f = [&](double d) { return Delta + G * G / std::sqrt(d * d + 4 * J * d) - d; };
    double lo = 1e-300, hi = std::max(Delta, 0.0) + G + 1.0;
    while (f(hi) > 0.0) hi *= 2.0;
    for (int i = 0; i < 2000; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-16 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

model::SqueezedFrame figure_frame(double r) { return model::frame_from_r(r, 10.0); }

}  // namespace

TEST_CASE("solve_delta: decoupled atom and reference points") {
    CHECK(solve_delta(10.0, 0.0, 10.0) == 10.0);
    CHECK_THROWS_AS(solve_delta(0.0, 0.0, 10.0), NoBoundStateError);
    CHECK_THROWS_AS(solve_delta(-3.0, 0.0, 10.0), NoBoundStateError);

    const double d10 = solve_delta(10.0, 1.0, 10.0);
    CHECK(d10 == doctest::Approx(bisect_delta(10.0, 1.0, 10.0)).epsilon(1e-12));
    CHECK(d10 == doctest::Approx(10.044602069666595).epsilon(1e-12));

    // band-edge atom: root of delta*sqrt(delta^2+40 delta) = 1
    const double d0 = solve_delta(0.0, 1.0, 10.0);
    CHECK(d0 == doctest::Approx(bisect_delta(0.0, 1.0, 10.0)).epsilon(1e-12));
    CHECK(d0 == doctest::Approx(0.29169444334587191).epsilon(1e-12));
    CHECK(d0 * std::sqrt(d0 * d0 + 40.0 * d0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("solve_delta: residual bound over a parameter grid") {
    std::mt19937 rng(7121);
    std::uniform_real_distribution<double> DeltaDist(-5.0, 50.0);
    std::uniform_real_distribution<double> Gdist(0.01, 5.0);
    std::uniform_real_distribution<double> Jdist(0.1, 100.0);
    for (int i = 0; i < 200; ++i) {
        const double Delta = DeltaDist(rng), G = Gdist(rng), J = Jdist(rng);
        const double d = solve_delta(Delta, G, J);
        CHECK(d > 0.0);
        const double residual = std::abs(d - Delta - G * G / std::sqrt(d * d + 4 * J * d));
        CHECK(residual < 1e-12 * std::max(1.0, d));
        CHECK(d == doctest::Approx(bisect_delta(Delta, G, J)).epsilon(1e-10));
    }
}

TEST_CASE("localization length") {
    CHECK(localization_length(20.0, 10.0) ==
          doctest::Approx(0.75932571750020683).epsilon(1e-13));  // 1/arccosh(2)
    CHECK(localization_length(10.044602069666595, 10.0) ==
          doctest::Approx(1.0368973147520202).epsilon(1e-12));  // fig2 operating point, r = 0
    CHECK(localization_length(1e-7, 10.0) > 1e3);  // band-edge divergence
    CHECK_THROWS_AS(localization_length(0.0, 10.0), ConfigError);
    CHECK_THROWS_AS(localization_length(1.0, 0.0), ConfigError);
}

TEST_CASE("wavefunction amplitudes") {
    const double delta = 10.044602069666595, J = 10.0;
    CHECK(amplitude(delta, J, 0) == doctest::Approx(0.8638518466776175).epsilon(1e-12));

    const double xi = localization_length(delta, J);
    CHECK(amplitude(delta, J, 1) / amplitude(delta, J, 0) ==
          doctest::Approx(-std::exp(-1.0 / xi)).epsilon(1e-13));

    // truncation at 40xi closes the normalization to 1e-10
    const int hw = static_cast<int>(std::ceil(40.0 * xi));
    double sum = 0.0;
    for (double c : profile(delta, J, hw)) sum += c * c;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("wavefunction: alternating sign and strict decay (random parameters)") {
    std::mt19937 rng(40917);
    std::uniform_real_distribution<double> deltaDist(0.01, 50.0);
    std::uniform_real_distribution<double> Jdist(0.1, 50.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double delta = deltaDist(rng), J = Jdist(rng);
        const double c0 = amplitude(delta, J, 0);
        CHECK(c0 > 0.0);
        for (int n = 1; n <= 12; ++n) {
            const double cn = amplitude(delta, J, n);
            CHECK(cn * amplitude(delta, J, n - 1) < 0.0);   // alternating
            CHECK(std::abs(cn) < std::abs(amplitude(delta, J, n - 1)));
            CHECK(cn == amplitude(delta, J, -n));           // even in the offset
        }
        const double xi = localization_length(delta, J);
        const int hw = static_cast<int>(std::ceil(40.0 * xi));
        double sum = 0.0;
        for (double c : profile(delta, J, hw)) sum += c * c;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("effective Jaynes-Cummings parameters") {
    const auto jc = effective_jc(10.044602069666595, 10.0, 1.0, 10.0);
    CHECK(jc.G_e == doctest::Approx(0.94658337327940401).epsilon(1e-12));
    CHECK(jc.Delta_e == doctest::Approx(16.68646038072027).epsilon(1e-12));

    // isolated-cavity limit: G_e -> sqrt(2) G
    const auto lim = effective_jc(5.0, 5.0, 2.0, 1e-13);
    CHECK(lim.G_e == doctest::Approx(std::sqrt(2.0) * 2.0).epsilon(1e-10));

    // exponential enhancement: G_e(r=2)/G_e(r=1) approaches e^{1/2}
    auto Ge_at = [](double r) {
        const auto f = figure_frame(r);
        const double d = solve_delta(10.0, f.G_mod, f.J_mod);
        return effective_jc(d, 10.0, f.G_mod, f.J_mod).G_e;
    };
    const double ratio = Ge_at(2.0) / Ge_at(1.0);
    CHECK(ratio == doctest::Approx(1.5089164216242255).epsilon(1e-12));
    CHECK(std::abs(ratio / std::exp(0.5) - 1.0) < 0.10);
}

TEST_CASE("exponential scaling laws in r at Delta = 10, J = 10") {
    auto at = [](double r) {
        const auto f = figure_frame(r);
        const double d = solve_delta(10.0, f.G_mod, f.J_mod);
        return std::make_pair(localization_length(d, f.J_mod),
                              effective_jc(d, 10.0, f.G_mod, f.J_mod).G_e);
    };
    const auto [xi2, Ge2] = at(2.0);
    const auto [xi3, Ge3] = at(3.0);
    CHECK(std::abs(std::log(xi3) - std::log(xi2) - 1.0) < 0.05);
    CHECK(std::abs(std::log(Ge3) - std::log(Ge2) - 0.5) < 0.05);
}

TEST_CASE("bound state bundle") {
    const auto f = figure_frame(0.0);
    const auto bs = solve(f, model::track_delta_q(f, 10.0));
    CHECK(bs.delta == doctest::Approx(10.044602069666595).epsilon(1e-12));
    CHECK(bs.Delta_BS == doctest::Approx(model::upper_band_edge(f) + bs.delta));
    CHECK(bs.xi == doctest::Approx(1.0368973147520202).epsilon(1e-12));
    CHECK(bs.G_e == doctest::Approx(0.94658337327940401).epsilon(1e-12));
    CHECK(std::isnan(bs.theta));  // analytic path carries no hybridization angle
}

TEST_CASE("lattice oracle matches the closed forms at the r = 0 figure point") {
    const auto p = model::params_for_squeezing(0.0, 10.0, 10.0, 200, 0, 0);
    const auto f = model::squeezed_frame(p);
    const auto num = lattice_bound_state(p, f);
    const double d_exact = solve_delta(10.0, f.G_mod, f.J_mod);
    CHECK(std::abs(num.delta - d_exact) < 1e-8);
    double dev = 0.0;
    for (int n = -p.N; n <= p.N; ++n)
        dev = std::max(dev, std::abs(num.photon_profile(n + p.N) -
                                     amplitude(d_exact, f.J_mod, n)));
    CHECK(dev < 1e-6);
    CHECK(num.atomic_weight == doctest::Approx(std::cos(num.theta) * std::cos(num.theta)));
    CHECK(num.atomic_weight > 0.9);
}

TEST_CASE("lattice oracle equivalence across the (r, Delta) grid") {
    for (double r : {0.0, 0.4, 0.8, 1.2}) {
        for (double Delta : {5.0, 10.0, 20.0}) {
            const auto f = figure_frame(r);
            const double d_exact = solve_delta(Delta, f.G_mod, f.J_mod);
            const double xi = localization_length(d_exact, f.J_mod);
            const int N = static_cast<int>(std::ceil(40.0 * xi)) + 50;
            const auto p = model::params_for_squeezing(r, Delta, 10.0, N, 0, 0);
            const auto num = lattice_bound_state(p, f);
            CHECK(std::abs(num.delta - d_exact) < 1e-6 * f.J_mod);
            double dev = 0.0;
            for (int n = -N; n <= N; ++n)
                dev = std::max(dev, std::abs(num.photon_profile(n + N) -
                                             amplitude(d_exact, f.J_mod, n)));
            CHECK(dev < 1e-5);
        }
    }
}

TEST_CASE("lattice oracle: decoupled atom") {
    auto f = figure_frame(0.0);
    f.G_mod = 0.0;
    const double delta_q = model::track_delta_q(f, 10.0);
    const auto lat_p = [&] {
        model::SystemParams p;
        p.delta_a = f.delta_s;
        p.J = 10.0;
        p.delta_q = delta_q;
        p.N = 60;
        return p;
    }();
    const auto num = lattice_bound_state(lat_p, f);
    CHECK(num.eigenvalue == doctest::Approx(delta_q).epsilon(1e-12));
    CHECK(num.atomic_weight == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(num.photon_profile.norm() == 0.0);
}

TEST_CASE("lattice oracle: localization length from the numeric profile") {
    const auto f = figure_frame(0.723);
    const double d_exact = solve_delta(10.0, f.G_mod, f.J_mod);
    const double xi = localization_length(d_exact, f.J_mod);
    const auto p = model::params_for_squeezing(0.723, 10.0, 10.0, 400, 0, 0);
    const auto num = lattice_bound_state(p, f);

    // least-squares slope of ln|c_n| over offsets 2..20
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = 2; n <= 20; ++n) {
        const double x = n, y = std::log(std::abs(num.photon_profile(n + p.N)));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    CHECK(std::abs(-1.0 / slope - xi) / xi < 0.005);
}

TEST_CASE("lattice oracle: error conditions") {
    // cloud does not fit
    const auto p_small = model::params_for_squeezing(0.0, 10.0, 10.0, 30, 0, 0);
    CHECK_THROWS_AS(lattice_bound_state(p_small, model::squeezed_frame(p_small)),
                    ConfigError);

    // atom far below the band with negligible coupling: nothing separates
    auto f = figure_frame(0.0);
    f.G_mod = 0.01;
    model::SystemParams p;
    p.delta_a = f.delta_s;
    p.J = 10.0;
    p.delta_q = model::track_delta_q(f, -20.0);
    p.N = 100;
    CHECK_THROWS_AS(lattice_bound_state(p, f), NoBoundStateError);
}
