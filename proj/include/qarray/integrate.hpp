// integrate.hpp — fixed-step classical RK4 over Eigen value types
#pragma once

#include <cmath>
#include <stdexcept>

namespace qarray::integrate {

// One RK4 step in place. Rhs: Y f(const Y&).
template <class Y, class Rhs>
void rk4_step(const Rhs& f, Y& y, double h) {
    const Y k1 = f(y);
    const Y k2 = f(Y(y + (0.5 * h) * k1));
    const Y k3 = f(Y(y + (0.5 * h) * k2));
    const Y k4 = f(Y(y + h * k3));
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Advance from t0 to t1 with uniform substeps of size <= h_max.
template <class Y, class Rhs>
void rk4_span(const Rhs& f, Y& y, double t0, double t1, double h_max) {
    if (!(t1 > t0)) return;
    if (!(h_max > 0.0)) throw std::invalid_argument("rk4_span: step must be > 0");
    const long n = std::max(1L, static_cast<long>(std::ceil((t1 - t0) / h_max - 1e-12)));
    const double h = (t1 - t0) / static_cast<double>(n);
    for (long i = 0; i < n; ++i) rk4_step(f, y, h);
}

// Richardson guard: halve h until one full step agrees with two half steps.
// Deterministic; at most max_halvings refinements.
template <class Y, class Rhs, class NormFn>
double rk4_calibrate_step(const Rhs& f, const Y& y0, double h0, double tol,
                          const NormFn& norm, int max_halvings = 20) {
    double h = h0;
    for (int k = 0; k < max_halvings; ++k) {
        Y full = y0;
        rk4_step(f, full, h);
        Y halves = y0;
        rk4_step(f, halves, 0.5 * h);
        rk4_step(f, halves, 0.5 * h);
        const double err = norm(Y(full - halves)) / 15.0;
        if (err <= tol) return h;
        h *= 0.5;
    }
    return h;
}

}  // namespace qarray::integrate
