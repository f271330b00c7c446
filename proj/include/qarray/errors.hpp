// errors.hpp — exception types shared across the library
#pragma once

#include <stdexcept>

namespace qarray {

// Drive at or beyond the parametric instability threshold (2η >= Δ_a):
// no stable squeezed frame exists.
struct UnstableDriveError : std::domain_error {
    using std::domain_error::domain_error;
};

// A root finder or integrator failed to reach its tolerance.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-array diagonalization found no state separated above the band.
struct NoBoundStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested a dispersive-regime quantity at Δ <= 0.
struct NotDispersiveError : std::domain_error {
    using std::domain_error::domain_error;
};

// Cooperativity requested at γ = 0; distinct from numeric overflow.
struct InfiniteCooperativityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Protocol times requested at zero coupling.
struct UndefinedTimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Invalid run configuration (bad key, bad range, truncation too coarse, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operator would exceed the configured size cap.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qarray
