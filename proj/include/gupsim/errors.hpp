#pragma once

#include <stdexcept>
#include <string>

namespace gupsim {

// Leaving the model's validity domain (lambda_bar <= 0 for alpha' < 0).
struct NonPositiveWavelength : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Denominator 1 + alpha' l_p^2 k^2 within tolerance of the physical pole.
struct DispersionSingularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The printed first-order width formula left its domain.
struct NegativeRadicand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spectral window not contained in the k-grid.
struct GridCoverage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Packet intensity at the spatial boundary above the tail threshold.
struct TailLeak : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares fit over non-distinct abscissae.
struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Some grid modes have omega^2 < 0 and the policy forbids them.
struct UnstableModes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Leapfrog time step above the stability bound.
struct StabilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Experiment configuration failed schema validation.
struct ConfigInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gupsim
