#pragma once

#include <string>

#include "gupsim/grid.hpp"
#include "gupsim/packet_analytic.hpp"

namespace gupsim {

// Sign of the fourth-derivative term in the generalized wave equation.
// derivation_consistent matches the O(alpha') expansion of the exact
// dispersion (omega ~ ck(1 - alpha' l_p^2 k^2)); paper_literal keeps the
// printed sign, which flips the k^4 correction.
enum class SignConvention { derivation_consistent, paper_literal };

enum class InstabilityPolicy { error, allow_flagged };

std::string to_string(SignConvention c);

struct GKGParams {
    double alpha_prime = 0.0;
    double l_p = 1.0;
    double c = 1.0;
    double hbar = 1.0;
    double m0 = 0.0;
    SignConvention sign_convention = SignConvention::derivation_consistent;
    InstabilityPolicy instability_policy = InstabilityPolicy::error;

    // beta' = alpha' l_p^2 / hbar^2, the momentum-operator coefficient.
    double beta_prime() const { return alpha_prime * l_p * l_p / (hbar * hbar); }

    void validate() const;  // m0 >= 0, hbar > 0, l_p > 0, c > 0
};

struct GKGState {
    FieldSnapshot psi;
    FieldSnapshot psi_dot;
    bool unstable_flag = false;  // set when growing modes were evolved
};

enum class InitialBranch { positive_frequency, standing };

// Per-mode squared frequency implied by the PDE:
//   derivation_consistent: omega^2 = c^2 k^2 - 2 alpha' l_p^2 c^2 k^4 + m0^2 c^4 / hbar^2
//   paper_literal:         omega^2 = c^2 k^2 + 2 alpha' l_p^2 c^2 k^4 + m0^2 c^4 / hbar^2
// May be negative (unstable mode).
double gkg_dispersion_sq(double k, const GKGParams& p);

// Exact per-mode solution over a time offset t:
//   psi_hat(t) = psi_hat0 cos(wt) + psi_dot_hat0 sin(wt)/w        (w^2 > 0)
//   psi_hat(t) = psi_hat0 + psi_dot_hat0 t                        (w = 0)
//   psi_hat(t) = psi_hat0 cosh(ut) + psi_dot_hat0 sinh(ut)/u      (w^2 = -u^2 < 0)
// Growing modes require instability_policy = allow_flagged.
GKGState evolve_spectral(const GKGState& state, const GKGParams& p, double t);

// Leapfrog with central 2nd-order stencils for d^2/dx^2 and d^4/dx^4,
// periodic boundaries. dt must not exceed fd_stability_dt_max.
GKGState evolve_fd(const GKGState& state, const GKGParams& p, double dt, std::size_t n_steps);

// theta * 2 / omega_max over the stencil eigenfrequencies of the grid.
double fd_stability_dt_max(const GKGParams& p, const XGrid& grid, double theta = 0.9);

// Spectral application of the generalized momentum operator; plane wave
// e^{ikx} has eigenvalue hbar k (1 + beta' hbar^2 k^2).
FieldSnapshot apply_momentum_op(const FieldSnapshot& f, const GKGParams& p);

// Eigenvalue hbar^2 k^2 (1 + 2 beta' hbar^2 k^2).
FieldSnapshot apply_momentum_op_sq(const FieldSnapshot& f, const GKGParams& p);

// Gaussian-spectrum initial data on a periodic grid. positive_frequency sets
// psi_dot_hat = -i omega psi_hat per mode; standing sets psi_dot = 0.
GKGState build_initial_data(const GaussianPacketSpec& spec, const GKGParams& p,
                            InitialBranch branch, const XGrid& grid,
                            double n_sigma = 6.0);

// Sum over modes of |psi_dot_hat|^2 + omega^2 |psi_hat|^2 (normalized DFT);
// exactly conserved by evolve_spectral when all omega^2 >= 0.
double gkg_energy(const GKGState& state, const GKGParams& p);

}  // namespace gupsim
