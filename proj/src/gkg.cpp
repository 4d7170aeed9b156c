#include "gupsim/gkg.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "gupsim/fft.hpp"

namespace gupsim {

namespace {

void check_state(const GKGState& s) {
    s.psi.validate();
    s.psi_dot.validate();
    if (s.psi.values.size() != s.psi_dot.values.size() || s.psi.x0 != s.psi_dot.x0 ||
        s.psi.dx != s.psi_dot.dx || s.psi.t != s.psi_dot.t)
        throw std::invalid_argument("GKGState: psi and psi_dot grids/times must match");
    if (!is_power_of_two(s.psi.values.size()))
        throw std::invalid_argument("GKGState: grid size must be a power of two");
}

// Forward DFT normalized so that psi(x_i) = sum_j hat[j] e^{2 pi i ij/n}.
std::vector<std::complex<double>> to_modes(const std::vector<std::complex<double>>& v) {
    auto hat = fft::forward(v);
    const double inv_n = 1.0 / static_cast<double>(v.size());
    for (auto& c : hat) c *= inv_n;
    return hat;
}

// Stencil eigenvalue of -d^2/dx^2: s = (4/dx^2) sin^2(k dx / 2). The 5-point
// d^4 stencil is the 3-point d^2 applied twice, so its eigenvalue is s^2.
double stencil_s(std::size_t j, std::size_t n, double dx) {
    const double half = 0.5 * fft::mode_k(j, n, dx) * dx;
    const double sn = std::sin(half);
    return 4.0 * sn * sn / (dx * dx);
}

double dispersion_sq_from_ksq(double k2, double k4, const GKGParams& p) {
    const double c2 = p.c * p.c;
    const double quartic = 2.0 * p.alpha_prime * p.l_p * p.l_p * c2 * k4;
    const double mass = p.m0 * p.m0 * c2 * c2 / (p.hbar * p.hbar);
    return p.sign_convention == SignConvention::derivation_consistent
               ? c2 * k2 - quartic + mass
               : c2 * k2 + quartic + mass;
}

}  // namespace

std::string to_string(SignConvention c) {
    return c == SignConvention::derivation_consistent ? "derivation_consistent"
                                                      : "paper_literal";
}

void GKGParams::validate() const {
    if (!(m0 >= 0.0)) throw std::invalid_argument("GKGParams: m0 must be >= 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("GKGParams: hbar must be > 0");
    if (!(l_p > 0.0)) throw std::invalid_argument("GKGParams: l_p must be > 0");
    if (!(c > 0.0)) throw std::invalid_argument("GKGParams: c must be > 0");
    if (!std::isfinite(alpha_prime))
        throw std::invalid_argument("GKGParams: alpha_prime must be finite");
}

double gkg_dispersion_sq(double k, const GKGParams& p) {
    const double k2 = k * k;
    return dispersion_sq_from_ksq(k2, k2 * k2, p);
}

GKGState evolve_spectral(const GKGState& state, const GKGParams& p, double t) {
    p.validate();
    check_state(state);
    const std::size_t n = state.psi.values.size();
    const double dx = state.psi.dx;

    bool any_unstable = false;
    double worst_k = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double k = fft::mode_k(j, n, dx);
        if (gkg_dispersion_sq(k, p) < 0.0) {
            any_unstable = true;
            worst_k = std::max(worst_k, std::fabs(k));
        }
    }
    if (any_unstable && p.instability_policy == InstabilityPolicy::error)
        throw UnstableModes("evolve_spectral: omega^2 < 0 for modes up to |k|=" +
                            std::to_string(worst_k));

    auto psi_hat = to_modes(state.psi.values);
    auto dot_hat = to_modes(state.psi_dot.values);
    for (std::size_t j = 0; j < n; ++j) {
        const double k = fft::mode_k(j, n, dx);
        const double w2 = gkg_dispersion_sq(k, p);
        const std::complex<double> a = psi_hat[j];
        const std::complex<double> b = dot_hat[j];
        if (w2 > 0.0) {
            const double w = std::sqrt(w2);
            psi_hat[j] = a * std::cos(w * t) + b * (std::sin(w * t) / w);
            dot_hat[j] = -a * w * std::sin(w * t) + b * std::cos(w * t);
        } else if (w2 == 0.0) {
            psi_hat[j] = a + b * t;
            // dot_hat unchanged
        } else {
            const double u = std::sqrt(-w2);
            psi_hat[j] = a * std::cosh(u * t) + b * (std::sinh(u * t) / u);
            dot_hat[j] = a * u * std::sinh(u * t) + b * std::cosh(u * t);
        }
    }
    GKGState out;
    out.psi.x0 = out.psi_dot.x0 = state.psi.x0;
    out.psi.dx = out.psi_dot.dx = dx;
    out.psi.t = out.psi_dot.t = state.psi.t + t;
    out.psi.values = fft::inverse(psi_hat);
    out.psi_dot.values = fft::inverse(dot_hat);
    out.unstable_flag = state.unstable_flag || any_unstable;
    return out;
}

double fd_stability_dt_max(const GKGParams& p, const XGrid& grid, double theta) {
    p.validate();
    grid.validate();
    double w2_max = 0.0;
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double s = stencil_s(j, grid.n, grid.dx);
        w2_max = std::max(w2_max, dispersion_sq_from_ksq(s, s * s, p));
    }
    if (w2_max <= 0.0) return std::numeric_limits<double>::infinity();
    return theta * 2.0 / std::sqrt(w2_max);
}

GKGState evolve_fd(const GKGState& state, const GKGParams& p, double dt, std::size_t n_steps) {
    p.validate();
    check_state(state);
    if (!(dt > 0.0)) throw std::invalid_argument("evolve_fd: dt must be > 0");
    if (n_steps == 0) return state;
    const std::size_t n = state.psi.values.size();
    const double dx = state.psi.dx;

    const double dt_max = fd_stability_dt_max(p, state.psi.grid());
    if (dt > dt_max)
        throw StabilityViolation("evolve_fd: dt=" + std::to_string(dt) +
                                 " exceeds stability bound " + std::to_string(dt_max));
    bool any_unstable = false;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = stencil_s(j, n, dx);
        if (dispersion_sq_from_ksq(s, s * s, p) < 0.0) any_unstable = true;
    }
    if (any_unstable && p.instability_policy == InstabilityPolicy::error)
        throw UnstableModes("evolve_fd: stencil omega^2 < 0 on this grid");

    const double c2 = p.c * p.c;
    const double quartic_coeff =
        (p.sign_convention == SignConvention::derivation_consistent ? 1.0 : -1.0) * 2.0 *
        p.alpha_prime * p.l_p * p.l_p * c2;
    const double mass_coeff = p.m0 * p.m0 * c2 * c2 / (p.hbar * p.hbar);
    const double inv_dx2 = 1.0 / (dx * dx);
    const double inv_dx4 = inv_dx2 * inv_dx2;

    using Vec = std::vector<std::complex<double>>;
    auto apply_rhs = [&](const Vec& f, Vec& out) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t im1 = (i + n - 1) % n;
            const std::size_t ip1 = (i + 1) % n;
            const std::size_t im2 = (i + n - 2) % n;
            const std::size_t ip2 = (i + 2) % n;
            const std::complex<double> d2 = (f[ip1] - 2.0 * f[i] + f[im1]) * inv_dx2;
            const std::complex<double> d4 =
                (f[ip2] - 4.0 * f[ip1] + 6.0 * f[i] - 4.0 * f[im1] + f[im2]) * inv_dx4;
            out[i] = c2 * d2 + quartic_coeff * d4 - mass_coeff * f[i];
        }
    };

    Vec prev = state.psi.values;
    Vec lap(n), cur(n);
    // Taylor start from (psi, psi_dot).
    apply_rhs(prev, lap);
    for (std::size_t i = 0; i < n; ++i)
        cur[i] = prev[i] + dt * state.psi_dot.values[i] + 0.5 * dt * dt * lap[i];

    Vec next(n);
    for (std::size_t step = 1; step < n_steps; ++step) {
        apply_rhs(cur, lap);
        for (std::size_t i = 0; i < n; ++i)
            next[i] = 2.0 * cur[i] - prev[i] + dt * dt * lap[i];
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    // One extra step for a centered velocity at the final time.
    apply_rhs(cur, lap);
    for (std::size_t i = 0; i < n; ++i)
        next[i] = 2.0 * cur[i] - prev[i] + dt * dt * lap[i];

    GKGState out;
    out.psi.x0 = out.psi_dot.x0 = state.psi.x0;
    out.psi.dx = out.psi_dot.dx = dx;
    out.psi.t = out.psi_dot.t = state.psi.t + dt * static_cast<double>(n_steps);
    out.psi.values = cur;
    out.psi_dot.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.psi_dot.values[i] = (next[i] - prev[i]) / (2.0 * dt);
    out.unstable_flag = state.unstable_flag || any_unstable;
    return out;
}

namespace {

FieldSnapshot apply_mode_multiplier(const FieldSnapshot& f,
                                    const std::function<double(double)>& mult) {
    f.validate();
    if (!is_power_of_two(f.values.size()))
        throw std::invalid_argument("momentum op: grid size must be a power of two");
    const std::size_t n = f.values.size();
    auto hat = to_modes(f.values);
    for (std::size_t j = 0; j < n; ++j) hat[j] *= mult(fft::mode_k(j, n, f.dx));
    FieldSnapshot out;
    out.x0 = f.x0;
    out.dx = f.dx;
    out.t = f.t;
    out.values = fft::inverse(hat);
    return out;
}

}  // namespace

FieldSnapshot apply_momentum_op(const FieldSnapshot& f, const GKGParams& p) {
    p.validate();
    const double h = p.hbar;
    const double bp = p.beta_prime();
    return apply_mode_multiplier(
        f, [h, bp](double k) { return h * k * (1.0 + bp * h * h * k * k); });
}

FieldSnapshot apply_momentum_op_sq(const FieldSnapshot& f, const GKGParams& p) {
    p.validate();
    const double h = p.hbar;
    const double bp = p.beta_prime();
    return apply_mode_multiplier(
        f, [h, bp](double k) { return h * h * k * k * (1.0 + 2.0 * bp * h * h * k * k); });
}

GKGState build_initial_data(const GaussianPacketSpec& spec, const GKGParams& p,
                            InitialBranch branch, const XGrid& grid, double n_sigma) {
    p.validate();
    spec.validate();
    grid.validate();
    if (!is_power_of_two(grid.n))
        throw std::invalid_argument("build_initial_data: grid size must be a power of two");
    const std::size_t n = grid.n;
    const double dx = grid.dx;
    const double k_nyq = 3.14159265358979323846 / dx;
    const double half_window = n_sigma / std::sqrt(2.0 * spec.alpha);
    if (spec.k0 + half_window > k_nyq || spec.k0 - half_window < -k_nyq)
        throw GridCoverage("build_initial_data: spectral window exceeds representable modes");

    const double dk = 2.0 * 3.14159265358979323846 / (static_cast<double>(n) * dx);
    std::vector<std::complex<double>> psi_hat(n), dot_hat(n, {0.0, 0.0});
    double g_max = 0.0;
    std::vector<double> g(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double k = fft::mode_k(j, n, dx);
        const double d = k - spec.k0;
        g[j] = std::exp(-spec.alpha * d * d);
        g_max = std::max(g_max, g[j]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double k = fft::mode_k(j, n, dx);
        // Coefficient for psi(x_i) = sum_j psi_hat[j] e^{2 pi i ij/n}
        // reproducing sum_j g(k_j) dk e^{i k_j x_i}.
        psi_hat[j] = std::polar(g[j] * dk, k * grid.x0);
        if (branch == InitialBranch::positive_frequency) {
            const double w2 = gkg_dispersion_sq(k, p);
            if (w2 < 0.0) {
                if (g[j] > 1e-14 * g_max)
                    throw UnstableModes(
                        "build_initial_data: omega^2 < 0 on spectrum support at k=" +
                        std::to_string(k));
                continue;  // negligible weight, drop the mode velocity
            }
            dot_hat[j] = std::complex<double>(0.0, -std::sqrt(w2)) * psi_hat[j];
        }
    }
    GKGState out;
    out.psi.x0 = out.psi_dot.x0 = grid.x0;
    out.psi.dx = out.psi_dot.dx = dx;
    out.psi.t = out.psi_dot.t = 0.0;
    out.psi.values = fft::inverse(psi_hat);
    out.psi_dot.values = fft::inverse(dot_hat);
    return out;
}

double gkg_energy(const GKGState& state, const GKGParams& p) {
    p.validate();
    check_state(state);
    const std::size_t n = state.psi.values.size();
    auto psi_hat = to_modes(state.psi.values);
    auto dot_hat = to_modes(state.psi_dot.values);
    double e = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w2 = gkg_dispersion_sq(fft::mode_k(j, n, state.psi.dx), p);
        e += std::norm(dot_hat[j]) + w2 * std::norm(psi_hat[j]);
    }
    return e;
}

}  // namespace gupsim
