#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gupsim/dispersion.hpp"
#include "gupsim/grid.hpp"
#include "gupsim/packet_analytic.hpp"

namespace gupsim {

using Spectrum = std::vector<std::complex<double>>;
using OmegaFn = std::function<double(double)>;

// Tail-mass window half-width, in units of 1/sqrt(2 alpha).
inline constexpr double kDefaultNSigma = 6.0;
// Boundary |f|^2 above this fraction of the peak raises TailLeak.
inline constexpr double kTailThreshold = 1e-10;
// Guard band around the dispersion pole for alpha' < 0, in units of dk.
inline constexpr double kPoleGuardCells = 10.0;

// g(k) at the grid nodes. Throws GridCoverage unless [k_min, k_max] contains
// k0 +- n_sigma/sqrt(2 alpha).
Spectrum sample_spectrum(const GaussianPacketSpec& spec, const KGrid& grid,
                         double n_sigma = kDefaultNSigma);

// f(x,t) = sum_j g_j e^{i k_j x - i omega(k_j) t} dk, midpoint rule.
// Uses an FFT when the x-grid is conjugate to the k-grid, direct summation
// otherwise. synthesize_direct is the always-direct correctness oracle.
FieldSnapshot synthesize(const Spectrum& g, const KGrid& kgrid, const DispersionModel& m,
                         double t, const XGrid& xgrid);
FieldSnapshot synthesize_with(const Spectrum& g, const KGrid& kgrid, const OmegaFn& omega,
                              double t, const XGrid& xgrid);
FieldSnapshot synthesize_direct(const Spectrum& g, const KGrid& kgrid, const OmegaFn& omega,
                                double t, const XGrid& xgrid);

// True when synthesize would take the FFT path for this grid pair.
bool grids_conjugate(const KGrid& kgrid, const XGrid& xgrid);

// Trapezoid moments of |f|^2. Throws TailLeak when boundary intensity exceeds
// tail_threshold times the peak.
PacketStats compute_stats(const FieldSnapshot& f, double tail_threshold = kTailThreshold);

EvolutionSeries evolve_series(const GaussianPacketSpec& spec, const DispersionModel& m,
                              const std::vector<double>& times, const KGrid& kgrid,
                              const XGrid& xgrid);

struct VelocityFit {
    double v_g = 0.0;
    double residual = 0.0;  // RMS residual of the centroid fit
};

// Least-squares slope of centroid vs t over the series snapshots.
VelocityFit measure_group_velocity(const EvolutionSeries& series);

struct BroadeningReport {
    std::vector<double> rel_dev;  // per-time |measured - predicted| / predicted
    double max_dev = 0.0;
    double mean_dev = 0.0;
};

BroadeningReport measure_broadening(const EvolutionSeries& series,
                                    const std::vector<double>& predicted_widths);

// Largest t at which the third-order phase at k0 +- 3 sigma_k stays below
// phase_tol radians; the quadratic-propagator oracle is valid inside it.
double validated_time_window(const GaussianPacketSpec& spec, const DispersionModel& m,
                             double phase_tol = 0.01);

}  // namespace gupsim
