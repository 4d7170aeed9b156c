#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gupsim {

inline bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

// Uniform k-grid for midpoint-rule quadrature: nodes at cell midpoints of
// [k_min, k_max] split into n cells.
struct KGrid {
    double k_min = 0.0;
    double k_max = 0.0;
    std::size_t n = 0;

    double dk() const { return (k_max - k_min) / static_cast<double>(n); }
    double node(std::size_t j) const {
        return k_min + (static_cast<double>(j) + 0.5) * dk();
    }
    std::vector<double> nodes() const;

    void validate() const;  // n >= 2 power of two, k_max > k_min
};

// Uniform x-grid descriptor.
struct XGrid {
    double x0 = 0.0;
    double dx = 0.0;
    std::size_t n = 0;

    double node(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    void validate() const;
};

// Complex field samples on a uniform spatial grid at one time.
struct FieldSnapshot {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<std::complex<double>> values;
    double t = 0.0;

    XGrid grid() const { return XGrid{x0, dx, values.size()}; }
    void validate() const;  // dx > 0, size >= 2
};

// Trapezoid moments of |f|^2.
struct PacketStats {
    double norm = 0.0;
    double centroid = 0.0;
    double rms_width = 0.0;
};

struct EvolutionSeries {
    std::vector<FieldSnapshot> snapshots;
    std::vector<PacketStats> stats;
};

}  // namespace gupsim
