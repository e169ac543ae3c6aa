#pragma once

// Core state types for the 1D shallow-water system with topography:
//
//   h_t + q_x = 0
//   q_t + (q^2/h + g h^2 / 2)_x + g h a_x = 0
//   a_t = 0
//
// Conserved variables are (h, q = h u). The interface solver works in the
// celerity-velocity variables Y = (2c, u, a) with c = sqrt(g h).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vfroe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonFiniteInput : public Error {
public:
    using Error::Error;
};

struct PhysicsParams {
    double g = 9.81;
    double eps_dry = 1e-6;     ///< depths at or below this are dry (m)
    double eps_speed = 1e-8;   ///< wave speeds closer to zero are nudged (m/s)

    void validate() const {
        if (!(g > 0.0) || !(eps_dry > 0.0) || !(eps_speed > 0.0))
            throw Error("physics parameters must be strictly positive");
    }
};

/// Cell average of the conserved pair.
struct PrimitiveState {
    double h = 0.0;  ///< depth (m)
    double q = 0.0;  ///< discharge per unit width (m^2/s)

    friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

/// Interface-side state in the solver's variables.
struct CelerityState {
    double two_c = 0.0;  ///< 2 sqrt(g h)
    double u = 0.0;
    double a = 0.0;      ///< bed elevation

    double c() const { return 0.5 * two_c; }
    bool dry() const { return two_c == 0.0; }

    friend bool operator==(const CelerityState&, const CelerityState&) = default;
};

/// Mass and momentum components of F(w); the bed component is identically zero.
struct FluxVector {
    double mass = 0.0;
    double momentum = 0.0;

    friend bool operator==(const FluxVector&, const FluxVector&) = default;
};

inline bool is_dry(const PrimitiveState& w, const PhysicsParams& p) { return w.h <= p.eps_dry; }

inline PrimitiveState velocity_form(double h, double u) { return {h, h * u}; }

inline double velocity(const PrimitiveState& w, const PhysicsParams& p) {
    return is_dry(w, p) ? 0.0 : w.q / w.h;
}

inline CelerityState primitive_to_celerity(const PrimitiveState& w, double a, const PhysicsParams& p) {
    if (is_dry(w, p))
        return {0.0, 0.0, a};
    return {2.0 * std::sqrt(p.g * w.h), w.q / w.h, a};
}

inline PrimitiveState celerity_to_primitive(const CelerityState& y, const PhysicsParams& p) {
    const double h = y.two_c * y.two_c / (4.0 * p.g);
    return {h, h * y.u};
}

inline FluxVector physical_flux(const PrimitiveState& w, const PhysicsParams& p) {
    if (is_dry(w, p))
        return {};
    return {w.q, w.q * w.q / w.h + 0.5 * p.g * w.h * w.h};
}

/// Uniform partition of [0, L] into N cells.
class Grid {
public:
    Grid(double length, std::size_t cell_count) : length_(length), cells_(cell_count) {
        if (!(length > 0.0) || !std::isfinite(length))
            throw Error("grid length must be positive and finite");
        if (cell_count < 2)
            throw Error("grid needs at least two cells");
    }

    double length() const { return length_; }
    std::size_t cell_count() const { return cells_; }
    double dx() const { return length_ / static_cast<double>(cells_); }

    double center(std::size_t j) const { return (static_cast<double>(j) + 0.5) * dx(); }

    /// Position of the interface between cells j-1 and j; interface(0) = 0, interface(N) = L.
    double interface(std::size_t j) const {
        return j == cells_ ? length_ : static_cast<double>(j) * dx();
    }

private:
    double length_;
    std::size_t cells_;
};

/// Piecewise-constant cell bed elevations.
using Topography = std::vector<double>;

/// A value held on the half-open interval [x_start, x_end).
struct BedRegion {
    double x_start = 0.0;
    double x_end = 0.0;
    double a = 0.0;
};

/// Piecewise-constant bed profile; zero outside every region. Later regions
/// override earlier ones where they overlap.
struct PiecewiseBed {
    std::vector<BedRegion> regions;

    double operator()(double x) const {
        double a = 0.0;
        for (const auto& r : regions)
            if (x >= r.x_start && x < r.x_end)
                a = r.a;
        return a;
    }
};

/// Exact cell averages of a piecewise-constant bed.
inline Topography project_topography(const PiecewiseBed& bed, const Grid& grid) {
    Topography out(grid.cell_count(), 0.0);
    for (std::size_t j = 0; j < grid.cell_count(); ++j) {
        const double x0 = grid.interface(j);
        const double x1 = grid.interface(j + 1);
        // Sweep the breakpoints so overlapping regions resolve like operator().
        std::vector<double> cuts{x0, x1};
        for (const auto& r : bed.regions) {
            if (r.x_start > x0 && r.x_start < x1) cuts.push_back(r.x_start);
            if (r.x_end > x0 && r.x_end < x1) cuts.push_back(r.x_end);
        }
        std::sort(cuts.begin(), cuts.end());
        double sum = 0.0;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const double w = cuts[k + 1] - cuts[k];
            if (w > 0.0)
                sum += w * bed(0.5 * (cuts[k] + cuts[k + 1]));
        }
        out[j] = sum / (x1 - x0);
    }
    return out;
}

/// Cell averages of a general profile by composite midpoint quadrature with
/// `samples` points per cell.
inline Topography project_topography(const std::function<double(double)>& bed, const Grid& grid,
                                     std::size_t samples = 1) {
    if (samples == 0)
        samples = 1;
    Topography out(grid.cell_count(), 0.0);
    const double h = grid.dx() / static_cast<double>(samples);
    for (std::size_t j = 0; j < grid.cell_count(); ++j) {
        const double x0 = grid.interface(j);
        double sum = 0.0;
        for (std::size_t k = 0; k < samples; ++k)
            sum += bed(x0 + (static_cast<double>(k) + 0.5) * h);
        out[j] = sum / static_cast<double>(samples);
    }
    return out;
}

}  // namespace vfroe
