#pragma once

// First-order Godunov-type update driven by the two-sided interface fluxes:
//
//   w_j^{n+1} = w_j^n - dt/dx (F^-_{j+1/2} - F^+_{j-1/2})
//
// The bed step at an interface makes F^- and F^+ differ; that difference is
// the discrete topography source term.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vfroe/core.hpp"
#include "vfroe/riemann.hpp"

namespace vfroe {

class AllDry : public Error {
public:
    AllDry() : Error("no wet cell: time step is unbounded") {}
};

/// Non-finite or negative state produced by an update.
class BlowUp : public Error {
public:
    BlowUp(const std::string& what, std::size_t step = 0, double time = 0.0)
        : Error(what), step_(step), time_(time) {}

    std::size_t step() const { return step_; }
    double time() const { return time_; }

private:
    std::size_t step_;
    double time_;
};

enum class BoundaryPolicy { Transmissive, Reflective };

struct Boundaries {
    BoundaryPolicy left = BoundaryPolicy::Transmissive;
    BoundaryPolicy right = BoundaryPolicy::Transmissive;
};

struct CellArray {
    std::vector<PrimitiveState> w;
    Topography a;

    std::size_t size() const { return w.size(); }
};

struct GhostCell {
    PrimitiveState w;
    double a = 0.0;
};

struct StepDiagnostics {
    double dt = 0.0;
    double max_speed = 0.0;  ///< max |u| + c over wet cells before the step
    double mass = 0.0;       ///< sum h_j dx after the step
    double min_depth = 0.0;  ///< after the step
};

inline double total_mass(const CellArray& cells, double dx) {
    double m = 0.0;
    for (const auto& w : cells.w) m += w.h;
    return m * dx;
}

inline double max_wave_speed(const CellArray& cells, const PhysicsParams& p) {
    double s = 0.0;
    for (const auto& w : cells.w) {
        if (is_dry(w, p)) continue;
        s = std::max(s, std::abs(w.q / w.h) + std::sqrt(p.g * w.h));
    }
    return s;
}

/// CFL step cfl * dx / max(|u| + c), cut to `remaining` when it would overshoot.
inline double compute_dt(const CellArray& cells, double cfl, double dx, const PhysicsParams& p,
                         double remaining = std::numeric_limits<double>::infinity()) {
    const double s = max_wave_speed(cells, p);
    if (s == 0.0)
        throw AllDry();
    return std::min(cfl * dx / s, remaining);
}

inline GhostCell ghost_state(const PrimitiveState& edge, double a, BoundaryPolicy policy) {
    if (policy == BoundaryPolicy::Reflective)
        return {{edge.h, edge.q == 0.0 ? 0.0 : -edge.q}, a};
    return {edge, a};
}

inline std::pair<GhostCell, GhostCell> apply_boundary(const CellArray& cells, const Boundaries& b) {
    if (cells.size() == 0)
        throw Error("apply_boundary needs at least one cell");
    return {ghost_state(cells.w.front(), cells.a.front(), b.left),
            ghost_state(cells.w.back(), cells.a.back(), b.right)};
}

/// Interface fans for all N + 1 interfaces; fan k sits between cells k-1 and k.
inline std::vector<RiemannFan> interface_fans(const CellArray& cells, const Boundaries& b,
                                              const PhysicsParams& p) {
    const std::size_t n = cells.size();
    const auto [left, right] = apply_boundary(cells, b);
    std::vector<RiemannFan> fans(n + 1);
    fans[0] = solve(left.w, left.a, cells.w[0], cells.a[0], p);
    for (std::size_t k = 1; k < n; ++k)
        fans[k] = solve(cells.w[k - 1], cells.a[k - 1], cells.w[k], cells.a[k], p);
    fans[n] = solve(cells.w[n - 1], cells.a[n - 1], right.w, right.a, p);
    return fans;
}

/// Largest dt for which no cell can lose more water than it holds, given
/// interface fans computed from the current state. Infinite when nothing drains.
inline double positivity_dt(const CellArray& cells, const std::vector<RiemannFan>& fans, double dx) {
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const double outflow = std::max(0.0, fans[j + 1].flux_l.mass) + std::max(0.0, -fans[j].flux_r.mass);
        if (outflow > 0.0)
            dt = std::min(dt, cells.w[j].h * dx / outflow);
    }
    return dt;
}

/// Update with precomputed interface fans (see interface_fans).
inline std::pair<CellArray, StepDiagnostics> step(const CellArray& cells, const std::vector<RiemannFan>& fans,
                                                  double dt, double dx, const PhysicsParams& p) {
    constexpr double negative_tolerance = -1e-12;
    const double ratio = dt / dx;

    CellArray next{std::vector<PrimitiveState>(cells.size()), cells.a};
    StepDiagnostics d;
    d.dt = dt;
    d.max_speed = max_wave_speed(cells, p);
    d.min_depth = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const FluxVector& out = fans[j + 1].flux_l;
        const FluxVector& in = fans[j].flux_r;
        PrimitiveState w{cells.w[j].h - ratio * (out.mass - in.mass),
                         cells.w[j].q - ratio * (out.momentum - in.momentum)};
        if (!std::isfinite(w.h) || !std::isfinite(w.q))
            throw BlowUp("non-finite state in cell " + std::to_string(j));
        if (w.h < negative_tolerance)
            throw BlowUp("negative depth " + std::to_string(w.h) + " in cell " + std::to_string(j));
        if (w.h < p.eps_dry)
            w = {};
        next.w[j] = w;
        d.min_depth = std::min(d.min_depth, w.h);
    }
    d.mass = total_mass(next, dx);
    return {std::move(next), d};
}

inline std::pair<CellArray, StepDiagnostics> step(const CellArray& cells, double dt, double dx,
                                                  const Boundaries& b, const PhysicsParams& p) {
    return step(cells, interface_fans(cells, b, p), dt, dx, p);
}

// ---------------------------------------------------------------------------
// Simulation configuration and driver
// ---------------------------------------------------------------------------

/// Piecewise-constant initial data on [x_start, x_end). A Surface region
/// stores the free-surface elevation and the depth is that minus the bed.
struct InitialRegion {
    enum class Kind { Depth, Surface };

    double x_start = 0.0;
    double x_end = 0.0;
    double value = 0.0;
    double u = 0.0;
    Kind kind = Kind::Depth;
};

struct SimulationConfig {
    std::string name;
    double length = 25.0;
    std::size_t cells = 1000;
    double cfl = 0.8;
    double end_time = 1.2;
    PiecewiseBed bed;
    std::vector<InitialRegion> initial;
    Boundaries boundaries;
    std::vector<double> snapshot_times;  ///< t = 0 and t = T are always added
    PhysicsParams physics;
    std::optional<std::size_t> max_steps;

    Grid grid() const { return Grid(length, cells); }
};

/// Cells are filled by center: later regions override earlier ones.
inline CellArray initial_cells(const SimulationConfig& cfg) {
    const Grid grid = cfg.grid();
    CellArray cells{std::vector<PrimitiveState>(grid.cell_count()), project_topography(cfg.bed, grid)};
    for (std::size_t j = 0; j < grid.cell_count(); ++j) {
        const double x = grid.center(j);
        for (const auto& r : cfg.initial) {
            if (x < r.x_start || x >= r.x_end) continue;
            const double h = r.kind == InitialRegion::Kind::Depth ? r.value : r.value - cells.a[j];
            if (!(h >= 0.0) || !std::isfinite(h))
                throw Error("initial depth is negative at x = " + std::to_string(x));
            cells.w[j] = h <= cfg.physics.eps_dry ? PrimitiveState{} : velocity_form(h, r.u);
        }
    }
    return cells;
}

inline void validate(const SimulationConfig& cfg) {
    if (!(cfg.length > 0.0) || !std::isfinite(cfg.length)) throw Error("length must be positive");
    if (cfg.cells < 2) throw Error("at least two cells are required");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw Error("cfl must lie in (0, 1]");
    if (!(cfg.end_time >= 0.0) || !std::isfinite(cfg.end_time)) throw Error("end time must be >= 0");
    for (double t : cfg.snapshot_times)
        if (!(t >= 0.0 && t <= cfg.end_time)) throw Error("snapshot time outside [0, T]");
    for (const auto& r : cfg.bed.regions)
        if (!std::isfinite(r.a) || !std::isfinite(r.x_start) || !std::isfinite(r.x_end))
            throw Error("bed regions must be finite");
    for (const auto& r : cfg.initial)
        if (!std::isfinite(r.value) || !std::isfinite(r.u)) throw Error("initial regions must be finite");
    cfg.physics.validate();
    (void)initial_cells(cfg);
}

struct Snapshot {
    double t = 0.0;
    CellArray cells;
};

struct StepRecord {
    std::size_t step = 0;
    double t = 0.0;  ///< time reached by the step
    StepDiagnostics diagnostics;
};

struct SnapshotSeries {
    Grid grid{1.0, 2};
    std::vector<Snapshot> snapshots;
    std::vector<StepRecord> steps;
};

inline SnapshotSeries run(const SimulationConfig& cfg) {
    constexpr double min_dt_fraction = 1e-12;
    validate(cfg);
    const Grid grid = cfg.grid();
    const double dx = grid.dx();
    const PhysicsParams& p = cfg.physics;

    std::vector<double> targets = cfg.snapshot_times;
    targets.push_back(0.0);
    targets.push_back(cfg.end_time);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    SnapshotSeries series{grid, {}, {}};
    CellArray cells = initial_cells(cfg);
    double t = 0.0;
    series.snapshots.push_back({t, cells});

    std::size_t n = 0;
    std::size_t target = 1;
    while (target < targets.size()) {
        if (cfg.max_steps && n >= *cfg.max_steps)
            break;
        const double next_time = targets[target];
        double dt = 0.0;
        try {
            dt = compute_dt(cells, cfg.cfl, dx, p, next_time - t);
        } catch (const AllDry&) {
            // Nothing moves; jump straight to the next output time.
            t = next_time;
            series.snapshots.push_back({t, cells});
            ++target;
            continue;
        }
        try {
            const std::vector<RiemannFan> fans = interface_fans(cells, cfg.boundaries, p);
            dt = std::min(dt, positivity_dt(cells, fans, dx));
            if (!(dt > min_dt_fraction * cfg.end_time))
                throw BlowUp("time step collapsed to " + std::to_string(dt));
            auto [next, diag] = step(cells, fans, dt, dx, p);
            cells = std::move(next);
            ++n;
            t = dt == next_time - t ? next_time : t + dt;
            series.steps.push_back({n, t, diag});
        } catch (const BlowUp& e) {
            throw BlowUp(std::string(e.what()) + " at step " + std::to_string(n + 1) + ", t = " +
                             std::to_string(t),
                         n + 1, t);
        }
        if (t >= next_time) {
            series.snapshots.push_back({t, cells});
            ++target;
        }
    }
    if (series.snapshots.back().t != t)
        series.snapshots.push_back({t, cells});
    return series;
}

}  // namespace vfroe
