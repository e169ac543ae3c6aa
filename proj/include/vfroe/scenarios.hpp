#pragma once

// Built-in dam-break configurations on a 25 m channel.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vfroe/scheme.hpp"

namespace vfroe::scenarios {

class UnknownScenario : public Error {
public:
    explicit UnknownScenario(std::string_view name) : Error("unknown scenario: " + std::string(name)) {}
};

inline constexpr double channel_length = 25.0;
inline constexpr double dam_position = 12.5;

/// Bed of the overtopping test: flat with a rectangular obstacle on [10.5, 14.5].
inline PiecewiseBed obstacle_bed(double height = 0.2) { return {{{10.5, 14.5, height}}}; }

inline SimulationConfig wet_dam_break(std::string name, double upstream_bed, double cfl) {
    SimulationConfig cfg;
    cfg.name = std::move(name);
    cfg.length = channel_length;
    cfg.cells = 1000;
    cfg.end_time = 1.2;
    cfg.cfl = cfl;
    if (upstream_bed != 0.0)
        cfg.bed.regions.push_back({0.0, dam_position, upstream_bed});
    cfg.initial = {{0.0, dam_position, 3.0, 0.0}, {dam_position, channel_length, 4.0, 0.0}};
    return cfg;
}

inline SimulationConfig test1() { return wet_dam_break("test1", 0.0, 0.8); }
inline SimulationConfig test2() { return wet_dam_break("test2", 2.0, 0.8); }
inline SimulationConfig test3() { return wet_dam_break("test3", 4.0, 0.6); }

inline SimulationConfig test4() {
    SimulationConfig cfg;
    cfg.name = "test4";
    cfg.cells = 500;
    cfg.end_time = 2.0;
    cfg.cfl = 0.4;
    cfg.bed.regions = {{dam_position, channel_length, 1.0}};
    cfg.initial = {{0.0, dam_position, 1.5, 0.0}, {dam_position, channel_length, 0.0, 0.0}};
    return cfg;
}

inline SimulationConfig test5(double obstacle_height = 0.2) {
    using Kind = InitialRegion::Kind;
    SimulationConfig cfg;
    cfg.name = "test5";
    cfg.cells = 500;
    cfg.end_time = 3.0;
    cfg.cfl = 0.4;
    cfg.bed = obstacle_bed(obstacle_height);
    cfg.initial = {{0.0, 7.5, 1.0, 0.0},
                   {7.5, 10.5, 0.1, 0.0, Kind::Surface},
                   {10.5, 14.5, 0.0, 0.0},
                   {14.5, channel_length, 0.1, 0.0, Kind::Surface}};
    return cfg;
}

/// Still water over a random stepped bed; the exact solution never moves.
inline SimulationConfig lake_at_rest(unsigned seed = 20240601) {
    SimulationConfig cfg;
    cfg.name = "lake_at_rest";
    cfg.cells = 200;
    cfg.cfl = 0.8;
    cfg.end_time = 1e6;
    cfg.max_steps = 500;
    cfg.boundaries = {BoundaryPolicy::Reflective, BoundaryPolicy::Reflective};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> height(0.0, 2.0);
    constexpr int steps = 10;
    const double width = channel_length / steps;
    for (int k = 0; k < steps; ++k)
        cfg.bed.regions.push_back({k * width, (k + 1) * width, height(rng)});
    cfg.initial = {{0.0, channel_length, 5.0, 0.0, InitialRegion::Kind::Surface}};
    return cfg;
}

inline SimulationConfig ritter_drybed() {
    SimulationConfig cfg;
    cfg.name = "ritter_drybed";
    cfg.cells = 500;
    cfg.end_time = 1.0;
    cfg.cfl = 0.4;
    cfg.initial = {{0.0, dam_position, 1.5, 0.0}};
    return cfg;
}

inline std::vector<std::string> builtin_names() {
    return {"test1", "test2", "test3", "test4", "test5", "lake_at_rest", "ritter_drybed"};
}

inline SimulationConfig builtin(std::string_view name) {
    if (name == "test1") return test1();
    if (name == "test2") return test2();
    if (name == "test3") return test3();
    if (name == "test4") return test4();
    if (name == "test5") return test5();
    if (name == "lake_at_rest") return lake_at_rest();
    if (name == "ritter_drybed") return ritter_drybed();
    throw UnknownScenario(name);
}

}  // namespace vfroe::scenarios
