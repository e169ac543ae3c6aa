#pragma once

// Snapshot CSV files and the INI-style run configuration format.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vfroe/scheme.hpp"

namespace vfroe::io {

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

inline constexpr std::string_view snapshot_header = "x,a,h,eta,u,q";

/// 17 significant digits: enough for any double to round-trip.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string snapshot_filename(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "snapshot_t%.6f.csv", t);
    return buf;
}

/// Snapshot times T*i/k for i = 1..k (t = 0 is always recorded by the driver).
inline std::vector<double> evenly_spaced(double end_time, std::size_t k) {
    std::vector<double> times;
    for (std::size_t i = 1; i <= k; ++i)
        times.push_back(i == k ? end_time : end_time * static_cast<double>(i) / static_cast<double>(k));
    return times;
}

inline void write_snapshot(std::ostream& os, const Grid& grid, const CellArray& cells, const PhysicsParams& p) {
    os << snapshot_header << '\n';
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const PrimitiveState& w = cells.w[j];
        const double a = cells.a[j];
        const double u = velocity(w, p);
        os << format_double(grid.center(j)) << ',' << format_double(a) << ',' << format_double(w.h) << ','
           << format_double(w.h + a) << ',' << format_double(u) << ',' << format_double(w.q) << '\n';
    }
}

inline void write_snapshot(const std::filesystem::path& path, const Grid& grid, const CellArray& cells,
                           const PhysicsParams& p) {
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    write_snapshot(os, grid, cells, p);
    if (!os)
        throw IoError("write failed: " + path.string());
}

struct SnapshotRow {
    double x, a, h, eta, u, q;
};

inline std::vector<SnapshotRow> read_snapshot(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != snapshot_header)
        throw IoError("missing snapshot header");
    std::vector<SnapshotRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        SnapshotRow r{};
        double* fields[] = {&r.x, &r.a, &r.h, &r.eta, &r.u, &r.q};
        const char* s = line.c_str();
        for (std::size_t k = 0; k < 6; ++k) {
            char* end = nullptr;
            *fields[k] = std::strtod(s, &end);
            if (end == s || (k < 5 && *end != ',') || (k == 5 && *end != '\0'))
                throw IoError("malformed snapshot row: " + line);
            s = end + 1;
        }
        rows.push_back(r);
    }
    return rows;
}

inline std::vector<SnapshotRow> read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open " + path.string());
    return read_snapshot(is);
}

inline CellArray to_cells(const std::vector<SnapshotRow>& rows) {
    CellArray cells;
    for (const auto& r : rows) {
        cells.w.push_back({r.h, r.q});
        cells.a.push_back(r.a);
    }
    return cells;
}

inline void write_diagnostics(const std::filesystem::path& path, const std::vector<StepRecord>& steps) {
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    os << "step,t,dt,max_speed,mass,min_depth\n";
    for (const auto& s : steps)
        os << s.step << ',' << format_double(s.t) << ',' << format_double(s.diagnostics.dt) << ','
           << format_double(s.diagnostics.max_speed) << ',' << format_double(s.diagnostics.mass) << ','
           << format_double(s.diagnostics.min_depth) << '\n';
}

// ---------------------------------------------------------------------------
// Config files
//
//   [grid]       length, cells
//   [time]       cfl, end_time, max_steps
//   [physics]    g, eps_dry, eps_speed
//   [boundary]   left, right   (transmissive | reflective)
//   [initial]    region = x0 x1 h u      surface = x0 x1 eta u
//   [topography] region = x0 x1 a
//   [output]     snapshots = k           times = t1 t2 ...
//
// '#' and ';' start comments. Regions are half-open [x0, x1); later lines win.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<double> numbers(const std::string& value, std::size_t line_no) {
    std::istringstream is(value);
    std::vector<double> out;
    std::string tok;
    while (is >> tok) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw ConfigError("line " + std::to_string(line_no) + ": not a number: " + tok);
        out.push_back(v);
    }
    return out;
}

inline double number(const std::string& value, std::size_t line_no) {
    const auto v = numbers(value, line_no);
    if (v.size() != 1)
        throw ConfigError("line " + std::to_string(line_no) + ": expected one number");
    return v.front();
}

inline std::vector<double> exactly(const std::string& value, std::size_t n, std::size_t line_no) {
    auto v = numbers(value, line_no);
    if (v.size() != n)
        throw ConfigError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " numbers");
    return v;
}

inline BoundaryPolicy policy(const std::string& value, std::size_t line_no) {
    if (value == "transmissive") return BoundaryPolicy::Transmissive;
    if (value == "reflective") return BoundaryPolicy::Reflective;
    throw ConfigError("line " + std::to_string(line_no) + ": unknown boundary policy " + value);
}

inline std::size_t count(const std::string& value, std::size_t line_no) {
    const double v = number(value, line_no);
    if (!(v >= 0.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
        throw ConfigError("line " + std::to_string(line_no) + ": expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Parsed run file. `snapshot_count` is the evenly spaced request, if any.
struct RunFile {
    SimulationConfig config;
    std::optional<std::size_t> snapshot_count;
};

inline RunFile parse_config(std::istream& is, std::string name = "config") {
    RunFile out;
    SimulationConfig& cfg = out.config;
    cfg.name = std::move(name);
    cfg.initial.clear();
    cfg.bed.regions.clear();

    std::string section;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find_first_of("#;"));
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
            section = detail::trim(std::string_view(line).substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = detail::trim(std::string_view(line).substr(0, eq));
        const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        const auto bad_key = [&] {
            return ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "' in [" +
                               section + "]");
        };

        if (section == "grid") {
            if (key == "length") cfg.length = detail::number(value, line_no);
            else if (key == "cells") cfg.cells = detail::count(value, line_no);
            else throw bad_key();
        } else if (section == "time") {
            if (key == "cfl") cfg.cfl = detail::number(value, line_no);
            else if (key == "end_time") cfg.end_time = detail::number(value, line_no);
            else if (key == "max_steps") cfg.max_steps = detail::count(value, line_no);
            else throw bad_key();
        } else if (section == "physics") {
            if (key == "g") cfg.physics.g = detail::number(value, line_no);
            else if (key == "eps_dry") cfg.physics.eps_dry = detail::number(value, line_no);
            else if (key == "eps_speed") cfg.physics.eps_speed = detail::number(value, line_no);
            else throw bad_key();
        } else if (section == "boundary") {
            if (key == "left") cfg.boundaries.left = detail::policy(value, line_no);
            else if (key == "right") cfg.boundaries.right = detail::policy(value, line_no);
            else if (key == "both") cfg.boundaries.left = cfg.boundaries.right = detail::policy(value, line_no);
            else throw bad_key();
        } else if (section == "initial") {
            const auto v = detail::exactly(value, 4, line_no);
            if (key == "region")
                cfg.initial.push_back({v[0], v[1], v[2], v[3], InitialRegion::Kind::Depth});
            else if (key == "surface")
                cfg.initial.push_back({v[0], v[1], v[2], v[3], InitialRegion::Kind::Surface});
            else throw bad_key();
        } else if (section == "topography") {
            if (key != "region") throw bad_key();
            const auto v = detail::exactly(value, 3, line_no);
            cfg.bed.regions.push_back({v[0], v[1], v[2]});
        } else if (section == "output") {
            if (key == "snapshots") out.snapshot_count = detail::count(value, line_no);
            else if (key == "times") cfg.snapshot_times = detail::numbers(value, line_no);
            else throw bad_key();
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": key outside a known section");
        }
    }
    if (cfg.initial.empty())
        throw ConfigError("config has no [initial] regions");
    return out;
}

inline RunFile load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open config " + path.string());
    return parse_config(is, path.stem().string());
}

}  // namespace vfroe::io
