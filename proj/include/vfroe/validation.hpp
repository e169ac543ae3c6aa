#pragma once

// Error norms of computed depth profiles against the exact flat-bottom solutions.

#include <cmath>
#include <functional>

#include "vfroe/oracle.hpp"
#include "vfroe/scheme.hpp"

namespace vfroe::validation {

struct ErrorNorms {
    double l1 = 0.0;           ///< sum |h - h_exact| dx
    double l1_relative = 0.0;  ///< l1 / sum |h_exact| dx
    double linf = 0.0;
};

/// Compares cell depths at time t > 0 with a self-similar profile centred on x0,
/// sampled at cell centres.
inline ErrorNorms depth_errors(const Grid& grid, const CellArray& cells, double t, double x0,
                               const std::function<oracle::ExactState(double)>& profile) {
    ErrorNorms e;
    double norm = 0.0;
    const double dx = grid.dx();
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const double exact = profile((grid.center(j) - x0) / t).h;
        const double diff = std::abs(cells.w[j].h - exact);
        e.l1 += diff * dx;
        e.linf = std::max(e.linf, diff);
        norm += std::abs(exact) * dx;
    }
    e.l1_relative = norm > 0.0 ? e.l1 / norm : e.l1;
    return e;
}

/// Right edge of the rightmost wet cell, or 0 when every cell is dry.
inline double wet_front(const Grid& grid, const CellArray& cells) {
    for (std::size_t j = cells.size(); j-- > 0;)
        if (cells.w[j].h > 0.0)
            return grid.interface(j + 1);
    return 0.0;
}

}  // namespace vfroe::validation
