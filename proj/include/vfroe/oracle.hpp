#pragma once

// Exact self-similar solutions of the flat-bottom shallow-water Riemann
// problem, used as validation references.

#include <algorithm>
#include <cmath>
#include <limits>

#include "vfroe/core.hpp"

namespace vfroe::oracle {

class VacuumFormation : public Error {
public:
    using Error::Error;
};

struct ExactState {
    double h = 0.0;
    double u = 0.0;
};

/// Wet-wet two-wave solution. The star depth solves
///   phi(h) = f(h, h_L) + f(h, h_R) + u_R - u_L = 0
/// where f is the shock (h > h_K) or rarefaction (h <= h_K) branch.
class StokerProfile {
public:
    StokerProfile(double h_l, double u_l, double h_r, double u_r, double g = 9.81)
        : h_l_(h_l), u_l_(u_l), h_r_(h_r), u_r_(u_r), g_(g) {
        if (!(h_l > 0.0) || !(h_r > 0.0))
            throw VacuumFormation("both initial depths must be positive");
        c_l_ = std::sqrt(g * h_l);
        c_r_ = std::sqrt(g * h_r);
        if (!(u_r - u_l < 2.0 * (c_l_ + c_r_)))
            throw VacuumFormation("initial data create a dry region between the waves");
        solve_star();
    }

    double h_star() const { return h_star_; }
    double u_star() const { return u_star_; }
    double c_star() const { return std::sqrt(g_ * h_star_); }
    /// Residual of the depth function at the returned root.
    double residual() const { return phi(h_star_); }
    int iterations() const { return iterations_; }

    double phi(double h) const {
        double fl, dfl, fr, dfr;
        branch(h, h_l_, fl, dfl);
        branch(h, h_r_, fr, dfr);
        return fl + fr + u_r_ - u_l_;
    }

    bool left_is_shock() const { return h_star_ > h_l_; }
    bool right_is_shock() const { return h_star_ > h_r_; }

    /// Shock speed of the left (resp. right) wave; only meaningful when that wave is a shock.
    double left_shock_speed() const {
        return u_l_ - c_l_ * std::sqrt(0.5 * h_star_ * (h_star_ + h_l_) / (h_l_ * h_l_));
    }
    double right_shock_speed() const {
        return u_r_ + c_r_ * std::sqrt(0.5 * h_star_ * (h_star_ + h_r_) / (h_r_ * h_r_));
    }

    ExactState operator()(double xi) const {
        const double cs = c_star();
        if (xi <= u_star_) {
            if (left_is_shock())
                return xi < left_shock_speed() ? ExactState{h_l_, u_l_} : ExactState{h_star_, u_star_};
            if (xi <= u_l_ - c_l_)
                return {h_l_, u_l_};
            if (xi >= u_star_ - cs)
                return {h_star_, u_star_};
            const double c = (u_l_ + 2.0 * c_l_ - xi) / 3.0;
            return {c * c / g_, (u_l_ + 2.0 * c_l_ + 2.0 * xi) / 3.0};
        }
        if (right_is_shock())
            return xi > right_shock_speed() ? ExactState{h_r_, u_r_} : ExactState{h_star_, u_star_};
        if (xi >= u_r_ + c_r_)
            return {h_r_, u_r_};
        if (xi <= u_star_ + cs)
            return {h_star_, u_star_};
        const double c = (-u_r_ + 2.0 * c_r_ + xi) / 3.0;
        return {c * c / g_, (u_r_ - 2.0 * c_r_ + 2.0 * xi) / 3.0};
    }

private:
    void branch(double h, double hk, double& f, double& df) const {
        if (h > hk) {
            const double s = std::sqrt(0.5 * g_ * (h + hk) / (h * hk));
            f = (h - hk) * s;
            df = s + (h - hk) * 0.5 * s * (1.0 / (h + hk) - 1.0 / h);
        } else {
            const double c = std::sqrt(g_ * h);
            f = 2.0 * (c - std::sqrt(g_ * hk));
            df = g_ / c;
        }
    }

    // Bisection-safeguarded Newton; phi is strictly increasing in h.
    void solve_star() {
        double lo = std::min(h_l_, h_r_) * 1e-6;
        double hi = std::max(h_l_, h_r_) * 10.0;
        while (phi(hi) < 0.0)
            hi *= 10.0;
        double h = 0.5 * (h_l_ + h_r_);
        for (iterations_ = 1; iterations_ <= 200; ++iterations_) {
            double fl, dfl, fr, dfr;
            branch(h, h_l_, fl, dfl);
            branch(h, h_r_, fr, dfr);
            const double value = fl + fr + u_r_ - u_l_;
            if (std::abs(value) <= 1e-12)
                break;
            if (value < 0.0) lo = h; else hi = h;
            double next = h - value / (dfl + dfr);
            if (!(next > lo && next < hi))
                next = 0.5 * (lo + hi);
            if (next == h || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
                h = next;
                break;
            }
            h = next;
        }
        h_star_ = h;
        double fl, dfl, fr, dfr;
        branch(h, h_l_, fl, dfl);
        branch(h, h_r_, fr, dfr);
        u_star_ = 0.5 * (u_l_ + u_r_) + 0.5 * (fr - fl);
    }

    double h_l_, u_l_, h_r_, u_r_, g_;
    double c_l_ = 0.0, c_r_ = 0.0;
    double h_star_ = 0.0, u_star_ = 0.0;
    int iterations_ = 0;
};

inline ExactState stoker_exact(double h_l, double u_l, double h_r, double u_r, double g, double xi) {
    return StokerProfile(h_l, u_l, h_r, u_r, g)(xi);
}

/// Dam break of still water of depth h_l onto a dry flat bed.
inline ExactState ritter_exact(double h_l, double g, double xi) {
    const double c_l = std::sqrt(g * h_l);
    if (xi <= -c_l)
        return {h_l, 0.0};
    if (xi >= 2.0 * c_l)
        return {0.0, 0.0};
    const double s = 2.0 * c_l - xi;
    return {s * s / (9.0 * g), 2.0 / 3.0 * (xi + c_l)};
}

}  // namespace vfroe::oracle
