#pragma once

// Linearized (VFRoe) Riemann solver in celerity-velocity variables.
//
// At each interface the system Y_t + A(Y_hat) Y_x = 0 is solved with
// Y = (2c, u, a), the arithmetic average Y_hat and
//
//            | u  c  0 |
//   A(Y)  =  | c  u  g |      eigenvalues 0, u - c, u + c.
//            | 0  0  0 |
//
// The raw linearized speeds are widened where needed so that both interface
// states keep a non-negative celerity; wet/dry interfaces use dry-bed
// rarefaction speeds instead.

#include <array>
#include <cmath>
#include <utility>

#include "vfroe/core.hpp"

namespace vfroe {

class DegenerateSpeeds : public Error {
public:
    using Error::Error;
};

enum class Regime {
    TorrentialLeft,   ///< both nonzero speeds negative
    TorrentialRight,  ///< both nonzero speeds positive
    Fluvial,          ///< speeds of opposite sign
    DryLeft,
    DryRight,
    BothDry,
    WallBlocked,      ///< dry bed above the wet free surface
};

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::TorrentialLeft: return "torrential-left";
        case Regime::TorrentialRight: return "torrential-right";
        case Regime::Fluvial: return "fluvial";
        case Regime::DryLeft: return "dry-left";
        case Regime::DryRight: return "dry-right";
        case Regime::BothDry: return "both-dry";
        case Regime::WallBlocked: return "wall-blocked";
    }
    return "?";
}

struct WaveSpeeds {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda1_hat = 0.0;
    double lambda2_hat = 0.0;
};

struct WaveStrengths {
    double d_alpha0 = 0.0;
    double d_alpha1 = 0.0;
    double d_alpha2 = 0.0;
};

struct RiemannFan {
    Regime regime = Regime::BothDry;
    WaveSpeeds speeds;
    CelerityState y_star_l;  ///< state at x/t = 0-
    CelerityState y_star_r;  ///< state at x/t = 0+
    FluxVector flux_l;
    FluxVector flux_r;
};

struct Eigenvalues {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

inline Vec3 as_vec(const CelerityState& y) { return {y.two_c, y.u, y.a}; }

/// Right and left eigenvector bases of A, parametrized by the two nonzero
/// speeds. The bases are biorthonormal: l_j . r_k = delta_jk.
struct EigenBasis {
    std::array<Vec3, 3> r;
    std::array<Vec3, 3> l;
};

inline EigenBasis eigen_basis(double lambda1, double lambda2, double g) {
    EigenBasis b;
    b.r[0] = {0.5 * g * (lambda2 - lambda1), -0.5 * g * (lambda2 + lambda1), lambda2 * lambda1};
    b.r[1] = {-1.0, 1.0, 0.0};
    b.r[2] = {1.0, 1.0, 0.0};
    b.l[0] = {0.0, 0.0, 1.0 / (lambda2 * lambda1)};
    b.l[1] = {-0.5, 0.5, g / (2.0 * lambda1)};
    b.l[2] = {0.5, 0.5, g / (2.0 * lambda2)};
    return b;
}

/// Linearization matrix A(Y) stored row-major.
inline std::array<Vec3, 3> jacobian(const CelerityState& y, double g) {
    const double c = y.c();
    return {{{y.u, c, 0.0}, {c, y.u, g}, {0.0, 0.0, 0.0}}};
}

inline CelerityState roe_average(const CelerityState& yl, const CelerityState& yr) {
    return {0.5 * (yl.two_c + yr.two_c), 0.5 * (yl.u + yr.u), 0.5 * (yl.a + yr.a)};
}

inline Eigenvalues eigenvalues(const CelerityState& y_hat) {
    const double c = y_hat.c();
    return {0.0, y_hat.u - c, y_hat.u + c};
}

/// Pushes speeds that sit within eps of zero (|u_hat| ~ c_hat resonance) to
/// +-eps with the sign of u_hat = (lambda1 + lambda2) / 2, or +eps when u_hat = 0.
inline std::pair<double, double> nudge_speeds(double lambda1, double lambda2, double eps) {
    const double sign = (lambda1 + lambda2) < 0.0 ? -1.0 : 1.0;
    if (std::abs(lambda1) < eps) lambda1 = sign * eps;
    if (std::abs(lambda2) < eps) lambda2 = sign * eps;
    return {lambda1, lambda2};
}

inline Regime classify_regime(double lambda1_hat, double lambda2_hat, double eps_speed) {
    const auto [l1, l2] = nudge_speeds(lambda1_hat, lambda2_hat, eps_speed);
    if (l2 < 0.0) return Regime::TorrentialLeft;
    if (l1 > 0.0) return Regime::TorrentialRight;
    return Regime::Fluvial;
}

/// Jump coefficients (Y_R - Y_L) . l_k, with l_k built from the supplied speeds.
inline WaveStrengths wave_strengths(const CelerityState& yl, const CelerityState& yr, double lambda1,
                                    double lambda2, const PhysicsParams& p) {
    const double da = yr.a - yl.a;
    const double d2c = yr.two_c - yl.two_c;
    const double du = yr.u - yl.u;
    WaveStrengths s;
    s.d_alpha1 = -0.5 * d2c + 0.5 * du;
    s.d_alpha2 = 0.5 * d2c + 0.5 * du;
    if (da != 0.0) {
        if (std::abs(lambda1) < p.eps_speed || std::abs(lambda2) < p.eps_speed)
            throw DegenerateSpeeds("wave speed too close to zero across a bed step");
        s.d_alpha0 = da / (lambda2 * lambda1);
        s.d_alpha1 += p.g * da / (2.0 * lambda1);
        s.d_alpha2 += p.g * da / (2.0 * lambda2);
    }
    return s;
}

/// True while the two rarefactions cannot separate: u_R - u_L < 2 (c_R + c_L).
inline bool no_vacuum(const CelerityState& yl, const CelerityState& yr) {
    return yr.u - yl.u < yr.two_c + yl.two_c;
}

/// Upper bound on an intermediate celerity next to a bed step. Each side
/// contributes the celerity of its free surface measured from the lower bed,
/// plus its velocity toward the interface; the cap is the larger of the two.
/// A still lake sits exactly on it.
inline double celerity_cap(const CelerityState& yl, const CelerityState& yr, double g) {
    const double a_low = std::min(yl.a, yr.a);
    const auto side = [&](const CelerityState& y, double toward) {
        const double two_c = y.a == a_low ? y.two_c : std::sqrt(y.two_c * y.two_c + 4.0 * g * (y.a - a_low));
        return two_c + std::max(0.0, toward);
    };
    return std::max(side(yl, yl.u), side(yr, -yr.u));
}

/// Flow up a step near resonance drives the speed in the stationary-wave
/// denominator to zero and the intermediate celerity to infinity. Moves that
/// speed away from zero just far enough to keep 2c* <= celerity_cap.
inline void bound_step_celerity(Regime regime, const CelerityState& yl, const CelerityState& yr,
                                WaveSpeeds& s, const PhysicsParams& p) {
    const double g_da = p.g * (yr.a - yl.a);
    const double cap = celerity_cap(yl, yr, p.g);
    const double denom = (yr.two_c + yl.two_c) - (yr.u - yl.u);
    switch (regime) {
        case Regime::Fluvial:
            if (!(denom > 0.0) || !(2.0 * cap > denom))
                break;
            if (g_da > 0.0)
                s.lambda1 = std::min(s.lambda1, -g_da / (2.0 * cap - denom));
            else
                s.lambda2 = std::max(s.lambda2, -g_da / (2.0 * cap - denom));
            break;
        case Regime::TorrentialRight:
            if (g_da > 0.0 && cap > yl.two_c)
                s.lambda1 = std::max(s.lambda1, 1.0 / (2.0 * (cap - yl.two_c) / g_da + 1.0 / s.lambda2));
            break;
        case Regime::TorrentialLeft:
            if (g_da < 0.0 && cap > yr.two_c)
                s.lambda2 = std::min(s.lambda2, -1.0 / (2.0 * (cap - yr.two_c) / -g_da - 1.0 / s.lambda1));
            break;
        default:
            break;
    }
}

/// Widens the linearized speeds across a bed step so the intermediate
/// celerities stay non-negative. Flat-bottom and dry regimes pass through.
inline WaveSpeeds correct_wave_speeds(Regime regime, const CelerityState& yl, const CelerityState& yr,
                                      double lambda1_hat, double lambda2_hat, const PhysicsParams& p) {
    WaveSpeeds s{lambda1_hat, lambda2_hat, lambda1_hat, lambda2_hat};
    const double g_da = p.g * (yr.a - yl.a);
    if (g_da == 0.0)
        return s;

    switch (regime) {
        case Regime::Fluvial: {
            const double denom = (yr.two_c + yl.two_c) - (yr.u - yl.u);
            // The threshold is only meaningful while no vacuum forms.
            if (!(denom > 0.0))
                break;
            const double threshold = g_da / denom;
            if (g_da > 0.0)
                s.lambda2 = std::max(lambda2_hat, threshold);
            else
                s.lambda1 = std::min(lambda1_hat, threshold);
            break;
        }
        case Regime::TorrentialLeft:
            if (g_da > 0.0) {
                const double threshold = -g_da * lambda1_hat / (2.0 * yr.two_c * lambda1_hat - g_da);
                s.lambda2 = std::min(lambda2_hat, threshold);
            }
            break;
        case Regime::TorrentialRight:
            if (g_da < 0.0) {
                const double threshold = -g_da * lambda2_hat / (2.0 * yl.two_c * lambda2_hat - g_da);
                s.lambda1 = std::max(lambda1_hat, threshold);
            }
            break;
        default:
            break;
    }
    bound_step_celerity(regime, yl, yr, s, p);
    return s;
}

namespace detail {

inline CelerityState axpy(const CelerityState& y, double alpha, const Vec3& r) {
    return {y.two_c + alpha * r[0], y.u + alpha * r[1], y.a + alpha * r[2]};
}

}  // namespace detail

/// States on both sides of x/t = 0 for a wet-wet interface, evaluated with
/// the corrected speeds. Celerities are returned unclamped except in the
/// vacuum fallback.
inline std::pair<CelerityState, CelerityState> intermediate_states(Regime regime, const CelerityState& yl,
                                                                   const CelerityState& yr,
                                                                   const WaveSpeeds& speeds,
                                                                   const PhysicsParams& p) {
    const EigenBasis basis = eigen_basis(speeds.lambda1, speeds.lambda2, p.g);
    const WaveStrengths d = wave_strengths(yl, yr, speeds.lambda1, speeds.lambda2, p);
    const double da = yr.a - yl.a;

    CelerityState star_l;
    CelerityState star_r;
    switch (regime) {
        case Regime::TorrentialLeft:
            star_r = yr;
            star_l = detail::axpy(yr, -d.d_alpha0, basis.r[0]);
            break;
        case Regime::TorrentialRight:
            star_l = yl;
            star_r = detail::axpy(yl, d.d_alpha0, basis.r[0]);
            break;
        case Regime::Fluvial:
            star_l = detail::axpy(yl, d.d_alpha1, basis.r[1]);
            star_r = detail::axpy(yr, -d.d_alpha2, basis.r[2]);
            if (!no_vacuum(yl, yr)) {
                // Only the celerity is overridden; u* keeps the decomposition value.
                if (da == 0.0) {
                    star_l.two_c = 0.0;
                    star_r.two_c = 0.0;
                } else if (da > 0.0) {
                    star_l.two_c = std::min(-p.g * da / (2.0 * speeds.lambda1_hat), celerity_cap(yl, yr, p.g));
                    star_r.two_c = 0.0;
                } else {
                    star_l.two_c = 0.0;
                    star_r.two_c = std::min(-p.g * da / (2.0 * speeds.lambda2_hat), celerity_cap(yl, yr, p.g));
                }
            }
            break;
        default:
            throw Error("intermediate_states requires a wet-wet regime");
    }
    // One state on a flat interface keeps the two fluxes bitwise equal.
    if (da == 0.0 && regime == Regime::Fluvial)
        star_r = star_l;
    return {star_l, star_r};
}

enum class DrySide { Left, Right };

/// Dry-bed rarefaction speeds: the wave on the dry side travels at u + 2c.
inline WaveSpeeds dry_bed_speeds(const PrimitiveState& wet, DrySide side, const PhysicsParams& p) {
    const double c = std::sqrt(p.g * wet.h);
    const double u = velocity(wet, p);
    WaveSpeeds s;
    if (side == DrySide::Right) {
        s.lambda1 = u - c;
        s.lambda2 = u + 2.0 * c;
    } else {
        s.lambda1 = u - 2.0 * c;
        s.lambda2 = u + c;
    }
    s.lambda1_hat = s.lambda1;
    s.lambda2_hat = s.lambda2;
    return s;
}

inline std::pair<FluxVector, FluxVector> interface_fluxes(const RiemannFan& fan) {
    return {fan.flux_l, fan.flux_r};
}

namespace detail {

// Floating-point cancellation may leave tiny negative celerities; the
// positivity guarantee makes anything else impossible after correction.
inline void clamp_celerity(CelerityState& y) {
    if (y.two_c < 0.0) y.two_c = 0.0;
}

inline void finish_fan(RiemannFan& fan, const PhysicsParams& p) {
    clamp_celerity(fan.y_star_l);
    clamp_celerity(fan.y_star_r);
    fan.flux_l = physical_flux(celerity_to_primitive(fan.y_star_l, p), p);
    fan.flux_r = physical_flux(celerity_to_primitive(fan.y_star_r, p), p);
}

inline RiemannFan solve_wet(const CelerityState& yl, const CelerityState& yr, const PhysicsParams& p) {
    const Eigenvalues ev = eigenvalues(roe_average(yl, yr));
    const auto [l1, l2] = nudge_speeds(ev.lambda1, ev.lambda2, p.eps_speed);
    RiemannFan fan;
    fan.regime = classify_regime(l1, l2, p.eps_speed);
    fan.speeds = correct_wave_speeds(fan.regime, yl, yr, l1, l2, p);
    std::tie(fan.y_star_l, fan.y_star_r) = intermediate_states(fan.regime, yl, yr, fan.speeds, p);
    finish_fan(fan, p);
    return fan;
}

// Linear fan between a wet state and a dry bed, built on the flat-bottom
// eigenvectors r1, r2 with the dry-bed speeds. No stationary wave.
inline RiemannFan solve_dry_bed(const PrimitiveState& wet, const CelerityState& yl, const CelerityState& yr,
                                DrySide side, const PhysicsParams& p) {
    RiemannFan fan;
    fan.regime = side == DrySide::Right ? Regime::DryRight : Regime::DryLeft;
    fan.speeds = dry_bed_speeds(wet, side, p);
    const double l1 = fan.speeds.lambda1;
    const double l2 = fan.speeds.lambda2;

    CelerityState mid;
    if (side == DrySide::Right) {
        const double d_alpha1 = -0.5 * (yr.two_c - yl.two_c) + 0.5 * (yr.u - yl.u);
        if (l1 >= 0.0)
            mid = yl;
        else if (l2 <= 0.0)
            mid = yr;
        else
            mid = {yl.two_c - d_alpha1, yl.u + d_alpha1, 0.0};
    } else {
        const double d_alpha2 = 0.5 * (yr.two_c - yl.two_c) + 0.5 * (yr.u - yl.u);
        if (l2 <= 0.0)
            mid = yr;
        else if (l1 >= 0.0)
            mid = yl;
        else
            mid = {yr.two_c - d_alpha2, yr.u - d_alpha2, 0.0};
    }
    if (mid.two_c <= 0.0)
        mid = {0.0, 0.0, 0.0};
    fan.y_star_l = {mid.two_c, mid.u, yl.a};
    fan.y_star_r = {mid.two_c, mid.u, yr.a};
    finish_fan(fan, p);
    return fan;
}

// Dry bed at or above the wet free surface: reflect the wet state and let
// nothing through to the dry cell.
inline RiemannFan solve_wall(const PrimitiveState& wet, double a_wet, double a_dry, DrySide side,
                             const PhysicsParams& p) {
    const PrimitiveState mirror{wet.h, -wet.q};
    RiemannFan fan;
    if (side == DrySide::Right) {
        fan = solve_wet(primitive_to_celerity(wet, a_wet, p), primitive_to_celerity(mirror, a_wet, p), p);
        fan.y_star_r = {0.0, 0.0, a_dry};
        fan.flux_r = {};
    } else {
        fan = solve_wet(primitive_to_celerity(mirror, a_wet, p), primitive_to_celerity(wet, a_wet, p), p);
        fan.y_star_l = {0.0, 0.0, a_dry};
        fan.flux_l = {};
    }
    fan.regime = Regime::WallBlocked;
    return fan;
}

}  // namespace detail

/// Full interface solve between cell states (w_L on bed a_L) and (w_R on bed a_R).
inline RiemannFan solve(const PrimitiveState& wl, double al, const PrimitiveState& wr, double ar,
                        const PhysicsParams& p) {
    if (!std::isfinite(wl.h) || !std::isfinite(wl.q) || !std::isfinite(wr.h) || !std::isfinite(wr.q) ||
        !std::isfinite(al) || !std::isfinite(ar))
        throw NonFiniteInput("non-finite state passed to the Riemann solver");

    const bool dry_l = is_dry(wl, p);
    const bool dry_r = is_dry(wr, p);
    const CelerityState yl = primitive_to_celerity(wl, al, p);
    const CelerityState yr = primitive_to_celerity(wr, ar, p);

    if (dry_l && dry_r) {
        RiemannFan fan;
        fan.regime = Regime::BothDry;
        fan.y_star_l = yl;
        fan.y_star_r = yr;
        return fan;
    }
    if (dry_r) {
        if (wl.h + al <= ar)
            return detail::solve_wall(wl, al, ar, DrySide::Right, p);
        return detail::solve_dry_bed(wl, yl, yr, DrySide::Right, p);
    }
    if (dry_l) {
        if (wr.h + ar <= al)
            return detail::solve_wall(wr, ar, al, DrySide::Left, p);
        return detail::solve_dry_bed(wr, yl, yr, DrySide::Left, p);
    }
    return detail::solve_wet(yl, yr, p);
}

}  // namespace vfroe
