/**
 * @file analytic.hpp
 * @brief Closed-form 1D tidal propagation in saturated aquifers.
 *
 * Two classical problems for p_t = d p_xx with harmonic forcing:
 *  - semi-infinite aquifer driven at x = 0, decaying for x -> inf;
 *  - finite aquifer of length L driven at x = L with p(0) = 0.
 *
 * The finite-aquifer amplitude/delay come from the exact complex-exponential
 * solution; finite_aquifer_pressure exposes the raw time signal and serves
 * as the in-repo oracle for finite_aquifer_response.
 */
#pragma once

#include <complex>

namespace tidecal::analytic {

/// Default tidal period: 12 h 25 min.
inline constexpr double kTidalPeriodS = 44700.0;

/// Harmonic pressure boundary p(t) = A sin(omega t + phase).
struct HarmonicBoundary {
    double amplitude = 1.0;                       ///< A [Pa]
    double omega = 2.0 * 3.14159265358979323846 / kTidalPeriodS;  ///< [rad/s]
    double phase = 0.0;                           ///< [rad]

    static HarmonicBoundary from_period(double amplitude, double period_s,
                                        double phase = 0.0);
};

/// Steady-state harmonic response at a point: oscillation amplitude and the
/// lag of its maximum behind the boundary maximum, wrapped to [0, T).
struct HarmonicResponse {
    double amplitude = 0.0;  ///< [Pa]
    double delay_s = 0.0;    ///< [s], in [0, 2*pi/omega)
};

/// Semi-infinite aquifer: amplitude A*exp(-x*sqrt(omega/(2d))), delay
/// x*sqrt(1/(2 d omega)).
HarmonicResponse semi_infinite_response(double x, double d, const HarmonicBoundary& bc);

/// Exact pressure at (x, t) in the finite aquifer (0 <= x <= L).
double finite_aquifer_pressure(double x, double t, double d, double L,
                               const HarmonicBoundary& bc);

/// Amplitude and delay of the steady harmonic at x in the finite aquifer.
HarmonicResponse finite_aquifer_response(double x, double d, double L,
                                         const HarmonicBoundary& bc);

/// Dissipation coefficient for slow fluctuations of period T_slow:
/// q = exp(-x*sqrt(pi/(T_slow*d))).
double attenuation_q(double x, double d, double T_slow);

/// Complex transfer sinh(k x)/sinh(k L) with k = sqrt(i omega / d),
/// evaluated in overflow-safe form. Exposed for the multizone system.
std::complex<double> sinh_ratio_transfer(double x, double L, double d, double omega);

/// Wrap a delay into [0, period).
double wrap_delay(double delay_s, double period_s);

/// Signed smallest difference a-b modulo period, in [-period/2, period/2).
double wrapped_delay_difference(double a_s, double b_s, double period_s);

}  // namespace tidecal::analytic
