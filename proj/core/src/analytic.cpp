#include "tidecal/analytic.hpp"

#include <cmath>

#include "tidecal/errors.hpp"

namespace tidecal::analytic {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(name) + " must be positive and finite");
    }
}

/// exp(z) * (1 - exp(-2*(z+shift))) ... helpers for the stable sinh ratio.
std::complex<double> one_minus_exp_m2(std::complex<double> z) {
    return 1.0 - std::exp(-2.0 * z);
}

}  // namespace

HarmonicBoundary HarmonicBoundary::from_period(double amplitude, double period_s,
                                               double phase) {
    check_positive(period_s, "period");
    HarmonicBoundary bc;
    bc.amplitude = amplitude;
    bc.omega = 2.0 * kPi / period_s;
    bc.phase = phase;
    return bc;
}

double wrap_delay(double delay_s, double period_s) {
    double w = std::fmod(delay_s, period_s);
    if (w < 0.0) w += period_s;
    return w;
}

double wrapped_delay_difference(double a_s, double b_s, double period_s) {
    double w = std::fmod(a_s - b_s, period_s);
    if (w < -period_s / 2.0) w += period_s;
    if (w >= period_s / 2.0) w -= period_s;
    return w;
}

HarmonicResponse semi_infinite_response(double x, double d, const HarmonicBoundary& bc) {
    if (x < 0.0) throw InvalidArgument("x must be non-negative");
    check_positive(d, "diffusivity");
    check_positive(bc.omega, "omega");
    HarmonicResponse r;
    const double decay = std::sqrt(bc.omega / (2.0 * d));
    r.amplitude = bc.amplitude * std::exp(-x * decay);
    r.delay_s = x * std::sqrt(1.0 / (2.0 * d * bc.omega));
    return r;
}

std::complex<double> sinh_ratio_transfer(double x, double L, double d, double omega) {
    // k = sqrt(i omega/d) = sqrt(omega/(2d)) * (1 + i); Re(k) > 0.
    const double s = std::sqrt(omega / (2.0 * d));
    const std::complex<double> k(s, s);
    const std::complex<double> zx = k * x;
    const std::complex<double> zL = k * L;
    // sinh(zx)/sinh(zL) = exp(zx - zL) * (1 - e^{-2 zx}) / (1 - e^{-2 zL}),
    // valid for Re(zx) >= 0, Re(zL) > 0; avoids overflow for large |zL|.
    return std::exp(zx - zL) * one_minus_exp_m2(zx) / one_minus_exp_m2(zL);
}

double finite_aquifer_pressure(double x, double t, double d, double L,
                               const HarmonicBoundary& bc) {
    check_positive(d, "diffusivity");
    check_positive(L, "aquifer length");
    check_positive(bc.omega, "omega");
    if (x < 0.0 || x > L) throw InvalidArgument("x must lie in [0, L]");
    // p(x,t) = Im{ A e^{i(omega t + phase)} sinh(kx)/sinh(kL) }.
    const std::complex<double> H = sinh_ratio_transfer(x, L, d, bc.omega);
    const std::complex<double> phasor =
        bc.amplitude * H *
        std::exp(std::complex<double>(0.0, bc.omega * t + bc.phase));
    return phasor.imag();
}

HarmonicResponse finite_aquifer_response(double x, double d, double L,
                                         const HarmonicBoundary& bc) {
    check_positive(d, "diffusivity");
    check_positive(L, "aquifer length");
    check_positive(bc.omega, "omega");
    if (x < 0.0 || x > L) throw InvalidArgument("x must lie in [0, L]");
    HarmonicResponse r;
    if (x == 0.0) {
        // Fixed boundary: zero oscillation, delay undefined; report 0.
        r.amplitude = 0.0;
        r.delay_s = 0.0;
        return r;
    }
    const std::complex<double> H = sinh_ratio_transfer(x, L, d, bc.omega);
    r.amplitude = bc.amplitude * std::abs(H);
    const double period = 2.0 * kPi / bc.omega;
    r.delay_s = wrap_delay(-std::arg(H) / bc.omega, period);
    return r;
}

double attenuation_q(double x, double d, double T_slow) {
    if (x < 0.0) throw InvalidArgument("x must be non-negative");
    check_positive(d, "diffusivity");
    check_positive(T_slow, "slow period");
    return std::exp(-x * std::sqrt(kPi / (T_slow * d)));
}

}  // namespace tidecal::analytic
