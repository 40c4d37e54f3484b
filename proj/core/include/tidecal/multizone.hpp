/**
 * @file multizone.hpp
 * @brief Two-slice, two-zone-per-slice superposition model used to produce
 *        calibration initial guesses.
 *
 * Each horizontal slice of the dike is modeled as two homogeneous 1D zones
 * in series: a sea-side zone of length L1 and a land-side zone of length L2,
 * driven by the tide at x = 0 and held at zero oscillation at x = L1 + L2.
 * The oscillation at each zone interface is an unknown complex phasor tied
 * to the zones by continuity of the pressure gradient. Matching modeled
 * amplitude/delay at three sensors (two in the upper slice, one in the
 * lower) plus the two complex continuity conditions yields a 10-equation
 * system for 10 unknowns.
 */
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "tidecal/analytic.hpp"
#include "tidecal/features.hpp"

namespace tidecal::analytic {

enum class Slice { Upper, Lower };

/// Per-slice zone sequence with interface oscillation unknowns.
struct MultiZoneLayout {
    // Diffusivities [m^2/s]: index 0/1 = upper slice sea/land zone,
    // 2/3 = lower slice sea/land zone.
    std::array<double, 4> d{1.0, 1.0, 1.0, 1.0};
    double len_sea = 80.0;   ///< L1 [m]
    double len_land = 15.0;  ///< L2 [m]
    // Interface oscillation phasors (amplitude * e^{i phase}), per slice.
    std::complex<double> interface_upper{0.0, 0.0};
    std::complex<double> interface_lower{0.0, 0.0};

    double total_length() const { return len_sea + len_land; }
    void validate() const;
};

/// A sensor-feature target at 1D coordinate x (measured from the sea-side
/// driving boundary) in one slice.
struct SensorTarget {
    double x = 0.0;
    Slice slice = Slice::Upper;
    HarmonicFeature feature;
};

/// Interface phasor that satisfies gradient continuity exactly for the
/// given zone pair, with unit-boundary forcing scaled by bc.amplitude.
std::complex<double> consistent_interface(double d_sea, double d_land, double len_sea,
                                          double len_land, const HarmonicBoundary& bc);

/// Layout with both interface phasors replaced by their continuity-exact
/// values (used to build self-consistent layouts in tests and forwards).
MultiZoneLayout with_consistent_interfaces(MultiZoneLayout layout,
                                           const HarmonicBoundary& bc);

/// Complex pressure phasor at coordinate x within a slice of the layout.
std::complex<double> multizone_phasor(const MultiZoneLayout& layout, Slice slice,
                                      double x, const HarmonicBoundary& bc);

/// Feature (relative amplitude, delay) predicted at a sensor position.
HarmonicFeature multizone_feature(const MultiZoneLayout& layout, Slice slice, double x,
                                  const HarmonicBoundary& bc);

/// Residual vector of the 10-equation system: 2 continuity residuals per
/// slice interface (real and imaginary part of the gradient mismatch,
/// scaled by (L1+L2)/A), then per target the amplitude mismatch (in
/// tidal-amplitude fractions) and the delay mismatch (in periods).
/// Requires exactly 3 targets.
std::vector<double> multizone_residuals(const MultiZoneLayout& layout,
                                        const HarmonicBoundary& bc,
                                        const std::vector<SensorTarget>& targets);

struct ParameterBox {
    double d_min = 1e-3;    ///< [m^2/s]
    double d_max = 100.0;
    double len_sea_min = 40.0, len_sea_max = 110.0;
    double len_land_min = 5.0, len_land_max = 40.0;
};

struct InitialGuessOptions {
    int multistarts = 32;
    double tolerance = 1e-8;  ///< on the normalized residual norm
    int max_iterations = 150;
};

struct InitialGuessResult {
    MultiZoneLayout layout;
    double residual_norm = 0.0;
    bool converged = false;   ///< false = NoConvergence; best effort returned
    int converged_starts = 0;
};

/// Solve the 10-equation system by damped (Levenberg-regularized) Newton with
/// quasi-random multistarts inside the box; diffusivities are iterated in
/// log-space. Among converged roots the least-heterogeneous layout (smallest
/// within-slice log-diffusivity spread) is returned; with no converged root
/// the best residual is returned with converged = false.
InitialGuessResult multizone_initial_guess(const std::vector<SensorTarget>& targets,
                                           const HarmonicBoundary& bc,
                                           const ParameterBox& box,
                                           const InitialGuessOptions& opts = {});

}  // namespace tidecal::analytic
