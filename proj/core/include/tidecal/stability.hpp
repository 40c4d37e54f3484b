/**
 * @file stability.hpp
 * @brief Point-level effective-stress constitutive evaluation: plane-strain
 *        elasticity, plane-strain Drucker-Prager constants, yield function
 *        and the closed-form return map.
 *
 * Sign convention: compressive stresses are negative; pore pressure p > 0
 * reduces effective compression.
 */
#pragma once

#include <vector>

#include "tidecal/mesh.hpp"
#include "tidecal/model.hpp"

namespace tidecal::stability {

/// Plane-strain stress state (the only shear component is xy).
struct StressState {
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
    double xy = 0.0;
};

/// Plane-strain strain state (tensor shear component, eps_zz = 0).
struct StrainState {
    double xx = 0.0;
    double yy = 0.0;
    double xy = 0.0;
};

struct StressInvariants {
    double I1 = 0.0;  ///< trace
    double I2 = 0.0;  ///< second invariant
    double J2 = 0.0;  ///< second deviatoric invariant, I1^2/3 - I2
};

StressInvariants stress_invariants(const StressState& s);

/// Plane-strain Drucker-Prager constants matched to Mohr-Coulomb:
/// alpha = tan(phi)/sqrt(9 + 12 tan^2 phi), F_DP = 3c/sqrt(9 + 12 tan^2 phi).
struct DruckerPragerConstants {
    double alpha = 0.0;
    double f_dp = 0.0;  ///< [Pa]
};

DruckerPragerConstants dp_constants(double cohesion, double friction_angle_rad);

/// F = alpha*I1 + sqrt(J2) - F_DP. Negative: elastic; zero: on the surface;
/// positive: inadmissible trial state.
double yield_function(const StressState& s, double cohesion, double friction_angle_rad);

/// Linear isotropic plane-strain stress from strain.
StressState elastic_stress(const StrainState& e, double young, double poisson);

struct ReturnMapResult {
    StressState stress;       ///< projected onto F <= 0
    StressState plastic_strain_increment;  ///< same component layout as stress
    bool yielded = false;
    bool apex = false;
};

/// Closed-form associated-flow return to the Drucker-Prager surface; trial
/// states inside the cone extension project to the apex. The corrected
/// state satisfies F <= 1 Pa.
ReturnMapResult return_map(const StressState& trial, double cohesion,
                           double friction_angle_rad, double young, double poisson);

/// Per-cell yield-function screening over a simulated pressure field.
/// Total vertical stress is the overburden integral of rho_s*g, horizontal
/// and out-of-plane stress come from the at-rest coefficient
/// K0 = 1 - sin(phi); effective stress adds the pore pressure.
struct StabilityCell {
    double x = 0.0;
    double y = 0.0;
    double yield_value = 0.0;  ///< F [Pa]
    bool flagged = false;      ///< F >= 0
};

std::vector<StabilityCell> stability_field(const flow::Mesh& mesh,
                                           const std::vector<double>& pressure,
                                           double cohesion, double friction_angle_rad,
                                           double soil_density, double gravity);

}  // namespace tidecal::stability
