/**
 * @file fluid.hpp
 * @brief Water properties: density, gravity and the temperature-stepped
 *        dynamic viscosity rule.
 */
#pragma once

#include <vector>

#include "tidecal/errors.hpp"

namespace tidecal {

/// Piecewise-constant viscosity as a function of water temperature.
/// Bucket i applies while T < thresholds_C[i]; the last value applies
/// from the last threshold upward. Values must be non-increasing with
/// temperature (warmer water is never more viscous).
struct ViscosityRule {
    std::vector<double> thresholds_C;  ///< ascending bucket boundaries
    std::vector<double> values_Pa_s;   ///< size() == thresholds_C.size() + 1

    /// 20/10/0 degC table collapsed to midpoint buckets:
    /// T < 5 -> 1.797e-3, 5 <= T < 15 -> 1.307e-3, T >= 15 -> 1.004e-3.
    static ViscosityRule standard_table();

    /// Same viscosity at every temperature.
    static ViscosityRule constant(double mu_Pa_s);

    double at(double temperature_C) const;
    void validate() const;
};

struct FluidProperties {
    double rho = 1000.0;  ///< density [kg/m^3]
    double g = 9.81;      ///< gravity [m/s^2]
    ViscosityRule viscosity = ViscosityRule::standard_table();

    double rho_g() const { return rho * g; }
    void validate() const;
};

/// Dynamic viscosity [Pa s] at water temperature T [degC].
double viscosity_of_temperature(double temperature_C, const FluidProperties& fluid);

/// Ratio of coldest-bucket to warmest-bucket viscosity, i.e. the factor by
/// which soil diffusivity drops from midsummer to midwinter.
double viscosity_seasonal_ratio(const FluidProperties& fluid);

}  // namespace tidecal
