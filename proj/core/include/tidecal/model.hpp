/**
 * @file model.hpp
 * @brief Dike cross-section model: soil zones, boundary assignments,
 *        sensors and fluid properties.
 */
#pragma once

#include <string>
#include <vector>

#include "tidecal/fluid.hpp"
#include "tidecal/geometry.hpp"

namespace tidecal {

/// van Genuchten retention parameters. m is tied to n via m = 1 - 1/n.
struct VanGenuchtenParams {
    double a = 8.0;        ///< [1/m]
    double n = 1.5;        ///< [-], > 1
    double l = 0.5;        ///< pore-connectivity exponent [-]
    double theta_s = 0.43; ///< saturated water content [-]
    double theta_r = 0.045;///< residual water content [-]

    double m() const { return 1.0 - 1.0 / n; }
    void validate() const;
};

/// Homogeneous soil region. Stores the product (saturated diffusivity x
/// water viscosity) [Pa m^2] so zone data stays temperature-independent;
/// runtime diffusivity is d = d_mu / mu(T).
struct SoilZone {
    Polygon region;
    double d_mu = 1e-3;               ///< [Pa m^2]
    VanGenuchtenParams vg;
    double storage = 1e-5;            ///< specific storage S [1/Pa]
    double anisotropy_y_over_x = 1.0; ///< vertical/horizontal mobility ratio

    void validate() const;
};

enum class BoundaryKind { Sea, Land, Wall };

BoundaryKind parse_boundary_kind(const std::string& token);
std::string boundary_kind_name(BoundaryKind kind);

struct Sensor {
    std::string id;
    double x = 0.0;
    double y = 0.0;
};

/// Cross-section model shared by the solvers. Immutable after construction
/// by convention; all operations on it are pure.
struct DikeModel {
    Polygon cross_section;
    std::vector<SoilZone> zones;
    std::vector<BoundaryKind> boundary; ///< one entry per polygon edge
    std::vector<Sensor> sensors;
    FluidProperties fluid;
    double temperature_C = 20.0;        ///< input scalar; sets mu(T)

    /// Runtime viscosity for the configured temperature.
    double viscosity() const { return viscosity_of_temperature(temperature_C, fluid); }

    /// Throws InvalidArgument on violated invariants (edge count mismatch,
    /// sensors outside the polygon, degenerate zones, ...).
    void validate() const;
};

/// Load a model configuration document (JSON). Unknown keys are rejected.
DikeModel load_model_json(const std::string& text);
DikeModel load_model_file(const std::string& path);

/// Serialize back to the configuration schema.
std::string model_to_json(const DikeModel& model);

}  // namespace tidecal
