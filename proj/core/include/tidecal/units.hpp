/**
 * @file units.hpp
 * @brief Measurement units for sensor series and conversions between them.
 *
 * All internal computation is in SI (Pa, m, s); units exist only at the
 * I/O boundary.
 */
#pragma once

#include <string>

#include "tidecal/fluid.hpp"

namespace tidecal {

enum class Unit {
    CmWater,        ///< water column height [cm]
    Mbar,           ///< pressure [mbar]
    Pa,             ///< pressure [Pa]
    Dimensionless,  ///< unit-free value (levels in metres by convention)
};

/// Parse a CSV unit token ("cm", "mbar", "Pa"). Throws ParseError::BadUnit.
Unit parse_unit(const std::string& token);
std::string unit_name(Unit unit);

/// Convert a scalar between units. CmWater conversions use rho*g of `fluid`.
/// Dimensionless converts only to itself.
double convert_unit(double value, Unit from, Unit to, const FluidProperties& fluid);

/// Water-column height [cm] to pressure [mbar]: rho*g*(level/100) / 100.
double convert_level_to_pressure(double level_cm, const FluidProperties& fluid);

}  // namespace tidecal
