#include "tidecal/units.hpp"

#include "tidecal/errors.hpp"

namespace tidecal {

Unit parse_unit(const std::string& token) {
    if (token == "cm") return Unit::CmWater;
    if (token == "mbar") return Unit::Mbar;
    if (token == "Pa") return Unit::Pa;
    throw ParseError(ParseError::Kind::BadUnit, "unknown unit '" + token + "'");
}

std::string unit_name(Unit unit) {
    switch (unit) {
        case Unit::CmWater: return "cm";
        case Unit::Mbar: return "mbar";
        case Unit::Pa: return "Pa";
        case Unit::Dimensionless: return "-";
    }
    return "?";
}

namespace {

double to_pascals(double value, Unit from, const FluidProperties& fluid) {
    switch (from) {
        case Unit::Pa: return value;
        case Unit::Mbar: return value * 100.0;
        case Unit::CmWater: return fluid.rho_g() * (value / 100.0);
        case Unit::Dimensionless:
            throw InvalidArgument("dimensionless values have no pressure equivalent");
    }
    return value;
}

double from_pascals(double pa, Unit to, const FluidProperties& fluid) {
    switch (to) {
        case Unit::Pa: return pa;
        case Unit::Mbar: return pa / 100.0;
        case Unit::CmWater: return 100.0 * pa / fluid.rho_g();
        case Unit::Dimensionless:
            throw InvalidArgument("dimensionless values have no pressure equivalent");
    }
    return pa;
}

}  // namespace

double convert_unit(double value, Unit from, Unit to, const FluidProperties& fluid) {
    if (from == to) return value;
    return from_pascals(to_pascals(value, from, fluid), to, fluid);
}

double convert_level_to_pressure(double level_cm, const FluidProperties& fluid) {
    return convert_unit(level_cm, Unit::CmWater, Unit::Mbar, fluid);
}

}  // namespace tidecal
