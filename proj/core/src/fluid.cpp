#include "tidecal/fluid.hpp"

#include <cmath>

namespace tidecal {

ViscosityRule ViscosityRule::standard_table() {
    ViscosityRule r;
    r.thresholds_C = {5.0, 15.0};
    r.values_Pa_s = {1.797e-3, 1.307e-3, 1.004e-3};
    return r;
}

ViscosityRule ViscosityRule::constant(double mu_Pa_s) {
    ViscosityRule r;
    r.values_Pa_s = {mu_Pa_s};
    return r;
}

double ViscosityRule::at(double temperature_C) const {
    std::size_t bucket = thresholds_C.size();
    for (std::size_t i = 0; i < thresholds_C.size(); ++i) {
        if (temperature_C < thresholds_C[i]) {
            bucket = i;
            break;
        }
    }
    return values_Pa_s[bucket];
}

void ViscosityRule::validate() const {
    if (values_Pa_s.empty() || values_Pa_s.size() != thresholds_C.size() + 1) {
        throw InvalidArgument("viscosity rule needs exactly one value per bucket");
    }
    for (std::size_t i = 1; i < thresholds_C.size(); ++i) {
        if (!(thresholds_C[i] > thresholds_C[i - 1])) {
            throw InvalidArgument("viscosity thresholds must be strictly ascending");
        }
    }
    for (std::size_t i = 0; i < values_Pa_s.size(); ++i) {
        if (!(values_Pa_s[i] > 0.0) || !std::isfinite(values_Pa_s[i])) {
            throw InvalidArgument("viscosity values must be positive and finite");
        }
        if (i > 0 && values_Pa_s[i] > values_Pa_s[i - 1]) {
            throw InvalidArgument("viscosity must be non-increasing in temperature");
        }
    }
}

void FluidProperties::validate() const {
    if (!(rho > 0.0) || !(g > 0.0)) {
        throw InvalidArgument("fluid density and gravity must be positive");
    }
    viscosity.validate();
}

double viscosity_of_temperature(double temperature_C, const FluidProperties& fluid) {
    return fluid.viscosity.at(temperature_C);
}

double viscosity_seasonal_ratio(const FluidProperties& fluid) {
    const ViscosityRule& r = fluid.viscosity;
    return r.values_Pa_s.front() / r.values_Pa_s.back();
}

}  // namespace tidecal
