/**
 * @file time_series.hpp
 * @brief Uniformly or irregularly sampled scalar signal with a declared unit.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "tidecal/units.hpp"

namespace tidecal {

/// Scalar signal sampled at strictly increasing timestamps.
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(std::vector<double> timestamps, std::vector<double> values, Unit unit);

    std::size_t size() const { return t_.size(); }
    bool empty() const { return t_.empty(); }

    const std::vector<double>& timestamps() const { return t_; }
    const std::vector<double>& values() const { return v_; }
    Unit unit() const { return unit_; }

    double t_begin() const { return t_.front(); }
    double t_end() const { return t_.back(); }
    double span() const { return t_.back() - t_.front(); }

    /// Linear interpolation; clamps outside the sampled range.
    double value_at(double t) const;

    /// Same timestamps, values converted into `unit`.
    TimeSeries converted(Unit unit, const FluidProperties& fluid) const;

    /// Sub-series with t in [t0, t1] (inclusive).
    TimeSeries slice(double t0, double t1) const;

    /// Append a sample; its timestamp must exceed the current last one.
    void push_back(double t, double value);

private:
    std::vector<double> t_;
    std::vector<double> v_;
    Unit unit_ = Unit::Dimensionless;
};

/// Sampled sine: level0 + amplitude * sin(2*pi*(t - t0)/period + phase).
TimeSeries make_harmonic_series(double t0, double t1, double dt, double level0,
                                double amplitude, double period_s, double phase_rad,
                                Unit unit);

}  // namespace tidecal
