#include "tidecal/time_series.hpp"

#include <algorithm>
#include <cmath>

#include "tidecal/errors.hpp"

namespace tidecal {

TimeSeries::TimeSeries(std::vector<double> timestamps, std::vector<double> values, Unit unit)
    : t_(std::move(timestamps)), v_(std::move(values)), unit_(unit) {
    if (t_.size() != v_.size()) {
        throw InvalidArgument("time series needs one value per timestamp");
    }
    for (std::size_t i = 1; i < t_.size(); ++i) {
        if (!(t_[i] > t_[i - 1])) {
            throw InvalidArgument("timestamps must be strictly increasing");
        }
    }
}

double TimeSeries::value_at(double t) const {
    if (t_.empty()) throw TooShort("cannot interpolate an empty series");
    if (t <= t_.front()) return v_.front();
    if (t >= t_.back()) return v_.back();
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - t_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - t_[lo]) / (t_[hi] - t_[lo]);
    return v_[lo] + w * (v_[hi] - v_[lo]);
}

TimeSeries TimeSeries::converted(Unit unit, const FluidProperties& fluid) const {
    std::vector<double> out(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) {
        out[i] = convert_unit(v_[i], unit_, unit, fluid);
    }
    return TimeSeries(t_, std::move(out), unit);
}

TimeSeries TimeSeries::slice(double t0, double t1) const {
    std::vector<double> ts, vs;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i] >= t0 && t_[i] <= t1) {
            ts.push_back(t_[i]);
            vs.push_back(v_[i]);
        }
    }
    return TimeSeries(std::move(ts), std::move(vs), unit_);
}

void TimeSeries::push_back(double t, double value) {
    if (!t_.empty() && !(t > t_.back())) {
        throw InvalidArgument("appended timestamp must increase");
    }
    t_.push_back(t);
    v_.push_back(value);
}

TimeSeries make_harmonic_series(double t0, double t1, double dt, double level0,
                                double amplitude, double period_s, double phase_rad,
                                Unit unit) {
    if (!(dt > 0.0) || !(period_s > 0.0) || !(t1 > t0)) {
        throw InvalidArgument("harmonic series needs positive dt, period and span");
    }
    const double omega = 2.0 * M_PI / period_s;
    std::vector<double> ts, vs;
    const std::size_t n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 0.5)) + 1;
    ts.reserve(n);
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t0 + static_cast<double>(i) * dt;
        ts.push_back(t);
        vs.push_back(level0 + amplitude * std::sin(omega * (t - t0) + phase_rad));
    }
    return TimeSeries(std::move(ts), std::move(vs), unit);
}

}  // namespace tidecal
