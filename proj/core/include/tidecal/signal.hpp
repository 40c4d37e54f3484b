/**
 * @file signal.hpp
 * @brief Sensor time-series ingestion, adaptive smoothing, extrema detection
 *        and harmonic feature extraction.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tidecal/features.hpp"
#include "tidecal/fluid.hpp"
#include "tidecal/time_series.hpp"

namespace tidecal::signal {

/// Parse the sensor CSV format: header "time,value,unit", ISO-8601 UTC
/// times, unit in {cm, mbar, Pa}, LF line endings. Throws ParseError with
/// kind BadHeader / BadUnit / NonMonotonicTime / UnparsableRow.
TimeSeries parse_sensor_csv(std::string_view bytes);

TimeSeries read_sensor_csv(const std::string& path);

/// Serialize in the same format (LF line endings, shortest round-trip
/// number formatting).
std::string write_sensor_csv(const TimeSeries& series);
void write_sensor_csv_file(const TimeSeries& series, const std::string& path);

struct SmoothOptions {
    /// Override for the robust noise estimate; estimated from first
    /// differences when absent.
    std::optional<double> noise_scale;
    /// Tidal period; the adaptive window is capped at period/6.
    double period_s = 44700.0;
};

/// Localized linear fit with an adaptive window: starts at 7 centered
/// samples, grows symmetrically while the fit residual stays within
/// 1.5x the noise estimate. Exact on constants and straight lines.
TimeSeries smooth_adaptive(const TimeSeries& series, const SmoothOptions& opts = {});

/// One max/min pair per tidal cycle, timestamps refined by a quadratic fit
/// around the discrete extremum.
struct CycleExtrema {
    double t_max = 0.0;
    double v_max = 0.0;
    double t_min = 0.0;
    double v_min = 0.0;
};

std::vector<CycleExtrema> extract_extrema(const TimeSeries& series, double period_s);

struct FeatureOptions {
    /// Air-pressure series subtracted from absolute pressure first.
    std::optional<TimeSeries> air;
    /// Apply smooth_adaptive to both inputs before extraction.
    bool smooth = false;
};

struct FeatureResult {
    HarmonicFeature mean;                    ///< cycle-averaged feature
    std::vector<HarmonicFeature> per_cycle;  ///< one entry per complete cycle
};

/// Relative amplitude (p_max - p_min) / (rho g (h_max - h_min)) and the
/// delay of the pressure maximum behind the tide maximum, wrapped to
/// [0, period), averaged over all complete cycles in the overlap window.
FeatureResult extract_features(const TimeSeries& pressure, const TimeSeries& tide,
                               const FluidProperties& fluid, double period_s,
                               const FeatureOptions& opts = {});

}  // namespace tidecal::signal
