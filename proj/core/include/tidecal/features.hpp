/**
 * @file features.hpp
 * @brief Harmonic feature of a pressure signal relative to the tide.
 */
#pragma once

namespace tidecal {

/// (relative amplitude, time delay) of a pressure oscillation against the
/// tidal oscillation at one location.
struct HarmonicFeature {
    double relative_amplitude = 0.0;  ///< fraction of tidal amplitude [-]
    double delay_s = 0.0;             ///< pressure max after tide max, in [0, T)
    double window_start = 0.0;        ///< source window [s since epoch]
    double window_end = 0.0;
};

}  // namespace tidecal
