#include "tidecal/signal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tidecal/errors.hpp"
#include "tidecal/iso8601.hpp"

namespace tidecal::signal {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double median_inplace(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
    return 0.5 * (hi + v[mid - 1]);
}

}  // namespace

TimeSeries parse_sensor_csv(std::string_view bytes) {
    std::vector<double> ts, vs;
    Unit unit = Unit::Pa;
    bool unit_known = false;

    std::size_t pos = 0;
    long line_no = 0;
    bool header_seen = false;
    while (pos <= bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? bytes.substr(pos)
                                    : bytes.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? bytes.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != "time,value,unit") {
                throw ParseError(ParseError::Kind::BadHeader,
                                 "expected header 'time,value,unit'", line_no);
            }
            header_seen = true;
            continue;
        }

        const std::size_t c1 = line.find(',');
        const std::size_t c2 = (c1 == std::string_view::npos)
                                   ? std::string_view::npos
                                   : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw ParseError(ParseError::Kind::UnparsableRow,
                             "row needs three comma-separated fields", line_no);
        }
        const std::string_view time_field = line.substr(0, c1);
        const std::string_view value_field = line.substr(c1 + 1, c2 - c1 - 1);
        const std::string_view unit_field = line.substr(c2 + 1);

        double t;
        if (!parse_iso8601_utc(time_field, t)) {
            throw ParseError(ParseError::Kind::UnparsableRow,
                             "bad ISO-8601 UTC timestamp", line_no);
        }
        double v;
        const auto vres = std::from_chars(value_field.data(),
                                          value_field.data() + value_field.size(), v);
        if (vres.ec != std::errc() || vres.ptr != value_field.data() + value_field.size()) {
            throw ParseError(ParseError::Kind::UnparsableRow, "bad numeric value", line_no);
        }
        Unit u;
        try {
            u = parse_unit(std::string(unit_field));
        } catch (const ParseError&) {
            throw ParseError(ParseError::Kind::BadUnit,
                             "unit must be one of cm, mbar, Pa", line_no);
        }
        if (unit_known && u != unit) {
            throw ParseError(ParseError::Kind::BadUnit, "mixed units in one series", line_no);
        }
        unit = u;
        unit_known = true;

        if (!ts.empty() && !(t > ts.back())) {
            throw ParseError(ParseError::Kind::NonMonotonicTime,
                             "timestamps must be strictly increasing", line_no);
        }
        ts.push_back(t);
        vs.push_back(v);
    }
    if (!header_seen) {
        throw ParseError(ParseError::Kind::BadHeader, "missing header 'time,value,unit'", 1);
    }
    return TimeSeries(std::move(ts), std::move(vs), unit);
}

TimeSeries read_sensor_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open sensor file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sensor_csv(buf.str());
}

std::string write_sensor_csv(const TimeSeries& series) {
    std::string out = "time,value,unit\n";
    const std::string unit = unit_name(series.unit());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_iso8601_utc(series.timestamps()[i]);
        out += ',';
        out += fmt_double(series.values()[i]);
        out += ',';
        out += unit;
        out += '\n';
    }
    return out;
}

void write_sensor_csv_file(const TimeSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write sensor file '" + path + "'");
    out << write_sensor_csv(series);
}

namespace {

struct LinearFit {
    double intercept = 0.0;  // value at the window's reference time
    double slope = 0.0;
    double residual_std = 0.0;
    int count = 0;
};

/// Least-squares line through samples [lo, hi] with time centered at t_ref.
LinearFit fit_line(const std::vector<double>& t, const std::vector<double>& v,
                   std::size_t lo, std::size_t hi, double t_ref) {
    LinearFit f;
    f.count = static_cast<int>(hi - lo + 1);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
        const double x = t[i] - t_ref;
        sx += x;
        sy += v[i];
        sxx += x * x;
        sxy += x * v[i];
    }
    const double n = static_cast<double>(f.count);
    const double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-30) {
        f.slope = 0.0;
        f.intercept = sy / n;
    } else {
        f.slope = (n * sxy - sx * sy) / den;
        f.intercept = (sy - f.slope * sx) / n;
    }
    double sse = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        const double e = v[i] - (f.intercept + f.slope * (t[i] - t_ref));
        sse += e * e;
    }
    f.residual_std = (f.count > 2) ? std::sqrt(sse / (n - 2.0)) : 0.0;
    return f;
}

}  // namespace

TimeSeries smooth_adaptive(const TimeSeries& series, const SmoothOptions& opts) {
    const std::size_t n = series.size();
    if (n < 7) throw TooShort("adaptive smoothing needs at least 7 samples");
    const std::vector<double>& t = series.timestamps();
    const std::vector<double>& v = series.values();

    double noise;
    if (opts.noise_scale.has_value()) {
        noise = *opts.noise_scale;
    } else {
        // Robust noise estimate: MAD of first differences / sqrt(2).
        std::vector<double> diffs(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) diffs[i] = v[i + 1] - v[i];
        std::vector<double> tmp = diffs;
        const double med = median_inplace(tmp);
        for (std::size_t i = 0; i < diffs.size(); ++i) diffs[i] = std::abs(diffs[i] - med);
        noise = median_inplace(diffs) / std::sqrt(2.0);
    }
    const double max_span = opts.period_s / 6.0;

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t half = 3;
        auto window = [&](std::size_t h, std::size_t& lo, std::size_t& hi) {
            lo = (i >= h) ? i - h : 0;
            hi = std::min(i + h, n - 1);
        };
        std::size_t lo, hi;
        window(half, lo, hi);
        LinearFit best = fit_line(t, v, lo, hi, t[i]);
        while (true) {
            const std::size_t next = half + 1;
            std::size_t nlo, nhi;
            window(next, nlo, nhi);
            if (nlo == lo && nhi == hi) break;                      // series exhausted
            if (t[nhi] - t[nlo] > max_span) break;                  // window cap
            const LinearFit cand = fit_line(t, v, nlo, nhi, t[i]);
            if (cand.residual_std > 1.5 * noise + 1e-15) break;     // turning point reached
            best = cand;
            half = next;
            lo = nlo;
            hi = nhi;
        }
        out[i] = best.intercept;
    }
    return TimeSeries(t, std::move(out), series.unit());
}

namespace {

/// Quadratic refinement of a discrete extremum through points i-1, i, i+1.
void refine_extremum(const std::vector<double>& t, const std::vector<double>& v,
                     std::size_t i, double& t_star, double& v_star) {
    t_star = t[i];
    v_star = v[i];
    if (i == 0 || i + 1 >= t.size()) return;
    // Parabola through three (possibly unevenly spaced) samples.
    const double x0 = t[i - 1] - t[i], x2 = t[i + 1] - t[i];
    const double y0 = v[i - 1], y1 = v[i], y2 = v[i + 1];
    const double den = x0 * x2 * (x0 - x2);
    if (std::abs(den) < 1e-30) return;
    const double a = (x2 * (y0 - y1) - x0 * (y2 - y1)) / den;
    const double b = (x0 * x0 * (y2 - y1) - x2 * x2 * (y0 - y1)) / den;
    if (std::abs(a) < 1e-30) return;
    const double dt = -b / (2.0 * a);
    if (dt > x0 && dt < x2) {
        t_star = t[i] + dt;
        v_star = y1 + b * dt + a * dt * dt;
    }
}

/// Index of the extreme sample with t in [t_lo, t_hi]; npos when the window
/// holds no sample or the extremum sits on the series ends.
std::size_t windowed_extremum(const std::vector<double>& t, const std::vector<double>& v,
                              double t_lo, double t_hi, bool maximum) {
    std::size_t arg = std::string::npos;
    double bestv = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo) continue;
        if (t[i] > t_hi) break;
        const double val = maximum ? v[i] : -v[i];
        if (arg == std::string::npos || val > bestv) {
            arg = i;
            bestv = val;
        }
    }
    if (arg == 0 || arg + 1 >= t.size()) return std::string::npos;
    return arg;
}

}  // namespace

std::vector<CycleExtrema> extract_extrema(const TimeSeries& series, double period_s) {
    if (!(period_s > 0.0)) throw InvalidArgument("period must be positive");
    if (series.size() < 3 || series.span() < period_s) {
        throw TooShort("extrema detection needs at least one full period");
    }
    const std::vector<double>& t = series.timestamps();
    const std::vector<double>& v = series.values();

    std::vector<CycleExtrema> cycles;

    // Anchor on the strongest maximum within the first period.
    std::size_t anchor = windowed_extremum(t, v, t.front(), t.front() + period_s, true);
    if (anchor == std::string::npos) return cycles;
    // Degenerate (constant) signals have no strict extremum.
    bool strict = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != v[0]) {
            strict = true;
            break;
        }
    }
    if (!strict) return cycles;

    double expected = t[anchor];
    while (expected <= t.back()) {
        const std::size_t imax = windowed_extremum(t, v, expected - period_s / 3.0,
                                                   expected + period_s / 3.0, true);
        if (imax == std::string::npos) break;
        const std::size_t imin =
            windowed_extremum(t, v, t[imax], t[imax] + period_s, false);
        if (imin == std::string::npos) break;

        CycleExtrema c;
        refine_extremum(t, v, imax, c.t_max, c.v_max);
        refine_extremum(t, v, imin, c.t_min, c.v_min);
        cycles.push_back(c);
        expected = t[imax] + period_s;
    }
    return cycles;
}

FeatureResult extract_features(const TimeSeries& pressure, const TimeSeries& tide,
                               const FluidProperties& fluid, double period_s,
                               const FeatureOptions& opts) {
    if (!(period_s > 0.0)) throw InvalidArgument("period must be positive");
    const double t0 = std::max(pressure.t_begin(), tide.t_begin());
    const double t1 = std::min(pressure.t_end(), tide.t_end());
    if (!(t1 > t0)) throw NoOverlap("pressure and tide series do not overlap");
    if (t1 - t0 < period_s) {
        throw TooShort("feature extraction needs at least one period of overlap");
    }

    TimeSeries p = pressure.converted(Unit::Pa, fluid).slice(t0, t1);
    if (opts.air.has_value()) {
        const TimeSeries air = opts.air->converted(Unit::Pa, fluid);
        std::vector<double> vals = p.values();
        for (std::size_t i = 0; i < vals.size(); ++i) {
            vals[i] -= air.value_at(p.timestamps()[i]);
        }
        p = TimeSeries(p.timestamps(), std::move(vals), Unit::Pa);
    }
    // Tide levels in metres of water.
    TimeSeries h = tide.slice(t0, t1);
    std::vector<double> hv = h.values();
    if (h.unit() == Unit::CmWater) {
        for (double& x : hv) x /= 100.0;
    } else if (h.unit() != Unit::Dimensionless) {
        for (std::size_t i = 0; i < hv.size(); ++i) {
            hv[i] = convert_unit(hv[i], h.unit(), Unit::Pa, fluid) / fluid.rho_g();
        }
    }
    h = TimeSeries(h.timestamps(), std::move(hv), Unit::Dimensionless);

    if (opts.smooth) {
        p = smooth_adaptive(p, {.noise_scale = std::nullopt, .period_s = period_s});
        h = smooth_adaptive(h, {.noise_scale = std::nullopt, .period_s = period_s});
    }

    const std::vector<CycleExtrema> tide_cycles = extract_extrema(h, period_s);
    const std::vector<CycleExtrema> press_cycles = extract_extrema(p, period_s);
    if (tide_cycles.empty() || press_cycles.empty()) {
        throw TooShort("no complete tidal cycle in the overlap window");
    }

    FeatureResult out;
    out.mean.window_start = t0;
    out.mean.window_end = t1;

    double amp_sum = 0.0;
    double cx = 0.0, cy = 0.0;  // circular mean accumulator for delays
    for (const CycleExtrema& tc : tide_cycles) {
        // Pressure maximum within one period after the tide maximum.
        const CycleExtrema* match = nullptr;
        double best_lag = 0.0;
        for (const CycleExtrema& pc : press_cycles) {
            const double lag = pc.t_max - tc.t_max;
            if (lag < -period_s * 0.05 || lag >= period_s * 0.95) continue;
            if (match == nullptr || std::abs(lag) < std::abs(best_lag)) {
                match = &pc;
                best_lag = lag;
            }
        }
        if (match == nullptr) continue;

        const double dh = tc.v_max - tc.v_min;
        if (!(dh > 0.0)) continue;
        HarmonicFeature f;
        f.relative_amplitude = (match->v_max - match->v_min) / (fluid.rho_g() * dh);
        f.delay_s = analytic::wrap_delay(best_lag, period_s);
        f.window_start = std::min(tc.t_max, match->t_max);
        f.window_end = std::max(tc.t_min, match->t_min);
        out.per_cycle.push_back(f);

        amp_sum += f.relative_amplitude;
        const double ang = 2.0 * kPi * f.delay_s / period_s;
        cx += std::cos(ang);
        cy += std::sin(ang);
    }
    if (out.per_cycle.empty()) {
        throw TooShort("no matching pressure cycle for any tide cycle");
    }
    const double n = static_cast<double>(out.per_cycle.size());
    out.mean.relative_amplitude = amp_sum / n;
    const double mean_ang = std::atan2(cy / n, cx / n);
    out.mean.delay_s = analytic::wrap_delay(mean_ang * period_s / (2.0 * kPi), period_s);
    return out;
}

}  // namespace tidecal::signal
