#include "tidecal/multizone.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "tidecal/errors.hpp"

namespace tidecal::analytic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kUnknowns = 10;

std::complex<double> wavenumber(double d, double omega) {
    const double s = std::sqrt(omega / (2.0 * d));
    return {s, s};
}

// coth(z) = (1 + e^{-2z})/(1 - e^{-2z}), stable for Re(z) > 0.
std::complex<double> coth_stable(std::complex<double> z) {
    const std::complex<double> e = std::exp(-2.0 * z);
    return (1.0 + e) / (1.0 - e);
}

// 1/sinh(z) = 2 e^{-z}/(1 - e^{-2z}), stable for Re(z) > 0.
std::complex<double> inv_sinh_stable(std::complex<double> z) {
    return 2.0 * std::exp(-z) / (1.0 - std::exp(-2.0 * z));
}

struct Unknowns {
    // [0..3] ln d, [4] L1, [5] L2, [6..9] interface phasor components.
    std::array<double, kUnknowns> u{};

    static Unknowns from_layout(const MultiZoneLayout& l) {
        Unknowns v;
        for (int i = 0; i < 4; ++i) v.u[i] = std::log(l.d[i]);
        v.u[4] = l.len_sea;
        v.u[5] = l.len_land;
        v.u[6] = l.interface_upper.real();
        v.u[7] = l.interface_upper.imag();
        v.u[8] = l.interface_lower.real();
        v.u[9] = l.interface_lower.imag();
        return v;
    }

    MultiZoneLayout to_layout() const {
        MultiZoneLayout l;
        for (int i = 0; i < 4; ++i) l.d[i] = std::exp(u[i]);
        l.len_sea = u[4];
        l.len_land = u[5];
        l.interface_upper = {u[6], u[7]};
        l.interface_lower = {u[8], u[9]};
        return l;
    }
};

}  // namespace

void MultiZoneLayout::validate() const {
    for (double di : d) {
        if (!(di > 0.0)) throw InvalidArgument("zone diffusivities must be positive");
    }
    if (!(len_sea > 0.0) || !(len_land > 0.0)) {
        throw InvalidArgument("zone lengths must be positive");
    }
}

std::complex<double> consistent_interface(double d_sea, double d_land, double len_sea,
                                          double len_land, const HarmonicBoundary& bc) {
    const std::complex<double> k1 = wavenumber(d_sea, bc.omega);
    const std::complex<double> k2 = wavenumber(d_land, bc.omega);
    const std::complex<double> amp =
        bc.amplitude * std::exp(std::complex<double>(0.0, bc.phase));
    return amp * k1 * inv_sinh_stable(k1 * len_sea) /
           (k1 * coth_stable(k1 * len_sea) + k2 * coth_stable(k2 * len_land));
}

MultiZoneLayout with_consistent_interfaces(MultiZoneLayout layout,
                                           const HarmonicBoundary& bc) {
    layout.interface_upper =
        consistent_interface(layout.d[0], layout.d[1], layout.len_sea, layout.len_land, bc);
    layout.interface_lower =
        consistent_interface(layout.d[2], layout.d[3], layout.len_sea, layout.len_land, bc);
    return layout;
}

std::complex<double> multizone_phasor(const MultiZoneLayout& layout, Slice slice,
                                      double x, const HarmonicBoundary& bc) {
    const bool upper = slice == Slice::Upper;
    const double d1 = upper ? layout.d[0] : layout.d[2];
    const double d2 = upper ? layout.d[1] : layout.d[3];
    const std::complex<double> B = upper ? layout.interface_upper : layout.interface_lower;
    const double L1 = layout.len_sea;
    const double L2 = layout.len_land;
    const std::complex<double> amp =
        bc.amplitude * std::exp(std::complex<double>(0.0, bc.phase));

    if (x < 0.0 || x > L1 + L2) {
        throw InvalidArgument("sensor coordinate outside the zone sequence");
    }
    if (x <= L1) {
        // Sea-side zone: endpoint phasors (A at 0, B at L1).
        return amp * sinh_ratio_transfer(L1 - x, L1, d1, bc.omega) +
               B * sinh_ratio_transfer(x, L1, d1, bc.omega);
    }
    // Land-side zone: endpoint phasors (B at 0, 0 at L2).
    const double xi = x - L1;
    return B * sinh_ratio_transfer(L2 - xi, L2, d2, bc.omega);
}

HarmonicFeature multizone_feature(const MultiZoneLayout& layout, Slice slice, double x,
                                  const HarmonicBoundary& bc) {
    const std::complex<double> P = multizone_phasor(layout, slice, x, bc);
    const double period = 2.0 * kPi / bc.omega;
    HarmonicFeature f;
    f.relative_amplitude = std::abs(P) / bc.amplitude;
    // Phase lag behind the boundary oscillation, as a positive delay.
    f.delay_s = wrap_delay(-(std::arg(P) - bc.phase) / bc.omega, period);
    return f;
}

std::vector<double> multizone_residuals(const MultiZoneLayout& layout,
                                        const HarmonicBoundary& bc,
                                        const std::vector<SensorTarget>& targets) {
    if (targets.size() != 3) {
        throw InvalidArgument("the 10-equation system matches exactly 3 sensor targets");
    }
    layout.validate();
    const double period = 2.0 * kPi / bc.omega;
    const double L1 = layout.len_sea;
    const double L2 = layout.len_land;
    const double Ltot = L1 + L2;
    const std::complex<double> amp =
        bc.amplitude * std::exp(std::complex<double>(0.0, bc.phase));

    std::vector<double> r(10, 0.0);

    // Gradient continuity at each slice interface, nondimensionalized by A/Ltot.
    const std::array<std::pair<std::complex<double>, std::array<double, 2>>, 2> slices = {{
        {layout.interface_upper, {layout.d[0], layout.d[1]}},
        {layout.interface_lower, {layout.d[2], layout.d[3]}},
    }};
    for (std::size_t s = 0; s < 2; ++s) {
        const std::complex<double> B = slices[s].first;
        const std::complex<double> k1 = wavenumber(slices[s].second[0], bc.omega);
        const std::complex<double> k2 = wavenumber(slices[s].second[1], bc.omega);
        const std::complex<double> grad_sea =
            k1 * B * coth_stable(k1 * L1) - k1 * amp * inv_sinh_stable(k1 * L1);
        const std::complex<double> grad_land = -k2 * B * coth_stable(k2 * L2);
        const std::complex<double> mismatch = (grad_sea - grad_land) * Ltot / bc.amplitude;
        r[2 * s] = mismatch.real();
        r[2 * s + 1] = mismatch.imag();
    }

    std::size_t j = 4;
    for (const SensorTarget& tgt : targets) {
        const HarmonicFeature got = multizone_feature(layout, tgt.slice, tgt.x, bc);
        r[j++] = got.relative_amplitude - tgt.feature.relative_amplitude;
        r[j++] = wrapped_delay_difference(got.delay_s, tgt.feature.delay_s, period) / period;
    }
    return r;
}

namespace {

double residual_norm(const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s += v * v;
    return std::sqrt(s);
}

double halton(int index, int base) {
    double f = 1.0, out = 0.0;
    while (index > 0) {
        f /= base;
        out += f * (index % base);
        index /= base;
    }
    return out;
}

struct SolveContext {
    const std::vector<SensorTarget>* targets;
    const HarmonicBoundary* bc;
    double x_max;
};

void clamp_unknowns(Unknowns& u, const SolveContext& ctx) {
    // Wide physical box; the caller's tighter box only seeds the starts.
    for (int i = 0; i < 4; ++i) u.u[i] = std::clamp(u.u[i], std::log(1e-6), std::log(1e5));
    u.u[4] = std::clamp(u.u[4], 1.0, 300.0);
    u.u[5] = std::clamp(u.u[5], 0.5, 200.0);
    // Keep every sensor inside the zone sequence.
    if (u.u[4] + u.u[5] < ctx.x_max + 0.5) u.u[5] = ctx.x_max + 0.5 - u.u[4];
}

std::vector<double> eval(const Unknowns& u, const SolveContext& ctx) {
    return multizone_residuals(u.to_layout(), *ctx.bc, *ctx.targets);
}

/// Levenberg-regularized Newton on the square residual system, followed by
/// undamped polish steps once near a root.
bool solve_from(Unknowns& u, const SolveContext& ctx, double tol, int max_iter,
                double& out_norm) {
    clamp_unknowns(u, ctx);
    std::vector<double> r = eval(u, ctx);
    double nr = residual_norm(r);
    double lambda = 1e-3;

    Eigen::MatrixXd J(kUnknowns, kUnknowns);
    for (int iter = 0; iter < max_iter && nr >= tol; ++iter) {
        for (int k = 0; k < kUnknowns; ++k) {
            const double h = 1e-7 * std::max(1.0, std::abs(u.u[k]));
            Unknowns up = u;
            up.u[k] += h;
            const std::vector<double> rp = eval(up, ctx);
            for (int row = 0; row < kUnknowns; ++row) J(row, k) = (rp[row] - r[row]) / h;
        }
        Eigen::Map<const Eigen::VectorXd> rv(r.data(), kUnknowns);
        const Eigen::MatrixXd JtJ = J.transpose() * J;
        const Eigen::VectorXd g = J.transpose() * rv;

        bool improved = false;
        for (int trial = 0; trial < 40; ++trial) {
            Eigen::MatrixXd M = JtJ;
            for (int i = 0; i < kUnknowns; ++i) {
                M(i, i) += lambda * std::max(JtJ(i, i), 1e-12);
            }
            const Eigen::VectorXd step = M.ldlt().solve(-g);
            Unknowns ut = u;
            for (int i = 0; i < kUnknowns; ++i) ut.u[i] += step[i];
            clamp_unknowns(ut, ctx);
            const std::vector<double> rt = eval(ut, ctx);
            const double nt = residual_norm(rt);
            if (std::isfinite(nt) && nt < nr) {
                u = ut;
                r = rt;
                nr = nt;
                lambda = std::max(lambda * 0.3, 1e-12);
                improved = true;
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
        if (!improved) break;
    }

    // Newton polish: full steps sharpen a near-root to machine precision.
    for (int iter = 0; iter < 20 && nr > 1e-13; ++iter) {
        for (int k = 0; k < kUnknowns; ++k) {
            const double h = 1e-7 * std::max(1.0, std::abs(u.u[k]));
            Unknowns up = u;
            up.u[k] += h;
            const std::vector<double> rp = eval(up, ctx);
            for (int row = 0; row < kUnknowns; ++row) J(row, k) = (rp[row] - r[row]) / h;
        }
        Eigen::Map<const Eigen::VectorXd> rv(r.data(), kUnknowns);
        const Eigen::VectorXd step = J.fullPivLu().solve(-rv);
        Unknowns ut = u;
        for (int i = 0; i < kUnknowns; ++i) ut.u[i] += step[i];
        clamp_unknowns(ut, ctx);
        const std::vector<double> rt = eval(ut, ctx);
        const double nt = residual_norm(rt);
        if (!std::isfinite(nt) || nt >= nr) break;
        u = ut;
        r = rt;
        nr = nt;
    }

    out_norm = nr;
    return nr < tol;
}

double slice_heterogeneity(const Unknowns& u) {
    const double a = u.u[0] - u.u[1];
    const double b = u.u[2] - u.u[3];
    return a * a + b * b;
}

}  // namespace

InitialGuessResult multizone_initial_guess(const std::vector<SensorTarget>& targets,
                                           const HarmonicBoundary& bc,
                                           const ParameterBox& box,
                                           const InitialGuessOptions& opts) {
    if (targets.size() != 3) {
        throw InvalidArgument("the 10-equation system matches exactly 3 sensor targets");
    }
    if (!(box.d_min > 0.0) || !(box.d_max > box.d_min) ||
        !(box.len_sea_max > box.len_sea_min) || !(box.len_land_max > box.len_land_min)) {
        throw InvalidArgument("parameter box must be finite and positive");
    }

    SolveContext ctx;
    ctx.targets = &targets;
    ctx.bc = &bc;
    ctx.x_max = 0.0;
    for (const SensorTarget& t : targets) ctx.x_max = std::max(ctx.x_max, t.x);

    const double ln_lo = std::log(box.d_min);
    const double ln_hi = std::log(box.d_max);
    static constexpr int primes[6] = {2, 3, 5, 7, 11, 13};

    InitialGuessResult best;
    best.residual_norm = std::numeric_limits<double>::infinity();
    bool have_root = false;
    Unknowns best_root{};
    double best_root_het = std::numeric_limits<double>::infinity();
    double best_root_norm = 0.0;

    for (int s = 1; s <= opts.multistarts; ++s) {
        MultiZoneLayout start;
        for (int i = 0; i < 4; ++i) {
            start.d[i] = std::exp(ln_lo + halton(s, primes[i]) * (ln_hi - ln_lo));
        }
        start.len_sea =
            box.len_sea_min + halton(s, primes[4]) * (box.len_sea_max - box.len_sea_min);
        start.len_land =
            box.len_land_min + halton(s, primes[5]) * (box.len_land_max - box.len_land_min);
        start = with_consistent_interfaces(start, bc);

        Unknowns u = Unknowns::from_layout(start);
        double norm = 0.0;
        const bool ok = solve_from(u, ctx, opts.tolerance, opts.max_iterations, norm);
        if (ok) {
            const double het = slice_heterogeneity(u);
            if (!have_root || het < best_root_het) {
                have_root = true;
                best_root = u;
                best_root_het = het;
                best_root_norm = norm;
            }
            best.converged_starts += 1;
        }
        if (norm < best.residual_norm) {
            best.residual_norm = norm;
            best.layout = u.to_layout();
        }
    }

    if (have_root) {
        best.layout = best_root.to_layout();
        best.residual_norm = best_root_norm;
        best.converged = true;
    }
    return best;
}

}  // namespace tidecal::analytic
