// SPDX-License-Identifier: Apache-2.0
//
// adfopt: antenna density functions for near-field movable-antenna arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Toeplitz symbol machinery for the near-field Gram surrogate: Fourier
// coefficients of the weighted density, truncated and limiting generating
// functions, the strong-Szego smooth term, and the Fisher-Hartwig
// log-determinant asymptotics with algebraic (pole-type) singularities.

#ifndef ADFOPT_ASYMPTOTICS_HPP
#define ADFOPT_ASYMPTOTICS_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adfopt/closedform.hpp"
#include "adfopt/errors.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/quadrature.hpp"
#include "adfopt/specfun.hpp"

namespace adfopt
{

// Algebraic singularity |2 - 2 cos(theta - location)|^exponent of a symbol.
struct Singularity
{
    double location; // theta_r in [-pi, pi)
    double exponent; // alpha_r > -0.5

    Singularity(double location_, double exponent_) : location(location_), exponent(exponent_)
    {
        if (!(exponent > -0.5))
            throw std::invalid_argument("Singularity: exponent must exceed -0.5 for convergence");
    }
};

// Real function sampled on the uniform periodic grid theta_j = -pi + 2 pi j / P.
struct AngularSamples
{
    std::vector<double> values;

    explicit AngularSamples(std::vector<double> v) : values(std::move(v))
    {
        if (values.size() < 2)
            throw std::invalid_argument("AngularSamples: need at least 2 samples");
    }

    static AngularSamples constant(double value, int grid_size)
    {
        return AngularSamples(std::vector<double>(static_cast<std::size_t>(grid_size), value));
    }

    int grid_size() const { return static_cast<int>(values.size()); }
    double theta(int j) const { return -M_PI + 2.0 * M_PI * j / grid_size(); }
};

// Symbol of a Toeplitz family: smooth part b(theta) (sampled) times the
// product of algebraic singularities, supported inside |theta| <= support.
struct GeneratingFunction
{
    AngularSamples smooth;
    std::vector<Singularity> singularities;
    double support; // half-width beta of the density-induced support

    static GeneratingFunction smooth_only(AngularSamples b, double support = M_PI)
    {
        return GeneratingFunction{std::move(b), {}, support};
    }

    static GeneratingFunction with_constant_smooth(double level, std::vector<Singularity> sing, double support,
                                                   int grid_size = 1024)
    {
        if (!(level > 0.0))
            throw std::domain_error("GeneratingFunction: smooth part must be strictly positive");
        return GeneratingFunction{AngularSamples::constant(level, grid_size), std::move(sing), support};
    }
};

// Fourier coefficient of the weighted density, c_l = int wadf(p) e^{-j beta l p} dp.
// Filon-type integration takes over once the phase beats the grid.
inline cplx fourier_coeff_wadf(const SampledFunction &wadf, double beta, int ell)
{
    const double omega = beta * ell;
    if (std::abs(omega) > 10.0)
        return quadrature::fourier_linear(wadf.values(), -1.0, wadf.spacing(), omega);
    return quadrature::fourier_trapezoid(wadf.values(), -1.0, wadf.spacing(), omega);
}

// Truncated generating function g_N(theta) = sum_{|l| < N} c_l e^{j l theta};
// real for real densities since c_{-l} = conj(c_l).
inline double truncated_generating(const SampledFunction &wadf, double beta, int order, double theta)
{
    if (order < 1)
        throw std::invalid_argument("truncated_generating: order must be >= 1");
    const cplx c0 = fourier_coeff_wadf(wadf, beta, 0);
    double acc = c0.real();
    double max_imag = std::abs(c0.imag());
    for (int l = 1; l < order; ++l)
    {
        const cplx cl = fourier_coeff_wadf(wadf, beta, l);
        acc += 2.0 * (cl * std::exp(cplx(0.0, l * theta))).real();
        max_imag = std::max(max_imag, std::abs(c0.imag()));
    }
    (void)max_imag;
    return acc;
}

// Limiting symbol of I + rho K_w: s(theta) = 1 + (2 pi rho / (beta z0^2)) wadf(theta / beta)
// inside the support, exactly 1 outside it.
inline GeneratingFunction limit_generating(const SampledFunction &wadf, double beta, const NearFieldFactors &factors,
                                           int grid_size = 1024)
{
    if (!(beta > 0.0) || beta >= M_PI)
        throw out_of_regime_error("limit_generating: requires 0 < beta < pi");
    std::vector<double> s(static_cast<std::size_t>(grid_size), 1.0);
    const double gain = 2.0 * M_PI * factors.snr / (beta * factors.z0 * factors.z0);
    for (int j = 0; j < grid_size; ++j)
    {
        const double theta = -M_PI + 2.0 * M_PI * j / grid_size;
        if (std::abs(theta) <= beta)
            s[static_cast<std::size_t>(j)] += gain * wadf.value_at(theta / beta);
    }
    return GeneratingFunction::smooth_only(AngularSamples(std::move(s)), beta);
}

// Strong-Szego smooth term
//   E_b = (N / 2 pi) int log b dtheta + sum_{k >= 1} k (log b)_k (log b)_{-k}
// with the normalized Fourier convention (log b)_k = (1/2pi) int log b e^{-j k theta}.
// The unnormalized convention fails the constant-symbol identity E_b = N log c
// and is rejected; this one reproduces it exactly.
inline double e_b_term(const AngularSamples &b, double order)
{
    const int p = b.grid_size();
    std::vector<double> logb(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j)
    {
        if (!(b.values[static_cast<std::size_t>(j)] > 0.0))
            throw std::domain_error("e_b_term: smooth part must be strictly positive");
        logb[static_cast<std::size_t>(j)] = std::log(b.values[static_cast<std::size_t>(j)]);
    }
    double mean = 0.0;
    for (double x : logb)
        mean += x;
    mean /= p;
    double series = 0.0;
    for (int k = 1; k <= p / 2 - 1; ++k)
    {
        cplx lk(0.0, 0.0);
        for (int j = 0; j < p; ++j)
            lk += logb[static_cast<std::size_t>(j)] * std::exp(cplx(0.0, -k * b.theta(j)));
        lk /= static_cast<double>(p);
        const double term = k * std::norm(lk);
        series += term;
        if (term < 1e-12 && k > 4)
            break;
    }
    return order * mean + series;
}

// The printed asymptotic adds the Barnes-G ratio and the cross-singularity
// factor directly; the log variant adds their logarithms. The exact-determinant
// oracle selects the log variant (see the calibration test), which is the
// default here.
enum class FhVariant
{
    LogCorrections,
    Printed
};

inline constexpr FhVariant kDefaultFhVariant = FhVariant::LogCorrections;

namespace detail
{

inline double cross_base(double theta_r, double theta_s)
{
    const double d = 0.5 * (theta_r - theta_s);
    return std::abs(4.0 * std::sin(d) * std::sin(d)); // |2 - 2 cos(theta_r - theta_s)|
}

inline double barnes_ratio_log(double alpha)
{
    return 2.0 * specfun::log_barnes_g(1.0 + alpha) - specfun::log_barnes_g(1.0 + 2.0 * alpha);
}

} // namespace detail

// Asymptotic log-determinant (nats) of the N x N Toeplitz matrix generated by
// the symbol: E_b + log N sum alpha_r^2 + singular corrections, with the O(1)
// remainder never added.
inline double fh_log_det(const GeneratingFunction &gf, double order, FhVariant variant = kDefaultFhVariant)
{
    double out = e_b_term(gf.smooth, order);
    if (gf.singularities.empty())
        return out;
    const double logn = std::log(order);
    for (const Singularity &s : gf.singularities)
        out += logn * s.exponent * s.exponent;
    for (const Singularity &s : gf.singularities)
    {
        if (variant == FhVariant::LogCorrections)
            out += detail::barnes_ratio_log(s.exponent);
        else
            out += std::exp(detail::barnes_ratio_log(s.exponent));
    }
    for (std::size_t r = 0; r + 1 < gf.singularities.size(); ++r)
        for (std::size_t s = r + 1; s < gf.singularities.size(); ++s)
        {
            const double base = detail::cross_base(gf.singularities[r].location, gf.singularities[s].location);
            const double expo = -gf.singularities[r].exponent * gf.singularities[s].exponent;
            if (variant == FhVariant::LogCorrections)
                out += expo * std::log(base);
            else
                out += std::pow(base, expo);
        }
    return out;
}

namespace detail
{

// Smooth-part level shared across the family: the limiting symbol of the
// alpha = 0 optimal density, s0 = 1 + 2 pi rho wadf0 / (beta z0^2) with
// wadf0 = 3 (M - 1) / (6 + 2 tau^2).
inline double matched_symbol_level(const NearFieldFactors &factors, int count)
{
    const double wadf0 = 3.0 * (count - 1) / (6.0 + 2.0 * factors.tau * factors.tau);
    return 1.0 + 2.0 * M_PI * factors.snr * wadf0 / (factors.beta * factors.z0 * factors.z0);
}

} // namespace detail

// Asymptotic achievable rate (bits) of the alpha-family: two singularities of
// order alpha at the support edges over a matched constant smooth part.
inline double asymptotic_rate(double alpha, double beta, double order, const NearFieldFactors &factors, int count,
                              FhVariant variant = kDefaultFhVariant)
{
    if (!(alpha > -0.5 && alpha <= 0.0))
        throw std::invalid_argument("asymptotic_rate: alpha must lie in (-0.5, 0]");
    const double level = detail::matched_symbol_level(factors, count);
    double nats = order * std::log(level);
    if (alpha < 0.0)
    {
        nats += std::log(order) * 2.0 * alpha * alpha;
        const double base = detail::cross_base(beta, -beta);
        if (variant == FhVariant::LogCorrections)
            nats += 2.0 * detail::barnes_ratio_log(alpha) - alpha * alpha * std::log(base);
        else
            nats += 2.0 * std::exp(detail::barnes_ratio_log(alpha)) + std::pow(base, -alpha * alpha);
    }
    return nats / std::log(2.0);
}

// d C_w / d alpha_1 of the asymptotic rate (nats). The log variant is the
// exact derivative of the calibrated expression; the printed variant follows
// the paper's formula literally.
inline double rate_alpha_derivative(double alpha1, double alpha2, double beta, double order,
                                    FhVariant variant = kDefaultFhVariant)
{
    if (!(alpha1 > -0.5 && alpha1 < 0.0) || !(alpha2 > -0.5 && alpha2 < 0.0))
        throw std::invalid_argument("rate_alpha_derivative: alphas must lie in (-0.5, 0)");
    const double logn = std::log(order);
    const double base = detail::cross_base(beta, -beta);
    if (variant == FhVariant::LogCorrections)
        return 2.0 * alpha1 * logn + 2.0 * specfun::log_barnes_g_deriv(1.0 + alpha1) -
               2.0 * specfun::log_barnes_g_deriv(1.0 + 2.0 * alpha1) - alpha2 * std::log(base);
    const double ratio = std::exp(detail::barnes_ratio_log(alpha1));
    return 2.0 * alpha1 *
               (logn + ratio * (1.0 + specfun::digamma(1.0 + alpha1) - 2.0 * specfun::digamma(1.0 + 2.0 * alpha1))) -
           std::pow(base, -alpha1 * alpha2) * (alpha2 * std::log(base));
}

// --- Exact-determinant oracle route -------------------------------------

// Double-exponential integral over [a, b] for integrands with endpoint
// singularities. The callback receives theta and its distances to both
// endpoints, computed without cancellation.
inline double de_segment_integral(const std::function<double(double theta, double dist_left, double dist_right)> &f,
                                  double a, double b, int node_count = 1601, double u_max = 4.0)
{
    const double half = 0.5 * (b - a);
    const double du = 2.0 * u_max / (node_count - 1);
    double acc = 0.0;
    for (int j = 0; j < node_count; ++j)
    {
        const double u = -u_max + du * j;
        const double t = 0.5 * M_PI * std::sinh(u);
        const double sech2 = 1.0 / (std::cosh(t) * std::cosh(t));
        const double weight = half * 0.5 * M_PI * std::cosh(u) * sech2;
        if (!(weight > 0.0))
            continue;
        const double dl = (b - a) / (1.0 + std::exp(-2.0 * t));
        const double dr = (b - a) / (1.0 + std::exp(2.0 * t));
        if (!(dl > 0.0) || !(dr > 0.0))
            continue;
        const double theta = (dl < dr) ? a + dl : b - dr;
        const double v = f(theta, dl, dr) * weight;
        if (std::isfinite(v))
            acc += v * ((j == 0 || j == node_count - 1) ? 0.5 : 1.0) * du;
    }
    return acc;
}

// Fourier coefficient c_k = (1/2pi) int s(theta) e^{-j k theta} dtheta of the
// two-singularity symbol s = b |2-2cos(theta-beta)|^a |2-2cos(theta+beta)|^a.
// Real (the symbol is even); integrated per segment so the singular points
// sit on segment endpoints where the node distances are exact.
inline double fh_symbol_coeff(double level, double alpha, double beta, int k)
{
    auto pole = [alpha](double sin_half_sq) { return std::pow(4.0 * sin_half_sq, alpha); };
    auto factor_from_dist = [&](double dist) {
        const double s = std::sin(0.5 * dist);
        return pole(s * s);
    };
    auto factor_direct = [&](double x) {
        const double s = std::sin(0.5 * x);
        return pole(s * s);
    };
    // [beta, pi]: singular at the left endpoint only
    const double seg_hi = de_segment_integral(
        [&](double theta, double dl, double) { return factor_from_dist(dl) * factor_direct(theta + beta) * std::cos(k * theta); },
        beta, M_PI);
    // [-beta, beta]: singular at both endpoints
    const double seg_mid = de_segment_integral(
        [&](double theta, double dl, double dr) { return factor_from_dist(dl) * factor_from_dist(dr) * std::cos(k * theta); },
        -beta, beta);
    // [-pi, -beta] mirrors [beta, pi] for the even symbol
    return level * (2.0 * seg_hi + seg_mid) / (2.0 * M_PI);
}

// Exact log-determinant of the symmetric Toeplitz matrix with first column
// c_0 .. c_{N-1}; the independent partner of fh_log_det.
inline double toeplitz_logdet(const std::vector<double> &coeffs, int order)
{
    if (static_cast<int>(coeffs.size()) < order)
        throw std::invalid_argument("toeplitz_logdet: need at least N coefficients");
    Eigen::MatrixXd t(order, order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            t(i, j) = coeffs[static_cast<std::size_t>(std::abs(i - j))];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
    double out = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    {
        const double ev = es.eigenvalues()(i);
        if (!(ev > 0.0))
            throw std::domain_error("toeplitz_logdet: matrix not positive definite");
        out += std::log(ev);
    }
    return out;
}

// --- Smooth-symbol optimality check (constant maximizes E_b) -------------

struct CorollaryEntry
{
    double e_b;
    int max_frequency; // largest significant Fourier index of log b
    bool in_regime;    // max_frequency * pi^2 < N / 4
};

struct CorollaryReport
{
    std::vector<CorollaryEntry> entries;
    int constant_index = -1; // candidate with no significant oscillation
    bool asserted = false;   // regime guard allowed the optimality assertion
    bool holds = false;      // constant candidate maximized E_b among in-regime ones
};

// Reports E_b for equal-power smooth candidates. The second-order expansion
// only guarantees the constant candidate wins for low perturbation
// frequencies, so the optimality assertion is guarded by k pi^2 < N / 4;
// out-of-regime candidates are reported without assertion.
inline CorollaryReport corollary_check(const std::vector<AngularSamples> &candidates, double order)
{
    if (candidates.empty())
        throw std::invalid_argument("corollary_check: no candidates");
    std::vector<double> power(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c)
    {
        double acc = 0.0;
        for (double v : candidates[c].values)
            acc += v;
        power[c] = acc * 2.0 * M_PI / candidates[c].grid_size();
    }
    for (std::size_t c = 1; c < candidates.size(); ++c)
        if (std::abs(power[c] - power[0]) > 1e-9 * std::max(1.0, std::abs(power[0])))
            throw std::invalid_argument("corollary_check: candidates do not share the power constraint");

    CorollaryReport report;
    for (std::size_t c = 0; c < candidates.size(); ++c)
    {
        const AngularSamples &b = candidates[c];
        const int p = b.grid_size();
        std::vector<double> logb(static_cast<std::size_t>(p));
        for (int j = 0; j < p; ++j)
            logb[static_cast<std::size_t>(j)] = std::log(b.values[static_cast<std::size_t>(j)]);
        int kmax = 0;
        double ref = 0.0;
        std::vector<double> mags(static_cast<std::size_t>(p / 2), 0.0);
        for (int k = 1; k <= p / 2 - 1; ++k)
        {
            cplx lk(0.0, 0.0);
            for (int j = 0; j < p; ++j)
                lk += logb[static_cast<std::size_t>(j)] * std::exp(cplx(0.0, -k * b.theta(j)));
            const double mag = std::abs(lk) / p;
            mags[static_cast<std::size_t>(k)] = mag;
            ref = std::max(ref, mag);
        }
        for (int k = 1; k <= p / 2 - 1; ++k)
            if (mags[static_cast<std::size_t>(k)] > std::max(1e-9, 1e-9 * ref))
                kmax = k;
        CorollaryEntry entry;
        entry.e_b = e_b_term(b, order);
        entry.max_frequency = kmax;
        entry.in_regime = static_cast<double>(kmax) * M_PI * M_PI < order / 4.0;
        report.entries.push_back(entry);
        if (kmax == 0 && report.constant_index < 0)
            report.constant_index = static_cast<int>(c);
    }
    if (report.constant_index >= 0)
    {
        bool all_ok = true;
        const double best = report.entries[static_cast<std::size_t>(report.constant_index)].e_b;
        bool any_other = false;
        for (std::size_t c = 0; c < report.entries.size(); ++c)
        {
            if (static_cast<int>(c) == report.constant_index || !report.entries[c].in_regime)
                continue;
            any_other = true;
            if (report.entries[c].e_b > best + 1e-12 * std::max(1.0, std::abs(best)))
                all_ok = false;
        }
        report.asserted = any_other;
        report.holds = all_ok;
    }
    return report;
}

} // namespace adfopt

#endif
