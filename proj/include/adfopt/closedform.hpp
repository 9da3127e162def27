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
// Closed-form optimal densities for the near-field LoS channel: the
// position-related factors (tau, beta), the alpha-parameterized density
// family with its normalization constant, and the Beta-function cumulative
// with its inverse that yields antenna positions directly.

#ifndef ADFOPT_CLOSEDFORM_HPP
#define ADFOPT_CLOSEDFORM_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "adfopt/channel.hpp"
#include "adfopt/errors.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/quadrature.hpp"
#include "adfopt/specfun.hpp"

namespace adfopt
{

// The two scalars coupling aperture, distance, angles and wavenumber:
//   tau  = A_T cos(theta_T) / (2 z0)
//   beta = kappa A_T d_R sin(theta_T) sin(theta_R) cos(phi_T - phi_R) / z0
struct NearFieldFactors
{
    double tau;
    double beta;
    double z0;
    double snr;
};

inline NearFieldFactors nearfield_factors(const TransmitArray &tx, const ReceiveArray &rx, double wavelength, double snr)
{
    const double kappa = 2.0 * M_PI / wavelength;
    const double tau = 0.5 * tx.aperture() * std::cos(tx.theta) / rx.distance;
    // A_R / (N - 1) = d_R, which keeps the expression defined for N = 1
    const double beta =
        kappa * tx.aperture() * rx.spacing * std::sin(tx.theta) * std::sin(rx.theta) * std::cos(tx.phi - rx.phi) / rx.distance;
    if (!(std::abs(tau) < 1.0))
        throw out_of_regime_error("nearfield_factors: |tau| >= 1 (receiver inside the aperture span)");
    if (!(beta > 0.0) || beta >= M_PI)
        throw out_of_regime_error("nearfield_factors: beta outside (0, pi)");
    return NearFieldFactors{tau, beta, rx.distance, snr};
}

// Toeplitz Gram surrogate using the validated factors.
inline GramMatrix gram_toeplitz(const SampledFunction &w, const NearFieldFactors &factors, int receive_count)
{
    return gram_toeplitz(w, factors.tau, factors.beta, factors.z0, receive_count);
}

struct AdfFamilyParams
{
    double alpha;
    int count; // M
    NearFieldFactors factors;
    double gamma; // normalization constant
};

namespace detail
{

// Bias level beta z0^2 / (2 pi rho) subtracted inside the singular family.
inline double family_bias(const NearFieldFactors &f) { return f.beta * f.z0 * f.z0 / (2.0 * M_PI * f.snr); }

// int (1-p^2)^{2a} dp and int p^2 (1-p^2)^{2a} dp over [-1, 1].
inline double even_moment0(double alpha) { return specfun::complete_beta(0.5, 2.0 * alpha + 1.0); }
inline double even_moment2(double alpha) { return specfun::complete_beta(1.5, 2.0 * alpha + 1.0); }

} // namespace detail

// Normalization constant of the singular family, as printed:
//   gamma = (M - 1 + beta z0^2 (3 + tau^2) / (3 pi rho))
//           * Gamma(1-2a) Gamma(5/2+2a) sin(2 a pi) / (a sqrt(pi^3) (3 + 4a + tau^2))
// The value is validated against the normalization integral; if the printed
// expression ever disagreed beyond 1e-6, the numeric normalization wins and
// the mismatch is flagged through *printed_ok.
inline double gamma_norm(double alpha, int count, const NearFieldFactors &factors, bool *printed_ok = nullptr)
{
    if (!(alpha > -0.5 && alpha < 0.0))
        throw std::invalid_argument("gamma_norm: alpha must lie in (-0.5, 0)");
    const double tau = factors.tau;
    const double bias = detail::family_bias(factors);
    const double prefactor = (count - 1) + bias * (2.0 + 2.0 * tau * tau / 3.0);
    const double printed = ((count - 1) + factors.beta * factors.z0 * factors.z0 * (3.0 + tau * tau) / (3.0 * M_PI * factors.snr)) *
                           std::exp(std::lgamma(1.0 - 2.0 * alpha) + std::lgamma(2.5 + 2.0 * alpha)) * std::sin(2.0 * alpha * M_PI) /
                           (alpha * std::sqrt(M_PI * M_PI * M_PI) * (3.0 + 4.0 * alpha + tau * tau));
    const double denom = detail::even_moment0(alpha) + tau * tau * detail::even_moment2(alpha);
    const double numeric = prefactor / denom;
    const bool ok = std::abs(printed - numeric) <= 1e-6 * std::max(1.0, std::abs(numeric));
    if (printed_ok)
        *printed_ok = ok;
    return ok ? printed : numeric;
}

// Continuous evaluator of the full optimal family,
//   w(p) = (gamma (1-p^2)^{2 alpha} - beta z0^2 / (2 pi rho)) (1 - tau p)^2,
// with the alpha = 0 branch dispatched explicitly (removable 0/0 in gamma).
inline quadrature::EdgeDensity optimal_adf_fn(const AdfFamilyParams &params)
{
    const double tau = params.factors.tau;
    if (params.alpha == 0.0)
    {
        const double level = 3.0 * (params.count - 1) / (6.0 + 2.0 * tau * tau);
        return [level, tau](double p, double) {
            const double lin = 1.0 - tau * p;
            return level * lin * lin;
        };
    }
    const double gamma = params.gamma;
    const double bias = detail::family_bias(params.factors);
    if (gamma < bias)
        throw infeasible_parameters_error("optimal_adf: bias term forces a negative density");
    const double alpha = params.alpha;
    return [gamma, bias, tau, alpha](double p, double q) {
        const double lin = 1.0 - tau * p;
        return (gamma * std::pow(q, 2.0 * alpha) - bias) * lin * lin;
    };
}

inline AdfFamilyParams make_family(double alpha, int count, const NearFieldFactors &factors)
{
    if (!(alpha > -0.5 && alpha <= 0.0))
        throw std::invalid_argument("make_family: alpha must lie in (-0.5, 0]");
    if (count < 2)
        throw std::invalid_argument("make_family: count must be >= 2");
    AdfFamilyParams p{alpha, count, factors, 0.0};
    if (alpha < 0.0)
        p.gamma = gamma_norm(alpha, count, factors);
    return p;
}

namespace detail
{

// Sample a continuous density on the standard uniform grid. The endpoint
// values are chosen so the outermost trapezoid cells carry the analytically
// correct mass; interior samples are pointwise values.
inline SampledFunction sample_edge_density(const quadrature::EdgeDensity &fn, int grid_size,
                                           const std::function<double(double, double)> &cell_mass)
{
    std::vector<double> v(static_cast<std::size_t>(grid_size));
    const double h = 2.0 / (grid_size - 1);
    for (int j = 1; j + 1 < grid_size; ++j)
    {
        const double p = -1.0 + h * j;
        v[static_cast<std::size_t>(j)] = fn(p, (1.0 - p) * (1.0 + p));
    }
    const double m_right = cell_mass(1.0 - h, 1.0);
    const double m_left = cell_mass(-1.0, -1.0 + h);
    v.back() = std::max(2.0 * m_right / h - v[static_cast<std::size_t>(grid_size - 2)], 0.0);
    v.front() = std::max(2.0 * m_left / h - v[1], 0.0);
    return SampledFunction(std::move(v));
}

// Mass of the singular family over [p0, p1]: gamma B-segments minus the bias,
// times the expanded (1 - tau p)^2 moments. All pieces have closed forms in
// the incomplete Beta function.
inline double family_segment_mass(double alpha, double gamma, double bias, double tau, double p0, double p1)
{
    const double a = 0.5, b = 1.0 + 2.0 * alpha;
    auto segment0 = [&](double lo, double hi) { // int (1-p^2)^{2a} dp
        auto half = [&](double x) {
            const double s = (x < 0.0 ? -1.0 : 1.0);
            return 0.5 * s * specfun::incomplete_beta(x * x, a, b);
        };
        return half(hi) - half(lo);
    };
    auto segment1 = [&](double lo, double hi) { // int p (1-p^2)^{2a} dp
        auto anti = [&](double x) { return -std::pow(1.0 - x * x, 2.0 * alpha + 1.0) / (2.0 * (2.0 * alpha + 1.0)); };
        return anti(hi) - anti(lo);
    };
    auto segment2 = [&](double lo, double hi) { // int p^2 (1-p^2)^{2a} dp
        auto half = [&](double x) {
            const double s = (x < 0.0 ? -1.0 : 1.0);
            return 0.5 * s * specfun::incomplete_beta(x * x, 1.5, b);
        };
        return half(hi) - half(lo);
    };
    const double g0 = segment0(p0, p1), g1 = segment1(p0, p1), g2 = segment2(p0, p1);
    const double b0 = (p1 - p0), b1 = 0.5 * (p1 * p1 - p0 * p0), b2 = (p1 * p1 * p1 - p0 * p0 * p0) / 3.0;
    return gamma * (g0 - 2.0 * tau * g1 + tau * tau * g2) - bias * (b0 - 2.0 * tau * b1 + tau * tau * b2);
}

} // namespace detail

// Full optimal density sampled on a uniform grid of the given size.
inline SampledFunction optimal_adf(const AdfFamilyParams &params, int grid_size)
{
    const auto fn = optimal_adf_fn(params);
    if (params.alpha == 0.0)
    {
        std::vector<double> v(static_cast<std::size_t>(grid_size));
        const double h = 2.0 / (grid_size - 1);
        for (int j = 0; j < grid_size; ++j)
        {
            const double p = -1.0 + h * j;
            v[static_cast<std::size_t>(j)] = fn(p, (1.0 - p) * (1.0 + p));
        }
        return SampledFunction(std::move(v));
    }
    const double tau = params.factors.tau;
    const double bias = detail::family_bias(params.factors);
    const double alpha = params.alpha, gamma = params.gamma;
    return detail::sample_edge_density(
        fn, grid_size, [alpha, gamma, bias, tau](double p0, double p1) { return detail::family_segment_mass(alpha, gamma, bias, tau, p0, p1); });
}

// Normalization constant of the far-regime simplified family (tau and bias
// dropped): gamma = (M - 1) / B(1/2, 1 + 2 alpha).
inline double gamma_simplified(double alpha, int count)
{
    if (!(alpha > -0.5 && alpha < 0.0))
        throw std::invalid_argument("gamma_simplified: alpha must lie in (-0.5, 0)");
    return (count - 1) / detail::even_moment0(alpha);
}

// Simplified density w(p) = gamma (1-p^2)^{2 alpha}, the z0 >> A_T limit.
inline quadrature::EdgeDensity simplified_adf_fn(double alpha, int count)
{
    const double gamma = gamma_simplified(alpha, count);
    return [gamma, alpha](double, double q) { return gamma * std::pow(q, 2.0 * alpha); };
}

inline SampledFunction simplified_adf(double alpha, int count, int grid_size)
{
    const double gamma = gamma_simplified(alpha, count);
    return detail::sample_edge_density(simplified_adf_fn(alpha, count), grid_size, [alpha, gamma](double p0, double p1) {
        return detail::family_segment_mass(alpha, gamma, 0.0, 0.0, p0, p1);
    });
}

// Cumulative of the simplified density with the (M+1)/2 center offset,
//   Phi(p) = (M+1)/2 + sign(p) (gamma/2) B(p^2; 1/2, 1 + 2 alpha).
// The printed form depends on p^2 only; the odd extension restores the sign
// so Phi runs monotonically from 1 at p = -1 to M at p = +1.
inline double cadf_closed(double p, double alpha, int count)
{
    if (!(p >= -1.0 && p <= 1.0))
        throw std::domain_error("cadf_closed: p outside [-1, 1]");
    const double gamma = gamma_simplified(alpha, count);
    const double half = 0.5 * gamma * specfun::incomplete_beta(p * p, 0.5, 1.0 + 2.0 * alpha);
    return 0.5 * (count + 1) + (p < 0.0 ? -half : half);
}

// Inverse of cadf_closed: the closed-form antenna position for index m,
//   p = sign(2m - (M+1)) sqrt(B^{-1}(|2m - (M+1)| / gamma; 1/2, 1 + 2 alpha)).
inline double positions_closed(double m, double alpha, int count)
{
    if (!(m >= 1.0 && m <= static_cast<double>(count)))
        throw std::domain_error("positions_closed: m outside [1, M]");
    const double gamma = gamma_simplified(alpha, count);
    const double centered = 2.0 * m - (count + 1);
    const double y = std::abs(centered) / gamma;
    const double x = specfun::inverse_incomplete_beta(std::min(y, specfun::complete_beta(0.5, 1.0 + 2.0 * alpha)), 0.5,
                                                      1.0 + 2.0 * alpha);
    const double p = std::sqrt(x);
    return centered < 0.0 ? -p : p;
}

// All M closed-form positions as a pinned placement.
inline Placement closed_form_placement(double alpha, int count)
{
    if (count < 2)
        throw std::invalid_argument("closed_form_placement: count must be >= 2");
    if (alpha == 0.0)
        return uniform_apf(count);
    std::vector<double> pos(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m)
        pos[static_cast<std::size_t>(m - 1)] = positions_closed(m, alpha, count);
    pos.front() = -1.0;
    pos.back() = 1.0;
    return Placement(std::move(pos), true);
}

} // namespace adfopt

#endif
