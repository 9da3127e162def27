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
// Projected functional gradient ascent over the antenna density function:
// the functional derivative of the rate functional, the feasibility
// projection (clipping + power normalization), and the iteration driver.

#ifndef ADFOPT_VARIATIONAL_HPP
#define ADFOPT_VARIATIONAL_HPP

#include <Eigen/Dense>

#include <cmath>
#include <utility>
#include <vector>

#include "adfopt/channel.hpp"
#include "adfopt/errors.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/rate.hpp"

namespace adfopt
{

struct OptimizerConfig
{
    int max_iterations = 50;
    double step_size = 1e-3;
    double stop_threshold = -1.0; // < 0 selects the default 1e-6 * (M - 1)
    int grid_multiplier = 8;      // density grid has chi * M + 1 points
    double snr = 10.0;
    bool cap_density = false; // optional min-spacing device: w <- min(w, M-1) before normalization
    // Center the ascent direction on the zero-mean perturbation space the
    // functional derivative is defined over. The plain update stalls where
    // the gradient is proportional to w itself (the rescaling projection
    // cancels exactly such steps), which is not a stationary point of the
    // constrained problem; centering makes the fixed points the KKT points.
    bool tangent_step = true;

    void validate() const
    {
        if (max_iterations < 1)
            throw std::invalid_argument("OptimizerConfig: max_iterations must be >= 1");
        if (!(step_size >= 0.0))
            throw std::invalid_argument("OptimizerConfig: step_size must be non-negative");
        if (grid_multiplier < 1)
            throw std::invalid_argument("OptimizerConfig: grid_multiplier must be >= 1");
        if (!(snr > 0.0))
            throw std::invalid_argument("OptimizerConfig: snr must be positive");
    }
};

struct OptimizerTrace
{
    std::vector<double> rates;  // rate functional at the start of each iteration
    std::vector<double> deltas; // L2 norm of each accepted update
    std::vector<double> best_adf;
    int grid_size = 0;
    int iterations = 0;
    bool converged = false;
    double best_rate = 0.0;

    SampledFunction adf() const { return SampledFunction(best_adf); }
};

namespace detail
{

inline Eigen::MatrixXcd inverse_capacity_kernel(const GramMatrix &k, double snr)
{
    const int n = k.size();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) + snr * k.entries();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    if (!(lo > hi * 1e-14))
        throw ill_conditioned_error("functional_gradient: I + rho K conditioning beyond bound");
    return a.inverse();
}

} // namespace detail

// Functional derivative of the rate functional at w, evaluated on w's grid:
//   grad(p) = rho / (M log 2) sum_{n,n'} G[n,n'] h_n(p) h_{n'}^*(p),
// G = (I + rho K_w)^{-1}. The 1/M matches the convention of gram_continuous;
// finite differences of the rate functional recover exactly this gradient.
inline std::vector<double> functional_gradient_from_response(const SampledFunction &w, const Eigen::MatrixXcd &response,
                                                             double snr)
{
    const GramMatrix k = gram_continuous_from_response(w, response);
    const Eigen::MatrixXcd g = detail::inverse_capacity_kernel(k, snr);
    const double antennas = w.integral() + 1.0;
    const double scale = snr / (antennas * std::log(2.0));
    std::vector<double> grad(static_cast<std::size_t>(w.grid_size()));
    double max_imag = 0.0, max_real = 0.0;
    for (int j = 0; j < w.grid_size(); ++j)
    {
        const auto col = response.col(j);
        const cplx q = col.adjoint() * (g * col);
        grad[static_cast<std::size_t>(j)] = scale * q.real();
        max_imag = std::max(max_imag, std::abs(q.imag()));
        max_real = std::max(max_real, std::abs(q.real()));
    }
    if (max_imag > 1e-10 * std::max(max_real, 1e-300))
        throw ill_conditioned_error("functional_gradient: quadratic form lost Hermitian symmetry");
    return grad;
}

inline std::vector<double> functional_gradient(const SampledFunction &w, const TransmitArray &tx, const ReceiveArray &rx,
                                               const ChannelScenario &scenario, double snr)
{
    std::vector<double> pgrid(static_cast<std::size_t>(w.grid_size()));
    for (int j = 0; j < w.grid_size(); ++j)
        pgrid[static_cast<std::size_t>(j)] = w.grid_point(j);
    return functional_gradient_from_response(w, response_on_grid(pgrid, tx, rx, scenario), snr);
}

// Non-negative clipping followed by power normalization to integral M - 1;
// the optional cap w <= M - 1 is applied before the normalization.
inline SampledFunction project_constraints(const std::vector<double> &raw, int count, bool cap_density = false)
{
    std::vector<double> v(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j)
    {
        double x = std::max(raw[j], 0.0);
        if (cap_density)
            x = std::min(x, static_cast<double>(count - 1));
        v[j] = x;
    }
    const double mass = quadrature::trapezoid(v, 2.0 / (static_cast<double>(raw.size()) - 1.0));
    if (!(mass > 0.0))
        throw degenerate_density_error("project_constraints: density vanished after clipping");
    const double scale = static_cast<double>(count - 1) / mass;
    for (double &x : v)
        x *= scale;
    return SampledFunction(std::move(v));
}

// Variational gradient ascent: start from the constant density, step along
// the (optionally centered) functional derivative, re-project, and keep the
// best-rate iterate seen. Projection makes the iteration non-monotone, so
// returning the best iterate guarantees the reported rate was achieved.
inline OptimizerTrace optimize_adf(const OptimizerConfig &config, const TransmitArray &tx, const ReceiveArray &rx,
                                   const ChannelScenario &scenario)
{
    config.validate();
    const int count = tx.count;
    const int grid = config.grid_multiplier * count + 1;
    const double dx = 2.0 / (grid - 1);
    const double eps_th = config.stop_threshold >= 0.0 ? config.stop_threshold : 1e-6 * (count - 1);

    std::vector<double> pgrid(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j)
        pgrid[static_cast<std::size_t>(j)] = -1.0 + dx * j;
    const Eigen::MatrixXcd response = response_on_grid(pgrid, tx, rx, scenario);

    SampledFunction w = SampledFunction::constant(0.5 * (count - 1), grid);
    OptimizerTrace trace;
    trace.grid_size = grid;
    trace.best_rate = -1.0;

    auto record = [&](const SampledFunction &current) {
        const double rate = rate_functional(gram_continuous_from_response(current, response), config.snr);
        trace.rates.push_back(rate);
        if (rate > trace.best_rate)
        {
            trace.best_rate = rate;
            trace.best_adf = current.values();
        }
        return rate;
    };

    record(w);
    for (int it = 0; it < config.max_iterations; ++it)
    {
        std::vector<double> grad = functional_gradient_from_response(w, response, config.snr);
        if (config.tangent_step)
        {
            const double mean = quadrature::trapezoid(grad, dx) / 2.0;
            for (double &g : grad)
                g -= mean;
        }
        std::vector<double> stepped(w.values());
        for (std::size_t j = 0; j < stepped.size(); ++j)
            stepped[j] += config.step_size * grad[j];
        SampledFunction next = project_constraints(stepped, count, config.cap_density);

        std::vector<double> diff(stepped.size());
        for (std::size_t j = 0; j < diff.size(); ++j)
        {
            const double d = next.values()[j] - w.values()[j];
            diff[j] = d * d;
        }
        const double delta = std::sqrt(quadrature::trapezoid(diff, dx));
        trace.deltas.push_back(delta);
        w = std::move(next);
        ++trace.iterations;
        record(w);
        if (delta <= eps_th)
        {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

} // namespace adfopt

#endif
