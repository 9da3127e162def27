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

#ifndef ADFOPT_QUADRATURE_HPP
#define ADFOPT_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace adfopt::quadrature
{

// Composite trapezoid on a uniform grid.
inline double trapezoid(const std::vector<double> &values, double dx)
{
    if (values.size() < 2)
        return 0.0;
    double acc = 0.5 * (values.front() + values.back());
    for (std::size_t j = 1; j + 1 < values.size(); ++j)
        acc += values[j];
    return acc * dx;
}

// Running trapezoid integral; result[0] = 0, result[j] = integral up to node j.
inline std::vector<double> cumulative_trapezoid(const std::vector<double> &values, double dx)
{
    std::vector<double> out(values.size(), 0.0);
    for (std::size_t j = 1; j < values.size(); ++j)
        out[j] = out[j - 1] + 0.5 * (values[j - 1] + values[j]) * dx;
    return out;
}

// Exact Fourier integral of the piecewise-linear interpolant of f on a uniform
// grid starting at p0 with spacing dx:  integral f(p) exp(-i*omega*p) dp.
// Filon-type rule; stable for arbitrarily large omega.
inline std::complex<double> fourier_linear(const std::vector<double> &f, double p0, double dx, double omega)
{
    using cd = std::complex<double>;
    if (f.size() < 2)
        return {0.0, 0.0};
    if (std::abs(omega) * dx < 1e-12)
    {
        double re = 0.5 * (f.front() + f.back());
        for (std::size_t j = 1; j + 1 < f.size(); ++j)
            re += f[j];
        return {re * dx, 0.0};
    }
    const cd mu(0.0, -omega);
    const cd E = std::exp(mu * dx);
    const cd i0 = (E - 1.0) / mu;                // int_0^dx exp(mu s) ds
    const cd i1 = dx * E / mu - (E - 1.0) / (mu * mu); // int_0^dx s exp(mu s) ds
    cd acc(0.0, 0.0);
    cd phase = std::exp(mu * p0);
    for (std::size_t j = 0; j + 1 < f.size(); ++j)
    {
        const double slope = (f[j + 1] - f[j]) / dx;
        acc += phase * (f[j] * i0 + slope * i1);
        phase *= E;
    }
    return acc;
}

// Plain trapezoid evaluation of the same oscillatory integral; degrades once
// omega*dx is no longer small, kept for the low-frequency branch.
inline std::complex<double> fourier_trapezoid(const std::vector<double> &f, double p0, double dx, double omega)
{
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < f.size(); ++j)
    {
        const double p = p0 + dx * static_cast<double>(j);
        const double wgt = (j == 0 || j + 1 == f.size()) ? 0.5 : 1.0;
        acc += wgt * f[j] * std::exp(std::complex<double>(0.0, -omega * p));
    }
    return acc * dx;
}

// Density on (-1,1) evaluated as f(p, q) with q = 1 - p^2 supplied separately.
// Near the edges q is passed with full relative precision, so integrable
// endpoint singularities like q^(2*alpha) stay evaluable where 1 - p*p would
// round to zero.
using EdgeDensity = std::function<double(double p, double one_minus_p2)>;

// Cumulative integral of an edge-singular density over [-1,1] on tanh-sinh
// (double-exponential) nodes: p = tanh(t), t = (pi/2) sinh(u), u uniform.
// Nodes cluster double-exponentially at the edges; the integrand in u decays
// like exp(-c exp |u|) for any integrable singularity.
struct DeCumulative
{
    std::vector<double> nodes;      // strictly increasing, spans [-1, 1]
    std::vector<double> cumulative; // same length, nondecreasing, starts at 0

    double total() const { return cumulative.back(); }

    static DeCumulative build(const EdgeDensity &density, int node_count = 4001, double u_max = 5.0)
    {
        if (node_count < 5)
            throw std::invalid_argument("DeCumulative: node_count too small");
        const double du = 2.0 * u_max / (node_count - 1);
        std::vector<double> x(node_count), g(node_count);
        for (int j = 0; j < node_count; ++j)
        {
            const double u = -u_max + du * j;
            const double t = 0.5 * M_PI * std::sinh(u);
            const double ch = std::cosh(t);
            const double sech2 = 1.0 / (ch * ch);
            x[j] = std::tanh(t);
            const double jac = 0.5 * M_PI * std::cosh(u) * sech2;
            g[j] = (jac > 0.0) ? density(x[j], sech2) * jac : 0.0;
            if (!std::isfinite(g[j]))
                g[j] = 0.0;
        }
        std::vector<double> F(node_count, 0.0);
        for (int j = 1; j < node_count; ++j)
            F[j] = F[j - 1] + 0.5 * (g[j - 1] + g[j]) * du;

        // Node positions saturate to +-1 in floating point while their mass
        // keeps accumulating; collapse duplicates keeping the last cumulative
        // value so the edge mass lands on the endpoint node.
        DeCumulative out;
        out.nodes.reserve(node_count + 2);
        out.cumulative.reserve(node_count + 2);
        out.nodes.push_back(x[0]);
        out.cumulative.push_back(F[0]);
        for (int j = 1; j < node_count; ++j)
        {
            if (x[j] > out.nodes.back())
            {
                out.nodes.push_back(x[j]);
                out.cumulative.push_back(F[j]);
            }
            else
            {
                out.cumulative.back() = F[j];
            }
        }
        if (out.nodes.front() > -1.0)
        {
            out.nodes.insert(out.nodes.begin(), -1.0);
            out.cumulative.insert(out.cumulative.begin(), 0.0);
        }
        if (out.nodes.back() < 1.0)
        {
            out.nodes.push_back(1.0);
            out.cumulative.push_back(out.cumulative.back());
        }
        return out;
    }
};

// Piecewise-linear value of a tabulated monotone function.
inline double interp_monotone(const std::vector<double> &xs, const std::vector<double> &ys, double x)
{
    if (x <= xs.front())
        return ys.front();
    if (x >= xs.back())
        return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    return ys[k - 1] + t * (ys[k] - ys[k - 1]);
}

// Left-most solution of F(x) = target for tabulated nondecreasing F;
// flat plateaus resolve to their left edge.
inline double invert_monotone(const std::vector<double> &xs, const std::vector<double> &Fs, double target)
{
    if (target <= Fs.front())
        return xs.front();
    if (target > Fs.back())
        return xs.back();
    const auto it = std::lower_bound(Fs.begin(), Fs.end(), target); // first >= target
    const std::size_t k = static_cast<std::size_t>(it - Fs.begin());
    if (Fs[k] == target)
        return xs[k];
    // Fs[k-1] < target < Fs[k]; k minimal, so the denominator is positive.
    const double t = (target - Fs[k - 1]) / (Fs[k] - Fs[k - 1]);
    return xs[k - 1] + t * (xs[k] - xs[k - 1]);
}

} // namespace adfopt::quadrature

#endif
