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
// Array geometry: position functions (APF), density functions (ADF), the
// conversions between them, and the flexible-curve array construction whose
// x-projection realizes a target density.

#ifndef ADFOPT_GEOMETRY_HPP
#define ADFOPT_GEOMETRY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adfopt/errors.hpp"
#include "adfopt/quadrature.hpp"

namespace adfopt
{

using Vec3 = Eigen::Vector3d;

// Linear transmit array: M movable elements on a line through the origin with
// orientation (theta, phi); normalized position p in [-1,1] maps to the
// physical segment of length A_T = (M-1) d.
struct TransmitArray
{
    int count;      // M >= 2
    double spacing; // unit spacing d > 0 (meters)
    double theta;   // elevation, [0, pi]
    double phi;     // azimuth, [-pi, pi)

    TransmitArray(int count_, double spacing_, double theta_, double phi_)
        : count(count_), spacing(spacing_), theta(theta_), phi(phi_)
    {
        if (count < 2)
            throw std::invalid_argument("TransmitArray: count must be >= 2");
        if (!(spacing > 0.0))
            throw std::invalid_argument("TransmitArray: spacing must be positive");
        if (!(theta >= 0.0 && theta <= M_PI))
            throw std::invalid_argument("TransmitArray: theta outside [0, pi]");
        if (!(phi >= -M_PI && phi < M_PI))
            throw std::invalid_argument("TransmitArray: phi outside [-pi, pi)");
    }

    double aperture() const { return (count - 1) * spacing; }
};

// Fixed receive array: N-element uniform line centered at (0, 0, z0).
struct ReceiveArray
{
    int count;      // N >= 1
    double spacing; // d_R > 0 (meters)
    double theta;
    double phi;
    double distance; // centroid distance z0 > 0 (meters)

    ReceiveArray(int count_, double spacing_, double theta_, double phi_, double distance_)
        : count(count_), spacing(spacing_), theta(theta_), phi(phi_), distance(distance_)
    {
        if (count < 1)
            throw std::invalid_argument("ReceiveArray: count must be >= 1");
        if (!(spacing > 0.0))
            throw std::invalid_argument("ReceiveArray: spacing must be positive");
        if (!(distance > 0.0))
            throw std::invalid_argument("ReceiveArray: distance must be positive");
    }

    double aperture() const { return (count - 1) * spacing; }
};

// Ordered normalized antenna positions p_1 < ... < p_M in [-1, 1].
class Placement
{
  public:
    Placement(std::vector<double> positions, bool endpoint_pinned) : pos_(std::move(positions)), pinned_(endpoint_pinned)
    {
        if (pos_.empty())
            throw std::invalid_argument("Placement: empty");
        for (std::size_t j = 0; j < pos_.size(); ++j)
        {
            if (!(pos_[j] >= -1.0 && pos_[j] <= 1.0))
                throw std::invalid_argument("Placement: position outside [-1, 1]");
            if (j > 0 && !(pos_[j] > pos_[j - 1]))
                throw std::invalid_argument("Placement: positions must be strictly increasing");
        }
        if (pinned_ && (pos_.front() != -1.0 || pos_.back() != 1.0))
            throw std::invalid_argument("Placement: endpoint pinning requires p_1 = -1 and p_M = 1");
    }

    const std::vector<double> &positions() const { return pos_; }
    int size() const { return static_cast<int>(pos_.size()); }
    bool endpoint_pinned() const { return pinned_; }

  private:
    std::vector<double> pos_;
    bool pinned_;
};

// Non-negative function sampled on a uniform grid over [-1, 1] including both
// endpoints; the density representation the optimizer works on.
class SampledFunction
{
  public:
    explicit SampledFunction(std::vector<double> values) : v_(std::move(values))
    {
        if (v_.size() < 2)
            throw std::invalid_argument("SampledFunction: need at least 2 grid points");
        for (double x : v_)
            if (!(x >= 0.0) || !std::isfinite(x))
                throw std::invalid_argument("SampledFunction: values must be finite and non-negative");
    }

    static SampledFunction constant(double value, int grid_size)
    {
        return SampledFunction(std::vector<double>(static_cast<std::size_t>(grid_size), value));
    }

    int grid_size() const { return static_cast<int>(v_.size()); }
    double spacing() const { return 2.0 / (grid_size() - 1); }
    double grid_point(int j) const { return -1.0 + spacing() * j; }
    const std::vector<double> &values() const { return v_; }

    double integral() const { return quadrature::trapezoid(v_, spacing()); }

    // Linear interpolation between grid points.
    double value_at(double p) const
    {
        if (p <= -1.0)
            return v_.front();
        if (p >= 1.0)
            return v_.back();
        const double s = (p + 1.0) / spacing();
        const int k = std::min(static_cast<int>(s), grid_size() - 2);
        const double t = s - k;
        return v_[static_cast<std::size_t>(k)] * (1.0 - t) + v_[static_cast<std::size_t>(k) + 1] * t;
    }

  private:
    std::vector<double> v_;
};

// Planar curve (x, y(x)) with y(-R) = y(R) = 0; antennas placed at equal arc
// length on it project onto the x-axis with density (R^2 - x^2)^{2 alpha}.
struct FlexibleCurve
{
    double alpha;         // singularity order, (-0.5, 0]
    double half_aperture; // R
    std::vector<double> xs;
    std::vector<double> ys;
};

// APF of the conventional uniform linear array: p_m = 2/(M-1) (m - (M+1)/2).
inline Placement uniform_apf(int count)
{
    if (count < 2)
        throw std::invalid_argument("uniform_apf: count must be >= 2");
    std::vector<double> p(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m)
        p[static_cast<std::size_t>(m - 1)] = 2.0 / (count - 1) * (m - 0.5 * (count + 1));
    p.front() = -1.0;
    p.back() = 1.0;
    return Placement(std::move(p), true);
}

// Physical coordinates of the transmit elements for a given placement.
inline std::vector<Vec3> antenna_coordinates(const Placement &placement, const TransmitArray &array)
{
    if (placement.size() != array.count)
        throw std::invalid_argument("antenna_coordinates: placement length does not match array count");
    const double half = 0.5 * array.aperture();
    const double st = std::sin(array.theta), ct = std::cos(array.theta);
    const double cp = std::cos(array.phi), sp = std::sin(array.phi);
    std::vector<Vec3> out;
    out.reserve(placement.positions().size());
    for (double p : placement.positions())
        out.emplace_back(half * p * st * cp, half * p * st * sp, half * p * ct);
    return out;
}

// Coordinate of the linearly parameterized transmit line at normalized p.
inline Vec3 transmit_point(double p, const TransmitArray &array)
{
    const double half = 0.5 * array.aperture();
    return Vec3(half * p * std::sin(array.theta) * std::cos(array.phi),
                half * p * std::sin(array.theta) * std::sin(array.phi), half * p * std::cos(array.theta));
}

// Receive element coordinates: uniform line through (0, 0, z0).
inline std::vector<Vec3> receive_coordinates(const ReceiveArray &array)
{
    std::vector<Vec3> out;
    if (array.count == 1)
    {
        out.emplace_back(0.0, 0.0, array.distance);
        return out;
    }
    const double half = 0.5 * array.aperture();
    const double st = std::sin(array.theta), ct = std::cos(array.theta);
    const double cp = std::cos(array.phi), sp = std::sin(array.phi);
    const Placement q = uniform_apf(array.count);
    out.reserve(q.positions().size());
    for (double p : q.positions())
        out.emplace_back(half * p * st * cp, half * p * st * sp, half * p * ct + array.distance);
    return out;
}

// Histogram density of a placement, scaled so the trapezoid integral is M-1.
// Useful to inspect how closely a discrete placement realizes a target ADF.
inline SampledFunction empirical_adf(const Placement &placement, int bins)
{
    if (bins < 2)
        throw std::invalid_argument("empirical_adf: bins must be >= 2");
    const double h = 2.0 / bins;
    std::vector<double> density(static_cast<std::size_t>(bins), 0.0);
    for (double p : placement.positions())
    {
        int b = static_cast<int>((p + 1.0) / h);
        b = std::clamp(b, 0, bins - 1);
        density[static_cast<std::size_t>(b)] += 1.0 / h;
    }
    std::vector<double> v(static_cast<std::size_t>(bins) + 1);
    v.front() = density.front();
    v.back() = density.back();
    for (int j = 1; j < bins; ++j)
        v[static_cast<std::size_t>(j)] = 0.5 * (density[static_cast<std::size_t>(j - 1)] + density[static_cast<std::size_t>(j)]);
    const double mass = quadrature::trapezoid(v, h);
    const double target = static_cast<double>(placement.size() - 1);
    if (mass <= 0.0)
        throw degenerate_density_error("empirical_adf: zero mass");
    for (double &x : v)
        x *= target / mass;
    return SampledFunction(std::move(v));
}

namespace detail
{

// Invert the cumulative Phi tabulated on nodes at the integer levels 1..M;
// endpoints pinned to +-1 exactly.
inline Placement invert_cadf(const std::vector<double> &nodes, const std::vector<double> &cumulative, int count)
{
    const double total = cumulative.back();
    if (!(total > 0.0))
        throw degenerate_density_error("discretize_adf: density integrates to zero");
    std::vector<double> pos(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m)
    {
        const double level = (static_cast<double>(m) - 1.0) / (count - 1) * total;
        pos[static_cast<std::size_t>(m - 1)] = quadrature::invert_monotone(nodes, cumulative, level);
    }
    pos.front() = -1.0;
    pos.back() = 1.0;
    for (std::size_t j = 1; j < pos.size(); ++j)
        if (!(pos[j] > pos[j - 1]))
            throw degenerate_density_error("discretize_adf: density too degenerate to separate antennas");
    return Placement(std::move(pos), true);
}

} // namespace detail

// Positions solving Phi(p_m) = m for the cumulative Phi(p) = 1 + c int_{-1}^p w,
// rescaled so Phi(-1) = 1 and Phi(1) = M; piecewise-linear inversion on the
// sample grid, left-most solution on plateaus.
inline Placement discretize_adf(const SampledFunction &w, int count)
{
    if (count < 2)
        throw std::invalid_argument("discretize_adf: count must be >= 2");
    std::vector<double> nodes(static_cast<std::size_t>(w.grid_size()));
    for (int j = 0; j < w.grid_size(); ++j)
        nodes[static_cast<std::size_t>(j)] = w.grid_point(j);
    const auto cumulative = quadrature::cumulative_trapezoid(w.values(), w.spacing());
    return detail::invert_cadf(nodes, cumulative, count);
}

// Continuous-density variant for densities with integrable edge singularities:
// the cumulative is built on tanh-sinh nodes so poles like (1-p^2)^{2 alpha}
// at the aperture edges are resolved to full precision.
inline Placement discretize_adf(const quadrature::EdgeDensity &w, int count, int node_count = 4001, double u_max = 5.0)
{
    if (count < 2)
        throw std::invalid_argument("discretize_adf: count must be >= 2");
    const auto de = quadrature::DeCumulative::build(w, node_count, u_max);
    return detail::invert_cadf(de.nodes, de.cumulative, count);
}

namespace detail
{

inline constexpr double u_max_default = 5.0;

// Arc-length density of the flexible curve: dl/dx = ((R^2 - x^2) / R^2)^{2 alpha},
// expressed on the normalized variable p = x / R.
inline quadrature::EdgeDensity curve_arc_density(double alpha)
{
    return [alpha](double /*p*/, double q) { return std::pow(q, 2.0 * alpha); };
}

// Slope magnitude sqrt(((R^2-x^2)/R^2)^{4 alpha} - 1) on normalized p.
inline double curve_slope(double alpha, double q)
{
    const double r = std::pow(q, 4.0 * alpha) - 1.0;
    return r > 0.0 ? std::sqrt(r) : 0.0;
}

} // namespace detail

// Integrates dy/dx = sign(x) sqrt(((R^2-x^2)/R^2)^{4 alpha} - 1) from x = -R
// with y(-R) = 0. The odd integrand makes y(R) = 0 hold by symmetry, which is
// the only smooth single-valued branch meeting both endpoint conditions.
// Sampled on tanh-sinh nodes (dense near the edges, where curvature blows up).
inline FlexibleCurve flexible_curve(double alpha, double half_aperture, int sample_count = 2001)
{
    if (!(alpha > -0.5 && alpha <= 0.0))
        throw std::invalid_argument("flexible_curve: alpha must lie in (-0.5, 0]");
    if (!(half_aperture > 0.0))
        throw std::invalid_argument("flexible_curve: half aperture must be positive");
    const quadrature::EdgeDensity slope = [alpha](double p, double q) {
        return (p < 0.0 ? -1.0 : 1.0) * detail::curve_slope(alpha, q);
    };
    // signed cumulative (not monotone), so integrate directly on the DE grid
    const int n = sample_count | 1; // odd, so p = 0 is a node
    const double du = 2.0 * detail::u_max_default / (n - 1);
    std::vector<double> x(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
    {
        const double u = -detail::u_max_default + du * j;
        const double t = 0.5 * M_PI * std::sinh(u);
        const double ch = std::cosh(t);
        const double sech2 = 1.0 / (ch * ch);
        x[static_cast<std::size_t>(j)] = std::tanh(t);
        g[static_cast<std::size_t>(j)] = slope(x[static_cast<std::size_t>(j)], sech2) * 0.5 * M_PI * std::cosh(u) * sech2;
        if (!std::isfinite(g[static_cast<std::size_t>(j)]))
            g[static_cast<std::size_t>(j)] = 0.0;
    }
    FlexibleCurve curve;
    curve.alpha = alpha;
    curve.half_aperture = half_aperture;
    curve.xs.reserve(static_cast<std::size_t>(n));
    curve.ys.reserve(static_cast<std::size_t>(n));
    double acc = 0.0;
    double prev_x = -2.0;
    for (int j = 0; j < n; ++j)
    {
        if (j > 0)
            acc += 0.5 * (g[static_cast<std::size_t>(j - 1)] + g[static_cast<std::size_t>(j)]) * du;
        if (x[static_cast<std::size_t>(j)] > prev_x)
        {
            curve.xs.push_back(half_aperture * x[static_cast<std::size_t>(j)]);
            curve.ys.push_back(half_aperture * acc);
            prev_x = x[static_cast<std::size_t>(j)];
        }
        else
        {
            curve.ys.back() = half_aperture * acc;
        }
    }
    if (curve.xs.front() > -half_aperture)
    {
        curve.xs.insert(curve.xs.begin(), -half_aperture);
        curve.ys.insert(curve.ys.begin(), 0.0);
    }
    if (curve.xs.back() < half_aperture)
    {
        curve.xs.push_back(half_aperture);
        curve.ys.push_back(curve.ys.back());
    }
    return curve;
}

// M points at equal arc-length intervals along the curve, endpoints included.
inline std::vector<std::pair<double, double>> place_on_curve(const FlexibleCurve &curve, int count)
{
    if (count < 2)
        throw std::invalid_argument("place_on_curve: count must be >= 2");
    const auto arc = quadrature::DeCumulative::build(detail::curve_arc_density(curve.alpha));
    const double total = arc.total();
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<double> xs_norm(curve.xs.size());
    for (std::size_t j = 0; j < curve.xs.size(); ++j)
        xs_norm[j] = curve.xs[j] / curve.half_aperture;
    for (int m = 0; m < count; ++m)
    {
        const double s = total * m / (count - 1);
        const double p = quadrature::invert_monotone(arc.nodes, arc.cumulative, s);
        const double x = curve.half_aperture * p;
        const double y = quadrature::interp_monotone(xs_norm, curve.ys, p);
        out.emplace_back(x, y);
    }
    out.front() = {-curve.half_aperture, 0.0};
    out.back() = {curve.half_aperture, curve.ys.back()};
    return out;
}

} // namespace adfopt

#endif
