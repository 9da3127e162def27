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
// Real special functions needed by the closed-form density family and the
// Toeplitz determinant asymptotics: log-Gamma, digamma, log Barnes-G (with
// its logarithmic derivative), and the unnormalized incomplete Beta function
// with its inverse.

#ifndef ADFOPT_SPECFUN_HPP
#define ADFOPT_SPECFUN_HPP

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace adfopt::specfun
{

inline constexpr double euler_gamma = 0.57721566490153286060651209;

inline double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

// Digamma via upward recurrence into the asymptotic region, then the
// Bernoulli-number expansion. Relative error below 1e-13 for x > 0.
inline double digamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 8.0)
    {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // B_2/2 x^-2, B_4/4 x^-4, ... coefficients
    const double series = inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + std::log(x) - 0.5 * inv - series;
}

namespace detail
{

// zeta(k) for integer k >= 2 by Euler-Maclaurin with N = 16 leading terms.
inline double zeta_int(int k)
{
    const double s = static_cast<double>(k);
    const int n = 16;
    double sum = 0.0;
    for (int j = 1; j < n; ++j)
        sum += std::pow(static_cast<double>(j), -s);
    const double nn = static_cast<double>(n);
    sum += std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
    // Bernoulli tail: B2/2! s n^{-s-1}, B4/4! s(s+1)(s+2) n^{-s-3}, ...
    double term = s * std::pow(nn, -s - 1.0);
    sum += term * (1.0 / 12.0);
    term *= (s + 1.0) * (s + 2.0) / (nn * nn);
    sum -= term * (1.0 / 720.0);
    term *= (s + 3.0) * (s + 4.0) / (nn * nn);
    sum += term * (1.0 / 30240.0);
    term *= (s + 5.0) * (s + 6.0) / (nn * nn);
    sum -= term * (1.0 / 1209600.0);
    return sum;
}

inline const std::vector<double> &zeta_table()
{
    static const std::vector<double> table = [] {
        std::vector<double> t(80, 0.0);
        for (int k = 2; k < 80; ++k)
            t[static_cast<std::size_t>(k)] = zeta_int(k);
        return t;
    }();
    return table;
}

// Maclaurin-type series for log G(1+z), |z| <= 1/2:
//   log G(1+z) = z/2 log(2 pi) - z(z+1)/2 - gamma z^2/2
//                + sum_{k>=2} (-1)^{k+1} zeta(k) z^{k+1}/(k+1)
inline double log_barnes_series(double z)
{
    const auto &zt = zeta_table();
    double acc = 0.5 * z * std::log(2.0 * M_PI) - 0.5 * z * (z + 1.0) - 0.5 * euler_gamma * z * z;
    double zp = z * z; // becomes z^{k+1}
    double sign = -1.0;
    for (int k = 2; k < 80; ++k)
    {
        zp *= z;
        sign = -sign;
        const double term = sign * zt[static_cast<std::size_t>(k)] * zp / (k + 1.0);
        acc += term;
        if (std::abs(term) < 1e-16 * (1.0 + std::abs(acc)) && k > 8)
            break;
    }
    return acc;
}

// d/dz of the series above.
inline double log_barnes_series_deriv(double z)
{
    const auto &zt = zeta_table();
    double acc = 0.5 * std::log(2.0 * M_PI) - z - 0.5 - euler_gamma * z;
    double zp = z; // becomes z^k
    double sign = -1.0;
    for (int k = 2; k < 80; ++k)
    {
        zp *= z;
        sign = -sign;
        const double term = sign * zt[static_cast<std::size_t>(k)] * zp;
        acc += term;
        if (std::abs(term) < 1e-16 * (1.0 + std::abs(acc)) && k > 8)
            break;
    }
    return acc;
}

} // namespace detail

// log of the Barnes G-function for x > 0, via the series on [0.5, 1.5] and
// the recurrence G(x+1) = Gamma(x) G(x) elsewhere.
inline double log_barnes_g(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_barnes_g: requires x > 0");
    double shift = 0.0;
    while (x < 0.5)
    {
        // G(x) = G(x+1) / Gamma(x)
        shift -= std::lgamma(x);
        x += 1.0;
    }
    while (x > 1.5)
    {
        // G(x) = Gamma(x-1) G(x-1)
        x -= 1.0;
        shift += std::lgamma(x);
    }
    return shift + detail::log_barnes_series(x - 1.0);
}

// d/dx log G(x), same argument reduction; uses digamma for the shifts.
inline double log_barnes_g_deriv(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_barnes_g_deriv: requires x > 0");
    double shift = 0.0;
    while (x < 0.5)
    {
        shift -= digamma(x);
        x += 1.0;
    }
    while (x > 1.5)
    {
        x -= 1.0;
        shift += digamma(x);
    }
    return shift + detail::log_barnes_series_deriv(x - 1.0);
}

namespace detail
{

// Continued fraction for the regularized incomplete Beta (Lentz's method).
inline double beta_cf(double x, double a, double b)
{
    constexpr int max_iter = 400;
    constexpr double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny)
        d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m)
    {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15)
            break;
    }
    return h;
}

inline double log_complete_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// Regularized I_x(a,b) with the symmetry swap for the far tail.
inline double reg_incomplete_beta(double x, double a, double b)
{
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_complete_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(x, a, b) / a;
    return 1.0 - front * beta_cf(1.0 - x, b, a) / b;
}

} // namespace detail

// Complete Beta function B(a, b).
inline double complete_beta(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("complete_beta: requires a, b > 0");
    return std::exp(detail::log_complete_beta(a, b));
}

// Unnormalized incomplete Beta: B(x; a, b) = int_0^x t^{a-1} (1-t)^{b-1} dt.
inline double incomplete_beta(double x, double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("incomplete_beta: requires a, b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("incomplete_beta: requires x in [0, 1]");
    return detail::reg_incomplete_beta(x, a, b) * complete_beta(a, b);
}

// Inverse of the unnormalized incomplete Beta in x: bracketing bisection
// followed by Newton polish on the regularized form.
inline double inverse_incomplete_beta(double y, double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("inverse_incomplete_beta: requires a, b > 0");
    const double total = complete_beta(a, b);
    if (!(y >= 0.0 && y <= total * (1.0 + 1e-12)))
        throw std::domain_error("inverse_incomplete_beta: y outside [0, B(1;a,b)]");
    if (y <= 0.0)
        return 0.0;
    if (y >= total)
        return 1.0;
    const double target = y / total;
    double lo = 0.0, hi = 1.0;
    double x = 0.5;
    for (int it = 0; it < 80; ++it)
    {
        x = 0.5 * (lo + hi);
        if (detail::reg_incomplete_beta(x, a, b) < target)
            lo = x;
        else
            hi = x;
    }
    x = 0.5 * (lo + hi);
    const double log_bt = detail::log_complete_beta(a, b);
    for (int it = 0; it < 4; ++it)
    {
        if (x <= 0.0 || x >= 1.0)
            break;
        const double f = detail::reg_incomplete_beta(x, a, b) - target;
        const double dpdx = std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_bt);
        if (!(dpdx > 0.0) || !std::isfinite(dpdx))
            break;
        double step = f / dpdx;
        double xn = x - step;
        if (xn <= lo || xn >= hi)
            break;
        x = xn;
    }
    return x;
}

} // namespace adfopt::specfun

#endif
