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
// Spherical-wave spatial responses, channel matrices, and the three Gram
// forms: discrete (1/M) H H^H, the continuous density-weighted integral, and
// the near-field Toeplitz surrogate.

#ifndef ADFOPT_CHANNEL_HPP
#define ADFOPT_CHANNEL_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "adfopt/errors.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/quadrature.hpp"

namespace adfopt
{

using cplx = std::complex<double>;

inline constexpr double kCoincidenceTolerance = 1e-9; // meters

struct Scatterer
{
    Vec3 position;
};

enum class ChannelVariant
{
    LoS,
    NLoS,
    Rician
};

// "raw" keeps the free-space 1/r gain; "centroid-normalized" multiplies the
// channel by z0 so the LoS gain at the centroid distance is about one and a
// configured SNR acts as the effective per-link SNR.
enum class Normalization
{
    Raw,
    CentroidNormalized
};

class ChannelScenario
{
  public:
    static ChannelScenario los(double wavelength, Normalization norm = Normalization::CentroidNormalized)
    {
        return ChannelScenario(ChannelVariant::LoS, wavelength, 0.0, {}, norm);
    }

    static ChannelScenario nlos(double wavelength, std::vector<Scatterer> scatterers,
                                Normalization norm = Normalization::CentroidNormalized)
    {
        return ChannelScenario(ChannelVariant::NLoS, wavelength, 0.0, std::move(scatterers), norm);
    }

    static ChannelScenario rician(double wavelength, double k_linear, std::vector<Scatterer> scatterers,
                                  Normalization norm = Normalization::CentroidNormalized)
    {
        return ChannelScenario(ChannelVariant::Rician, wavelength, k_linear, std::move(scatterers), norm);
    }

    ChannelVariant variant() const { return variant_; }
    double wavelength() const { return wavelength_; }
    double wavenumber() const { return 2.0 * M_PI / wavelength_; }
    double rician_k() const { return k_linear_; }
    const std::vector<Scatterer> &scatterers() const { return scatterers_; }
    Normalization normalization() const { return norm_; }

  private:
    ChannelScenario(ChannelVariant variant, double wavelength, double k_linear, std::vector<Scatterer> scatterers,
                    Normalization norm)
        : variant_(variant), wavelength_(wavelength), k_linear_(k_linear), scatterers_(std::move(scatterers)), norm_(norm)
    {
        if (!(wavelength_ > 0.0))
            throw std::invalid_argument("ChannelScenario: wavelength must be positive");
        if (k_linear_ < 0.0)
            throw std::invalid_argument("ChannelScenario: Rician factor must be non-negative");
        if (variant_ != ChannelVariant::LoS && scatterers_.empty())
            throw std::invalid_argument("ChannelScenario: NLoS/Rician require at least one scatterer");
    }

    ChannelVariant variant_;
    double wavelength_;
    double k_linear_;
    std::vector<Scatterer> scatterers_;
    Normalization norm_;
};

// Spherical-wave response h = exp(j kappa r) / r between two points.
inline cplx los_response(const Vec3 &r_t, const Vec3 &r_r, double wavenumber)
{
    const double r = (r_t - r_r).norm();
    if (r <= kCoincidenceTolerance)
        throw singular_geometry_error("los_response: coincident transmit/receive points");
    return std::polar(1.0 / r, wavenumber * r);
}

// Sum of single-bounce responses; the transmit-side hop enters conjugated.
inline cplx nlos_response(const Vec3 &r_t, const Vec3 &r_r, const std::vector<Scatterer> &scatterers, double wavenumber)
{
    cplx acc(0.0, 0.0);
    for (const Scatterer &s : scatterers)
        acc += los_response(s.position, r_r, wavenumber) * std::conj(los_response(r_t, s.position, wavenumber));
    return acc;
}

namespace detail
{

// Response without the normalization factor.
inline cplx raw_response(const Vec3 &r_t, const Vec3 &r_r, const ChannelScenario &sc)
{
    switch (sc.variant())
    {
    case ChannelVariant::LoS:
        return los_response(r_t, r_r, sc.wavenumber());
    case ChannelVariant::NLoS:
        return nlos_response(r_t, r_r, sc.scatterers(), sc.wavenumber());
    case ChannelVariant::Rician:
    default:
    {
        const double k = sc.rician_k();
        return std::sqrt(k / (1.0 + k)) * los_response(r_t, r_r, sc.wavenumber()) +
               std::sqrt(1.0 / (1.0 + k)) * nlos_response(r_t, r_r, sc.scatterers(), sc.wavenumber());
    }
    }
}

inline double normalization_gain(const ChannelScenario &sc, const ReceiveArray &rx)
{
    return sc.normalization() == Normalization::CentroidNormalized ? rx.distance : 1.0;
}

} // namespace detail

// N x M complex response between one receive element per row and one
// transmit element per column.
class ChannelMatrix
{
  public:
    explicit ChannelMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries))
    {
        if (!m_.allFinite())
            throw std::invalid_argument("ChannelMatrix: non-finite entries");
    }

    const Eigen::MatrixXcd &entries() const { return m_; }
    int receive_count() const { return static_cast<int>(m_.rows()); }
    int transmit_count() const { return static_cast<int>(m_.cols()); }

  private:
    Eigen::MatrixXcd m_;
};

// Hermitian positive-semidefinite N x N form.
class GramMatrix
{
  public:
    explicit GramMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries))
    {
        const double scale = m_.cwiseAbs().maxCoeff();
        if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * std::max(scale, 1e-300))
            throw std::invalid_argument("GramMatrix: not Hermitian within tolerance");
        m_ = 0.5 * (m_ + m_.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        const double top = es.eigenvalues().maxCoeff();
        if (es.eigenvalues().minCoeff() < -1e-10 * std::max(top, 1e-300))
            throw std::invalid_argument("GramMatrix: negative eigenvalue beyond tolerance");
    }

    const Eigen::MatrixXcd &entries() const { return m_; }
    int size() const { return static_cast<int>(m_.rows()); }

    Eigen::VectorXd eigenvalues() const
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

  private:
    Eigen::MatrixXcd m_;
};

// Channel matrix for a discrete placement under the scenario variant.
inline ChannelMatrix channel_matrix(const Placement &placement, const TransmitArray &tx, const ReceiveArray &rx,
                                    const ChannelScenario &scenario)
{
    const auto tx_pts = antenna_coordinates(placement, tx);
    const auto rx_pts = receive_coordinates(rx);
    const double gain = detail::normalization_gain(scenario, rx);
    Eigen::MatrixXcd h(rx.count, placement.size());
    for (int n = 0; n < rx.count; ++n)
        for (int m = 0; m < placement.size(); ++m)
            h(n, m) = gain * detail::raw_response(tx_pts[static_cast<std::size_t>(m)], rx_pts[static_cast<std::size_t>(n)], scenario);
    return ChannelMatrix(std::move(h));
}

// Response of the linearly parameterized transmit line sampled on a grid of
// normalized positions; rows are receive elements. Shared by the continuous
// Gram form and the variational gradient so the channel is evaluated once.
inline Eigen::MatrixXcd response_on_grid(const std::vector<double> &pgrid, const TransmitArray &tx,
                                         const ReceiveArray &rx, const ChannelScenario &scenario)
{
    const auto rx_pts = receive_coordinates(rx);
    const double gain = detail::normalization_gain(scenario, rx);
    Eigen::MatrixXcd r(rx.count, static_cast<Eigen::Index>(pgrid.size()));
    for (std::size_t j = 0; j < pgrid.size(); ++j)
    {
        const Vec3 pt = transmit_point(pgrid[j], tx);
        for (int n = 0; n < rx.count; ++n)
            r(n, static_cast<Eigen::Index>(j)) = gain * detail::raw_response(pt, rx_pts[static_cast<std::size_t>(n)], scenario);
    }
    return r;
}

// K_f = (1/M) H H^H.
inline GramMatrix gram_discrete(const ChannelMatrix &h)
{
    const double m = static_cast<double>(h.transmit_count());
    return GramMatrix((h.entries() * h.entries().adjoint()) / m);
}

// Continuous Gram form with a precomputed response matrix (N x P on the
// density's grid).
inline GramMatrix gram_continuous_from_response(const SampledFunction &w, const Eigen::MatrixXcd &response)
{
    const double dx = w.spacing();
    const double antennas = w.integral() + 1.0;
    Eigen::VectorXd wq(w.grid_size());
    for (int j = 0; j < w.grid_size(); ++j)
    {
        const double trap = (j == 0 || j == w.grid_size() - 1) ? 0.5 : 1.0;
        wq(j) = w.values()[static_cast<std::size_t>(j)] * trap * dx;
    }
    Eigen::MatrixXcd k = (response * wq.asDiagonal() * response.adjoint()) / antennas;
    return GramMatrix(std::move(k));
}

// Continuous Gram form: (1/M) int w(p) h_n(p) h_{n'}^*(p) dp on the density's
// grid. The 1/M keeps the rate functional the limit of the discrete rate
// under isotropic transmit power (the discrete and continuous forms would
// otherwise differ by the antenna count).
inline GramMatrix gram_continuous(const SampledFunction &w, const TransmitArray &tx, const ReceiveArray &rx,
                                  const ChannelScenario &scenario)
{
    std::vector<double> pgrid(static_cast<std::size_t>(w.grid_size()));
    for (int j = 0; j < w.grid_size(); ++j)
        pgrid[static_cast<std::size_t>(j)] = w.grid_point(j);
    const Eigen::MatrixXcd r = response_on_grid(pgrid, tx, rx, scenario);
    return gram_continuous_from_response(w, r);
}

// Toeplitz Gram surrogate: entry(n, n') = (1/z0^2) int wadf(p) e^{-j beta (n-n') p} dp
// with wadf(p) = w(p) / (1 - tau p)^2. Valid in the near-field regime beta < pi.
inline GramMatrix gram_toeplitz(const SampledFunction &w, double tau, double beta, double z0, int receive_count)
{
    if (!(std::abs(tau) < 1.0))
        throw std::invalid_argument("gram_toeplitz: requires |tau| < 1");
    if (!(beta > 0.0) || beta >= M_PI)
        throw out_of_regime_error("gram_toeplitz: requires 0 < beta < pi");
    std::vector<double> wadf(static_cast<std::size_t>(w.grid_size()));
    for (int j = 0; j < w.grid_size(); ++j)
    {
        const double denom = 1.0 - tau * w.grid_point(j);
        wadf[static_cast<std::size_t>(j)] = w.values()[static_cast<std::size_t>(j)] / (denom * denom);
    }
    const double dx = w.spacing();
    std::vector<cplx> column(static_cast<std::size_t>(receive_count));
    for (int dn = 0; dn < receive_count; ++dn)
    {
        const double omega = beta * dn;
        // Filon-type rule once the phase rotates fast relative to the grid
        column[static_cast<std::size_t>(dn)] =
            (omega > 10.0) ? quadrature::fourier_linear(wadf, -1.0, dx, omega) : quadrature::fourier_trapezoid(wadf, -1.0, dx, omega);
        column[static_cast<std::size_t>(dn)] /= z0 * z0;
    }
    Eigen::MatrixXcd k(receive_count, receive_count);
    for (int n = 0; n < receive_count; ++n)
        for (int np = 0; np < receive_count; ++np)
            k(n, np) = (n >= np) ? column[static_cast<std::size_t>(n - np)] : std::conj(column[static_cast<std::size_t>(np - n)]);
    return GramMatrix(std::move(k));
}

} // namespace adfopt

#endif
