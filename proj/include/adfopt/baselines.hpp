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
// Reference placement schemes: the uniform array, greedy antenna selection
// over a uniform candidate grid, and seeded random placements.

#ifndef ADFOPT_BASELINES_HPP
#define ADFOPT_BASELINES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "adfopt/channel.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/rate.hpp"
#include "adfopt/rng.hpp"

namespace adfopt
{

inline Placement ula_placement(int count) { return uniform_apf(count); }

// Forward-greedy selection of M positions from a uniform candidate grid:
// start empty, add the candidate maximizing the discrete rate of the current
// selection, ties toward smaller p. Gram updates are incremental so each step
// costs one rank-one update and an N x N eigen solve per candidate.
inline Placement antenna_selection_greedy(const TransmitArray &tx, const ReceiveArray &rx, const ChannelScenario &scenario,
                                          int candidate_grid, double snr)
{
    const int count = tx.count;
    if (candidate_grid < count)
        throw std::invalid_argument("antenna_selection_greedy: candidate grid smaller than antenna count");
    const Placement grid = uniform_apf(candidate_grid);
    const auto cand_pts = antenna_coordinates(grid, TransmitArray(candidate_grid, tx.aperture() / (candidate_grid - 1), tx.theta, tx.phi));
    const auto rx_pts = receive_coordinates(rx);
    const double gain = scenario.normalization() == Normalization::CentroidNormalized ? rx.distance : 1.0;

    Eigen::MatrixXcd responses(rx.count, candidate_grid);
    for (int c = 0; c < candidate_grid; ++c)
        for (int n = 0; n < rx.count; ++n)
            responses(n, c) = gain * detail::raw_response(cand_pts[static_cast<std::size_t>(c)], rx_pts[static_cast<std::size_t>(n)], scenario);

    std::vector<bool> taken(static_cast<std::size_t>(candidate_grid), false);
    Eigen::MatrixXcd gram_sum = Eigen::MatrixXcd::Zero(rx.count, rx.count);
    std::vector<double> selected;
    selected.reserve(static_cast<std::size_t>(count));
    for (int step = 0; step < count; ++step)
    {
        int best_c = -1;
        double best_rate = -1.0;
        for (int c = 0; c < candidate_grid; ++c)
        {
            if (taken[static_cast<std::size_t>(c)])
                continue;
            Eigen::MatrixXcd k = (gram_sum + responses.col(c) * responses.col(c).adjoint()) / (step + 1.0);
            const double rate = rate_from_gram(GramMatrix(std::move(k)), snr);
            if (rate > best_rate + 1e-15)
            {
                best_rate = rate;
                best_c = c;
            }
        }
        taken[static_cast<std::size_t>(best_c)] = true;
        gram_sum += responses.col(best_c) * responses.col(best_c).adjoint();
        selected.push_back(grid.positions()[static_cast<std::size_t>(best_c)]);
    }
    std::sort(selected.begin(), selected.end());
    const bool pinned = selected.front() == -1.0 && selected.back() == 1.0;
    return Placement(std::move(selected), pinned);
}

// Single random placement with pinned endpoints from stream (seed, stream):
// M - 2 interior points i.i.d. uniform on (-1, 1), sorted.
inline Placement random_placement(int count, std::uint64_t seed, std::uint64_t stream)
{
    if (count < 2)
        throw std::invalid_argument("random_placement: count must be >= 2");
    PhiloxRng rng(seed, stream);
    std::vector<double> pos;
    pos.reserve(static_cast<std::size_t>(count));
    pos.push_back(-1.0);
    for (int j = 0; j < count - 2; ++j)
    {
        double x;
        do
        {
            x = rng.uniform(-1.0, 1.0);
        } while (x == -1.0);
        pos.push_back(x);
    }
    pos.push_back(1.0);
    std::sort(pos.begin() + 1, pos.end() - 1);
    return Placement(std::move(pos), true);
}

// Trial t uses stream (seed, t), so the sequence is reproducible and trials
// can be evaluated independently.
inline std::vector<Placement> random_placements(int count, int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("random_placements: trials must be >= 1");
    std::vector<Placement> out;
    out.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t)
        out.push_back(random_placement(count, seed, static_cast<std::uint64_t>(t)));
    return out;
}

} // namespace adfopt

#endif
