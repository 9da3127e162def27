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

#ifndef ADFOPT_RATE_HPP
#define ADFOPT_RATE_HPP

#include <cmath>
#include <string>

#include "adfopt/channel.hpp"

namespace adfopt
{

struct RatePoint
{
    double rate_bits;
    double snr;
    std::string scheme;
    std::string scenario;
};

// Rate in bits per channel use from a Gram spectrum: sum_i log2(1 + rho * lambda_i).
// Eigenvalue route rather than LU keeps the value symmetric in the Hermitian input.
inline double rate_from_gram(const GramMatrix &k, double snr)
{
    if (!(snr > 0.0))
        throw std::invalid_argument("rate: snr must be positive");
    double rate = 0.0;
    const Eigen::VectorXd ev = k.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        rate += std::log2(1.0 + snr * std::max(ev(i), 0.0));
    return rate;
}

// C_f = log2 det(I + rho K_f) with K_f = (1/M) H H^H.
inline double achievable_rate_discrete(const ChannelMatrix &h, double snr)
{
    return rate_from_gram(gram_discrete(h), snr);
}

// C_w = log2 det(I + rho K_w) for a continuous-form Gram matrix.
inline double rate_functional(const GramMatrix &k, double snr) { return rate_from_gram(k, snr); }

} // namespace adfopt

#endif
