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

#ifndef ADFOPT_RNG_HPP
#define ADFOPT_RNG_HPP

#include <cstdint>

namespace adfopt
{

// Philox-4x32-10 counter-based generator (Salmon et al., Random123 constants).
// Keyed by (seed, stream) so independent trials draw from independent streams
// without coordination; identical (seed, stream) always replays the same
// sequence regardless of what other streams were consumed.
class PhiloxRng
{
  public:
    PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key0_(static_cast<std::uint32_t>(seed)), key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr2_(static_cast<std::uint32_t>(stream)), ctr3_(static_cast<std::uint32_t>(stream >> 32))
    {
    }

    std::uint64_t next_u64()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        std::uint32_t c0 = static_cast<std::uint32_t>(block_);
        std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
        ++block_;
        std::uint32_t x0 = c0, x1 = c1, x2 = ctr2_, x3 = ctr3_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round)
        {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x0;
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x2;
            const std::uint32_t y0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
            const std::uint32_t y1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t y2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
            const std::uint32_t y3 = static_cast<std::uint32_t>(p0);
            x0 = y0, x1 = y1, x2 = y2, x3 = y3;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        spare_ = (static_cast<std::uint64_t>(x2) << 32) | x3;
        have_spare_ = true;
        return (static_cast<std::uint64_t>(x0) << 32) | x1;
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::uint32_t key0_, key1_;
    std::uint32_t ctr2_, ctr3_;
    std::uint64_t block_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

} // namespace adfopt

#endif
