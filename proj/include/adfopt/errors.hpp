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

#ifndef ADFOPT_ERRORS_HPP
#define ADFOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adfopt
{

// Transmit/receive points (or a scatterer) closer than the geometric tolerance.
class singular_geometry_error : public std::runtime_error
{
  public:
    explicit singular_geometry_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A density that is identically zero (or vanishes after clipping) cannot be inverted.
class degenerate_density_error : public std::runtime_error
{
  public:
    explicit degenerate_density_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Geometry outside the near-field regime the Toeplitz surrogate is valid for (beta >= pi).
class out_of_regime_error : public std::runtime_error
{
  public:
    explicit out_of_regime_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Closed-form density family turns negative for the requested parameters.
class infeasible_parameters_error : public std::runtime_error
{
  public:
    explicit infeasible_parameters_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Linear system conditioning beyond the trusted bound.
class ill_conditioned_error : public std::runtime_error
{
  public:
    explicit ill_conditioned_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Configuration text failed validation; message lists every problem found.
class config_error : public std::runtime_error
{
  public:
    explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace adfopt

#endif
