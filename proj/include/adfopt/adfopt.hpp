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

#ifndef ADFOPT_ADFOPT_HPP
#define ADFOPT_ADFOPT_HPP

#include "adfopt/asymptotics.hpp"
#include "adfopt/baselines.hpp"
#include "adfopt/channel.hpp"
#include "adfopt/closedform.hpp"
#include "adfopt/errors.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/harness.hpp"
#include "adfopt/quadrature.hpp"
#include "adfopt/rate.hpp"
#include "adfopt/rng.hpp"
#include "adfopt/specfun.hpp"
#include "adfopt/variational.hpp"

#endif
