// SPDX-License-Identifier: Apache-2.0
//
// fdrelay: achievable rates and degrees of freedom of half- and full-duplex MIMO relaying
// Copyright (C) 2026 The fdrelay authors
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

#ifndef FDRELAY_FDRELAY_HPP
#define FDRELAY_FDRELAY_HPP

#include "config.hpp"
#include "csv.hpp"
#include "dof.hpp"
#include "dof_report.hpp"
#include "errors.hpp"
#include "figures.hpp"
#include "full_duplex.hpp"
#include "half_duplex.hpp"
#include "mimo_rate.hpp"
#include "rational.hpp"
#include "scenario.hpp"
#include "sweep.hpp"

#endif
