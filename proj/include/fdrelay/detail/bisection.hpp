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

#ifndef FDRELAY_DETAIL_BISECTION_HPP
#define FDRELAY_DETAIL_BISECTION_HPP

#include "../errors.hpp"

#include <cmath>
#include <string>

namespace fdrelay::detail
{
    inline constexpr int max_bisection_iterations = 200;

    // Root of a nondecreasing `residual` on [lo, hi], assuming residual(lo) < 0 <
    // residual(hi). Stops when |residual| <= tol or the bracket stops shrinking in
    // floating point. `midpoint(a, b)` selects the split (arithmetic or geometric).
    template <typename Residual, typename Midpoint>
    double bisect_increasing(Residual &&residual, double lo, double hi, double tol, Midpoint &&midpoint,
                             const char *what)
    {
        for (int it = 0; it < max_bisection_iterations; ++it)
        {
            const double mid = midpoint(lo, hi);
            if (!(mid > lo && mid < hi))
                return lo;
            const double r = residual(mid);
            if (!std::isfinite(r))
                throw NumericalFailure(std::string(what) + ": non-finite residual");
            if (std::abs(r) <= tol)
                return mid;
            (r < 0.0 ? lo : hi) = mid;
        }
        throw NumericalFailure(std::string(what) + ": bisection did not converge within " +
                               std::to_string(max_bisection_iterations) + " iterations");
    }

    inline double arithmetic_mid(double a, double b) { return a + 0.5 * (b - a); }
    inline double geometric_mid(double a, double b) { return std::sqrt(a) * std::sqrt(b); }
}

#endif
