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

#ifndef FDRELAY_DOF_HPP
#define FDRELAY_DOF_HPP

// Degrees of freedom of the two-hop relay channel. All solvers are templates on
// the scalar type: instantiate with fdrelay::Rational for exact results or with
// double for quick evaluation.
//
// Half duplex:  max_tau min{tau N_S, tau N_R, (1-tau) N_R, (1-tau) N_D}
// Full duplex:  max_{r,c} min{(1 - c(1-lambda)) min(N_S, r), c min(t, N_D)}
// with the relay power scaled as P_R = P_S^c, 0 < c <= 1.

#include "full_duplex.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdrelay
{
    enum class DofSource
    {
        ClosedForm,
        Generic
    };

    template <typename T>
    struct DofResult
    {
        T value{};
        std::optional<T> tau; // half duplex
        std::optional<int> r; // full duplex
        std::optional<T> c;   // full duplex power scaling exponent
        DofSource source = DofSource::Generic;
    };

    namespace detail
    {
        inline void require_antennas(int n_s, int n_r, int n_d)
        {
            if (n_s < 1 || n_r < 1 || n_d < 1)
                throw std::invalid_argument("antenna counts must be >= 1");
        }

        template <typename T>
        void require_lambda(const T &lambda)
        {
            if (lambda < T(0) || lambda > T(1))
                throw std::invalid_argument("lambda must satisfy λ ∈ [0,1]");
        }
    }

    // Regime table: pick the row for the antenna regime.
    template <typename T = Rational>
    DofResult<T> dof_hd_closed(int n_s, int n_r, int n_d)
    {
        detail::require_antennas(n_s, n_r, n_d);
        const T ns(n_s), nr(n_r), nd(n_d);
        DofResult<T> out;
        out.source = DofSource::ClosedForm;
        if (n_r <= std::min(n_s, n_d))
        {
            out.tau = T(1) / T(2);
            out.value = nr / T(2);
        }
        else if (n_r >= std::max(n_s, n_d))
        {
            out.tau = nd / (nd + ns);
            out.value = ns * nd / (nd + ns);
        }
        else if (n_s <= n_r && n_r <= n_d)
        {
            out.tau = nr / (nr + ns);
            out.value = nr * ns / (nr + ns);
        }
        else // n_d <= n_r <= n_s
        {
            out.tau = nd / (nd + nr);
            out.value = nr * nd / (nr + nd);
        }
        return out;
    }

    // Exact max-min of the four linear functions of tau: the optimum of a
    // concave piecewise-linear function sits at a breakpoint, so every pairwise
    // intersection inside (0, 1) is evaluated. Ties resolve to the smallest tau.
    template <typename T = Rational>
    DofResult<T> dof_hd_generic(int n_s, int n_r, int n_d)
    {
        detail::require_antennas(n_s, n_r, n_d);
        // each line is slope * tau + intercept
        struct Line
        {
            T slope, intercept;
        };
        const std::array<Line, 4> lines{{{T(n_s), T(0)}, {T(n_r), T(0)}, {T(-n_r), T(n_r)}, {T(-n_d), T(n_d)}}};
        auto objective = [&](const T &tau)
        {
            T m = lines[0].slope * tau + lines[0].intercept;
            for (const Line &l : lines)
                m = std::min(m, l.slope * tau + l.intercept);
            return m;
        };

        std::vector<T> candidates;
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
            {
                if (lines[i].slope == lines[j].slope)
                    continue;
                const T tau = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
                if (tau > T(0) && tau < T(1))
                    candidates.push_back(tau);
            }
        std::sort(candidates.begin(), candidates.end());

        DofResult<T> out;
        out.source = DofSource::Generic;
        for (const T &tau : candidates)
        {
            const T v = objective(tau);
            if (!out.tau || v > out.value)
            {
                out.value = v;
                out.tau = tau;
            }
        }
        return out;
    }

    // Objective of the full-duplex max-min at one (r, c).
    template <typename T = Rational>
    T dof_fd_objective(int n_s, int n_r, int n_d, const T &lambda, DuplexKind kind, int r, const T &c)
    {
        const int t = transmit_antennas(kind, n_r, r);
        const T a(std::min(n_s, r)), b(std::min(t, n_d));
        return std::min((T(1) - c * (T(1) - lambda)) * a, c * b);
    }

    // For each split r the inner optimum over c equalizes the two active terms,
    // c* = A / (B + A(1-lambda)); when c* > 1 the relay power cannot scale
    // faster than the source and c is clamped to 1, giving min(lambda A, B).
    template <typename T = Rational>
    DofResult<T> dof_fd_generic(int n_s, int n_r, int n_d, const T &lambda, DuplexKind kind)
    {
        detail::require_antennas(n_s, n_r, n_d);
        detail::require_lambda(lambda);
        if (n_r < 2)
            throw std::invalid_argument("full-duplex DoF needs N_R >= 2 so that 0 < r < N_R has a solution");

        DofResult<T> out;
        out.source = DofSource::Generic;
        for (int r = 1; r <= n_r - 1; ++r)
        {
            const int t = transmit_antennas(kind, n_r, r);
            const T a(std::min(n_s, r)), b(std::min(t, n_d));
            const T denom = b + a * (T(1) - lambda);
            T c = a / denom;
            T value;
            if (c <= T(1))
                value = a * b / denom;
            else
            {
                c = T(1);
                value = std::min(lambda * a, b);
            }
            if (!out.r || value > out.value)
            {
                out.value = value;
                out.r = r;
                out.c = c;
            }
        }
        return out;
    }

    // Antenna conserved closed form for N_S = N_D = n with n and n_r even,
    // attained at c = 1/(2 - lambda), r = n_r/2.
    template <typename T = Rational>
    T dof_fd_closed_ac(int n, int n_r, const T &lambda)
    {
        detail::require_lambda(lambda);
        if (n < 1)
            throw std::invalid_argument("dof_fd_closed_ac: N must be >= 1");
        if (n_r < 2 || n_r % 2 != 0)
            throw std::invalid_argument("antenna-conserved closed form requires an even N_R >= 2 (got N_R = " +
                                        std::to_string(n_r) + ")");
        return T(std::min(n, n_r / 2)) / (T(2) - lambda);
    }

    // RF chain conserved closed form for N_S = N_D = n.
    template <typename T = Rational>
    T dof_fd_closed_rc(int n, int n_r, const T &lambda)
    {
        detail::require_lambda(lambda);
        if (n < 1)
            throw std::invalid_argument("dof_fd_closed_rc: N must be >= 1");
        if (n_r < 2)
            throw std::invalid_argument("RF-chain-conserved closed form requires N_R >= 2");
        return T(std::min(n, (2 * n_r) / 3)) / (T(2) - lambda);
    }
}

#endif
