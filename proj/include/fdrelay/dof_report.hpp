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

#ifndef FDRELAY_DOF_REPORT_HPP
#define FDRELAY_DOF_REPORT_HPP

#include "csv.hpp"
#include "dof.hpp"
#include "rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdrelay
{
    enum class DofScenario
    {
        Hd,
        Ac,
        Rc
    };

    enum class DofSolver
    {
        Closed,
        Generic,
        Both
    };

    inline DofScenario parse_dof_scenario(std::string_view s)
    {
        if (s == "hd")
            return DofScenario::Hd;
        if (s == "ac")
            return DofScenario::Ac;
        if (s == "rc")
            return DofScenario::Rc;
        throw std::invalid_argument("unknown DoF scenario '" + std::string(s) + "' (expected hd, ac or rc)");
    }

    inline DofSolver parse_dof_solver(std::string_view s)
    {
        if (s == "closed")
            return DofSolver::Closed;
        if (s == "generic")
            return DofSolver::Generic;
        if (s == "both")
            return DofSolver::Both;
        throw std::invalid_argument("unknown DoF solver '" + std::string(s) + "' (expected closed, generic or both)");
    }

    struct DofQuery
    {
        int n_s = 1;
        int n_r = 1;
        int n_d = 1;
        Rational lambda{0};
        DofScenario scenario = DofScenario::Hd;
        DofSolver solver = DofSolver::Closed;
    };

    struct DofReport
    {
        DofQuery query;
        std::optional<DofResult<Rational>> closed;
        std::optional<DofResult<Rational>> generic;

        bool discrepancy() const { return closed && generic && closed->value != generic->value; }

        std::string text() const;
        std::string machine_line() const;
    };

    namespace detail
    {
        inline std::string describe_value(const Rational &q)
        {
            if (q.denominator() == 1)
                return to_string(q);
            return to_string(q) + " ~ " + format_number(to_double(q));
        }

        inline std::string describe_optimizer(const DofResult<Rational> &r)
        {
            std::string s;
            auto add = [&](const std::string &part) { s += (s.empty() ? "" : ", ") + part; };
            if (r.tau)
                add("tau=" + to_string(*r.tau));
            if (r.r)
                add("r=" + std::to_string(*r.r));
            if (r.c)
                add("c=" + to_string(*r.c));
            return s;
        }

        inline std::string describe(const DofResult<Rational> &r)
        {
            const std::string opt = describe_optimizer(r);
            return describe_value(r.value) + (opt.empty() ? "" : " (" + opt + ")");
        }

        inline DofResult<Rational> closed_fd(const DofQuery &q)
        {
            if (q.n_s != q.n_d)
                throw std::invalid_argument("full-duplex closed forms assume N_S = N_D (got " + std::to_string(q.n_s) + " and " +
                                            std::to_string(q.n_d) + ")");
            DofResult<Rational> out;
            out.source = DofSource::ClosedForm;
            out.c = Rational(1) / (Rational(2) - q.lambda);
            if (q.scenario == DofScenario::Ac)
            {
                out.value = dof_fd_closed_ac<Rational>(q.n_s, q.n_r, q.lambda);
                out.r = q.n_r / 2;
            }
            else
                out.value = dof_fd_closed_rc<Rational>(q.n_s, q.n_r, q.lambda);
            return out;
        }
    }

    // Evaluate the requested solver(s). Errors from the DoF module (for example
    // an odd N_R with the antenna-conserved closed form) propagate unchanged.
    inline DofReport dof_command(const DofQuery &q)
    {
        if (q.lambda < Rational(0) || q.lambda > Rational(1))
            throw std::invalid_argument("lambda must satisfy λ ∈ [0,1]");
        DofReport rep{q, {}, {}};
        const bool want_closed = q.solver != DofSolver::Generic;
        const bool want_generic = q.solver != DofSolver::Closed;
        if (q.scenario == DofScenario::Hd)
        {
            if (want_closed)
                rep.closed = dof_hd_closed<Rational>(q.n_s, q.n_r, q.n_d);
            if (want_generic)
                rep.generic = dof_hd_generic<Rational>(q.n_s, q.n_r, q.n_d);
        }
        else
        {
            const DuplexKind kind = q.scenario == DofScenario::Ac ? DuplexKind::AntennaConserved : DuplexKind::RfChainConserved;
            if (want_closed)
                rep.closed = detail::closed_fd(q);
            if (want_generic)
                rep.generic = dof_fd_generic<Rational>(q.n_s, q.n_r, q.n_d, q.lambda, kind);
        }
        return rep;
    }

    inline std::string DofReport::text() const
    {
        if (closed && !generic)
            return detail::describe(*closed) + "\n";
        if (generic && !closed)
            return detail::describe(*generic) + "\n";
        std::string s = "closed:  " + detail::describe(*closed) + "\n" + "generic: " + detail::describe(*generic) + "\n";
        if (discrepancy())
            s += "DISCREPANCY: generic solver and closed form differ\n";
        return s;
    }

    inline std::string DofReport::machine_line() const
    {
        static constexpr std::string_view names[] = {"hd", "ac", "rc"};
        std::string s = "dof scenario=" + std::string(names[static_cast<int>(query.scenario)]) +
                        " ns=" + std::to_string(query.n_s) + " nr=" + std::to_string(query.n_r) +
                        " nd=" + std::to_string(query.n_d) + " lambda=" + to_string(query.lambda);
        if (closed)
            s += " closed=" + format_number(to_double(closed->value));
        if (generic)
            s += " generic=" + format_number(to_double(generic->value));
        if (closed && generic)
            s += std::string(" discrepancy=") + (discrepancy() ? "1" : "0");
        return s + "\n";
    }
}

#endif
