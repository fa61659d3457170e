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

#include <catch2/catch_amalgamated.hpp>

#include "fdrelay/dof.hpp"

#include <vector>

using Catch::Matchers::WithinAbs;
using namespace fdrelay;

namespace
{
    const std::vector<Rational> quarter_grid{{0, 1}, {1, 4}, {1, 2}, {3, 4}, {1, 1}};
    constexpr auto AC = DuplexKind::AntennaConserved;
    constexpr auto RC = DuplexKind::RfChainConserved;
}

TEST_CASE("half-duplex closed form (four regime rows)", "[dof]")
{
    // N_R >= max{N_S, N_D}
    auto a = dof_hd_closed(2, 4, 2);
    CHECK(a.value == Rational(1));
    CHECK(*a.tau == Rational(1, 2));
    CHECK(a.source == DofSource::ClosedForm);
    // N_R <= min{N_S, N_D}
    auto b = dof_hd_closed(2, 1, 3);
    CHECK(b.value == Rational(1, 2));
    CHECK(*b.tau == Rational(1, 2));
    // N_S <= N_R <= N_D
    auto c = dof_hd_closed(1, 2, 4);
    CHECK(c.value == Rational(2, 3));
    CHECK(*c.tau == Rational(2, 3));
    // N_D <= N_R <= N_S
    auto d = dof_hd_closed(5, 3, 2);
    CHECK(d.value == Rational(6, 5));
    CHECK(*d.tau == Rational(2, 5));
    CHECK_THROWS_AS(dof_hd_closed(0, 1, 1), std::invalid_argument);
}

TEST_CASE("half-duplex generic solver equals the regime table on [1,8]^3", "[dof]")
{
    for (int ns = 1; ns <= 8; ++ns)
        for (int nr = 1; nr <= 8; ++nr)
            for (int nd = 1; nd <= 8; ++nd)
            {
                const auto closed = dof_hd_closed(ns, nr, nd);
                const auto generic = dof_hd_generic(ns, nr, nd);
                REQUIRE(closed.value == generic.value);
                REQUIRE(*closed.tau == *generic.tau);
                // A B / (A + B) with tau = B / (A + B)
                const Rational A(std::min(ns, nr)), B(std::min(nr, nd));
                REQUIRE(generic.value == A * B / (A + B));
                REQUIRE(*generic.tau == B / (A + B));
            }
    CHECK(dof_hd_generic(5, 5, 5).value == Rational(5, 2));
    CHECK(dof_hd_generic(1, 1, 1).value == Rational(1, 2));
    CHECK(*dof_hd_generic(1, 1, 1).tau == Rational(1, 2));

    // double instantiation agrees
    CHECK_THAT(dof_hd_generic<double>(1, 2, 4).value, WithinAbs(2.0 / 3.0, 1e-12));
}

TEST_CASE("full-duplex generic solver examples", "[dof]")
{
    const Rational l(1, 5);
    const auto ac = dof_fd_generic(4, 4, 4, l, AC);
    CHECK(ac.value == Rational(10, 9));
    CHECK(*ac.r == 2);
    CHECK(*ac.c == Rational(5, 9));

    const auto rc = dof_fd_generic(4, 4, 4, l, RC);
    CHECK(rc.value == Rational(10, 7));
    CHECK(*rc.r == 2);
    CHECK(*rc.c == Rational(5, 14));

    for (int n = 1; n <= 6; ++n)
        for (int nr = 2; nr <= 12; ++nr)
            CHECK(dof_fd_generic(n, nr, n, Rational(1), AC).value == Rational(std::min(n, nr / 2)));

    CHECK_THROWS_AS(dof_fd_generic(4, 1, 4, l, AC), std::invalid_argument);
    CHECK_THROWS_AS(dof_fd_generic(4, 4, 4, Rational(3, 2), AC), std::invalid_argument);

    CHECK_THAT(dof_fd_generic<double>(4, 4, 4, 0.2, RC).value, WithinAbs(10.0 / 7.0, 1e-12));
}

TEST_CASE("c clamps to 1 when the relay cannot balance the hops", "[dof]")
{
    // r = 3, t = 1: c* = 3 / (1 + 3/4) > 1, so c = 1 and the value is min(lambda A, B) = 1
    CHECK(dof_fd_objective(4, 4, 4, Rational(3, 4), AC, 3, Rational(1)) == Rational(1));
    const auto best = dof_fd_generic(4, 4, 4, Rational(3, 4), AC);
    CHECK(best.value == Rational(8, 5));
    CHECK(*best.r == 2);
}

TEST_CASE("closed forms", "[dof]")
{
    CHECK(dof_fd_closed_ac(4, 4, Rational(0)) == Rational(1));
    CHECK(dof_fd_closed_ac(4, 4, Rational(1)) == Rational(2));
    CHECK(dof_fd_closed_ac(4, 10, Rational(1, 2)) == Rational(8, 3));
    CHECK(dof_fd_closed_ac(4, 8, Rational(1, 5)) == Rational(20, 9));
    CHECK_THROWS_AS(dof_fd_closed_ac(4, 5, Rational(0)), std::invalid_argument);

    CHECK(dof_fd_closed_rc(4, 4, Rational(1, 5)) == Rational(10, 9));
    CHECK(dof_fd_closed_rc(4, 12, Rational(0)) == Rational(2));
    CHECK(dof_fd_closed_rc(1, 3, Rational(1)) == Rational(1));
    CHECK_THROWS_AS(dof_fd_closed_rc(4, 1, Rational(0)), std::invalid_argument);
}

TEST_CASE("antenna-conserved generic solver versus the closed form", "[dof][property]")
{
    // N/(2-lambda) bounds every split and r = N_R/2 attains it once N <= N_R/2;
    // at lambda in {0, 1} the symmetric split is optimal for every N.
    int strict = 0;
    for (int n = 2; n <= 12; n += 2)
        for (int nr = 2; nr <= 12; nr += 2)
            for (const Rational &l : quarter_grid)
            {
                const Rational g = dof_fd_generic(n, nr, n, l, AC).value;
                const Rational c = dof_fd_closed_ac(n, nr, l);
                REQUIRE(g >= c);
                if (2 * n <= nr || l == Rational(0) || l == Rational(1))
                    REQUIRE(g == c);
                strict += g > c;
            }
    CHECK(strict == 14);

    // For 0 < lambda < 1 an unbalanced split beats r = N_R/2 when N > N_R/2.
    // N = 6, N_R = 8, lambda = 1/2: r = 5, t = 3, c = 5/(3 + 5/2) = 10/11.
    const auto res = dof_fd_generic(6, 8, 6, Rational(1, 2), AC);
    CHECK(res.value == Rational(30, 11));
    CHECK(*res.r == 5);
    CHECK(*res.c == Rational(10, 11));
    CHECK(dof_fd_objective(6, 8, 6, Rational(1, 2), AC, 5, Rational(10, 11)) == Rational(30, 11));
    CHECK(dof_fd_objective(6, 8, 6, Rational(1, 2), AC, 4, Rational(2, 3)) == Rational(8, 3));
    CHECK(dof_fd_closed_ac(6, 8, Rational(1, 2)) == Rational(8, 3));

    // clamp case c = 1: N = 8, N_R = 12, lambda = 3/4, r = 7 gives min(21/4, 5) = 5
    CHECK(dof_fd_generic(8, 12, 8, Rational(3, 4), AC).value == Rational(5));
}

TEST_CASE("RF-chain generic solver dominates the closed form", "[dof][property]")
{
    int strict = 0;
    for (int n = 1; n <= 12; ++n)
        for (int nr = 2; nr <= 12; ++nr)
            for (const Rational &l : quarter_grid)
            {
                const Rational g = dof_fd_generic(n, nr, n, l, RC).value;
                const Rational c = dof_fd_closed_rc(n, nr, l);
                REQUIRE(g >= c);
                strict += g > c;
            }
    CHECK(strict > 0);
}

TEST_CASE("generic FD solver is maximal and achievable", "[dof][property]")
{
    for (auto kind : {AC, RC})
        for (int ns = 1; ns <= 5; ++ns)
            for (int nd = 1; nd <= 5; ++nd)
                for (int nr = 2; nr <= 7; ++nr)
                    for (const Rational &l : quarter_grid)
                    {
                        const auto best = dof_fd_generic(ns, nr, nd, l, kind);
                        REQUIRE(best.value >= Rational(0));
                        REQUIRE(*best.c > Rational(0));
                        REQUIRE(*best.c <= Rational(1));
                        // the reported optimizer attains the value exactly
                        REQUIRE(dof_fd_objective(ns, nr, nd, l, kind, *best.r, *best.c) == best.value);
                        for (int r = 1; r <= nr - 1; ++r)
                            for (int k = 1; k <= 100; ++k)
                                REQUIRE(best.value >= dof_fd_objective(ns, nr, nd, l, kind, r, Rational(k, 100)));
                    }
}

TEST_CASE("full-duplex DoF is nondecreasing in lambda", "[dof][property]")
{
    for (auto kind : {AC, RC})
        for (int n = 1; n <= 8; ++n)
            for (int nr = 2; nr <= 12; ++nr)
            {
                Rational prev_generic(0), prev_rc(0);
                for (int k = 0; k <= 20; ++k)
                {
                    const Rational l(k, 20);
                    const Rational g = dof_fd_generic(n, nr, n, l, kind).value;
                    REQUIRE(g >= prev_generic);
                    prev_generic = g;
                    const Rational c = dof_fd_closed_rc(n, nr, l);
                    REQUIRE(c >= prev_rc);
                    prev_rc = c;
                }
            }
}
