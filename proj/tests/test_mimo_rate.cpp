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

#include "fdrelay/mimo_rate.hpp"
#include "test_support.hpp"

#include <cmath>
#include <limits>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fdrelay;

// Reference values of E[log2(1 + rho |h|^2)] (30-digit evaluation of
// log2(e) e^{1/rho} E1(1/rho)).
static constexpr double siso_1 = 0.860347382270885951;
static constexpr double siso_10 = 2.90651480841480498;
static constexpr double siso_20 = 3.74297179953145567;
static constexpr double siso_100 = 5.88404823368347345;

TEST_CASE("sample_channel shape, statistics, determinism", "[mimo_rate]")
{
    std::mt19937_64 rng(3);
    const ChannelMatrix h = sample_channel(2, 3, rng);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 3);

    std::mt19937_64 a(99), b(99);
    CHECK(sample_channel(4, 2, a) == sample_channel(4, 2, b));

    double acc = 0.0, re2 = 0.0;
    constexpr int n = 100000;
    std::mt19937_64 r(1);
    for (int i = 0; i < n; ++i)
    {
        const auto x = sample_channel(1, 1, r)(0, 0);
        acc += std::norm(x);
        re2 += x.real() * x.real();
    }
    CHECK(acc / n >= 0.99);
    CHECK(acc / n <= 1.01);
    CHECK_THAT(re2 / n, WithinAbs(0.5, 0.01));

    CHECK_THROWS_AS(sample_channel(0, 2, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_channel(2, 0, rng), std::invalid_argument);
}

TEST_CASE("logdet_rate examples", "[mimo_rate]")
{
    CHECK(logdet_rate(ChannelMatrix::Zero(3, 2), 5.0) == 0.0);
    CHECK_THAT(logdet_rate(ChannelMatrix::Constant(1, 1, 1.0), 1.0), WithinAbs(1.0, 1e-14));
    CHECK_THAT(logdet_rate(ChannelMatrix::Identity(2, 2), 3.0), WithinAbs(4.0, 1e-14));

    ChannelMatrix bad = ChannelMatrix::Identity(2, 2);
    bad(0, 1) = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_AS(logdet_rate(bad, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(logdet_rate(ChannelMatrix::Identity(2, 2), -1.0), std::invalid_argument);
}

TEST_CASE("logdet_rate Gram symmetry and eigenvalue route", "[mimo_rate][property]")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(0.0, 50.0);
    for (int i = 0; i < 200; ++i)
    {
        const ChannelMatrix h = sample_channel(4, 2, rng);
        const double a = coef(rng);
        const double direct = logdet_rate(h, a);
        CHECK_THAT(logdet_rate(h.adjoint(), a), WithinAbs(direct, 1e-9));

        double via_eig = 0.0;
        for (double ev : gram_eigenvalues(h))
            via_eig += std::log2(1.0 + a * ev);
        CHECK_THAT(via_eig, WithinAbs(direct, 1e-9));

        CHECK(logdet_rate(h, a + 0.5) >= direct);
    }
}

TEST_CASE("gram eigenvalues use the smaller Gram matrix", "[mimo_rate]")
{
    std::mt19937_64 rng(8);
    CHECK(gram_eigenvalues(sample_channel(5, 2, rng)).size() == 2);
    CHECK(gram_eigenvalues(sample_channel(2, 5, rng)).size() == 2);
    CHECK(gram_eigenvalues(sample_channel(1, 4, rng)).size() == 1);
    const auto ev = gram_eigenvalues(sample_channel(3, 3, rng));
    CHECK(ev.size() == 3);
    CHECK(ev.minCoeff() >= 0.0);
}

TEST_CASE("SISO capacity oracle", "[mimo_rate][oracle]")
{
    CHECK_THAT(siso_rayleigh_capacity_oracle(1.0), WithinRel(siso_1, 1e-12));
    CHECK_THAT(siso_rayleigh_capacity_oracle(10.0), WithinRel(siso_10, 1e-12));
    CHECK_THAT(siso_rayleigh_capacity_oracle(20.0), WithinRel(siso_20, 1e-12));
    CHECK_THAT(siso_rayleigh_capacity_oracle(100.0), WithinRel(siso_100, 1e-12));
    CHECK_THAT(siso_rayleigh_capacity_oracle(0.178717953722618), WithinRel(0.222869623665665, 1e-11));
    CHECK(siso_rayleigh_capacity_oracle(1e-6) < 1e-5);
    CHECK(siso_rayleigh_capacity_oracle(20.0) > siso_rayleigh_capacity_oracle(10.0));
    CHECK_THROWS_AS(siso_rayleigh_capacity_oracle(0.0), std::invalid_argument);
    CHECK_THROWS_AS(siso_rayleigh_capacity_oracle(-2.0), std::invalid_argument);

    // cross-check by quadrature and against libstdc++'s exponential integral
    for (double rho : {0.01, 0.3, 1.0, 2.5, 10.0, 1e3})
    {
        CHECK_THAT(siso_rayleigh_capacity_oracle(rho), WithinRel(test::siso_capacity_quadrature(rho), 1e-8));
        const double x = 1.0 / rho;
        // libstdc++ E1 truncates its asymptotic series for large x
        if (x <= 10.0)
            CHECK_THAT(siso_rayleigh_capacity_oracle(rho), WithinRel(std::log2(std::exp(1.0)) * std::exp(x) * -std::expint(-x), 1e-10));
    }
}

TEST_CASE("ergodic_rate", "[mimo_rate]")
{
    const EigenSampleCache siso(1, 1, {100000, 0});
    const RateEstimate zero = ergodic_rate(siso, 0.0);
    CHECK(zero.mean_bits == 0.0);
    CHECK(zero.std_err == 0.0);
    CHECK(zero.n_samples == 100000);

    for (auto [rho, exact] : {std::pair{1.0, siso_1}, {10.0, siso_10}, {100.0, siso_100}})
    {
        const RateEstimate r = ergodic_rate(siso, rho);
        CHECK(std::abs(r.mean_bits - exact) <= 3.0 * r.std_err);
    }

    CHECK(ergodic_rate(siso, 2.0).mean_bits > ergodic_rate(siso, 1.0).mean_bits);
    CHECK_THROWS_AS(ergodic_rate(siso, -1.0), std::invalid_argument);
}

TEST_CASE("standard error scales as 1/sqrt(n)", "[mimo_rate]")
{
    const EigenSampleCache small(2, 2, {20000, 4});
    const EigenSampleCache large(2, 2, {40000, 4});
    const double ratio = ergodic_rate(small, 5.0).std_err / ergodic_rate(large, 5.0).std_err;
    CHECK(ratio >= std::sqrt(2.0) * 0.8);
    CHECK(ratio <= std::sqrt(2.0) * 1.2);
}

TEST_CASE("cache determinism is independent of thread count", "[mimo_rate]")
{
    const MonteCarloConfig mc{5000, 17};
    const EigenSampleCache one(3, 2, mc, 1), many(3, 2, mc, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i)
    {
        const auto a = one.sample(i), b = many.sample(i);
        REQUIRE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
    const RateEstimate ra = ergodic_rate(one, 3.0), rb = ergodic_rate(many, 3.0);
    CHECK(ra.mean_bits == rb.mean_bits);
    CHECK(ra.std_err == rb.std_err);

    // prefix property: sample i depends only on (seed, rows, cols, i)
    const EigenSampleCache shorter(3, 2, {100, 17});
    for (std::size_t i = 0; i < shorter.size(); ++i)
        CHECK(shorter.sample(i)[0] == one.sample(i)[0]);

    const EigenSampleCache other_seed(3, 2, {100, 18});
    CHECK(other_seed.sample(0)[0] != one.sample(0)[0]);
}

TEST_CASE("cache store memoizes by shape", "[mimo_rate]")
{
    const CacheStore store({1000, 1});
    const auto a = store.get(2, 1);
    CHECK(a.get() == store.get(2, 1).get());
    CHECK(a.get() != store.get(1, 2).get());
    CHECK(a->key().rows == 2);
    CHECK(a->key().cols == 1);
    CHECK(a->size() == 1000);
    CHECK_THROWS_AS(EigenSampleCache(0, 1, {10, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EigenSampleCache(1, 1, {0, 0}), std::invalid_argument);
}
