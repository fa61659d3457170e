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

#ifndef FDRELAY_MIMO_RATE_HPP
#define FDRELAY_MIMO_RATE_HPP

#include "scenario.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace fdrelay
{
    // Fading matrix: rows = receive antennas, cols = transmit antennas.
    using ChannelMatrix = Eigen::MatrixXcd;

    // Ergodic rate in bits per channel use with its Monte Carlo standard error.
    struct RateEstimate
    {
        double mean_bits = 0.0;
        double std_err = 0.0;
        std::size_t n_samples = 0;

        RateEstimate scaled(double factor) const { return {mean_bits * factor, std_err * factor, n_samples}; }
    };

    // The estimate with the smaller mean (first on ties).
    inline const RateEstimate &min_rate(const RateEstimate &a, const RateEstimate &b)
    {
        return b.mean_bits < a.mean_bits ? b : a;
    }

    namespace detail
    {
        inline std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }
    }

    // Independent random stream for sample `index` of the (rows x cols) channel
    // ensemble. Depends only on its arguments, never on evaluation order.
    inline std::mt19937_64 sample_engine(std::uint64_t seed, int rows, int cols, std::uint64_t index)
    {
        std::uint64_t h = detail::splitmix64(seed);
        h = detail::splitmix64(h ^ static_cast<std::uint64_t>(rows));
        h = detail::splitmix64(h ^ (static_cast<std::uint64_t>(cols) << 32));
        h = detail::splitmix64(h ^ index);
        return std::mt19937_64(h);
    }

    // i.i.d. CN(0,1) entries: real and imaginary parts each N(0, 1/2).
    template <typename URBG>
    ChannelMatrix sample_channel(int rows, int cols, URBG &rng)
    {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("sample_channel: dimensions must be >= 1");
        std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
        ChannelMatrix h(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i)
            {
                const double re = gauss(rng);
                const double im = gauss(rng);
                h(i, j) = {re, im};
            }
        return h;
    }

    // log2 det(I + coef H H*), evaluated through a Cholesky factor of the
    // rows x rows matrix.
    inline double logdet_rate(const ChannelMatrix &h, double coef)
    {
        if (!(coef >= 0.0) || !std::isfinite(coef))
            throw std::invalid_argument("logdet_rate: coefficient must be finite and >= 0");
        if (!h.allFinite())
            throw std::invalid_argument("logdet_rate: channel entries must be finite");
        const auto n = h.rows();
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
        m.noalias() += coef * (h * h.adjoint());
        Eigen::LLT<Eigen::MatrixXcd> llt(m);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("logdet_rate: factorization failed");
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            acc += std::log2(llt.matrixL()(i, i).real());
        return 2.0 * acc;
    }

    // Nonnegative eigenvalues of the smaller of H H* and H* H (ascending).
    inline Eigen::VectorXd gram_eigenvalues(const ChannelMatrix &h)
    {
        if (h.rows() == 1 || h.cols() == 1)
            return Eigen::VectorXd::Constant(1, h.squaredNorm());
        const Eigen::MatrixXcd gram = h.rows() <= h.cols() ? Eigen::MatrixXcd(h * h.adjoint())
                                                           : Eigen::MatrixXcd(h.adjoint() * h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("gram_eigenvalues: eigen decomposition failed");
        return solver.eigenvalues().cwiseMax(0.0);
    }

    // Gram eigenvalues of n_samples Rayleigh draws of one channel shape. Built
    // once, then shared read-only by every rate evaluation on that shape, so
    // rate curves in a decision variable are evaluated on common random numbers.
    class EigenSampleCache
    {
    public:
        struct Key
        {
            int rows;
            int cols;
            std::uint64_t seed;
            std::size_t n_samples;
            auto operator<=>(const Key &) const = default;
        };

        EigenSampleCache(int rows, int cols, const MonteCarloConfig &mc, unsigned threads = 1)
            : key_{rows, cols, mc.seed, mc.n_samples}, rank_(static_cast<std::size_t>(std::min(rows, cols)))
        {
            if (rows < 1 || cols < 1)
                throw std::invalid_argument("EigenSampleCache: dimensions must be >= 1");
            if (mc.n_samples < 1)
                throw std::invalid_argument("EigenSampleCache: n_samples must be >= 1");
            eig_.resize(mc.n_samples * rank_);

            auto fill = [&](std::size_t begin, std::size_t end)
            {
                for (std::size_t i = begin; i < end; ++i)
                {
                    auto rng = sample_engine(mc.seed, rows, cols, i);
                    const Eigen::VectorXd ev = gram_eigenvalues(sample_channel(rows, cols, rng));
                    std::copy(ev.data(), ev.data() + rank_, eig_.begin() + static_cast<std::ptrdiff_t>(i * rank_));
                }
            };

            threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(mc.n_samples)));
            if (threads == 1)
            {
                fill(0, mc.n_samples);
                return;
            }
            std::vector<std::jthread> workers;
            const std::size_t chunk = (mc.n_samples + threads - 1) / threads;
            for (std::size_t b = 0; b < mc.n_samples; b += chunk)
                workers.emplace_back(fill, b, std::min(mc.n_samples, b + chunk));
        }

        const Key &key() const noexcept { return key_; }
        std::size_t size() const noexcept { return key_.n_samples; }
        std::size_t rank() const noexcept { return rank_; }

        std::span<const double> sample(std::size_t i) const
        {
            return std::span<const double>(eig_).subspan(i * rank_, rank_);
        }

    private:
        Key key_;
        std::size_t rank_;
        std::vector<double> eig_;
    };

    // Sample mean and standard error of log2 det(I + coef H H*) over the cache.
    inline RateEstimate ergodic_rate(const EigenSampleCache &cache, double coef)
    {
        if (cache.size() == 0)
            throw std::invalid_argument("ergodic_rate: empty cache");
        if (!(coef >= 0.0) || !std::isfinite(coef))
            throw std::invalid_argument("ergodic_rate: coefficient must be finite and >= 0");
        const std::size_t n = cache.size();
        std::vector<double> values(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            double v = 0.0;
            for (double ev : cache.sample(i))
                v += std::log2(1.0 + coef * ev);
            values[i] = v;
            sum += v;
        }
        const double mean = sum / static_cast<double>(n);
        if (n == 1)
            return {mean, 0.0, n};
        double ss = 0.0;
        for (double v : values)
            ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / static_cast<double>(n - 1));
        return {mean, sd / std::sqrt(static_cast<double>(n)), n};
    }

    // E[log2(1 + rho |h|^2)] for |h|^2 ~ Exp(1), i.e. log2(e) e^{1/rho} E1(1/rho).
    // e^x E1(x) is evaluated by its power series for x <= 1 and by a
    // continued fraction (modified Lentz) otherwise.
    inline double siso_rayleigh_capacity_oracle(double rho)
    {
        if (!(rho > 0.0) || !std::isfinite(rho))
            throw std::invalid_argument("siso_rayleigh_capacity_oracle: rho must be positive");
        const double x = 1.0 / rho;
        double scaled_e1 = 0.0;
        if (x <= 1.0)
        {
            double sum = 0.0;
            double term = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                term *= -x / k;
                const double add = term / k;
                sum += add;
                if (std::abs(add) < 1e-17 * std::abs(sum))
                    break;
            }
            scaled_e1 = std::exp(x) * (-std::numbers::egamma - std::log(x) - sum);
        }
        else
        {
            constexpr double tiny = 1e-300;
            double b = x + 1.0;
            double c = 1.0 / tiny;
            double d = 1.0 / b;
            double f = d;
            for (int i = 1; i < 1000; ++i)
            {
                const double a = -static_cast<double>(i) * i;
                b += 2.0;
                d = 1.0 / (a * d + b);
                c = b + a / c;
                const double delta = c * d;
                f *= delta;
                if (std::abs(delta - 1.0) < 1e-16)
                    break;
            }
            scaled_e1 = f;
        }
        return std::numbers::log2e * scaled_e1;
    }

    // Lazily built, memoized caches for every channel shape used with one
    // Monte Carlo configuration. Thread-safe; returned caches are immutable.
    class CacheStore
    {
    public:
        explicit CacheStore(MonteCarloConfig mc, unsigned build_threads = 1)
            : mc_(mc), build_threads_(build_threads) {}

        const MonteCarloConfig &config() const noexcept { return mc_; }

        std::shared_ptr<const EigenSampleCache> get(int rows, int cols) const
        {
            std::lock_guard lock(mutex_);
            auto &slot = caches_[{rows, cols}];
            if (!slot)
                slot = std::make_shared<const EigenSampleCache>(rows, cols, mc_, build_threads_);
            return slot;
        }

    private:
        MonteCarloConfig mc_;
        unsigned build_threads_;
        mutable std::mutex mutex_;
        mutable std::map<std::pair<int, int>, std::shared_ptr<const EigenSampleCache>> caches_;
    };
}

#endif
