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

#ifndef FDRELAY_SCENARIO_HPP
#define FDRELAY_SCENARIO_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdrelay
{
    // Relative slack allowed when checking a relay power against its budget.
    inline constexpr double power_budget_rel_tol = 1e-9;

    inline double db_to_linear(double x_db)
    {
        if (!std::isfinite(x_db))
            throw std::invalid_argument("db_to_linear: input must be finite");
        return std::pow(10.0, x_db / 10.0);
    }

    inline double linear_to_db(double x)
    {
        if (!std::isfinite(x) || x <= 0.0)
            throw std::invalid_argument("linear_to_db: input must be finite and positive");
        return 10.0 * std::log10(x);
    }

    // Composite path loss K d^gamma in dB, from K in dB, distance d and exponent gamma.
    inline double pathloss_db(double k_db, double d, double gamma)
    {
        if (!(d > 0.0) || !std::isfinite(d))
            throw std::invalid_argument("pathloss_db: distance must be positive");
        if (!std::isfinite(k_db) || !std::isfinite(gamma))
            throw std::invalid_argument("pathloss_db: K and gamma must be finite");
        return k_db + 10.0 * gamma * std::log10(d);
    }

    // Residual self-interference after passive suppression (beta) and active
    // cancellation (mu, lambda). lambda = 1 makes the residual independent of the
    // relay power, lambda = 0 makes it grow linearly with it.
    struct SelfInterferenceModel
    {
        double lambda = 0.0;
        double beta_db = 0.0;
        double mu_db = 0.0;

        void validate() const
        {
            if (!(lambda >= 0.0 && lambda <= 1.0))
                throw std::invalid_argument("si_lambda must satisfy λ ∈ [0,1]");
            if (!std::isfinite(beta_db) || !std::isfinite(mu_db))
                throw std::invalid_argument("si_beta_db and si_mu_db must be finite");
        }

        double beta() const { return db_to_linear(beta_db); }
        double mu() const { return db_to_linear(mu_db); }
    };

    struct MonteCarloConfig
    {
        std::size_t n_samples = 10000;
        std::uint64_t seed = 0;
    };

    // Source, relay and destination. The relay has n_r antennas (and 2 n_r RF
    // chains) in half-duplex mode; path losses are the composite K d^gamma terms.
    struct Scenario
    {
        int n_s = 1;
        int n_r = 2;
        int n_d = 1;
        double p_s_db = 0.0;
        double p_r_db = 0.0;
        double noise_r_db = 0.0;
        double noise_d_db = 0.0;
        double pathloss_sr_db = 0.0;
        double pathloss_rd_db = 0.0;
        SelfInterferenceModel si;
        MonteCarloConfig mc;

        void validate() const
        {
            if (n_s < 1 || n_r < 1 || n_d < 1)
                throw std::invalid_argument("antenna counts n_s, n_r, n_d must be >= 1");
            for (double v : {p_s_db, p_r_db, noise_r_db, noise_d_db, pathloss_sr_db, pathloss_rd_db})
                if (!std::isfinite(v))
                    throw std::invalid_argument("all dB quantities must be finite");
            si.validate();
            if (mc.n_samples < 1)
                throw std::invalid_argument("mc_samples must be >= 1");
        }

        double p_s_w() const { return db_to_linear(p_s_db); }
        double p_r_w() const { return db_to_linear(p_r_db); }
        double noise_r_w() const { return db_to_linear(noise_r_db); }
        double noise_d_w() const { return db_to_linear(noise_d_db); }
        double pathloss_sr() const { return db_to_linear(pathloss_sr_db); }
        double pathloss_rd() const { return db_to_linear(pathloss_rd_db); }
    };

    // Average SNR at the relay, in the absence of self-interference.
    inline double snr_relay(const Scenario &s)
    {
        return s.p_s_w() / (s.pathloss_sr() * s.noise_r_w());
    }

    // Average SNR at the destination when the relay transmits p_tilde_w watts.
    inline double snr_dest(const Scenario &s, double p_tilde_w)
    {
        const double budget = s.p_r_w();
        if (!(p_tilde_w >= 0.0) || p_tilde_w > budget * (1.0 + power_budget_rel_tol))
            throw std::invalid_argument("snr_dest: relay power " + std::to_string(p_tilde_w) +
                                        " W outside [0, P_R = " + std::to_string(budget) + " W]");
        return p_tilde_w / (s.pathloss_rd() * s.noise_d_w());
    }

    // Residual self-interference power per receive antenna, in watts.
    inline double residual_self_interference(const SelfInterferenceModel &model, double p_tilde_w)
    {
        if (!(p_tilde_w > 0.0) || !std::isfinite(p_tilde_w))
            throw std::invalid_argument("residual_self_interference: relay power must be positive");
        return std::pow(p_tilde_w, 1.0 - model.lambda) / (model.beta() * std::pow(model.mu(), model.lambda));
    }

    // Average SINR at a full-duplex relay transmitting p_tilde_w watts. The
    // residual is treated as extra Gaussian noise at each receive antenna.
    inline double sinr_relay(const Scenario &s, double p_tilde_w)
    {
        const double interference = residual_self_interference(s.si, p_tilde_w);
        return s.p_s_w() / (s.pathloss_sr() * (interference + s.noise_r_w()));
    }
}

#endif
