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

#ifndef FDRELAY_FIGURES_HPP
#define FDRELAY_FIGURES_HPP

// Presets regenerating the data behind the rate figures (2, 3, 4) and the DoF
// figure (5). Figures 2-4 use
//   N_S = N_D = 1, N_R = 2, beta = 38 dB, mu = 13 dB,
//   sigma_R^2 = sigma_D^2 = -50 dB, K d^gamma = 50 dB on both hops,
// with the held-fixed power at 10 dB and the swept power on [-10, 30] dB.
// Figure 5 uses N_S = N_D = 4 and N_R = 2..16.

#include "csv.hpp"
#include "dof.hpp"
#include "full_duplex.hpp"
#include "half_duplex.hpp"
#include "sweep.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdrelay
{
    struct FigureOptions
    {
        std::size_t samples = MonteCarloConfig{}.n_samples;
        std::uint64_t seed = 0;
        unsigned threads = 1;
        bool plot_script = false;
    };

    struct NamedDataset
    {
        std::string filename;
        CsvDataset data;
    };

    inline constexpr double figure_sweep_from_db = -10.0;
    inline constexpr double figure_sweep_to_db = 30.0;
    inline constexpr double figure_sweep_step_db = 1.0;
    inline constexpr double figure_fixed_power_db = 10.0;
    inline constexpr double figure2_lambda = 0.2;
    inline constexpr int figure5_n = 4;
    inline constexpr int figure5_nr_from = 2;
    inline constexpr int figure5_nr_to = 16;

    // lambda grid for the multi-lambda figures, as exact fifths.
    inline std::vector<Rational> figure_lambda_grid()
    {
        std::vector<Rational> out;
        for (int k = 0; k <= 5; ++k)
            out.emplace_back(k, 5);
        return out;
    }

    inline std::string lambda_label(const Rational &lambda)
    {
        return format_number(to_double(lambda)) + (lambda.denominator() == 1 ? ".0" : "");
    }

    inline Scenario figure_rate_scenario(const FigureOptions &opt)
    {
        Scenario s;
        s.n_s = 1;
        s.n_r = 2;
        s.n_d = 1;
        s.p_s_db = figure_fixed_power_db;
        s.p_r_db = figure_fixed_power_db;
        s.noise_r_db = -50.0;
        s.noise_d_db = -50.0;
        s.pathloss_sr_db = 50.0;
        s.pathloss_rd_db = 50.0;
        s.si = {figure2_lambda, 38.0, 13.0};
        s.mc = {opt.samples, opt.seed};
        return s;
    }

    // Figure 2: antenna conserved, r = t = 1, versus P_R. The hop rates are at
    // full relay power; r_fd_nopc is their minimum and r_fd_pc adds power control.
    inline CsvDataset figure2_dataset(const FigureOptions &opt)
    {
        const Scenario base = figure_rate_scenario(opt);
        const CacheStore caches(base.mc);
        const SweepSpec spec{SweepAxis::PrDb, figure_sweep_from_db, figure_sweep_to_db, figure_sweep_step_db, {RelayMode::FdAc}};
        const std::vector<double> xs = spec.values();

        CsvDataset out;
        out.header = {"p_r_db", "r_sr_fd", "r_rd_fd", "r_fd_pc", "r_fd_nopc", "r_fd_pc_std_err", "p_tilde_w_pc"};
        std::vector<std::vector<CsvDataset::Cell>> rows(xs.size());
        detail::parallel_for(xs.size(), opt.threads, [&](std::size_t i)
                             {
            const Scenario s = with_axis_value(base, SweepAxis::PrDb, xs[i]);
            const LinkRates full = fd_link_rates(s, DuplexKind::AntennaConserved, 1, s.p_r_w(), caches);
            const FdOperatingPoint pc = optimize_fd(s, DuplexKind::AntennaConserved, caches);
            rows[i] = {xs[i], full.source_relay.mean_bits, full.relay_destination.mean_bits, pc.rate.mean_bits,
                       full.end_to_end().mean_bits, pc.rate.std_err, pc.p_tilde_w}; });
        for (auto &row : rows)
            out.add_row(std::move(row));
        return out;
    }

    // Figures 3 and 4: one dataset per lambda, HD and both FD accountings.
    inline std::vector<NamedDataset> figure_rate_sweeps(int id, const FigureOptions &opt)
    {
        const SweepAxis axis = id == 3 ? SweepAxis::PsDb : SweepAxis::PrDb;
        const SweepSpec spec{axis, figure_sweep_from_db, figure_sweep_to_db, figure_sweep_step_db,
                             {RelayMode::Hd, RelayMode::FdAc, RelayMode::FdRc}};
        std::vector<NamedDataset> out;
        for (const Rational &lambda : figure_lambda_grid())
        {
            Scenario s = figure_rate_scenario(opt);
            s.si.lambda = to_double(lambda);
            out.push_back({"fig" + std::to_string(id) + "_lambda_" + lambda_label(lambda) + ".csv",
                           run_sweep(s, spec, opt.threads)});
        }
        return out;
    }

    // Figure 5: DoF versus N_R for N_S = N_D = 4. The antenna-conserved closed
    // form is left empty at odd N_R, where it is undefined.
    inline CsvDataset figure5_dataset(const Rational &lambda)
    {
        CsvDataset out;
        out.header = {"n_r", "hd_closed", "hd_tau", "fd_ac_closed", "fd_rc_closed", "fd_ac_generic", "fd_ac_r",
                      "fd_ac_c", "fd_rc_generic", "fd_rc_r", "fd_rc_c"};
        const int n = figure5_n;
        for (int nr = figure5_nr_from; nr <= figure5_nr_to; ++nr)
        {
            const auto hd = dof_hd_closed<Rational>(n, nr, n);
            const auto ac = dof_fd_generic<Rational>(n, nr, n, lambda, DuplexKind::AntennaConserved);
            const auto rc = dof_fd_generic<Rational>(n, nr, n, lambda, DuplexKind::RfChainConserved);
            CsvDataset::Cell ac_closed;
            if (nr % 2 == 0)
                ac_closed = to_double(dof_fd_closed_ac<Rational>(n, nr, lambda));
            out.add_row({double(nr), to_double(hd.value), to_double(*hd.tau), ac_closed,
                         to_double(dof_fd_closed_rc<Rational>(n, nr, lambda)), to_double(ac.value), double(*ac.r),
                         to_double(*ac.c), to_double(rc.value), double(*rc.r), to_double(*rc.c)});
        }
        return out;
    }

    inline std::vector<NamedDataset> figure_datasets(int id, const FigureOptions &opt)
    {
        switch (id)
        {
        case 2:
            return {{"fig2.csv", figure2_dataset(opt)}};
        case 3:
        case 4:
            return figure_rate_sweeps(id, opt);
        case 5:
        {
            std::vector<NamedDataset> out;
            for (const Rational &lambda : figure_lambda_grid())
                out.push_back({"fig5_lambda_" + lambda_label(lambda) + ".csv", figure5_dataset(lambda)});
            return out;
        }
        default:
            throw std::invalid_argument("unknown figure id " + std::to_string(id) + " (expected 2, 3, 4 or 5)");
        }
    }

    // Minimal matplotlib script plotting every non-axis column of each dataset
    // against the first column.
    inline std::string plot_script(int id, const std::vector<NamedDataset> &sets)
    {
        std::string py = "# Plots the fig" + std::to_string(id) + " CSV files in this directory.\n"
                         "import csv\nimport matplotlib.pyplot as plt\n\n"
                         "for name in [\n";
        for (const auto &s : sets)
            py += "    \"" + s.filename + "\",\n";
        py += "]:\n"
              "    with open(name) as f:\n"
              "        rows = list(csv.DictReader(f))\n"
              "    axis = list(rows[0].keys())[0]\n"
              "    plt.figure()\n"
              "    for col in list(rows[0].keys())[1:]:\n"
              "        pts = [(float(r[axis]), float(r[col])) for r in rows if r[col] != \"\"]\n"
              "        plt.plot([p[0] for p in pts], [p[1] for p in pts], label=col)\n"
              "    plt.xlabel(axis)\n"
              "    plt.legend()\n"
              "    plt.title(name)\n"
              "    plt.savefig(name.replace(\".csv\", \".png\"))\n";
        return py;
    }

    inline std::vector<std::filesystem::path> reproduce_figure(int id, const std::filesystem::path &out_dir,
                                                               const FigureOptions &opt = {})
    {
        const std::vector<NamedDataset> sets = figure_datasets(id, opt);
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec)
            throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

        std::vector<std::filesystem::path> written;
        for (const auto &s : sets)
        {
            written.push_back(out_dir / s.filename);
            s.data.save(written.back());
        }
        if (opt.plot_script)
        {
            written.push_back(out_dir / ("plot_fig" + std::to_string(id) + ".py"));
            std::ofstream py(written.back(), std::ios::binary);
            if (!py)
                throw std::runtime_error("cannot write '" + written.back().string() + "'");
            py << plot_script(id, sets);
        }
        return written;
    }
}

#endif
