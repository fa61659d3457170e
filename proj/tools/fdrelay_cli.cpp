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

// fdrelay command line: rate, sweep, dof, figure.
// Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure.

#include "fdrelay/fdrelay.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_config_error = 2;
    constexpr int exit_numerical_failure = 3;

    std::string rate_fields(const char *prefix, const fdrelay::RateEstimate &r)
    {
        return std::string(" ") + prefix + "=" + fdrelay::format_number(r.mean_bits) + " " + prefix +
               "_std_err=" + fdrelay::format_number(r.std_err);
    }

    void print_rate(const fdrelay::Scenario &s, fdrelay::RelayMode mode, unsigned threads)
    {
        using namespace fdrelay;
        const CacheStore caches(s.mc, threads);
        std::string line = "mode=" + std::string(to_string(mode));
        if (mode == RelayMode::Hd)
        {
            const HdOperatingPoint hd = optimize_tau(s, caches);
            line += " rate_bits=" + format_number(hd.rate.mean_bits) + " std_err=" + format_number(hd.rate.std_err) +
                    " n_samples=" + std::to_string(hd.rate.n_samples) + " tau=" + format_number(hd.tau) +
                    rate_fields("r_sr", hd.r_sr) + rate_fields("r_rd", hd.r_rd);
        }
        else
        {
            const FdOperatingPoint fd = optimize_fd(s, duplex_kind(mode), caches);
            line += " rate_bits=" + format_number(fd.rate.mean_bits) + " std_err=" + format_number(fd.rate.std_err) +
                    " n_samples=" + std::to_string(fd.rate.n_samples) + " r=" + std::to_string(fd.r) +
                    " t=" + std::to_string(fd.t) + " p_tilde_w=" + format_number(fd.p_tilde_w) +
                    rate_fields("r_sr", fd.r_sr) + rate_fields("r_rd", fd.r_rd);
        }
        std::cout << line << '\n';
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Achievable rates and degrees of freedom of half- and full-duplex MIMO decode-and-forward relaying"};
    app.require_subcommand(1);

    unsigned threads = 1;

    // rate
    auto *rate = app.add_subcommand("rate", "Optimized end-to-end rate for one scenario");
    std::string rate_config;
    std::string rate_mode = "hd";
    rate->add_option("--config", rate_config, "Scenario file")->required();
    rate->add_option("--mode", rate_mode, "hd | fd-ac | fd-rc")->check(CLI::IsMember({"hd", "fd-ac", "fd-rc", "fd_ac", "fd_rc"}));
    rate->add_option("--threads", threads, "Worker threads for cache construction");

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Sweep one parameter and write a CSV");
    std::string sweep_config, sweep_axis, sweep_out;
    double sweep_from = 0, sweep_to = 0, sweep_step = 1;
    std::vector<std::string> sweep_modes{"hd"};
    sweep->add_option("--config", sweep_config, "Scenario file")->required();
    sweep->add_option("--axis", sweep_axis, "p_s_db | p_r_db | lambda | n_r")->required();
    sweep->add_option("--from", sweep_from)->required();
    sweep->add_option("--to", sweep_to)->required();
    sweep->add_option("--step", sweep_step)->required();
    sweep->add_option("--modes", sweep_modes, "Comma separated subset of hd,fd-ac,fd-rc")->delimiter(',');
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();
    sweep->add_option("--threads", threads, "Worker threads across sweep points");

    // dof
    auto *dof = app.add_subcommand("dof", "Degrees of freedom");
    fdrelay::DofQuery query;
    std::string dof_lambda = "0", dof_scenario = "hd", dof_solver = "closed";
    dof->add_option("--ns", query.n_s)->required();
    dof->add_option("--nr", query.n_r)->required();
    dof->add_option("--nd", query.n_d)->required();
    dof->add_option("--lambda", dof_lambda, "Exact decimal or fraction, e.g. 0.2 or 1/4");
    dof->add_option("--scenario", dof_scenario, "hd | ac | rc");
    dof->add_option("--solver", dof_solver, "closed | generic | both");

    // figure
    auto *figure = app.add_subcommand("figure", "Regenerate the data of a figure preset");
    int figure_id = 0;
    std::string figure_out;
    fdrelay::FigureOptions fig_opt;
    figure->add_option("--id", figure_id, "2 | 3 | 4 | 5")->required();
    figure->add_option("--out", figure_out, "Output directory")->required();
    figure->add_option("--samples", fig_opt.samples, "Monte Carlo samples per channel shape");
    figure->add_option("--seed", fig_opt.seed, "Monte Carlo seed");
    figure->add_option("--threads", threads, "Worker threads across sweep points");
    figure->add_flag("--plot-script", fig_opt.plot_script, "Also write a matplotlib script for the CSV files");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config_error;
    }

    try
    {
        if (*rate)
            print_rate(fdrelay::parse_config(rate_config), fdrelay::parse_mode(rate_mode), threads);
        else if (*sweep)
        {
            const fdrelay::Scenario s = fdrelay::parse_config(sweep_config);
            fdrelay::SweepSpec spec{fdrelay::parse_axis(sweep_axis), sweep_from, sweep_to, sweep_step, {}};
            for (const auto &m : sweep_modes)
                spec.modes.push_back(fdrelay::parse_mode(m));
            fdrelay::run_sweep(s, spec, threads).save(sweep_out);
        }
        else if (*dof)
        {
            query.lambda = fdrelay::parse_rational(dof_lambda);
            query.scenario = fdrelay::parse_dof_scenario(dof_scenario);
            query.solver = fdrelay::parse_dof_solver(dof_solver);
            const fdrelay::DofReport rep = fdrelay::dof_command(query);
            std::cout << rep.text() << rep.machine_line();
        }
        else if (*figure)
        {
            fig_opt.threads = threads;
            for (const auto &p : fdrelay::reproduce_figure(figure_id, figure_out, fig_opt))
                std::cout << p.string() << '\n';
        }
    }
    catch (const fdrelay::NumericalFailure &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical_failure;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
    return 0;
}
