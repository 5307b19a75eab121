// SPDX-License-Identifier: Apache-2.0
//
// squintlib - beam squint simulation for mutually coupled wideband arrays
// Copyright (C) 2026 squintlib contributors
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
//
// squintsim: command line front end. Subcommands produce CSV sweep data for
// the four reference experiments, run user-defined sweeps, or execute the
// structural invariant suite.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 numerical error,
// 4 validation failure.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "squintlib/errors.hpp"
#include "squintlib/experiments.hpp"
#include "squintlib/parallel.hpp"
#include "squintlib/version.hpp"

namespace
{

struct CliArgs
{
    std::string config;
    std::string out;
    int points = 0;
    int threads = 0;
    bool db = false;
};

void add_common_options(CLI::App *sub, CliArgs &args, bool sweep_output)
{
    sub->add_option("--config", args.config, "scenario config file (flat dotted keys)");
    sub->add_option("--threads", args.threads,
                    "worker threads (default: SQUINTSIM_THREADS env var, else hardware)");
    if (sweep_output)
    {
        sub->add_option("--out", args.out, "output CSV path (default: <subcommand>.csv)");
        sub->add_option("--points", args.points, "override the number of sweep points");
        sub->add_flag("--db", args.db, "append derived dB columns for SNR-valued columns");
    }
}

squint::RunOptions make_options(const CliArgs &args)
{
    squint::RunOptions opts;
    opts.threads = squint::resolve_thread_count(args.threads);
    opts.db = args.db;
    return opts;
}

int run_figure(const std::string &name, const CliArgs &args)
{
    squint::ScenarioConfig cfg = args.config.empty() ? squint::default_figure_scenario(name)
                                                     : squint::load_scenario(args.config);
    if (args.points > 0)
        cfg.sweep.points = args.points;

    squint::SweepResult result;
    if (name == "fig1a")
        result = squint::run_fig1a(cfg, make_options(args));
    else if (name == "fig1b")
        result = squint::run_fig1b(cfg, make_options(args));
    else if (name == "fig2")
        result = squint::run_fig2(cfg, make_options(args));
    else
        result = squint::run_fig3(cfg, make_options(args));

    std::string out = args.out.empty() ? name + ".csv" : args.out;
    squint::emit_csv(result, out);
    std::cout << "wrote " << out << " (" << result.rows.size() << " rows)\n";
    return 0;
}

int run_generic_sweep(const CliArgs &args)
{
    squint::ScenarioConfig cfg = args.config.empty()
                                     ? squint::default_scenario(squint::CouplingMode::tight_default)
                                     : squint::load_scenario(args.config);
    if (args.points > 0)
        cfg.sweep.points = args.points;

    squint::SweepResult result = squint::run_sweep(cfg, make_options(args));
    std::string out = args.out.empty() ? std::string("sweep.csv") : args.out;
    squint::emit_csv(result, out);
    std::cout << "wrote " << out << " (" << result.rows.size() << " rows)\n";
    return 0;
}

int run_validate(const CliArgs &args)
{
    squint::ScenarioConfig cfg = args.config.empty()
                                     ? squint::default_scenario(squint::CouplingMode::weak_unity)
                                     : squint::load_scenario(args.config);
    squint::ValidationReport report = squint::validate_scenario(cfg, make_options(args));
    std::cout << squint::format_report(report);
    return report.all_pass() ? 0 : 4;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"beam squint simulator for mutually coupled wideband arrays"};
    app.set_version_flag("--version", std::string("squintsim ") + squint::version);
    app.require_subcommand(1);

    CliArgs args;
    add_common_options(
        app.add_subcommand("fig1a", "instantaneous SNR vs frequency, uncoupled reference array"),
        args, true);
    add_common_options(
        app.add_subcommand("fig1b", "average SNR vs bandwidth with closed forms, uncoupled array"),
        args, true);
    add_common_options(
        app.add_subcommand("fig2", "instantaneous SNR vs frequency, tightly coupled array"), args,
        true);
    add_common_options(
        app.add_subcommand("fig3", "squint loss vs bandwidth for both arrays at several angles"),
        args, true);
    add_common_options(app.add_subcommand("sweep", "generic sweep driven by the config file"),
                       args, true);
    add_common_options(app.add_subcommand("validate", "run the structural invariant suite"), args,
                       false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        for (const char *name : {"fig1a", "fig1b", "fig2", "fig3"})
            if (app.got_subcommand(name))
                return run_figure(name, args);
        if (app.got_subcommand("sweep"))
            return run_generic_sweep(args);
        return run_validate(args);
    }
    catch (const squint::numerical_error &e)
    {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    catch (const squint::config_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const squint::domain_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
