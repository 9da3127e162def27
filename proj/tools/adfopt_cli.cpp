// SPDX-License-Identifier: Apache-2.0
//
// adfopt: antenna density functions for near-field movable-antenna arrays
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
// Command-line driver. Subcommands:
//   optimize     variational gradient ascent; trace CSV (iteration,rate,delta_norm)
//   closed-form  closed-form density and positions for a given alpha
//   evaluate     rate of a placement read from CSV
//   sweep        rate grids over M / z0 / alpha
//   montecarlo   CDF experiment over seeded trials
//   asymptotics  exact vs Fisher-Hartwig log-determinants
//   curve        flexible-array geometry and equal-arc placement
//
// CSV conventions: placements are (index,p); curves are (index,x,y);
// densities are (index,p,w); experiment records follow the harness header
// "scheme,M,z0,alpha,trial,rate_bits,wall_time_ms,seed".

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "adfopt/adfopt.hpp"

namespace
{

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

std::string fmt(double v) { return adfopt::detail::format_double(v); }

adfopt::ExperimentConfig load_config(const std::string &path, std::optional<std::uint64_t> seed_override)
{
    adfopt::ExperimentConfig cfg = adfopt::parse_config(slurp(path));
    if (seed_override)
        cfg.seed = *seed_override;
    return cfg;
}

std::string placement_csv(const adfopt::Placement &placement)
{
    std::string out = "index,p\n";
    for (int m = 0; m < placement.size(); ++m)
        out += std::to_string(m + 1) + "," + fmt(placement.positions()[static_cast<std::size_t>(m)]) + "\n";
    return out;
}

std::string density_csv(const adfopt::SampledFunction &w)
{
    std::string out = "index,p,w\n";
    for (int j = 0; j < w.grid_size(); ++j)
        out += std::to_string(j) + "," + fmt(w.grid_point(j)) + "," + fmt(w.values()[static_cast<std::size_t>(j)]) + "\n";
    return out;
}

adfopt::Placement read_placement_csv(const std::string &path)
{
    std::istringstream in(slurp(path));
    std::string line;
    if (!std::getline(in, line) || line != "index,p")
        throw std::runtime_error("placement CSV must start with header 'index,p'");
    std::vector<double> pos;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed placement row '" + line + "'");
        pos.push_back(std::stod(line.substr(comma + 1)));
    }
    const bool pinned = !pos.empty() && pos.front() == -1.0 && pos.back() == 1.0;
    return adfopt::Placement(std::move(pos), pinned);
}

std::string default_out(const std::string &given, const std::string &fallback) { return given.empty() ? fallback : given; }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"near-field movable-antenna placement via antenna density functions"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    app.add_option("--config", config_path, "experiment configuration (JSON)");
    app.add_option("--seed", seed, "override the config seed");
    app.add_option("--out", out_path, "output path");
    app.add_option("--threads", threads, "worker threads for sweeps and trials")->check(CLI::PositiveNumber);

    auto *cmd_optimize = app.add_subcommand("optimize", "run the variational gradient ascent and emit its trace");
    std::string adf_out;
    cmd_optimize->add_option("--adf-out", adf_out, "also write the optimized density samples");

    auto *cmd_closed = app.add_subcommand("closed-form", "closed-form density and positions");
    double cf_alpha = -0.25;
    int cf_m = 16;
    int cf_grid = 0;
    std::string cf_positions_out;
    cmd_closed->add_option("--alpha", cf_alpha, "singularity order in (-0.5, 0]");
    cmd_closed->add_option("--m", cf_m, "antenna count")->check(CLI::Range(2, 1 << 20));
    cmd_closed->add_option("--grid", cf_grid, "density sample count (default 8M+1)");
    cmd_closed->add_option("--positions-out", cf_positions_out, "positions CSV path");

    auto *cmd_evaluate = app.add_subcommand("evaluate", "achievable rate of a placement CSV");
    std::string placement_path;
    cmd_evaluate->add_option("--placement", placement_path, "placement CSV (index,p)")->required();

    auto *cmd_sweep = app.add_subcommand("sweep", "rate records over the configured M/z0/alpha grids");
    auto *cmd_mc = app.add_subcommand("montecarlo", "seeded trial experiment with CDF output");
    std::string cdf_out;
    cmd_mc->add_option("--cdf-out", cdf_out, "CDF CSV path (default <out>.cdf.csv)");

    auto *cmd_asy = app.add_subcommand("asymptotics", "exact vs Fisher-Hartwig Toeplitz log-determinants");
    double asy_alpha = -0.25;
    std::vector<int> asy_orders = {8, 16, 32, 64};
    cmd_asy->add_option("--alpha", asy_alpha, "singularity order in (-0.5, 0)");
    cmd_asy->add_option("--orders", asy_orders, "matrix orders N");

    auto *cmd_curve = app.add_subcommand("curve", "flexible-array curve and equal-arc antenna placement");
    double cv_alpha = -0.25, cv_radius = 1.0;
    int cv_m = 16, cv_samples = 801;
    std::string cv_positions_out;
    cmd_curve->add_option("--alpha", cv_alpha, "singularity order in (-0.5, 0]");
    cmd_curve->add_option("--radius", cv_radius, "half aperture R")->check(CLI::PositiveNumber);
    cmd_curve->add_option("--m", cv_m, "antenna count")->check(CLI::Range(2, 1 << 20));
    cmd_curve->add_option("--samples", cv_samples, "curve sample count");
    cmd_curve->add_option("--positions-out", cv_positions_out, "antenna (x,y) CSV path");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (cmd_optimize->parsed())
        {
            const adfopt::ExperimentConfig cfg = load_config(config_path, seed);
            const adfopt::SchemeSpec *vs = nullptr;
            for (const auto &s : cfg.schemes)
                if (s.kind == adfopt::SchemeKind::Variational)
                    vs = &s;
            if (!vs)
                throw std::runtime_error("optimize: config has no variational scheme");
            adfopt::OptimizerConfig oc = vs->optimizer;
            oc.snr = cfg.snr_linear();
            const adfopt::TransmitArray tx(cfg.m_values.front(), cfg.tx_spacing(), cfg.transmit_theta, cfg.transmit_phi);
            const adfopt::ReceiveArray rx(cfg.receive_count, cfg.rx_spacing(), cfg.receive_theta, cfg.receive_phi,
                                          cfg.z0_values.front());
            const adfopt::ChannelScenario scenario = adfopt::detail::scenario_for_trial(cfg, 0);
            const adfopt::OptimizerTrace trace = adfopt::optimize_adf(oc, tx, rx, scenario);
            std::string csv = "iteration,rate,delta_norm\n";
            for (std::size_t i = 0; i < trace.rates.size(); ++i)
                csv += std::to_string(i) + "," + fmt(trace.rates[i]) + "," + fmt(i == 0 ? 0.0 : trace.deltas[i - 1]) + "\n";
            write_file(default_out(out_path, "optimize_trace.csv"), csv);
            if (!adf_out.empty())
                write_file(adf_out, density_csv(trace.adf()));
            std::cout << "best rate functional: " << fmt(trace.best_rate) << " bits ("
                      << (trace.converged ? "converged" : "iteration limit") << ", " << trace.iterations << " iterations)\n";
        }
        else if (cmd_closed->parsed())
        {
            const int grid = cf_grid > 0 ? cf_grid : 8 * cf_m + 1;
            adfopt::SampledFunction w = cf_alpha == 0.0
                                            ? adfopt::SampledFunction::constant(0.5 * (cf_m - 1), grid)
                                            : adfopt::simplified_adf(cf_alpha, cf_m, grid);
            write_file(default_out(out_path, "closed_form_adf.csv"), density_csv(w));
            const adfopt::Placement placement = adfopt::closed_form_placement(cf_alpha, cf_m);
            write_file(default_out(cf_positions_out, "closed_form_positions.csv"), placement_csv(placement));
        }
        else if (cmd_evaluate->parsed())
        {
            const adfopt::ExperimentConfig cfg = load_config(config_path, seed);
            const adfopt::Placement placement = read_placement_csv(placement_path);
            const adfopt::TransmitArray tx(placement.size(), cfg.tx_spacing(), cfg.transmit_theta, cfg.transmit_phi);
            const adfopt::ReceiveArray rx(cfg.receive_count, cfg.rx_spacing(), cfg.receive_theta, cfg.receive_phi,
                                          cfg.z0_values.front());
            const adfopt::ChannelScenario scenario = adfopt::detail::scenario_for_trial(cfg, 0);
            const double rate =
                adfopt::achievable_rate_discrete(adfopt::channel_matrix(placement, tx, rx, scenario), cfg.snr_linear());
            std::cout << fmt(rate) << "\n";
        }
        else if (cmd_sweep->parsed() || cmd_mc->parsed())
        {
            const adfopt::ExperimentConfig cfg = load_config(config_path, seed);
            const auto records = adfopt::run_scenario(cfg, threads);
            const std::string path = default_out(out_path, cfg.output);
            adfopt::emit_records(records, path);
            std::cout << records.size() << " records -> " << path << "\n";
            if (cmd_mc->parsed())
            {
                const adfopt::CdfTable cdf = adfopt::aggregate_cdf(records);
                std::string csv = "scheme,rate_bits,fraction\n";
                for (const auto &[scheme, steps] : cdf.by_scheme)
                    for (const auto &[rate, frac] : steps)
                        csv += scheme + "," + fmt(rate) + "," + fmt(frac) + "\n";
                write_file(default_out(cdf_out, path + ".cdf.csv"), csv);
            }
        }
        else if (cmd_asy->parsed())
        {
            const adfopt::ExperimentConfig cfg = config_path.empty() ? adfopt::ExperimentConfig{} : load_config(config_path, seed);
            const adfopt::TransmitArray tx(cfg.m_values.front(), cfg.tx_spacing(), cfg.transmit_theta, cfg.transmit_phi);
            const adfopt::ReceiveArray rx(cfg.receive_count, cfg.rx_spacing(), cfg.receive_theta, cfg.receive_phi,
                                          cfg.z0_values.front());
            const adfopt::NearFieldFactors factors = adfopt::nearfield_factors(tx, rx, cfg.wavelength, cfg.snr_linear());
            const double level = adfopt::detail::matched_symbol_level(factors, tx.count);
            const int max_order = *std::max_element(asy_orders.begin(), asy_orders.end());
            std::vector<double> coeffs(static_cast<std::size_t>(max_order));
            for (int k = 0; k < max_order; ++k)
                coeffs[static_cast<std::size_t>(k)] = adfopt::fh_symbol_coeff(level, asy_alpha, factors.beta, k);
            const adfopt::GeneratingFunction gf = adfopt::GeneratingFunction::with_constant_smooth(
                level, {adfopt::Singularity(-factors.beta, asy_alpha), adfopt::Singularity(factors.beta, asy_alpha)},
                factors.beta);
            std::string csv = "N,exact_logdet,fh_logdet,abs_error\n";
            for (int n : asy_orders)
            {
                const double exact = adfopt::toeplitz_logdet(coeffs, n);
                const double fh = adfopt::fh_log_det(gf, n);
                csv += std::to_string(n) + "," + fmt(exact) + "," + fmt(fh) + "," + fmt(std::abs(fh - exact)) + "\n";
            }
            const std::string path = default_out(out_path, "asymptotics.csv");
            write_file(path, csv);
            std::cout << csv;
        }
        else if (cmd_curve->parsed())
        {
            const adfopt::FlexibleCurve curve = adfopt::flexible_curve(cv_alpha, cv_radius, cv_samples);
            std::string csv = "index,x,y\n";
            for (std::size_t j = 0; j < curve.xs.size(); ++j)
                csv += std::to_string(j) + "," + fmt(curve.xs[j]) + "," + fmt(curve.ys[j]) + "\n";
            write_file(default_out(out_path, "curve.csv"), csv);
            const auto points = adfopt::place_on_curve(curve, cv_m);
            std::string pcsv = "index,x,y\n";
            for (std::size_t m = 0; m < points.size(); ++m)
                pcsv += std::to_string(m + 1) + "," + fmt(points[m].first) + "," + fmt(points[m].second) + "\n";
            write_file(default_out(cv_positions_out, "curve_positions.csv"), pcsv);
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
