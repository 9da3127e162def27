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
// Experiment harness: JSON config parsing with full validation, seeded
// scatterer generation, scheme execution over sweep grids, CDF aggregation,
// and deterministic CSV emission.

#ifndef ADFOPT_HARNESS_HPP
#define ADFOPT_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "adfopt/baselines.hpp"
#include "adfopt/channel.hpp"
#include "adfopt/closedform.hpp"
#include "adfopt/errors.hpp"
#include "adfopt/geometry.hpp"
#include "adfopt/rate.hpp"
#include "adfopt/rng.hpp"
#include "adfopt/variational.hpp"

namespace adfopt
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

enum class SchemeKind
{
    Ula,
    ClosedForm,
    Variational,
    AntennaSelection,
    MonteCarlo
};

struct SchemeSpec
{
    SchemeKind kind;
    std::string label;
    std::optional<double> alpha; // closed-form; empty = expand over the alpha sweep
    OptimizerConfig optimizer;   // variational
    int grid_factor = 2;         // antenna selection: P_AS = grid_factor * M
};

struct ScattererSpec
{
    int count = 20;
    double radius = 3.0;
    double angle_min = M_PI / 6.0;
    double angle_max = 5.0 * M_PI / 6.0;
};

struct ExperimentConfig
{
    double carrier_frequency = 1.0e10;
    double wavelength = kSpeedOfLight / 1.0e10;
    double snr_db = 10.0;
    ChannelVariant variant = ChannelVariant::LoS;
    double rician_k_db = 10.0;
    ScattererSpec scatterers;
    int receive_count = 4;
    std::optional<double> receive_spacing; // default: lambda / 2
    double receive_theta = M_PI / 2.0;
    double receive_phi = 0.0;
    std::optional<double> transmit_spacing; // default: lambda / 2
    double transmit_theta = M_PI / 2.0;
    double transmit_phi = 0.0;
    std::vector<SchemeSpec> schemes;
    std::vector<int> m_values = {64};
    std::vector<double> z0_values = {3.0};
    std::vector<double> alpha_values;
    int trials = 0;
    std::uint64_t seed = 1;
    bool record_timing = false; // keeps default outputs byte-reproducible
    std::string output = "results.csv";

    double snr_linear() const { return std::pow(10.0, snr_db / 10.0); }
    double rician_k_linear() const { return std::pow(10.0, rician_k_db / 10.0); }
    double tx_spacing() const { return transmit_spacing.value_or(0.5 * wavelength); }
    double rx_spacing() const { return receive_spacing.value_or(0.5 * wavelength); }
};

struct ResultRecord
{
    std::string scheme;
    int m = 0;
    double z0 = 0.0;
    std::optional<double> alpha;
    int trial = 0;
    double rate_bits = 0.0;
    double wall_time_ms = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const ResultRecord &, const ResultRecord &) = default;
};

// --- configuration ---------------------------------------------------------

namespace detail
{

inline std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline void check_known_keys(const nlohmann::json &obj, const std::vector<std::string> &known, const std::string &where,
                             std::vector<std::string> &errors)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            errors.push_back(where + ": unknown key '" + it.key() + "'");
}

template <typename T>
inline std::optional<T> get_opt(const nlohmann::json &obj, const std::string &key, std::vector<std::string> &errors,
                                const std::string &where)
{
    if (!obj.contains(key))
        return std::nullopt;
    try
    {
        return obj.at(key).get<T>();
    }
    catch (const nlohmann::json::exception &)
    {
        errors.push_back(where + ": field '" + key + "' has the wrong type");
        return std::nullopt;
    }
}

} // namespace detail

// Parses and fully validates a JSON experiment configuration; throws
// config_error listing every problem found rather than only the first.
inline ExperimentConfig parse_config(const std::string &text)
{
    std::vector<std::string> errors;
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw config_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw config_error("config: top level must be an object");

    ExperimentConfig cfg;
    detail::check_known_keys(doc,
                             {"carrier_frequency_hz", "wavelength_m", "snr_db", "channel", "receive", "transmit", "schemes",
                              "sweep", "trials", "seed", "record_timing", "output"},
                             "config", errors);

    const auto fc = detail::get_opt<double>(doc, "carrier_frequency_hz", errors, "config");
    const auto lam = detail::get_opt<double>(doc, "wavelength_m", errors, "config");
    if (fc)
    {
        if (*fc <= 0.0)
            errors.push_back("config: carrier_frequency_hz must be positive");
        else
            cfg.carrier_frequency = *fc;
    }
    cfg.wavelength = kSpeedOfLight / cfg.carrier_frequency;
    if (lam)
    {
        if (*lam <= 0.0)
            errors.push_back("config: wavelength_m must be positive");
        else if (fc && std::abs(*lam - cfg.wavelength) > 1e-9 * cfg.wavelength)
            errors.push_back("config: wavelength_m inconsistent with carrier_frequency_hz (lambda = c / f_c)");
        else
        {
            cfg.wavelength = *lam;
            if (!fc)
                cfg.carrier_frequency = kSpeedOfLight / *lam;
        }
    }
    if (const auto v = detail::get_opt<double>(doc, "snr_db", errors, "config"))
        cfg.snr_db = *v;
    if (const auto v = detail::get_opt<int>(doc, "trials", errors, "config"))
    {
        if (*v < 0)
            errors.push_back("config: trials must be non-negative");
        else
            cfg.trials = *v;
    }
    if (const auto v = detail::get_opt<std::uint64_t>(doc, "seed", errors, "config"))
        cfg.seed = *v;
    if (const auto v = detail::get_opt<bool>(doc, "record_timing", errors, "config"))
        cfg.record_timing = *v;
    if (const auto v = detail::get_opt<std::string>(doc, "output", errors, "config"))
        cfg.output = *v;

    if (doc.contains("channel"))
    {
        const auto &ch = doc.at("channel");
        detail::check_known_keys(ch, {"variant", "rician_k_db", "scatterers"}, "config.channel", errors);
        const auto variant = detail::get_opt<std::string>(ch, "variant", errors, "config.channel");
        if (variant)
        {
            if (*variant == "los")
                cfg.variant = ChannelVariant::LoS;
            else if (*variant == "nlos")
                cfg.variant = ChannelVariant::NLoS;
            else if (*variant == "rician")
                cfg.variant = ChannelVariant::Rician;
            else
                errors.push_back("config.channel: variant must be one of los, nlos, rician");
        }
        if (const auto v = detail::get_opt<double>(ch, "rician_k_db", errors, "config.channel"))
            cfg.rician_k_db = *v;
        if (ch.contains("scatterers"))
        {
            const auto &sc = ch.at("scatterers");
            detail::check_known_keys(sc, {"count", "radius_m", "angle_min_rad", "angle_max_rad"}, "config.channel.scatterers",
                                     errors);
            if (const auto v = detail::get_opt<int>(sc, "count", errors, "config.channel.scatterers"))
            {
                if (*v < 1)
                    errors.push_back("config.channel.scatterers: count must be >= 1");
                else
                    cfg.scatterers.count = *v;
            }
            if (const auto v = detail::get_opt<double>(sc, "radius_m", errors, "config.channel.scatterers"))
            {
                if (*v <= 0.0)
                    errors.push_back("config.channel.scatterers: radius_m must be positive");
                else
                    cfg.scatterers.radius = *v;
            }
            if (const auto v = detail::get_opt<double>(sc, "angle_min_rad", errors, "config.channel.scatterers"))
                cfg.scatterers.angle_min = *v;
            if (const auto v = detail::get_opt<double>(sc, "angle_max_rad", errors, "config.channel.scatterers"))
                cfg.scatterers.angle_max = *v;
            if (cfg.scatterers.angle_max < cfg.scatterers.angle_min)
                errors.push_back("config.channel.scatterers: angle range is empty");
        }
    }

    if (doc.contains("receive"))
    {
        const auto &rx = doc.at("receive");
        detail::check_known_keys(rx, {"count", "spacing_m", "theta_rad", "phi_rad"}, "config.receive", errors);
        if (const auto v = detail::get_opt<int>(rx, "count", errors, "config.receive"))
        {
            if (*v < 1)
                errors.push_back("config.receive: count must be >= 1");
            else
                cfg.receive_count = *v;
        }
        if (const auto v = detail::get_opt<double>(rx, "spacing_m", errors, "config.receive"))
        {
            if (*v <= 0.0)
                errors.push_back("config.receive: spacing_m must be positive");
            else
                cfg.receive_spacing = *v;
        }
        if (const auto v = detail::get_opt<double>(rx, "theta_rad", errors, "config.receive"))
            cfg.receive_theta = *v;
        if (const auto v = detail::get_opt<double>(rx, "phi_rad", errors, "config.receive"))
            cfg.receive_phi = *v;
    }
    else if (!doc.contains("receive"))
    {
        // receive.count has a default; nothing to do
    }

    if (doc.contains("transmit"))
    {
        const auto &tx = doc.at("transmit");
        detail::check_known_keys(tx, {"spacing_m", "theta_rad", "phi_rad"}, "config.transmit", errors);
        if (const auto v = detail::get_opt<double>(tx, "spacing_m", errors, "config.transmit"))
        {
            if (*v <= 0.0)
                errors.push_back("config.transmit: spacing_m must be positive");
            else
                cfg.transmit_spacing = *v;
        }
        if (const auto v = detail::get_opt<double>(tx, "theta_rad", errors, "config.transmit"))
            cfg.transmit_theta = *v;
        if (const auto v = detail::get_opt<double>(tx, "phi_rad", errors, "config.transmit"))
            cfg.transmit_phi = *v;
    }

    if (doc.contains("sweep"))
    {
        const auto &sw = doc.at("sweep");
        detail::check_known_keys(sw, {"m_values", "z0_values", "alpha_values"}, "config.sweep", errors);
        if (const auto v = detail::get_opt<std::vector<int>>(sw, "m_values", errors, "config.sweep"))
        {
            if (v->empty())
                errors.push_back("config.sweep: m_values must not be empty");
            for (int m : *v)
                if (m < 2)
                    errors.push_back("config.sweep: m_values entries must be >= 2");
            cfg.m_values = *v;
        }
        if (const auto v = detail::get_opt<std::vector<double>>(sw, "z0_values", errors, "config.sweep"))
        {
            if (v->empty())
                errors.push_back("config.sweep: z0_values must not be empty");
            for (double z : *v)
                if (z <= 0.0)
                    errors.push_back("config.sweep: z0_values entries must be positive");
            cfg.z0_values = *v;
        }
        if (const auto v = detail::get_opt<std::vector<double>>(sw, "alpha_values", errors, "config.sweep"))
        {
            for (double a : *v)
                if (!(a > -0.5 && a <= 0.0))
                    errors.push_back("config.sweep: alpha_values entries must lie in (-0.5, 0]");
            cfg.alpha_values = *v;
        }
    }

    if (doc.contains("schemes"))
    {
        const auto &schemes = doc.at("schemes");
        if (!schemes.is_array() || schemes.empty())
            errors.push_back("config.schemes: must be a non-empty array");
        else
        {
            for (std::size_t i = 0; i < schemes.size(); ++i)
            {
                const auto &s = schemes[i];
                const std::string where = "config.schemes[" + std::to_string(i) + "]";
                detail::check_known_keys(s,
                                         {"name", "alpha", "max_iterations", "step_size", "stop_threshold", "grid_multiplier",
                                          "cap_density", "tangent_step", "grid_factor", "optimizer_snr"},
                                         where, errors);
                const auto name = detail::get_opt<std::string>(s, "name", errors, where);
                if (!name)
                {
                    errors.push_back(where + ": missing field 'name'");
                    continue;
                }
                SchemeSpec spec;
                spec.label = *name;
                if (*name == "ula")
                    spec.kind = SchemeKind::Ula;
                else if (*name == "closed-form")
                    spec.kind = SchemeKind::ClosedForm;
                else if (*name == "variational")
                    spec.kind = SchemeKind::Variational;
                else if (*name == "antenna-selection")
                    spec.kind = SchemeKind::AntennaSelection;
                else if (*name == "monte-carlo")
                    spec.kind = SchemeKind::MonteCarlo;
                else
                {
                    errors.push_back(where + ": unknown scheme '" + *name + "'");
                    continue;
                }
                if (const auto v = detail::get_opt<double>(s, "alpha", errors, where))
                {
                    if (!(*v > -0.5 && *v <= 0.0))
                        errors.push_back(where + ": alpha must lie in (-0.5, 0]");
                    else
                    {
                        spec.alpha = *v;
                        spec.label = *name + "(alpha=" + detail::format_double(*v) + ")";
                    }
                }
                if (const auto v = detail::get_opt<int>(s, "max_iterations", errors, where))
                    spec.optimizer.max_iterations = *v;
                if (const auto v = detail::get_opt<double>(s, "step_size", errors, where))
                    spec.optimizer.step_size = *v;
                if (const auto v = detail::get_opt<double>(s, "stop_threshold", errors, where))
                    spec.optimizer.stop_threshold = *v;
                if (const auto v = detail::get_opt<int>(s, "grid_multiplier", errors, where))
                    spec.optimizer.grid_multiplier = *v;
                if (const auto v = detail::get_opt<bool>(s, "cap_density", errors, where))
                    spec.optimizer.cap_density = *v;
                if (const auto v = detail::get_opt<bool>(s, "tangent_step", errors, where))
                    spec.optimizer.tangent_step = *v;
                if (const auto v = detail::get_opt<int>(s, "grid_factor", errors, where))
                {
                    if (*v < 1)
                        errors.push_back(where + ": grid_factor must be >= 1");
                    else
                        spec.grid_factor = *v;
                }
                cfg.schemes.push_back(std::move(spec));
            }
        }
    }
    else
    {
        errors.push_back("config: missing field 'schemes'");
    }

    for (const SchemeSpec &s : cfg.schemes)
        if (s.kind == SchemeKind::ClosedForm && !s.alpha && cfg.alpha_values.empty())
            errors.push_back("config: closed-form scheme without alpha requires sweep.alpha_values");

    if (!errors.empty())
    {
        std::string msg = "config validation failed:";
        for (const std::string &e : errors)
            msg += "\n  - " + e;
        throw config_error(msg);
    }
    return cfg;
}

// L scatterers on the circular arc of the given radius in the x-z plane,
// angles i.i.d. uniform in [angle_min, angle_max]; deterministic per
// (seed, stream).
inline std::vector<Scatterer> scatterer_arc(int count, double radius, double angle_min, double angle_max,
                                            std::uint64_t seed, std::uint64_t stream = 0)
{
    if (count < 1)
        throw std::invalid_argument("scatterer_arc: count must be >= 1");
    PhiloxRng rng(seed, stream);
    std::vector<Scatterer> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int l = 0; l < count; ++l)
    {
        const double psi = rng.uniform(angle_min, angle_max);
        out.push_back(Scatterer{Vec3(radius * std::cos(psi), 0.0, radius * std::sin(psi))});
    }
    return out;
}

namespace detail
{

inline ChannelScenario scenario_for_trial(const ExperimentConfig &cfg, int trial)
{
    switch (cfg.variant)
    {
    case ChannelVariant::LoS:
        return ChannelScenario::los(cfg.wavelength);
    case ChannelVariant::NLoS:
        return ChannelScenario::nlos(cfg.wavelength,
                                     scatterer_arc(cfg.scatterers.count, cfg.scatterers.radius, cfg.scatterers.angle_min,
                                                   cfg.scatterers.angle_max, cfg.seed, static_cast<std::uint64_t>(trial)),
                                     Normalization::CentroidNormalized);
    case ChannelVariant::Rician:
    default:
        return ChannelScenario::rician(cfg.wavelength, cfg.rician_k_linear(),
                                       scatterer_arc(cfg.scatterers.count, cfg.scatterers.radius, cfg.scatterers.angle_min,
                                                     cfg.scatterers.angle_max, cfg.seed, static_cast<std::uint64_t>(trial)),
                                       Normalization::CentroidNormalized);
    }
}

inline Placement scheme_placement(const SchemeSpec &scheme, std::optional<double> alpha, const TransmitArray &tx,
                                  const ReceiveArray &rx, const ChannelScenario &scenario, const ExperimentConfig &cfg,
                                  int trial)
{
    switch (scheme.kind)
    {
    case SchemeKind::Ula:
        return ula_placement(tx.count);
    case SchemeKind::ClosedForm:
        return closed_form_placement(alpha.value(), tx.count);
    case SchemeKind::Variational:
    {
        OptimizerConfig oc = scheme.optimizer;
        oc.snr = cfg.snr_linear();
        const OptimizerTrace trace = optimize_adf(oc, tx, rx, scenario);
        return discretize_adf(trace.adf(), tx.count);
    }
    case SchemeKind::AntennaSelection:
        return antenna_selection_greedy(tx, rx, scenario, scheme.grid_factor * tx.count, cfg.snr_linear());
    case SchemeKind::MonteCarlo:
    default:
        return random_placement(tx.count, cfg.seed, static_cast<std::uint64_t>(trial) + (1ull << 32));
    }
}

} // namespace detail

// Executes every scheme at every sweep point and trial; one record per
// (scheme instance, M, z0, trial), rates from the discrete placement. With
// timing disabled (the default) the output is a pure function of the config.
inline std::vector<ResultRecord> run_scenario(const ExperimentConfig &cfg, int threads = 1)
{
    struct Task
    {
        const SchemeSpec *scheme;
        std::optional<double> alpha;
        int m;
        double z0;
        int trial;
    };
    std::vector<Task> tasks;
    const int trial_count = std::max(cfg.trials, 1);
    for (const SchemeSpec &scheme : cfg.schemes)
    {
        std::vector<std::optional<double>> alphas;
        if (scheme.kind == SchemeKind::ClosedForm && !scheme.alpha)
            for (double a : cfg.alpha_values)
                alphas.emplace_back(a);
        else
            alphas.push_back(scheme.alpha);
        for (const auto &alpha : alphas)
            for (int m : cfg.m_values)
                for (double z0 : cfg.z0_values)
                    for (int trial = 0; trial < trial_count; ++trial)
                        tasks.push_back(Task{&scheme, alpha, m, z0, trial});
    }

    std::vector<ResultRecord> records(tasks.size());
    auto run_task = [&](std::size_t idx) {
        const Task &task = tasks[idx];
        const TransmitArray tx(task.m, cfg.tx_spacing(), cfg.transmit_theta, cfg.transmit_phi);
        const ReceiveArray rx(cfg.receive_count, cfg.rx_spacing(), cfg.receive_theta, cfg.receive_phi, task.z0);
        const ChannelScenario scenario = detail::scenario_for_trial(cfg, task.trial);
        const auto t0 = std::chrono::steady_clock::now();
        const Placement placement = detail::scheme_placement(*task.scheme, task.alpha, tx, rx, scenario, cfg, task.trial);
        const double rate = achievable_rate_discrete(channel_matrix(placement, tx, rx, scenario), cfg.snr_linear());
        const auto t1 = std::chrono::steady_clock::now();
        ResultRecord rec;
        rec.scheme = task.scheme->label;
        if (task.scheme->kind == SchemeKind::ClosedForm && !task.scheme->alpha && task.alpha)
            rec.scheme += "(alpha=" + detail::format_double(*task.alpha) + ")";
        rec.m = task.m;
        rec.z0 = task.z0;
        rec.alpha = task.scheme->kind == SchemeKind::ClosedForm ? task.alpha : std::nullopt;
        rec.trial = task.trial;
        rec.rate_bits = rate;
        rec.wall_time_ms = cfg.record_timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
        rec.seed = cfg.seed;
        records[idx] = std::move(rec);
    };

    if (threads <= 1)
    {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            run_task(i);
    }
    else
    {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mtx;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;)
                {
                    std::size_t idx;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (next >= tasks.size())
                            return;
                        idx = next++;
                    }
                    run_task(idx);
                }
            });
        for (auto &th : pool)
            th.join();
    }

    std::sort(records.begin(), records.end(), [](const ResultRecord &a, const ResultRecord &b) {
        const double aa = a.alpha.value_or(-10.0), bb = b.alpha.value_or(-10.0);
        return std::tie(a.scheme, a.m, a.z0, aa, a.trial) < std::tie(b.scheme, b.m, b.z0, bb, b.trial);
    });
    return records;
}

// Empirical CDF per scheme: sorted (rate, fraction <= rate) steps.
struct CdfTable
{
    std::map<std::string, std::vector<std::pair<double, double>>> by_scheme;

    double median(const std::string &scheme) const
    {
        const auto it = by_scheme.find(scheme);
        if (it == by_scheme.end() || it->second.empty())
            throw std::invalid_argument("CdfTable: unknown scheme '" + scheme + "'");
        const auto &steps = it->second;
        for (const auto &[rate, frac] : steps)
            if (frac >= 0.5)
                return rate;
        return steps.back().first;
    }
};

inline CdfTable aggregate_cdf(const std::vector<ResultRecord> &records)
{
    std::map<std::string, std::vector<double>> rates;
    for (const ResultRecord &r : records)
        rates[r.scheme].push_back(r.rate_bits);
    CdfTable table;
    for (auto &[scheme, values] : rates)
    {
        if (values.empty())
            throw std::invalid_argument("aggregate_cdf: empty group");
        std::sort(values.begin(), values.end());
        std::vector<std::pair<double, double>> steps;
        steps.reserve(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            steps.emplace_back(values[i], static_cast<double>(i + 1) / static_cast<double>(values.size()));
        table.by_scheme[scheme] = std::move(steps);
    }
    return table;
}

// --- CSV ---------------------------------------------------------------

inline std::string records_to_csv(const std::vector<ResultRecord> &records)
{
    std::string out = "scheme,M,z0,alpha,trial,rate_bits,wall_time_ms,seed\n";
    for (const ResultRecord &r : records)
    {
        out += r.scheme;
        out += ',';
        out += std::to_string(r.m);
        out += ',';
        out += detail::format_double(r.z0);
        out += ',';
        if (r.alpha)
            out += detail::format_double(*r.alpha);
        out += ',';
        out += std::to_string(r.trial);
        out += ',';
        out += detail::format_double(r.rate_bits);
        out += ',';
        out += detail::format_double(r.wall_time_ms);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

inline void emit_records(const std::vector<ResultRecord> &records, const std::string &path)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("emit_records: cannot open '" + path + "' for writing");
    file << records_to_csv(records);
    if (!file)
        throw std::runtime_error("emit_records: write failed for '" + path + "'");
}

inline std::vector<ResultRecord> parse_records(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "scheme,M,z0,alpha,trial,rate_bits,wall_time_ms,seed")
        throw std::runtime_error("parse_records: missing or wrong header");
    std::vector<ResultRecord> out;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == ',')
            {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        if (fields.size() != 8)
            throw std::runtime_error("parse_records: malformed row '" + line + "'");
        ResultRecord r;
        r.scheme = fields[0];
        r.m = std::stoi(fields[1]);
        r.z0 = std::stod(fields[2]);
        if (!fields[3].empty())
            r.alpha = std::stod(fields[3]);
        r.trial = std::stoi(fields[4]);
        r.rate_bits = std::stod(fields[5]);
        r.wall_time_ms = std::stod(fields[6]);
        r.seed = std::stoull(fields[7]);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace adfopt

#endif
