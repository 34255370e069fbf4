// Copyright 2026 The cvml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

namespace cvml::app {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kThetaFloor = -1e-9;

std::vector<std::string> with_comments(std::vector<std::string> head, const ScenarioConfig &cfg) {
    for (auto &c : parameter_comments(cfg))
        head.push_back(std::move(c));
    return head;
}

using RowFn = std::function<std::vector<double>(double)>;

// Evaluates fn over the grid; a failing point becomes a NaN row and is dropped.
Table build(std::vector<std::string> comments, std::vector<std::string> columns, const std::vector<double> &grid,
            const RowFn &fn) {
    const std::size_t width = columns.size() - 1;
    auto values = parallel_map(grid.size(), [&](std::size_t i) {
        try {
            return fn(grid[i]);
        } catch (const Error &) {
            return std::vector<double>(width, kNaN);
        }
    });
    Table t;
    t.comments = std::move(comments);
    t.columns = std::move(columns);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Row row{grid[i]};
        for (double v : values[i])
            row.emplace_back(v);
        t.add(std::move(row));
    }
    return t;
}

Channel at(const ScenarioConfig &cfg, double length) { return cfg.channel().with_length(length); }

double bare_negativity(double r) { return negativity(tmsv(r)); }

struct Distilled {
    StandardState state;
    double fidelity, probability;
};

Distilled distill(Flavor f, const StandardState &st, double tau, Geometry g) {
    auto res = f == Flavor::Probabilistic ? probabilistic_2ps_standard(st, tau) : heuristic_2ps_corrections(st);
    return {regaussify(res, g), resource_fidelity(res), res.success_probability};
}

double distilled_theta(Flavor f, const StandardState &st, double tau, Geometry g) {
    auto res = f == Flavor::Probabilistic ? probabilistic_2ps_standard(st, tau) : heuristic_2ps_corrections(st);
    return validity_theta(regaussified_state(res, g));
}

std::vector<FigureOutput> fig6(const ScenarioConfig &cfg) {
    const double tau = cfg.tau;
    auto t = build(with_comments({"figure 6: negativity gain of photon-subtracted TMSV over bare TMSV vs squeezing r",
                                  "heur: lambda_tau = lambda; prob: lambda_tau = lambda * tau"},
                                 cfg),
                   {"r", "dN_2ps_heur", "dN_4ps_heur", "dN_2ps_prob", "dN_4ps_prob", "P2", "P4"},
                   linear_grid(0, 3, 0.01), [tau](double r) {
                       const double l = std::tanh(r), n0 = bare_negativity(r);
                       return std::vector<double>{tmsv_ps_negativity(1, l) - n0,
                                                  tmsv_ps_negativity(2, l) - n0,
                                                  tmsv_ps_negativity(1, l * tau) - n0,
                                                  tmsv_ps_negativity(2, l * tau) - n0,
                                                  tmsv_ps_success_probability(1, l, tau),
                                                  tmsv_ps_success_probability(2, l, tau)};
                   });
    return {{"", std::move(t)}};
}

std::vector<FigureOutput> fig8(const ScenarioConfig &cfg) {
    const double tau = cfg.tau;
    auto t = build(with_comments({"figure 8: teleportation fidelity gain of photon-subtracted TMSV over bare TMSV vs r"}, cfg),
                   {"r", "F_tmsv", "dF_2ps_heur", "dF_4ps_heur", "dF_2ps_prob", "dF_4ps_prob"},
                   linear_grid(0, 3, 0.01), [tau](double r) {
                       const double l = std::tanh(r), f0 = gaussian_fidelity(tmsv(r)).fidelity;
                       return std::vector<double>{f0,
                                                  fidelity_ps_tmsv(1, l).fidelity - f0,
                                                  fidelity_ps_tmsv(2, l).fidelity - f0,
                                                  fidelity_ps_tmsv(1, l * tau).fidelity - f0,
                                                  fidelity_ps_tmsv(2, l * tau).fidelity - f0};
                   });
    return {{"", std::move(t)}};
}

std::vector<FigureOutput> fig9(const ScenarioConfig &cfg) {
    auto t = build(with_comments({"figure 9: teleportation fidelity vs distance L [m]",
                                  "dF columns subtract the bare TMST fidelity of the same geometry; es uses asym"},
                                 cfg),
                   {"L", "F_tmst_asym", "F_tmst_sym", "dF_2ps_prob_asym", "dF_2ps_prob_sym", "dF_2ps_heur_asym",
                    "dF_2ps_heur_sym", "dF_es"},
                   linear_grid(0, 600, 1), [&cfg](double l) {
                       const auto ch = at(cfg, l);
                       const auto sa = asymmetric_state(cfg.source(), ch), ss = symmetric_state(cfg.source(), ch);
                       const double fa = fidelity_tmst(sa).fidelity, fs = fidelity_tmst(ss).fidelity;
                       return std::vector<double>{
                           fa,
                           fs,
                           fidelity_2ps_general(sa, cfg.tau).fidelity - fa,
                           fidelity_2ps_general(ss, cfg.tau).fidelity - fs,
                           fidelity_heuristic_2ps(sa).fidelity - fa,
                           fidelity_heuristic_2ps(ss).fidelity - fs,
                           fidelity_entanglement_swap(cfg.source(), ch).fidelity - fa};
                   });
    return {{"", std::move(t)}};
}

std::vector<FigureOutput> fig10(const ScenarioConfig &cfg) {
    auto main = build(
        with_comments({"figure 10 (a-c): probabilistic 2PS resource vs distance L [m]",
                       "gain_w = (F_2ps - F_tmst) / (1 - F_tmst)"},
                      cfg),
        {"L", "F_asym", "F_sym", "EN_asym", "EN_sym", "P_asym", "P_sym", "gain_w_asym", "gain_w_sym"},
        linear_grid(0, 500, 1), [&cfg](double l) {
            const auto ch = at(cfg, l);
            std::vector<double> f, en, p, w;
            for (Geometry g : {Geometry::Asymmetric, Geometry::Symmetric}) {
                const auto st = lossy_state(cfg.source(), ch, g);
                const auto d = distill(Flavor::Probabilistic, st, cfg.tau, g);
                const double f0 = fidelity_tmst(st).fidelity;
                f.push_back(d.fidelity);
                en.push_back(log_negativity(d.state));
                p.push_back(d.probability);
                w.push_back((d.fidelity - f0) / (1 - f0));
            }
            return std::vector<double>{f[0], f[1], en[0], en[1], p[0], p[1], w[0], w[1]};
        });
    auto d = build(with_comments({"figure 10 (d): probabilistic 2PS efficiency at L = 0 vs beamsplitter transmissivity",
                                  "efficiency = P * (F_2ps - F_tmst)"},
                                 cfg),
                   {"tau", "P", "dF", "efficiency"}, linear_grid(0.9, 0.999, 0.001), [&cfg](double tau) {
                       const auto st = asymmetric_state(cfg.source(), at(cfg, 0));
                       const auto res = probabilistic_2ps_standard(st, tau);
                       const double df = resource_fidelity(res) - fidelity_tmst(st).fidelity;
                       return std::vector<double>{res.success_probability, df, res.success_probability * df};
                   });
    std::vector<FigureOutput> out;
    out.push_back({"", std::move(main)});
    out.push_back({"_d", std::move(d)});
    return out;
}

std::vector<FigureOutput> fig11(const ScenarioConfig &cfg) {
    auto t = build(with_comments({"figure 11: log-negativity gain of re-Gaussified 2PS resources over bare TMST vs L [m]"},
                                 cfg),
                   {"L", "dEN_2ps_heur_sym", "dEN_2ps_prob_sym", "dEN_2ps_heur_asym", "dEN_2ps_prob_asym", "EN_tmst_sym",
                    "EN_tmst_asym"},
                   linear_grid(0, 500, 1), [&cfg](double l) {
                       const auto ch = at(cfg, l);
                       const auto sa = asymmetric_state(cfg.source(), ch), ss = symmetric_state(cfg.source(), ch);
                       const double ea = log_negativity(sa), es = log_negativity(ss);
                       auto gain = [&](Flavor f, const StandardState &st, Geometry g, double base) {
                           return log_negativity(distill(f, st, cfg.tau, g).state) - base;
                       };
                       return std::vector<double>{gain(Flavor::Heuristic, ss, Geometry::Symmetric, es),
                                                  gain(Flavor::Probabilistic, ss, Geometry::Symmetric, es),
                                                  gain(Flavor::Heuristic, sa, Geometry::Asymmetric, ea),
                                                  gain(Flavor::Probabilistic, sa, Geometry::Asymmetric, ea),
                                                  es,
                                                  ea};
                   });
    return {{"", std::move(t)}};
}

std::vector<FigureOutput> fig13(const ScenarioConfig &cfg) {
    auto t = build(with_comments({"figure 13: validity theta of the re-Gaussified resources vs L [m]"}, cfg),
                   {"L", "theta_es", "theta_2ps_heur_sym", "theta_2ps_heur_asym", "theta_2ps_prob_sym",
                    "theta_2ps_prob_asym"},
                   linear_grid(0, 500, 1), [&cfg](double l) {
                       const auto ch = at(cfg, l);
                       const auto sa = asymmetric_state(cfg.source(), ch), ss = symmetric_state(cfg.source(), ch);
                       return std::vector<double>{
                           validity_theta(optimal_swap_resource(cfg.source(), ch)),
                           distilled_theta(Flavor::Heuristic, ss, cfg.tau, Geometry::Symmetric),
                           distilled_theta(Flavor::Heuristic, sa, cfg.tau, Geometry::Asymmetric),
                           distilled_theta(Flavor::Probabilistic, ss, cfg.tau, Geometry::Symmetric),
                           distilled_theta(Flavor::Probabilistic, sa, cfg.tau, Geometry::Asymmetric)};
                   });
    return {{"", std::move(t)}};
}

Cell cell(const std::optional<double> &v) { return v ? Cell{*v} : Cell{}; }

}  // namespace

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("CVML_THREADS")) {
        unsigned v = 0;
        std::string_view s(env);
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc() && v > 0)
            return std::min(v, hw);
    }
    return hw;
}

std::vector<double> linear_grid(double from, double to, double step) {
    std::vector<double> g;
    if (!(step > 0) || to < from)
        return g;
    const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i)
        g.push_back(from + static_cast<double>(i) * step);
    return g;
}

std::vector<std::string> parameter_comments(const ScenarioConfig &cfg) {
    auto f = [](const char *k, double v) { return std::string(k) + " = " + format_number(v); };
    return {f("mu", cfg.mu),
            f("temperature", cfg.temperature),
            f("frequency", cfg.frequency),
            f("n_env", cfg.n_env),
            f("r", cfg.r),
            f("n", cfg.n),
            f("tau", cfg.tau),
            f("eta_ant", cfg.eta_ant),
            "k = " + std::to_string(cfg.k)};
}

bool sweeps_squeezing(ResourceTag tag) {
    return tag == ResourceTag::TMSV || tag == ResourceTag::PS2_TMSV || tag == ResourceTag::PS4_TMSV;
}

Metrics evaluate(ResourceTag tag, const ScenarioConfig &cfg, Geometry g, double x) {
    Metrics m;
    auto fill = [&m](const StandardState &st) {
        const double nu = pt_symplectic_eigenvalue_minus(st);
        m.nu = nu;
        m.negativity = negativity(nu);
        m.log_negativity = log_negativity(*m.negativity);
        m.theta = validity_theta(st);
    };
    const auto src = cfg.source();
    switch (tag) {
    case ResourceTag::TMSV: {
        const auto st = tmsv(x);
        fill(st);
        m.fidelity = gaussian_fidelity(st).fidelity;
        break;
    }
    case ResourceTag::PS2_TMSV:
    case ResourceTag::PS4_TMSV: {
        const unsigned k = tag == ResourceTag::PS2_TMSV ? 1 : 2;
        const double l = std::tanh(x);
        m.negativity = tmsv_ps_negativity(k, l * cfg.tau);
        m.log_negativity = log_negativity(*m.negativity);
        m.fidelity = fidelity_ps_tmsv(k, l * cfg.tau).fidelity;
        m.probability = tmsv_ps_success_probability(k, l, cfg.tau);
        break;
    }
    case ResourceTag::TMSTAsym:
    case ResourceTag::TMSTSym: {
        const auto geo = tag == ResourceTag::TMSTAsym ? Geometry::Asymmetric : Geometry::Symmetric;
        const auto st = lossy_state(src, at(cfg, x), geo);
        fill(st);
        m.fidelity = fidelity_tmst(st, tag).fidelity;
        break;
    }
    case ResourceTag::PS2Prob:
    case ResourceTag::PS2Heur: {
        const auto flavor = tag == ResourceTag::PS2Prob ? Flavor::Probabilistic : Flavor::Heuristic;
        const auto d = distill(flavor, lossy_state(src, at(cfg, x), g), cfg.tau, g);
        fill(d.state);
        m.fidelity = d.fidelity;
        if (flavor == Flavor::Probabilistic)
            m.probability = d.probability;
        break;
    }
    case ResourceTag::ES: {
        const auto ch = at(cfg, x);
        fill(optimal_swap_resource(src, ch));
        m.fidelity = fidelity_entanglement_swap(src, ch).fidelity;
        break;
    }
    case ResourceTag::KConcat: {
        const auto st = asymmetric_state(src, at(cfg, x));
        fill(st);
        m.fidelity = fidelity_k_concat(st, cfg.k).fidelity;
        break;
    }
    }
    return m;
}

Table sweep(ResourceTag tag, const ScenarioConfig &cfg, Geometry g) {
    const bool r_axis = sweeps_squeezing(tag);
    const auto grid = linear_grid(cfg.from, cfg.to, cfg.step);
    auto metrics = parallel_map(grid.size(), [&](std::size_t i) -> std::optional<Metrics> {
        try {
            return evaluate(tag, cfg, g, grid[i]);
        } catch (const Error &) {
            return std::nullopt;
        }
    });
    Table t;
    t.comments = parameter_comments(cfg);
    t.comments.insert(t.comments.begin(), std::string("sweep of ") + std::string(to_string(tag)) + " over " +
                                              (r_axis ? "squeezing r" : "distance L [m]") + ", geometry " +
                                              (g == Geometry::Asymmetric ? "asym" : "sym"));
    t.columns = {r_axis ? "r" : "L", "resource", "nu_minus", "negativity", "log_negativity", "fidelity", "probability",
                 "theta"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto &m = metrics[i];
        if (!m || (m->theta && *m->theta < kThetaFloor)) {
            ++t.dropped;
            continue;
        }
        t.add({grid[i], std::string(to_string(tag)), cell(m->nu), cell(m->negativity), cell(m->log_negativity),
               cell(m->fidelity), cell(m->probability), cell(m->theta)});
    }
    return t;
}

Table satellite_grid(const ScenarioConfig &cfg) {
    const double ta = preservation_threshold(Geometry::Asymmetric, cfg.space_n_env);
    const double ts = preservation_threshold(Geometry::Symmetric, cfg.space_n_env, cfg.r);
    const auto rule = cfg.corrected_near_field ? NearFieldRule::Corrected : NearFieldRule::Printed;
    std::vector<std::pair<double, double>> points;
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= 80; ++j)
            points.emplace_back(std::pow(10.0, -1 + i / 20.0), std::pow(10.0, 2 + j / 20.0));
    auto rows = parallel_map(points.size(), [&](std::size_t k) {
        Link b = cfg.link();
        b.initial_spot = points[k].first;
        b.distance = points[k].second;
        b.receiver_aperture = 2 * b.initial_spot;
        b.curvature = std::numeric_limits<double>::infinity();
        const double t = diffraction_transmissivity(b);
        return Row{b.initial_spot,
                   b.distance,
                   t,
                   std::string(to_string(region_classify(b, rule))),
                   1 - t < ta ? 1.0 : 0.0,
                   1 - t < ts ? 1.0 : 0.0};
    });
    Table out;
    out.comments = {"figure 12 (a): diffraction transmissivity over initial spot w0 [m] and distance d [m]",
                    "receiver aperture = 2 * w0, collimated beam, wavelength = " + format_number(cfg.wavelength),
                    "preserve columns: reflectivity 1 - tau below the asym / sym threshold",
                    "threshold_asym = " + format_number(ta),
                    "threshold_sym = " + format_number(ts),
                    std::string("near-field rule = ") + (cfg.corrected_near_field ? "corrected" : "printed"),
                    "space_n_env = " + format_number(cfg.space_n_env),
                    "r = " + format_number(cfg.r)};
    out.columns = {"w0", "d", "tau_diff", "region", "preserve_asym", "preserve_sym"};
    for (auto &r : rows)
        out.add(std::move(r));
    return out;
}

bool figure_supported(int id) { return id == 6 || (id >= 8 && id <= 13); }

std::vector<FigureOutput> figure(int id, const ScenarioConfig &cfg) {
    switch (id) {
    case 6: return fig6(cfg);
    case 8: return fig8(cfg);
    case 9: return fig9(cfg);
    case 10: return fig10(cfg);
    case 11: return fig11(cfg);
    case 12: return {{"", satellite_grid(cfg)}};
    case 13: return fig13(cfg);
    default: throw ConfigError("unsupported figure id " + std::to_string(id) + " (expected 6, 8, 9, 10, 11, 12 or 13)");
    }
}

std::string with_suffix(const std::string &path, const std::string &suffix) {
    if (suffix.empty())
        return path;
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace cvml::app
