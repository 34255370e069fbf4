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

#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "figures.hpp"

namespace cvml::app {
namespace {

struct Flags {
    std::string config_path;
    std::string out;
    std::string geometry = "asym";
    std::optional<double> tau, from, to, step, alpha0;
    std::string resource;
    std::vector<std::string> overrides;
    int figure_id = 0;
};

Geometry parse_geometry(const std::string &g) {
    if (g == "asym")
        return Geometry::Asymmetric;
    if (g == "sym")
        return Geometry::Symmetric;
    throw ConfigError("geometry must be asym or sym, got '" + g + "'");
}

ScenarioConfig build_config(const Flags &f) {
    ScenarioConfig cfg;
    if (!f.config_path.empty())
        cfg = load_config(f.config_path);
    for (const auto &kv : f.overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        set_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (f.tau)
        cfg.tau = *f.tau;
    if (f.from)
        cfg.from = *f.from;
    if (f.to)
        cfg.to = *f.to;
    if (f.step)
        cfg.step = *f.step;
    cfg.validate();
    return cfg;
}

std::string num(double v) { return format_number(v); }

void write_tables(const std::vector<FigureOutput> &outs, const std::string &path, std::ostream &out,
                  std::ostream &err, const std::string &what) {
    for (const auto &o : outs) {
        if (path.empty() || path == "-") {
            write_csv(out, o.table);
        } else {
            write_csv_file(with_suffix(path, o.suffix), o.table);
        }
        if (o.table.dropped)
            err << what << ": dropped " << o.table.dropped << " degenerate row(s)\n";
    }
}

int cmd_maxdist(const ScenarioConfig &cfg, Geometry g, std::ostream &out) {
    const auto src = cfg.source();
    const auto ch = cfg.channel();
    const double eta = g == Geometry::Asymmetric ? max_reflectivity(src, cfg.n_env)
                                                 : max_reflectivity_symmetric(src, cfg.n_env);
    const double closed = max_distance(src, ch, g);
    const double bis = max_distance_bisection(src, ch, g);
    out << "geometry = " << (g == Geometry::Asymmetric ? "asym" : "sym") << '\n';
    out << (g == Geometry::Asymmetric ? "eta_max = " : "eta_max_per_arm = ") << num(eta) << '\n';
    out << "L_max = " << num(closed) << " m\n";
    out << "L_max_bisection = " << num(bis) << " m\n";
    out << "delta = " << num(std::abs(closed - bis)) << " m\n";
    return kOk;
}

int cmd_satellite(const ScenarioConfig &cfg, const std::string &path, std::ostream &out, std::ostream &err) {
    const Link b = cfg.link();
    b.validate();
    const auto friis = friis_path_transmissivity(b);
    const auto rule = cfg.corrected_near_field ? NearFieldRule::Corrected : NearFieldRule::Printed;
    const double ta = preservation_threshold(Geometry::Asymmetric, cfg.space_n_env);
    const double ts = preservation_threshold(Geometry::Symmetric, cfg.space_n_env, cfg.r);
    const double tdiff = diffraction_transmissivity(b);
    std::ostream &o = path == "-" ? err : out;   // keep stdout clean for the CSV
    o << "friis_transmissivity = " << num(friis.transmissivity) << (friis.saturated ? " (clamped)" : "") << '\n';
    o << "directivity = " << num(friis.directivity) << '\n';
    o << "rayleigh_distance = " << num(rayleigh_distance(b)) << " m\n";
    o << "spot_size = " << num(spot_size(b)) << " m\n";
    o << "tau_diff = " << num(tdiff) << '\n';
    o << "region = " << to_string(region_classify(b, rule)) << '\n';
    o << "near_field_boundary = " << num(near_field_boundary(b.wavelength, b.distance, rule)) << '\n';
    o << "far_field_boundary = " << num(far_field_boundary(b.wavelength, b.distance)) << '\n';
    o << "threshold_asym = " << num(ta) << '\n';
    o << "threshold_sym = " << num(ts) << '\n';
    o << "preserved_asym = " << (1 - tdiff < ta ? "yes" : "no") << '\n';
    o << "preserved_sym = " << (1 - tdiff < ts ? "yes" : "no") << '\n';
    o << "min_aperture_product = " << num(min_aperture_product(b.distance, b.wavelength, cfg.eta_lim)) << " m^2\n";
    if (!path.empty())
        write_tables({{"", satellite_grid(cfg)}}, path, out, err, "satellite");
    return kOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"cvml: microwave entanglement distribution simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    double alpha0 = 0;
    app.add_option("--config", f.config_path, "key = value configuration file");
    app.add_option("--out", f.out, "output path ('-' or empty for stdout)");
    app.add_option("--geometry", f.geometry, "asym or sym");
    app.add_option("--tau", f.tau, "beamsplitter transmissivity for photon subtraction");
    app.add_option("--resource", f.resource, "resource tag for sweep");
    app.add_option("--from", f.from, "sweep start");
    app.add_option("--to", f.to, "sweep end");
    app.add_option("--step", f.step, "sweep step");
    auto *a0 = app.add_option("--alpha0", alpha0, "coherent amplitude of the teleported state (ignored)");
    app.add_option("--set", f.overrides, "override a configuration key, key=value");

    auto *maxdist = app.add_subcommand("maxdist", "maximum entanglement distance");
    auto *fig = app.add_subcommand("fig", "write figure data as CSV");
    fig->add_option("id", f.figure_id, "figure id: 6, 8, 9, 10, 11, 12 or 13")->required();
    auto *sw = app.add_subcommand("sweep", "sweep one resource over r or L");
    auto *sat = app.add_subcommand("satellite", "inter-satellite link budget");
    auto *report = app.add_subcommand("report", "run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }
    if (a0->count() > 0)
        err << "warning: --alpha0 is ignored, the teleportation fidelity does not depend on the coherent amplitude\n";

    try {
        const ScenarioConfig cfg = build_config(f);
        const Geometry geo = parse_geometry(f.geometry);
        if (*maxdist)
            return cmd_maxdist(cfg, geo, out);
        if (*fig) {
            if (!figure_supported(f.figure_id)) {
                err << "error: unsupported figure id " << f.figure_id << " (expected 6, 8, 9, 10, 11, 12 or 13)\n";
                return kConfigError;
            }
            write_tables(figure(f.figure_id, cfg), f.out, out, err, "fig " + std::to_string(f.figure_id));
            return kOk;
        }
        if (*sw) {
            auto tag = parse_resource_tag(f.resource);
            if (!tag) {
                err << "error: unknown resource '" << f.resource
                    << "' (tmsv, 2ps-tmsv, 4ps-tmsv, tmst-asym, tmst-sym, 2ps-prob, 2ps-heur, es, k-concat)\n";
                return kConfigError;
            }
            write_tables({{"", sweep(*tag, cfg, geo)}}, f.out, out, err, "sweep");
            return kOk;
        }
        if (*sat)
            return cmd_satellite(cfg, f.out, out, err);
        if (*report) {
            auto results = run_acceptance(cfg);
            print_acceptance(out, results, cfg);
            return any_failure(results) ? kAcceptanceFailure : kOk;
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace cvml::app
