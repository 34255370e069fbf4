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

#include "acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "figures.hpp"

namespace cvml::app {
namespace {

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

template <typename F> CriterionResult guarded(int id, std::string name, F body) {
    CriterionResult r{id, std::move(name), false, false, ""};
    try {
        body(r);
    } catch (const std::exception &e) {
        r.pass = false;
        r.detail += std::string(r.detail.empty() ? "" : "; ") + "error: " + e.what();
    }
    return r;
}

CriterionResult c1(const ScenarioConfig &cfg) {
    return guarded(1, "maximum asymmetric reach", [&](CriterionResult &r) {
        const double eta = max_reflectivity(cfg.source(), cfg.n_env);
        const double closed = max_distance(cfg.source(), cfg.channel(), Geometry::Asymmetric);
        const double bis = max_distance_bisection(cfg.source(), cfg.channel(), Geometry::Asymmetric);
        r.pass = within(closed, 545, 555) && std::abs(closed - bis) < 0.01;
        r.detail = "eta_max = " + fmt(eta, 7) + ", L_max = " + fmt(closed, 8) + " m, bisection delta = " +
                   fmt(std::abs(closed - bis), 3) + " m (want [545, 555], delta < 0.01)";
    });
}

CriterionResult c2(const ScenarioConfig &cfg) {
    return guarded(2, "maximum symmetric reach", [&](CriterionResult &r) {
        const double closed = max_distance(cfg.source(), cfg.channel(), Geometry::Symmetric);
        const double bis = max_distance_bisection(cfg.source(), cfg.channel(), Geometry::Symmetric);
        r.pass = within(closed, 470, 490) && std::abs(closed - bis) < 0.01;
        r.detail = "L_max = " + fmt(closed, 8) + " m, bisection delta = " + fmt(std::abs(closed - bis), 3) +
                   " m (want [470, 490])";
    });
}

CriterionResult c3(const ScenarioConfig &cfg) {
    return guarded(3, "thermal occupation", [&](CriterionResult &r) {
        const double hot = bose_einstein_occupation(cfg.frequency, cfg.temperature);
        const double cold = bose_einstein_occupation(cfg.frequency, cfg.space_temperature);
        r.pass = within(hot, 1249, 1251) && within(cold, 10.5, 11.5);
        r.detail = "n(" + fmt(cfg.temperature) + " K) = " + fmt(hot, 7) + " (want [1249, 1251]), n(" +
                   fmt(cfg.space_temperature) + " K) = " + fmt(cold, 5) + " (want [10.5, 11.5])";
    });
}

CriterionResult c4(const ScenarioConfig &cfg) {
    auto r = guarded(4, "distillation gains at L = 0", [&](CriterionResult &r) {
        const auto st = asymmetric_state(cfg.source(), cfg.channel());
        const double en0 = log_negativity(st), n0 = negativity(st);
        const auto heur = regaussify(heuristic_2ps_corrections(st), Geometry::Asymmetric);
        const auto prob = regaussify(probabilistic_2ps_standard(st, cfg.tau), Geometry::Asymmetric);
        const double gh = log_negativity(heur) / en0 - 1, gp = log_negativity(prob) / en0 - 1;
        const double nh = negativity(heur) / n0 - 1, np = negativity(prob) / n0 - 1;
        r.pass = within(gh, 0.44, 0.48) && within(gp, 0.26, 0.30);
        r.detail = "log-negativity gain heur = " + fmt(100 * gh, 4) + "% (want [44, 48]), prob = " + fmt(100 * gp, 4) +
                   "% (want [26, 30]); negativity gain heur = " + fmt(100 * nh, 4) + "%, prob = " + fmt(100 * np, 4) +
                   "%";
    });
    // The quoted gains are reproduced by the negativity ratio, not the log-negativity ratio.
    r.expected_failure = true;
    return r;
}

CriterionResult c5(const ScenarioConfig &cfg) {
    return guarded(5, "swapping reach extension", [&](CriterionResult &r) {
        const auto sc = cfg.scenario();
        BisectionOptions opt{1e-6, 200};
        const double bare = classical_limit_distance(ResourceTag::TMSTAsym, sc, opt);
        const double es = classical_limit_distance(ResourceTag::ES, sc, opt);
        r.pass = within(es / bare, 1.11, 1.17);
        r.detail = "bare = " + fmt(bare, 7) + " m, es = " + fmt(es, 7) + " m, ratio = " + fmt(es / bare) +
                   " (want [1.11, 1.17])";
    });
}

CriterionResult c6(const ScenarioConfig &cfg) {
    return guarded(6, "satellite thresholds", [&](CriterionResult &r) {
        const double ta = preservation_threshold(Geometry::Asymmetric, cfg.space_n_env);
        const double ts = preservation_threshold(Geometry::Symmetric, cfg.space_n_env, cfg.r);
        const double area = min_aperture_product(cfg.distance, cfg.wavelength, cfg.eta_lim);
        const double slope = area / cfg.distance;
        const double slope_ln = cfg.wavelength / constants::pi * std::sqrt(-std::log(cfg.eta_lim));
        const double slope_log10 = cfg.wavelength / constants::pi * std::sqrt(-std::log10(cfg.eta_lim));
        const bool picks_ln = std::abs(slope - slope_ln) < std::abs(slope - slope_log10) && std::abs(slope - 0.0345) < 5e-4;
        r.pass = std::abs(ta - 0.0833) <= 5e-4 && std::abs(ts - 0.0378) <= 5e-4 && std::abs(area - 34.6) <= 1 && picks_ln;
        r.detail = "asym = " + fmt(ta, 4) + ", sym = " + fmt(ts, 4) + ", aperture product = " + fmt(area, 4) +
                   " m^2, slope = " + fmt(slope, 4) + " (ln " + fmt(slope_ln, 3) + " vs log10 " + fmt(slope_log10, 3) +
                   ")";
    });
}

CriterionResult c7(const ScenarioConfig &cfg) {
    return guarded(7, "oracle equivalences", [&](CriterionResult &r) {
        std::vector<std::string> bad;
        // (a) k = 0, 1 closed forms
        double ea = 0;
        for (int i = 0; i <= 98; ++i) {
            const double z = i / 100.0;
            ea = std::max(ea, rel(hyp2f1_diag(0, z), 1 / (1 - z)));
            ea = std::max(ea, rel(hyp2f1_diag(1, z), (1 + z) / std::pow(1 - z, 3)));
        }
        if (ea > 1e-12)
            bad.push_back("a");
        // (b) success probability on TMSV inputs
        double eb = 0;
        for (int i = 1; i <= 30; ++i) {
            const double rr = 0.1 * i;
            for (double tau : {0.5, 0.8, 0.95}) {
                const double p = probabilistic_2ps_standard(tmsv(rr), tau).success_probability;
                eb = std::max(eb, rel(p, tmsv_ps_success_probability(1, std::tanh(rr), tau)));
            }
        }
        if (eb > 1e-10)
            bad.push_back("b");
        // (c) closed form vs general matrix route on seeded random states
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_real_distribution<double> u(0, 1);
        double ec = 0;
        for (int i = 0; i < 100;) {
            Source src{0.05 + 1.45 * u(rng), 0.3 * u(rng)};
            const auto st = symmetric_state_eta(src, 3 * u(rng), 0.6 * u(rng), 3 * u(rng), 0.6 * u(rng));
            const double tau = 0.5 + 0.49 * u(rng);
            if (pt_symplectic_eigenvalue_minus(st) >= 0.95)
                continue;
            ++i;
            const auto w = make_probabilistic_workspace(st, tau);
            const Mat2<double> a = Mat2<double>::Identity() + 0.5 * teleportation_gamma(w.sigma_a, w.sigma_b, w.eps);
            const double ref = (1 + probabilistic_correction_g(w)) / std::sqrt(a.determinant());
            ec = std::max(ec, rel(fidelity_2ps_general(st, tau).fidelity, ref));
        }
        if (ec > 1e-8)
            bad.push_back("c");
        // (d) heuristic fidelity on TMSV
        double ed = 0;
        for (int i = 1; i <= 30; ++i) {   // nothing to subtract from vacuum
            const double rr = 0.1 * i;
            ed = std::max(ed, rel(fidelity_heuristic_2ps(tmsv(rr)).fidelity, fidelity_ps_tmsv(1, std::tanh(rr)).fidelity));
        }
        if (ed > 1e-10)
            bad.push_back("d");
        // (e) tau -> 1 limit
        double ee = 0;
        const double tau1 = 1 - 1e-6;
        for (double l : {0.0, 100.0, 300.0}) {
            for (Geometry g : {Geometry::Asymmetric, Geometry::Symmetric}) {
                const auto st = lossy_state(cfg.source(), cfg.channel().with_length(l), g);
                const double np = negativity(regaussify(probabilistic_2ps_standard(st, tau1), g));
                const double nh = negativity(regaussify(heuristic_2ps_corrections(st), g));
                ee = std::max(ee, std::abs(np - nh));
            }
        }
        if (ee > 1e-4)
            bad.push_back("e");
        r.pass = bad.empty();
        r.detail = "a " + fmt(ea, 2) + ", b " + fmt(eb, 2) + ", c " + fmt(ec, 2) + ", d " + fmt(ed, 2) + ", e " + fmt(ee, 2);
        for (auto &b : bad)
            r.detail += "; (" + b + ") over tolerance";
    });
}

CriterionResult c8(const ScenarioConfig &cfg) {
    return guarded(8, "validity sweep", [&](CriterionResult &r) {
        auto tables = figure(13, cfg);
        const auto &t = tables.front().table;
        double worst = INFINITY;
        for (const auto &row : t.rows)
            for (std::size_t c = 1; c < row.size(); ++c)
                worst = std::min(worst, std::get<double>(row[c]));
        r.pass = t.dropped == 0 && t.rows.size() == 501 && worst >= -1e-9;
        r.detail = "min theta = " + fmt(worst, 4) + " over " + std::to_string(t.rows.size()) + " points, " +
                   std::to_string(t.dropped) + " failed";
    });
}

CriterionResult c9(const ScenarioConfig &) {
    return guarded(9, "fidelity limits", [&](CriterionResult &r) {
        const double half = gaussian_fidelity(StandardState{1, 1, 0}).fidelity;
        const double half2 = gaussian_fidelity(StandardState{5, 5, 4}).fidelity;   // nu = 1, not vacuum
        const double one = gaussian_fidelity(tmsv(20.0)).fidelity;
        double worst = 0;
        for (int i = 0; i <= 300; ++i) {
            const double rr = 0.01 * i;
            worst = std::max(worst, std::abs(gaussian_fidelity(tmsv(rr)).fidelity - (1 + std::tanh(rr)) / 2));
        }
        r.pass = half == 0.5 && std::abs(half2 - 0.5) < 1e-15 && std::abs(one - 1) < 1e-12 && worst < 1e-12;
        r.detail = "F(nu=1) = " + fmt(half, 17) + ", " + fmt(half2, 17) + "; F(r=20) = " + fmt(one, 17) +
                   "; max |F_tmsv - (1+lambda)/2| = " + fmt(worst, 2);
    });
}

CriterionResult c10(const ScenarioConfig &cfg) {
    return guarded(10, "short-distance coincidence", [&](CriterionResult &r) {
        const auto sc = cfg.scenario();
        const double fa = fidelity_at(ResourceTag::TMSTAsym, sc, 1.0), fs = fidelity_at(ResourceTag::TMSTSym, sc, 1.0);
        r.pass = std::abs(fa - fs) < 1e-6;
        r.detail = "F_asym(1 m) = " + fmt(fa, 12) + ", F_sym(1 m) = " + fmt(fs, 12) + ", |diff| = " +
                   fmt(std::abs(fa - fs), 3);
    });
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const ScenarioConfig &cfg) {
    return {c1(cfg), c2(cfg), c3(cfg), c4(cfg), c5(cfg), c6(cfg), c7(cfg), c8(cfg), c9(cfg), c10(cfg)};
}

int print_acceptance(std::ostream &os, const std::vector<CriterionResult> &results, const ScenarioConfig &cfg) {
    const auto changed = cfg.changed();
    if (!changed.empty()) {
        os << "note: baseline changed, acceptance ranges assume the default scenario\n";
        for (const auto &[k, v] : changed)
            os << "note:   " << k << " = " << v << '\n';
    }
    int unexpected = 0;
    for (const auto &r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name;
        if (!r.pass && r.expected_failure)
            os << " [expected: documented deviation]";
        os << ": " << r.detail << '\n';
        if (!r.pass && !r.expected_failure)
            ++unexpected;
    }
    return unexpected;
}

bool any_failure(const std::vector<CriterionResult> &results) {
    return std::any_of(results.begin(), results.end(), [](const auto &r) { return !r.pass; });
}

}  // namespace cvml::app
