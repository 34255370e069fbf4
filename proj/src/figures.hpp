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

#ifndef CVML_APP_FIGURES_HPP
#define CVML_APP_FIGURES_HPP

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "config.hpp"
#include "csv.hpp"

namespace cvml::app {

// CVML_THREADS caps the worker count; defaults to the hardware concurrency.
unsigned worker_count();

// fn(i) for i in [0, n), evaluated on worker threads, results in index order.
template <typename F> auto parallel_map(std::size_t n, F fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(n);
    const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n ? n : 1)));
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < n; i += workers)
            slots[i].emplace(fn(i));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto &t : pool)
            t.join();
    }
    std::vector<T> out;
    out.reserve(n);
    for (auto &s : slots)
        out.push_back(std::move(*s));
    return out;
}

// Inclusive grid from..to with the given step, built by index.
std::vector<double> linear_grid(double from, double to, double step);

// One sweep record. Cells that do not apply stay empty.
struct Metrics {
    std::optional<double> nu, negativity, log_negativity, fidelity, probability, theta;
};

// Tags tmsv, 2ps-tmsv and 4ps-tmsv sweep the squeezing r; the rest sweep the distance L.
bool sweeps_squeezing(ResourceTag tag);
Metrics evaluate(ResourceTag tag, const ScenarioConfig &cfg, Geometry g, double x);
Table sweep(ResourceTag tag, const ScenarioConfig &cfg, Geometry g);

struct FigureOutput {
    std::string suffix;   // appended to the file stem; empty for the main table
    Table table;
};

bool figure_supported(int id);
std::vector<FigureOutput> figure(int id, const ScenarioConfig &cfg);
// "out.csv" + "_d" -> "out_d.csv"
std::string with_suffix(const std::string &path, const std::string &suffix);

Table satellite_grid(const ScenarioConfig &cfg);
std::vector<std::string> parameter_comments(const ScenarioConfig &cfg);

}  // namespace cvml::app

#endif
