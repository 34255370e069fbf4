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

#ifndef CVML_APP_CONFIG_HPP
#define CVML_APP_CONFIG_HPP

#include <istream>
#include <limits>
#include <map>
#include <string>

#include "cvml/cvml.hpp"

namespace cvml::app {

class ConfigError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

// Defaults are the terrestrial scenario: 5 GHz, 300 K environment, 50 mK source.
struct ScenarioConfig {
    double mu = 1.44e-6;
    double temperature = 300;
    double frequency = 5e9;
    double n_env = 1250;
    double r = 1;
    double n = 0.01;
    double tau = 0.95;
    double eta_ant = 0;
    unsigned k = 2;

    double from = 0;
    double to = 500;
    double step = 1;

    // inter-satellite link
    double wavelength = 0.06;
    double distance = 1000;
    double aperture = 1;
    double efficiency = 1;
    double initial_spot = 0.5;
    double curvature = 1000;
    double receiver_aperture = 1;
    double space_temperature = 2.7;
    double space_n_env = 11;
    double eta_lim = 0.038;
    bool corrected_near_field = false;

    Source source() const { return {r, n}; }
    Channel channel() const { return {mu, n_env, eta_ant, 0}; }
    Link link() const {
        return {wavelength, distance, aperture, efficiency, initial_spot, curvature, receiver_aperture};
    }
    FidelityScenario<double> scenario(Geometry g = Geometry::Asymmetric) const { return {source(), channel(), tau, g, k}; }

    // Differences from the defaults, for report headers.
    std::map<std::string, std::string> changed() const;
    void validate() const;
};

// key = value lines; '#' and ';' start comments; [section] lines are ignored.
void set_value(ScenarioConfig &cfg, const std::string &key, const std::string &value);
ScenarioConfig parse_config(std::istream &in, ScenarioConfig base = {});
ScenarioConfig load_config(const std::string &path, ScenarioConfig base = {});

}  // namespace cvml::app

#endif
