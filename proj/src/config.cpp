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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace cvml::app {
namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string &key, const std::string &v) {
    if (v == "inf" || v == "infinity")
        return std::numeric_limits<double>::infinity();
    double out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw ConfigError("invalid number for '" + key + "': '" + v + "'");
    return out;
}

bool to_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError("invalid boolean for '" + key + "': '" + v + "'");
}

using Setter = std::function<void(ScenarioConfig &, const std::string &, const std::string &)>;

Setter num(double ScenarioConfig::*field) {
    return [field](ScenarioConfig &c, const std::string &k, const std::string &v) { c.*field = to_double(k, v); };
}

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> table = {
        {"mu", num(&ScenarioConfig::mu)},
        {"temperature", num(&ScenarioConfig::temperature)},
        {"frequency", num(&ScenarioConfig::frequency)},
        {"n_env", num(&ScenarioConfig::n_env)},
        {"r", num(&ScenarioConfig::r)},
        {"n", num(&ScenarioConfig::n)},
        {"tau", num(&ScenarioConfig::tau)},
        {"eta_ant", num(&ScenarioConfig::eta_ant)},
        {"k",
         [](ScenarioConfig &c, const std::string &k, const std::string &v) {
             double d = to_double(k, v);
             if (d < 1 || d != std::floor(d) || d > 1000)
                 throw ConfigError("k must be a positive integer");
             c.k = static_cast<unsigned>(d);
         }},
        {"from", num(&ScenarioConfig::from)},
        {"to", num(&ScenarioConfig::to)},
        {"step", num(&ScenarioConfig::step)},
        {"wavelength", num(&ScenarioConfig::wavelength)},
        {"distance", num(&ScenarioConfig::distance)},
        {"aperture", num(&ScenarioConfig::aperture)},
        {"efficiency", num(&ScenarioConfig::efficiency)},
        {"initial_spot", num(&ScenarioConfig::initial_spot)},
        {"curvature", num(&ScenarioConfig::curvature)},
        {"receiver_aperture", num(&ScenarioConfig::receiver_aperture)},
        {"space_temperature", num(&ScenarioConfig::space_temperature)},
        {"space_n_env", num(&ScenarioConfig::space_n_env)},
        {"eta_lim", num(&ScenarioConfig::eta_lim)},
        {"corrected_near_field",
         [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.corrected_near_field = to_bool(k, v); }},
    };
    return table;
}

std::string show(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

void set_value(ScenarioConfig &cfg, const std::string &key, const std::string &value) {
    auto it = setters().find(key);
    if (it == setters().end())
        throw ConfigError("unknown configuration key '" + key + "'");
    it->second(cfg, key, trim(value));
}

ScenarioConfig parse_config(std::istream &in, ScenarioConfig cfg) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto cut = line.find_first_of("#;");
        if (cut != std::string::npos)
            line.erase(cut);
        line = trim(line);
        if (line.empty() || line.front() == '[')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        try {
            set_value(cfg, key, value);
        } catch (const ConfigError &e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::string &path, ScenarioConfig base) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config file '" + path + "'");
    return parse_config(in, base);
}

std::map<std::string, std::string> ScenarioConfig::changed() const {
    const ScenarioConfig d;
    std::map<std::string, std::string> out;
    auto cmp = [&](const char *name, double a, double b) {
        if (a != b)
            out[name] = show(a) + " (default " + show(b) + ")";
    };
    cmp("mu", mu, d.mu);
    cmp("temperature", temperature, d.temperature);
    cmp("frequency", frequency, d.frequency);
    cmp("n_env", n_env, d.n_env);
    cmp("r", r, d.r);
    cmp("n", n, d.n);
    cmp("tau", tau, d.tau);
    cmp("eta_ant", eta_ant, d.eta_ant);
    cmp("space_n_env", space_n_env, d.space_n_env);
    cmp("wavelength", wavelength, d.wavelength);
    cmp("distance", distance, d.distance);
    cmp("eta_lim", eta_lim, d.eta_lim);
    return out;
}

void ScenarioConfig::validate() const {
    auto need = [](bool ok, const char *msg) {
        if (!ok)
            throw ConfigError(msg);
    };
    need(mu >= 0 && std::isfinite(mu), "mu must be a finite nonnegative number");
    need(n_env >= 0, "n_env must be nonnegative");
    need(r >= 0, "r must be nonnegative");
    need(n >= 0, "n must be nonnegative");
    need(tau > 0 && tau < 1, "tau must lie in (0, 1)");
    need(eta_ant >= 0 && eta_ant < 1, "eta_ant must lie in [0, 1)");
    need(frequency > 0 && temperature >= 0, "frequency must be positive and temperature nonnegative");
    need(step > 0 && to >= from, "sweep needs step > 0 and to >= from");
    need(wavelength > 0 && distance > 0 && initial_spot > 0 && receiver_aperture >= 0 && aperture >= 0,
         "link lengths must be positive");
    need(efficiency >= 0 && efficiency <= 1, "efficiency must lie in [0, 1]");
    need(eta_lim > 0 && eta_lim < 1, "eta_lim must lie in (0, 1)");
}

}  // namespace cvml::app
