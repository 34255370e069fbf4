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

#ifndef CVML_CHANNEL_HPP
#define CVML_CHANNEL_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "cvml/errors.hpp"
#include "cvml/gaussian.hpp"
#include "cvml/solvers.hpp"

namespace cvml {

enum class Geometry { Asymmetric, Symmetric };
enum class Mode { A, B };

template <typename S> struct ChannelParams {
    S mu{1.44e-6};   // 1/m
    S n_env{1250};
    S eta_ant{0};
    S length{0};     // m

    void validate() const {
        if (!(mu >= S(0)) || !(n_env >= S(0)) || !(eta_ant >= S(0) && eta_ant < S(1)) || !(length >= S(0)))
            throw DomainError("channel parameters out of range");
    }
    ChannelParams with_length(S l) const {
        ChannelParams c = *this;
        c.length = l;
        return c;
    }
};

template <typename S> struct SqueezedSource {
    S r{1};
    S n{0.01};

    S lambda() const { return std::tanh(r); }
    bool entangled() const { return r > S(0) && n < std::exp(-r) * std::sinh(r); }
    void validate() const {
        if (!(r >= S(0)) || !(n >= S(0)))
            throw DomainError("source parameters out of range");
    }
    StandardTwoModeState<S> state() const { return tmst(r, n); }
    // (1 + 2n) e^{-2r}
    S input_eigenvalue() const { return (S(1) + S(2) * n) * std::exp(-S(2) * r); }
};

template <typename S> S env_reflectivity(S mu, S length) {
    if (!(mu >= S(0)) || !(length >= S(0)))
        throw DomainError("env_reflectivity: mu and length must be nonnegative");
    return -std::expm1(-mu * length);
}

template <typename S> S effective_reflectivity(S eta_ant, S mu, S length) {
    return S(1) - std::exp(-mu * length) * (S(1) - eta_ant);
}

template <typename S> S effective_reflectivity(const ChannelParams<S> &ch) {
    return effective_reflectivity(ch.eta_ant, ch.mu, ch.length);
}

template <typename S> struct InhomogeneousProfile {
    std::vector<S> x;
    std::vector<S> mu;
    std::vector<S> n;

    void validate() const {
        if (x.size() < 2 || mu.size() != x.size() || n.size() != x.size())
            throw DomainError("profile: need matching grids with at least two points");
        if (x.front() != S(0))
            throw DomainError("profile: grid must start at 0");
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i > 0 && !(x[i] > x[i - 1]))
                throw DomainError("profile: grid must be strictly increasing");
            if (!(mu[i] >= S(0)) || !(n[i] >= S(0)))
                throw DomainError("profile: samples must be nonnegative");
        }
    }
};

template <typename S, typename MuFn, typename NFn>
InhomogeneousProfile<S> make_profile(MuFn &&mu, NFn &&n, S length, std::size_t samples = 4096) {
    if (samples < 2 || !(length > S(0)))
        throw DomainError("make_profile: need length > 0 and at least two samples");
    InhomogeneousProfile<S> p;
    p.x.resize(samples);
    p.mu.resize(samples);
    p.n.resize(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        S xi = length * S(i) / S(samples - 1);
        p.x[i] = xi;
        p.mu[i] = mu(xi);
        p.n[i] = n(xi);
    }
    return p;
}

template <typename S> struct InhomogeneousResult {
    S eta_env;
    S n_th;
    bool degenerate;
};

template <typename S> InhomogeneousResult<S> inhomogeneous_effective(const InhomogeneousProfile<S> &p) {
    p.validate();
    const std::size_t m = p.x.size();
    std::vector<S> cum(m, S(0));
    for (std::size_t i = 1; i < m; ++i)
        cum[i] = cum[i - 1] + (p.x[i] - p.x[i - 1]) * (p.mu[i] + p.mu[i - 1]) / S(2);
    const S total = cum.back();
    const S eta = -std::expm1(-total);
    if (eta < S(1e-15))
        return {eta, S(0), true};
    std::vector<S> w(m);
    for (std::size_t i = 0; i < m; ++i)
        w[i] = p.mu[i] * std::exp(cum[i] - total);
    S num(0), den(0);
    for (std::size_t i = 1; i < m; ++i) {
        S h = (p.x[i] - p.x[i - 1]) / S(2);
        num += h * (w[i] * p.n[i] + w[i - 1] * p.n[i - 1]);
        den += h * (w[i] + w[i - 1]);
    }
    // den equals eta up to quadrature error; dividing by it keeps constant profiles exact
    return {eta, num / den, false};
}

template <typename S> StandardTwoModeState<S> asymmetric_state_eta(const SqueezedSource<S> &src, S n_env, S eta) {
    using std::cosh;
    using std::sinh;
    using std::sqrt;
    S f = S(1) + S(2) * src.n;
    S c2 = cosh(S(2) * src.r), s2 = sinh(S(2) * src.r);
    return {(S(1) + S(2) * n_env) * eta + f * (S(1) - eta) * c2, f * c2, f * sqrt(S(1) - eta) * s2};
}

// alpha is the travelling mode, beta the retained one.
template <typename S> StandardTwoModeState<S> asymmetric_state(const SqueezedSource<S> &src, const ChannelParams<S> &ch) {
    src.validate();
    ch.validate();
    return asymmetric_state_eta(src, ch.n_env, effective_reflectivity(ch));
}

template <typename S>
StandardTwoModeState<S> symmetric_state_eta(const SqueezedSource<S> &src, S n1, S eta1, S n2, S eta2) {
    using std::cosh;
    using std::sinh;
    using std::sqrt;
    S f = S(1) + S(2) * src.n;
    S c2 = cosh(S(2) * src.r), s2 = sinh(S(2) * src.r);
    return {(S(1) + S(2) * n1) * eta1 + f * (S(1) - eta1) * c2, (S(1) + S(2) * n2) * eta2 + f * (S(1) - eta2) * c2,
            f * sqrt((S(1) - eta1) * (S(1) - eta2)) * s2};
}

template <typename S>
StandardTwoModeState<S> symmetric_state(const SqueezedSource<S> &src, const ChannelParams<S> &ch1,
                                        const ChannelParams<S> &ch2) {
    src.validate();
    ch1.validate();
    ch2.validate();
    return symmetric_state_eta(src, ch1.n_env, effective_reflectivity(ch1), ch2.n_env, effective_reflectivity(ch2));
}

// Source in the middle: each arm covers half of ch.length.
template <typename S> StandardTwoModeState<S> symmetric_state(const SqueezedSource<S> &src, const ChannelParams<S> &ch) {
    auto half = ch.with_length(ch.length / S(2));
    return symmetric_state(src, half, half);
}

template <typename S> StandardTwoModeState<S> lossy_state(const SqueezedSource<S> &src, const ChannelParams<S> &ch,
                                                         Geometry g) {
    return g == Geometry::Asymmetric ? asymmetric_state(src, ch) : symmetric_state(src, ch);
}

template <typename S> S max_reflectivity(const SqueezedSource<S> &src, S n_env) {
    using std::cosh;
    if (!src.entangled())
        throw DomainError("source not entangled");
    if (n_env == S(0))
        return S(1);
    S n = src.n;
    S inner = S(1) + S(2) * n * (S(1) + n) / (S(1) - (S(1) + S(2) * n) * cosh(S(2) * src.r));
    return S(1) / (S(1) + n_env / inner);
}

// Per-arm reflectivity at which the symmetric state becomes separable.
template <typename S> S max_reflectivity_symmetric(const SqueezedSource<S> &src, S n_env) {
    if (!src.entangled())
        throw DomainError("source not entangled");
    S nu = src.input_eigenvalue();
    return (S(1) - nu) / (S(1) + S(2) * n_env - nu);
}

template <typename S> S max_distance(S eta_max, S mu, S eta_ant) {
    using std::log;
    if (!(eta_max > S(0) && eta_max <= S(1)))
        throw DomainError("max_distance: eta_max must lie in (0, 1]");
    if (eta_ant >= eta_max)
        throw Unreachable("entanglement does not survive the antenna");
    if (!(mu > S(0)))
        throw DomainError("max_distance: mu must be positive");
    return -log((S(1) - eta_max) / (S(1) - eta_ant)) / mu;
}

template <typename S> S max_distance(const SqueezedSource<S> &src, const ChannelParams<S> &ch, Geometry g) {
    if (g == Geometry::Asymmetric)
        return max_distance(max_reflectivity(src, ch.n_env), ch.mu, ch.eta_ant);
    return S(2) * max_distance(max_reflectivity_symmetric(src, ch.n_env), ch.mu, ch.eta_ant);
}

// Independent route: bisection of nu_minus(L) = 1.
template <typename S>
S max_distance_bisection(const SqueezedSource<S> &src, const ChannelParams<S> &ch, Geometry g,
                         BisectionOptions opt = {1e-4, 200}) {
    if (!src.entangled())
        throw DomainError("source not entangled");
    auto f = [&](S l) { return S(1) - pt_symplectic_eigenvalue_minus(lossy_state(src, ch.with_length(l), g)); };
    if (!(f(S(0)) > S(0)))
        throw Unreachable("entanglement does not survive the antenna");
    S step = ch.mu > S(0) ? S(1e-3) / ch.mu : S(1e3);
    return first_crossing(f, step, opt);
}

template <typename S> struct ApproxEigenvalue {
    S nu_minus;
    bool outside_regime;   // eta_ant * n_env >= 0.1
};

template <typename S> ApproxEigenvalue<S> approx_output_eigenvalue(const SqueezedSource<S> &src, S n_env, S eta_ant) {
    return {src.input_eigenvalue() + (S(0.5) + n_env) * eta_ant, eta_ant * n_env >= S(0.1)};
}

template <typename S> StandardTwoModeState<S> hemt_amplify(const StandardTwoModeState<S> &st, S gain, S n_amp, Mode mode) {
    using std::sqrt;
    if (!(gain >= S(1)) || !(n_amp >= S(0)))
        throw DomainError("hemt_amplify: need gain >= 1 and n_amp >= 0");
    StandardTwoModeState<S> out = st;
    S &v = mode == Mode::A ? out.alpha : out.beta;
    v = gain * v + (gain - S(1)) * (S(1) + S(2) * n_amp);
    out.gamma = sqrt(gain) * st.gamma;
    return out;
}

using Channel = ChannelParams<double>;
using Source = SqueezedSource<double>;

}  // namespace cvml

#endif
