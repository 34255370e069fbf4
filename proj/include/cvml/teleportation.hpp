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

#ifndef CVML_TELEPORTATION_HPP
#define CVML_TELEPORTATION_HPP

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "cvml/channel.hpp"
#include "cvml/distillation.hpp"
#include "cvml/errors.hpp"
#include "cvml/gaussian.hpp"
#include "cvml/solvers.hpp"
#include "cvml/swapping.hpp"

namespace cvml {

enum class ResourceTag { TMSV, PS2_TMSV, PS4_TMSV, TMSTAsym, TMSTSym, PS2Prob, PS2Heur, ES, KConcat };

inline std::string_view to_string(ResourceTag t) {
    switch (t) {
    case ResourceTag::TMSV: return "tmsv";
    case ResourceTag::PS2_TMSV: return "2ps-tmsv";
    case ResourceTag::PS4_TMSV: return "4ps-tmsv";
    case ResourceTag::TMSTAsym: return "tmst-asym";
    case ResourceTag::TMSTSym: return "tmst-sym";
    case ResourceTag::PS2Prob: return "2ps-prob";
    case ResourceTag::PS2Heur: return "2ps-heur";
    case ResourceTag::ES: return "es";
    case ResourceTag::KConcat: return "k-concat";
    }
    return "?";
}

inline std::optional<ResourceTag> parse_resource_tag(std::string_view s) {
    for (auto t : {ResourceTag::TMSV, ResourceTag::PS2_TMSV, ResourceTag::PS4_TMSV, ResourceTag::TMSTAsym,
                   ResourceTag::TMSTSym, ResourceTag::PS2Prob, ResourceTag::PS2Heur, ResourceTag::ES,
                   ResourceTag::KConcat})
        if (to_string(t) == s)
            return t;
    return std::nullopt;
}

template <typename S> struct FidelityResult {
    S fidelity;
    ResourceTag tag;
    bool beats_classical;
};

template <typename S> FidelityResult<S> make_fidelity(S f, ResourceTag tag) {
    if (!(f >= S(0) && f <= S(1) + S(1e-12)))
        throw DomainError("fidelity outside [0, 1]");
    return {f, tag, f > S(0.5)};
}

// 1 / sqrt(det(I + Gamma/2)) for arbitrary blocks.
template <typename S> S gaussian_fidelity_det(const TwoModeCovariance<S> &c) {
    using std::sqrt;
    require_zero_displacement(c, "gaussian_fidelity");
    const Mat2<S> a = Mat2<S>::Identity() + S(0.5) * teleportation_gamma(c.sigma_a(), c.sigma_b(), c.epsilon());
    return S(1) / sqrt(a.determinant());
}

template <typename S> S gaussian_fidelity_scalar(const StandardTwoModeState<S> &st) {
    return S(1) / (S(1) + (st.alpha + st.beta - S(2) * st.gamma) / S(2));
}

template <typename S> FidelityResult<S> gaussian_fidelity(const StandardTwoModeState<S> &st, ResourceTag tag = ResourceTag::TMSV) {
    return make_fidelity(gaussian_fidelity_scalar(st), tag);
}

template <typename S> FidelityResult<S> gaussian_fidelity(const TwoModeCovariance<S> &c, ResourceTag tag = ResourceTag::TMSV) {
    return make_fidelity(gaussian_fidelity_det(c), tag);
}

template <typename S> FidelityResult<S> fidelity_ps_tmsv(unsigned k, S l) {
    using std::pow;
    if (!(l >= S(0) && l < S(1)))
        throw DomainError("fidelity_ps_tmsv: lambda_tau must lie in [0, 1)");
    if (k == 1)
        return make_fidelity((S(1) - l + l * l / S(2)) * pow(S(1) + l, 3) / (S(2) * (S(1) + l * l)), ResourceTag::PS2_TMSV);
    if (k == 2) {
        const S u = l * (S(2) - l);
        return make_fidelity(pow(S(1) + l, 5) * (S(8) - u * (S(8) - S(3) * u)) / (S(16) * (S(1) + S(4) * l * l + pow(l, 4))),
                             ResourceTag::PS4_TMSV);
    }
    throw DomainError("fidelity_ps_tmsv: k must be 1 or 2");
}

template <typename S> FidelityResult<S> fidelity_tmst(const StandardTwoModeState<S> &st, ResourceTag tag = ResourceTag::TMSTAsym) {
    return gaussian_fidelity(st, tag);
}

template <typename S> FidelityResult<S> fidelity_k_concat(const StandardTwoModeState<S> &st, unsigned k) {
    if (k < 1)
        throw DomainError("fidelity_k_concat: k must be positive");
    return make_fidelity(S(1) / (S(1) + (S(k) - S(0.5)) * (st.alpha + st.beta - S(2) * st.gamma)), ResourceTag::KConcat);
}

// Closed form of (1 + g) / sqrt(det(I + Gamma~/2)) for standard-form inputs.
template <typename S> FidelityResult<S> fidelity_2ps_general(const StandardTwoModeState<S> &st, S t) {
    if (!(t > S(0) && t < S(1)))
        throw DomainError("fidelity_2ps_general: tau must lie in (0, 1)");
    const S a = st.alpha, b = st.beta, c = st.gamma;
    const S k = (S(1) - a) * (S(1) - b) - c * c;
    const S f1 = S(1) + t * (-a * b + (S(1) + c) * (S(1) + c) + k * t) /
                            ((S(1) + a) * (S(1) + b) - c * c - (a * b - (S(1) - c) * (S(1) - c)) * t);
    const S u = S(1) - a * b + c * c + k * t;
    const S base = S(1) - a * b + c * c;
    const S f2 = S(1) + (base * base - (a - b) * (a - b) + S(4) * c * c + S(4) * c * k * t) /
                            (u * u - (a - b) * (a - b) + S(4) * c * c);
    return make_fidelity(f1 * f1 * f1 * f2 / S(4), ResourceTag::PS2Prob);
}

template <typename S> FidelityResult<S> fidelity_heuristic_2ps(const StandardTwoModeState<S> &st) {
    return make_fidelity(resource_fidelity(heuristic_2ps_corrections(st)), ResourceTag::PS2Heur);
}

template <typename S> FidelityResult<S> fidelity_entanglement_swap(const SqueezedSource<S> &src, const ChannelParams<S> &ch) {
    const auto link = asymmetric_state(src, ch.with_length(ch.length / S(2)));
    const S a = link.beta, b = link.alpha, c = link.gamma;   // retained, travelling
    return make_fidelity(S(1) / (S(1) + a - c * c / b), ResourceTag::ES);
}

template <typename S> struct FidelityScenario {
    SqueezedSource<S> source;
    ChannelParams<S> channel;
    S tau{0.95};
    Geometry geometry{Geometry::Asymmetric};   // for the photon-subtracted tags
    unsigned k{2};                             // for k-concat
};

template <typename S> S fidelity_at(ResourceTag tag, const FidelityScenario<S> &sc, S length) {
    const auto ch = sc.channel.with_length(length);
    switch (tag) {
    case ResourceTag::TMSTAsym: return fidelity_tmst(asymmetric_state(sc.source, ch)).fidelity;
    case ResourceTag::TMSTSym: return fidelity_tmst(symmetric_state(sc.source, ch), tag).fidelity;
    case ResourceTag::PS2Prob: return fidelity_2ps_general(lossy_state(sc.source, ch, sc.geometry), sc.tau).fidelity;
    case ResourceTag::PS2Heur: return fidelity_heuristic_2ps(lossy_state(sc.source, ch, sc.geometry)).fidelity;
    case ResourceTag::ES: return fidelity_entanglement_swap(sc.source, ch).fidelity;
    case ResourceTag::KConcat: return fidelity_k_concat(asymmetric_state(sc.source, ch), sc.k).fidelity;
    default: throw DomainError("fidelity_at: resource does not depend on distance");
    }
}

// Distance at which the fidelity drops to the classical bound 1/2.
template <typename S> S classical_limit_distance(ResourceTag tag, const FidelityScenario<S> &sc, BisectionOptions opt = {}) {
    auto f = [&](S l) { return fidelity_at(tag, sc, l) - (S(0.5) + S(1e-12)); };
    if (!(f(S(0)) > S(0)))
        throw NeverQuantum("fidelity does not exceed 1/2 at zero distance");
    return first_crossing(f, S(1), opt);
}

}  // namespace cvml

#endif
