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

#ifndef CVML_SATELLITE_HPP
#define CVML_SATELLITE_HPP

#include <cmath>
#include <string_view>

#include "cvml/channel.hpp"
#include "cvml/errors.hpp"
#include "cvml/special.hpp"

namespace cvml {

template <typename S> struct LinkBudget {
    S wavelength{0.06};          // m
    S distance{1000};            // m
    S aperture{1};               // emitter aperture diameter a, m
    S efficiency{1};             // e_a
    S initial_spot{0.5};         // varpi_0, m
    S curvature{1000};           // R_0, m
    S receiver_aperture{1};      // a_R, m

    void validate() const {
        if (!(wavelength > S(0)) || !(distance >= S(0)) || !(aperture >= S(0)) || !(initial_spot > S(0)) ||
            !(receiver_aperture >= S(0)) || !(efficiency >= S(0) && efficiency <= S(1)) || curvature == S(0))
            throw DomainError("link budget parameters out of range");
    }
};

template <typename S> struct FriisResult {
    S transmissivity;
    S directivity;
    bool saturated;   // raw value exceeded 1 and was clamped
};

template <typename S> FriisResult<S> friis_path_transmissivity(const LinkBudget<S> &b) {
    const S pi = S(constants::pi);
    const S amp = pi * b.aperture * b.aperture * b.efficiency / (S(4) * b.distance * b.wavelength);
    const S raw = amp * amp;
    const S ratio = pi * b.aperture / b.wavelength;
    return {raw > S(1) ? S(1) : raw, ratio * ratio * b.efficiency, raw > S(1)};
}

template <typename S> S rayleigh_distance(const LinkBudget<S> &b) {
    return S(constants::pi) * b.initial_spot * b.initial_spot / b.wavelength / S(2);
}

template <typename S> S spot_size(const LinkBudget<S> &b) {
    using std::sqrt;
    if (!(b.initial_spot > S(0)))
        throw DomainError("spot_size: initial spot must be positive");
    const S u = S(1) - b.distance / b.curvature;
    const S v = b.distance / rayleigh_distance(b);
    return b.initial_spot / sqrt(S(2)) * sqrt(u * u + v * v);
}

template <typename S> S diffraction_transmissivity(const LinkBudget<S> &b) {
    using std::expm1;
    const S w = spot_size(b);
    return -expm1(-S(2) * b.receiver_aperture * b.receiver_aperture / (w * w));
}

enum class Region { NearField, Fresnel, FarField };
enum class NearFieldRule { Printed, Corrected };

inline std::string_view to_string(Region r) {
    switch (r) {
    case Region::NearField: return "near";
    case Region::Fresnel: return "fresnel";
    case Region::FarField: return "far";
    }
    return "?";
}

template <typename S> S near_field_boundary(S wavelength, S distance, NearFieldRule rule = NearFieldRule::Printed) {
    using std::cbrt;
    using std::sqrt;
    const S base = rule == NearFieldRule::Printed ? wavelength * distance / S(0.62) : distance * sqrt(wavelength) / S(0.62);
    const S c = cbrt(base);
    return c * c;
}

template <typename S> S far_field_boundary(S wavelength, S distance) { return std::sqrt(wavelength * distance / S(2)); }

template <typename S> Region region_classify(const LinkBudget<S> &b, NearFieldRule rule = NearFieldRule::Printed) {
    if (b.initial_spot <= far_field_boundary(b.wavelength, b.distance))
        return Region::FarField;
    if (b.initial_spot > near_field_boundary(b.wavelength, b.distance, rule))
        return Region::NearField;
    return Region::Fresnel;
}

// Largest reflectivity that keeps an n = 0 source entangled.
template <typename S> S preservation_threshold(Geometry g, S n_env, S r = S(1)) {
    using std::tanh;
    if (g == Geometry::Asymmetric)
        return S(1) / (S(1) + n_env);
    if (!(r > S(0)))
        throw DomainError("preservation_threshold: symmetric geometry needs r > 0");
    return S(1) / (S(1) + n_env * (S(1) + S(1) / tanh(r)));
}

template <typename S> S min_aperture_product(S distance, S wavelength, S eta_lim) {
    using std::log;
    using std::sqrt;
    if (!(eta_lim > S(0) && eta_lim < S(1)))
        throw DomainError("min_aperture_product: eta_lim must lie in (0, 1)");
    return distance * wavelength / S(constants::pi) * sqrt(-log(eta_lim));
}

using Link = LinkBudget<double>;

}  // namespace cvml

#endif
