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

#ifndef CVML_SPECIAL_HPP
#define CVML_SPECIAL_HPP

#include <cmath>
#include <cstdint>

#include "cvml/errors.hpp"

namespace cvml {

namespace constants {
inline constexpr double planck = 6.62607015e-34;     // J s
inline constexpr double boltzmann = 1.380649e-23;    // J / K
inline constexpr double pi = 3.14159265358979323846;
}  // namespace constants

// 2F1(k+1, k+1; 1; z) = sum_n C(n+k, k)^2 z^n.
template <typename S> S hyp2f1_diag(unsigned k, S z, S rel_tol = S(1e-14), std::int64_t max_terms = 1000000) {
    if (!(z >= S(0) && z < S(1) - S(1e-12)))
        throw DomainError("hyp2f1_diag: z must lie in [0, 1)");
    S term(1), sum(1);
    for (std::int64_t n = 0; n < max_terms; ++n) {
        S q = S(n + k + 1) / S(n + 1);
        S ratio = z * q * q;
        term *= ratio;
        sum += term;
        // ratios decrease monotonically towards z, so the tail is bounded geometrically
        if (ratio < S(1)) {
            S next = z * (S(n + k + 2) / S(n + 2)) * (S(n + k + 2) / S(n + 2));
            if (next < S(1) && term * next / (S(1) - next) <= rel_tol * sum)
                return sum;
        }
    }
    throw ConvergenceError("hyp2f1_diag: term cap reached");
}

template <typename S> S bose_einstein_occupation(S frequency, S temperature) {
    using std::expm1;
    if (!(frequency > S(0)) || !(temperature >= S(0)))
        throw DomainError("bose_einstein_occupation: need frequency > 0 and temperature >= 0");
    if (temperature == S(0))
        return S(0);
    S x = S(constants::planck) * frequency / (S(constants::boltzmann) * temperature);
    return S(1) / expm1(x);
}

}  // namespace cvml

#endif
