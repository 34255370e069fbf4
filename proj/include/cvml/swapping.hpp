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

#ifndef CVML_SWAPPING_HPP
#define CVML_SWAPPING_HPP

#include <cmath>

#include "cvml/channel.hpp"
#include "cvml/errors.hpp"
#include "cvml/gaussian.hpp"

namespace cvml {

// Homodyne Bell measurement on modes B and C of (A,B) x (C,D); returns the conditional (A,D) state.
// With M = Sigma_B + Z Sigma_C Z the update is eps M^{-1} eps^T, i.e. adj(M) / det M; adj(M) = M whenever
// M is proportional to the identity, which covers every standard-form input.
template <typename S> TwoModeCovariance<S> swap(const TwoModeCovariance<S> &ab, const TwoModeCovariance<S> &cd) {
    using std::abs;
    require_zero_displacement(ab, "swap");
    require_zero_displacement(cd, "swap");
    const Mat2<S> z = sigma_z<S>(), om = omega1<S>();
    const Mat2<S> sb = ab.sigma_b(), sc = cd.sigma_a();
    const Mat2<S> e1 = ab.epsilon(), e2 = cd.epsilon();
    const Mat2<S> m = sb + z * sc * z;
    const S d = m.determinant();
    if (abs(d) < S(tol::singular))
        throw SingularMeasurement("swap: det(Sigma_B + Z Sigma_C Z) vanishes");
    const Mat2<S> adj = om * m * om.transpose();
    const Mat2<S> adj_d = z * adj * z;
    return TwoModeCovariance<S>(ab.sigma_a() - e1 * adj * e1.transpose() / d,
                                cd.sigma_b() - e2.transpose() * adj_d * e2 / d,
                                e1 * adj * z * e2 / d);
}

// Both links equal; beta is the mode sent to the measurement.
template <typename S> StandardTwoModeState<S> swap_symmetric(const StandardTwoModeState<S> &st) {
    const S t = st.gamma * st.gamma / (S(2) * st.beta);
    return {st.alpha - t, st.alpha - t, t};
}

template <typename S> S swap_condition(const StandardTwoModeState<S> &st) {
    using std::abs;
    using std::sqrt;
    if (!(st.alpha > S(0)))
        throw DomainError("swap_condition: alpha must be positive");
    return abs(sqrt(st.det_sigma()) - st.beta / st.alpha);
}

// Two asymmetric links with the travelling modes meeting at the middle node. split is the fraction
// of the Alice-Bob distance covered by Alice's link.
template <typename S>
StandardTwoModeState<S> optimal_swap_resource(const SqueezedSource<S> &src, const ChannelParams<S> &ch, S split = S(0.5)) {
    if (!(split >= S(0) && split <= S(1)))
        throw DomainError("optimal_swap_resource: split must lie in [0, 1]");
    const auto l1 = asymmetric_state(src, ch.with_length(ch.length * split));
    const auto l2 = asymmetric_state(src, ch.with_length(ch.length * (S(1) - split)));
    // asymmetric_state puts the travelling mode first
    const S den = l1.alpha + l2.alpha;
    return {l1.beta - l1.gamma * l1.gamma / den, l2.beta - l2.gamma * l2.gamma / den, l1.gamma * l2.gamma / den};
}

}  // namespace cvml

#endif
