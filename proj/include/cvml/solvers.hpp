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

#ifndef CVML_SOLVERS_HPP
#define CVML_SOLVERS_HPP

#include <cmath>

#include "cvml/errors.hpp"

namespace cvml {

struct BisectionOptions {
    double abs_tol = 1e-3;
    int max_iter = 200;
};

// Root of f on [lo, hi] given f(lo) and f(hi) of opposite sign.
template <typename S, typename F> S bisect(F &&f, S lo, S hi, BisectionOptions opt = {}) {
    S flo = f(lo), fhi = f(hi);
    if (flo == S(0))
        return lo;
    if (fhi == S(0))
        return hi;
    if ((flo > S(0)) == (fhi > S(0)))
        throw ConvergenceError("bisect: root is not bracketed");
    for (int i = 0; i < opt.max_iter; ++i) {
        S mid = (lo + hi) / S(2);
        if (hi - lo <= S(opt.abs_tol))
            return mid;
        S fm = f(mid);
        if (fm == S(0))
            return mid;
        if ((fm > S(0)) == (flo > S(0))) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    if (hi - lo <= S(opt.abs_tol))
        return (lo + hi) / S(2);
    throw ConvergenceError("bisect: iteration cap reached");
}

// For f positive at 0 and eventually nonpositive: double the step until the sign changes, then bisect.
template <typename S, typename F> S first_crossing(F &&f, S initial_step, BisectionOptions opt = {}) {
    if (!(f(S(0)) > S(0)))
        throw DomainError("first_crossing: function must be positive at the origin");
    S lo(0), hi = initial_step;
    for (int i = 0; i < 200; ++i) {
        if (!(f(hi) > S(0)))
            return bisect(f, lo, hi, opt);
        lo = hi;
        hi *= S(2);
    }
    throw ConvergenceError("first_crossing: no sign change found");
}

}  // namespace cvml

#endif
