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

#include "doctest.h"
#include "oracles.hpp"

using namespace cvml;
using doctest::Approx;

namespace {
const Source kSource{1.0, 0.01};
const Channel kChannel{1.44e-6, 1250, 0, 0};
FidelityScenario<double> table1() { return {kSource, kChannel, 0.95, Geometry::Asymmetric, 2}; }
}  // namespace

TEST_CASE("gaussian fidelity") {
    CHECK(gaussian_fidelity(StandardState{1, 1, 0}).fidelity == Approx(0.5));
    CHECK_FALSE(gaussian_fidelity(StandardState{1, 1, 0}).beats_classical);
    for (int i = 0; i <= 300; ++i) {
        double r = i / 100.0;
        CHECK(gaussian_fidelity(tmsv(r)).fidelity == Approx((1 + std::tanh(r)) / 2).epsilon(1e-12));
    }
    auto t = tmst(1.0, 0.01);
    CHECK(gaussian_fidelity(t).fidelity == Approx(1 / (1 + 1.02 * std::exp(-2.0))).epsilon(1e-12));
    CHECK(gaussian_fidelity(t).fidelity == Approx(0.8787).epsilon(1e-4));
    CHECK(gaussian_fidelity(Covariance(t)).fidelity == Approx(gaussian_fidelity(t).fidelity).epsilon(1e-12));
    CHECK(gaussian_fidelity(tmsv(12.0)).fidelity == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("property: determinant and scalar routes agree") {
    oracle::Rng rng;
    for (int i = 0; i < 10000; ++i) {
        auto s = oracle::random_state(rng);
        double a = gaussian_fidelity_det(Covariance(s)), b = gaussian_fidelity_scalar(s);
        CHECK(oracle::rel_err(a, b) < 1e-12);
        CHECK(b > 0.0);
        CHECK(b <= 1.0);
    }
    for (int i = 0; i < 2000; ++i) {
        Source src{rng.uniform(0.01, 2), rng.uniform(0, 0.5)};
        double eta = rng.uniform(0, 0.9), n = rng.uniform(0, 50);
        auto s = symmetric_state_eta(src, n, eta, n, eta);
        double nu = pt_symplectic_eigenvalue_minus(s);
        if (std::abs(nu - 1) > 1e-9)
            CHECK((gaussian_fidelity_scalar(s) > 0.5) == (nu < 1));
        CHECK(gaussian_fidelity_scalar(s) == Approx(1 / (1 + nu)).epsilon(1e-12));
    }
}

TEST_CASE("photon-subtracted squeezed vacuum fidelities") {
    CHECK(fidelity_ps_tmsv(1, 0.0).fidelity == Approx(0.5));
    CHECK(fidelity_ps_tmsv(2, 0.0).fidelity == Approx(0.5));
    CHECK(fidelity_ps_tmsv(1, 0.5).fidelity == Approx(0.84375).epsilon(1e-14));
    CHECK_THROWS_AS(fidelity_ps_tmsv(3, 0.5), DomainError);
    CHECK_THROWS_AS(fidelity_ps_tmsv(1, 1.0), DomainError);
    // overlap-quadrature oracle: heuristic CF of a squeezed vacuum with lambda = 0.5
    auto s = tmsv(std::atanh(0.5));
    auto hw = make_heuristic_workspace(s);
    double fq = oracle::overlap_fidelity([&](const Vec4<double> &p) { return heuristic_cf(hw, p).real(); });
    CHECK(fq == Approx(0.84375).epsilon(1e-6));
    // crossing with the bare squeezed vacuum for tau = 0.95
    auto diff = [](double r) { return fidelity_ps_tmsv(1, std::tanh(r) * 0.95).fidelity - (1 + std::tanh(r)) / 2; };
    CHECK(diff(0.2) > 0);
    CHECK(diff(2.5) < 0);
    double rx = bisect(diff, 0.2, 2.5, {1e-10, 200});
    CHECK(std::abs(diff(rx)) < 1e-8);
    // 4PS closed form against the two-fold heuristic picture: both lie above TMSV at small r
    CHECK(fidelity_ps_tmsv(2, std::tanh(0.3)).fidelity > (1 + std::tanh(0.3)) / 2);
}

TEST_CASE("lossy two-mode squeezed thermal fidelity") {
    auto a = fidelity_tmst(asymmetric_state(kSource, kChannel.with_length(1.0)));
    auto s = fidelity_tmst(symmetric_state(kSource, kChannel.with_length(1.0)), ResourceTag::TMSTSym);
    CHECK(std::abs(a.fidelity - s.fidelity) < 1e-6);
    CHECK(s.tag == ResourceTag::TMSTSym);
    CHECK(classical_limit_distance(ResourceTag::TMSTAsym, table1()) == Approx(478.87).epsilon(1e-4));
    auto dead = asymmetric_state_eta(kSource, 1250.0, 1.0);
    CHECK(fidelity_tmst(dead).fidelity < 0.5);
    double prev = 2;
    for (int l = 0; l <= 1000; l += 10) {
        double f = fidelity_at(ResourceTag::TMSTAsym, table1(), double(l));
        CHECK(f < prev);
        prev = f;
    }
}

TEST_CASE("concatenated teleportation") {
    auto t = tmst(1.0, 0.01);
    CHECK(fidelity_k_concat(t, 1).fidelity == Approx(gaussian_fidelity(t).fidelity).epsilon(1e-14));
    CHECK(fidelity_k_concat(tmsv(1.0), 2).fidelity == Approx(1 / (1 + 3 * std::exp(-2.0))).epsilon(1e-12));
    CHECK(fidelity_k_concat(tmsv(1.0), 2).fidelity == Approx(0.7112).epsilon(1e-4));
    oracle::Rng rng;
    for (int i = 0; i < 200; ++i) {
        auto s = oracle::random_entangled_state(rng);
        for (unsigned k = 1; k < 6; ++k)
            CHECK(fidelity_k_concat(s, k + 1).fidelity < fidelity_k_concat(s, k).fidelity);
    }
    CHECK_THROWS_AS(fidelity_k_concat(t, 0), DomainError);
}

TEST_CASE("two-photon subtraction fidelity") {
    oracle::Rng rng;
    for (int i = 0; i < 100; ++i) {
        auto s = oracle::random_state(rng);
        double tau = rng.uniform(0.5, 0.99);
        double closed = fidelity_2ps_general(s, tau).fidelity;
        double via_g = resource_fidelity(probabilistic_2ps_standard(s, tau));
        CHECK(oracle::rel_err(closed, via_g) < 1e-8);
    }
    for (double r : {0.2, 1.0, 2.0})
        CHECK(fidelity_2ps_general(tmsv(r), 0.95).fidelity ==
              Approx(fidelity_ps_tmsv(1, 0.95 * std::tanh(r)).fidelity).epsilon(1e-10));
    auto s0 = asymmetric_state(kSource, kChannel);
    CHECK(fidelity_2ps_general(s0, 0.95).fidelity > fidelity_tmst(s0).fidelity);
    auto s400 = asymmetric_state(kSource, kChannel.with_length(400.0));
    CHECK(fidelity_2ps_general(s400, 0.95).fidelity < fidelity_tmst(s400).fidelity);
    CHECK(fidelity_2ps_general(s400, 0.95).fidelity == Approx(0.50382).epsilon(1e-4));
    // the re-Gaussified state carries exactly the same fidelity
    for (int i = 0; i < 100; ++i) {
        auto s = oracle::random_state(rng);
        auto res = probabilistic_2ps_standard(s, 0.9);
        CHECK(gaussian_fidelity(regaussify(res, Geometry::Symmetric)).fidelity ==
              Approx(resource_fidelity(res)).epsilon(1e-12));
    }
}

TEST_CASE("heuristic fidelity") {
    CHECK(fidelity_heuristic_2ps(tmsv(1.0)).fidelity == Approx(fidelity_ps_tmsv(1, std::tanh(1.0)).fidelity).epsilon(1e-10));
    auto s0 = asymmetric_state(kSource, kChannel);
    CHECK(fidelity_heuristic_2ps(s0).fidelity > fidelity_2ps_general(s0, 0.95).fidelity);
    CHECK_THROWS_AS(fidelity_heuristic_2ps(StandardState{1, 1, 0}), SingularWorkspace);
    // agreement with the probabilistic route as tau -> 1
    oracle::Rng rng;
    for (int i = 0; i < 50; ++i) {
        auto s = oracle::random_entangled_state(rng);
        double h = fidelity_heuristic_2ps(s).fidelity;
        CHECK(std::abs(fidelity_2ps_general(s, 1 - 1e-5).fidelity - h) < 1e-3);
    }
}

TEST_CASE("entanglement swapping fidelity") {
    Source pure{1.0, 0.0};
    auto f0 = fidelity_entanglement_swap(pure, kChannel);
    CHECK(f0.fidelity == Approx(1 / (1 + 1 / std::cosh(2.0))).epsilon(1e-12));
    CHECK(f0.fidelity == Approx(0.7900).epsilon(1e-4));
    auto t = tmsv(1.0);
    CHECK(gaussian_fidelity(swap(Covariance(t), Covariance(t))).fidelity == Approx(f0.fidelity).epsilon(1e-12));
    for (double l : {0.0, 100.0, 350.0, 700.0}) {
        auto ch = kChannel.with_length(l);
        CHECK(fidelity_entanglement_swap(kSource, ch).fidelity ==
              Approx(gaussian_fidelity(optimal_swap_resource(kSource, ch)).fidelity).epsilon(1e-12));
    }
    double bare = classical_limit_distance(ResourceTag::TMSTAsym, table1());
    double es = classical_limit_distance(ResourceTag::ES, table1());
    CHECK(es / bare == Approx(1.14295).epsilon(1e-4));
    auto dead = asymmetric_state_eta(kSource, 1250.0, 1.0);
    CHECK(1 / (1 + dead.beta) < 0.5);
}

TEST_CASE("classical limit distance") {
    auto sc = table1();
    CHECK(classical_limit_distance(ResourceTag::TMSTAsym, sc) == Approx(478.8655).epsilon(1e-5));
    CHECK(classical_limit_distance(ResourceTag::TMSTSym, sc) == Approx(478.7830).epsilon(1e-5));
    CHECK(classical_limit_distance(ResourceTag::PS2Prob, sc) < classical_limit_distance(ResourceTag::TMSTAsym, sc));
    auto k2 = classical_limit_distance(ResourceTag::KConcat, sc);
    CHECK(k2 < classical_limit_distance(ResourceTag::TMSTAsym, sc));
    sc.source = {0.0, 0.0};
    CHECK_THROWS_AS(classical_limit_distance(ResourceTag::TMSTAsym, sc), NeverQuantum);
    CHECK_THROWS_AS(fidelity_at(ResourceTag::TMSV, table1(), 0.0), DomainError);
}

TEST_CASE("resource tags round-trip") {
    for (auto t : {ResourceTag::TMSV, ResourceTag::PS2_TMSV, ResourceTag::PS4_TMSV, ResourceTag::TMSTAsym,
                   ResourceTag::TMSTSym, ResourceTag::PS2Prob, ResourceTag::PS2Heur, ResourceTag::ES, ResourceTag::KConcat})
        CHECK(parse_resource_tag(to_string(t)) == t);
    CHECK_FALSE(parse_resource_tag("bogus").has_value());
}
