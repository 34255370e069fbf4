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
}  // namespace

TEST_CASE("reflectivities") {
    CHECK(env_reflectivity(1.44e-6, 0.0) == 0.0);
    CHECK(env_reflectivity(1.44e-6, 550.0) == Approx(1 - std::exp(-7.92e-4)).epsilon(1e-12));
    CHECK(env_reflectivity(1.44e-6, 550.0) == Approx(7.917e-4).epsilon(1e-4));
    CHECK(env_reflectivity(1.0, 1e6) == 1.0);
    CHECK(env_reflectivity(1.0, 10.0) < 1.0);
    CHECK_THROWS_AS(env_reflectivity(-1.0, 1.0), DomainError);
    CHECK(effective_reflectivity(0.0, 2e-3, 300.0) == Approx(env_reflectivity(2e-3, 300.0)).epsilon(1e-14));
    CHECK(effective_reflectivity(0.3, 1.44e-6, 0.0) == Approx(0.3));
    CHECK(effective_reflectivity(1e-9, 1.44e-6, 100.0) == Approx(1 - std::exp(-1.44e-4) * (1 - 1e-9)).epsilon(1e-12));
    CHECK(effective_reflectivity(1e-9, 1.44e-6, 100.0) == Approx(1.439906e-4).epsilon(1e-6));
}

TEST_CASE("inhomogeneous channel") {
    const double L = 800, mu0 = 2e-4, n0 = 37;
    auto p = make_profile<double>([&](double) { return mu0; }, [&](double) { return n0; }, L);
    auto r = inhomogeneous_effective(p);
    CHECK_FALSE(r.degenerate);
    CHECK(r.eta_env == Approx(env_reflectivity(mu0, L)).epsilon(1e-9));
    CHECK(r.n_th == Approx(n0).epsilon(1e-9));

    auto zero = make_profile<double>([](double) { return 0.0; }, [](double) { return 5.0; }, 100.0);
    auto z = inhomogeneous_effective(zero);
    CHECK(z.degenerate);
    CHECK(z.eta_env == 0.0);
    CHECK(z.n_th == 0.0);

    auto ramp = make_profile<double>([](double) { return 1e-3; }, [](double x) { return x / 1000.0; }, 1000.0);
    auto rr = inhomogeneous_effective(ramp);
    const double e = std::exp(1.0);
    double want = oracle::trapezoid([](double u) { return u * std::exp(u - 1); }, 0, 1, 100000) / (1 - std::exp(-1.0));
    CHECK(want == Approx(1 / (e - 1)).epsilon(1e-9));
    CHECK(rr.n_th == Approx(want).epsilon(1e-7));
    CHECK(rr.n_th == Approx(0.581977).epsilon(1e-5));

    // n_th never exceeds the hottest sample
    oracle::Rng rng;
    for (int i = 0; i < 20; ++i) {
        double a = rng.uniform(0, 5e-3), b = rng.uniform(0, 50), c = rng.uniform(0, 6);
        auto q = make_profile<double>([&](double x) { return a * (1 + std::sin(x / 50)); },
                                      [&](double x) { return b * (1 + std::cos(c * x / 300)); }, 600.0, 1024);
        auto res = inhomogeneous_effective(q);
        CHECK(res.n_th <= *std::max_element(q.n.begin(), q.n.end()) + 1e-12);
    }

    InhomogeneousProfile<double> bad{{0, 1, 1}, {1, 1, 1}, {0, 0, 0}};
    CHECK_THROWS_AS(inhomogeneous_effective(bad), DomainError);
}

TEST_CASE("asymmetric state") {
    Source src{0.7, 0.05};
    Channel ch{0, 40, 0, 0};
    auto s0 = asymmetric_state_eta(src, 40.0, 0.0);
    auto t = tmst(0.7, 0.05);
    CHECK(s0.alpha == Approx(t.alpha));
    CHECK(s0.beta == Approx(t.beta));
    CHECK(s0.gamma == Approx(t.gamma));
    CHECK(asymmetric_state(src, ch).alpha == Approx(t.alpha));
    auto s1 = asymmetric_state_eta(src, 40.0, 1.0);
    CHECK(s1.alpha == Approx(81.0));
    CHECK(s1.gamma == 0.0);
    CHECK(pt_symplectic_eigenvalue_minus(asymmetric_state(kSource, kChannel.with_length(551.0))) ==
          Approx(1.0).epsilon(1e-3));
}

TEST_CASE("symmetric state") {
    auto t = tmst(1.0, 0.01);
    auto s = symmetric_state(kSource, kChannel, kChannel);
    CHECK(s.alpha == Approx(t.alpha));
    CHECK(s.gamma == Approx(t.gamma));
    auto ch = kChannel.with_length(321.0);
    auto a = asymmetric_state(kSource, ch);
    auto b = symmetric_state(kSource, ch, kChannel);
    CHECK(b.alpha == Approx(a.alpha).epsilon(1e-14));
    CHECK(b.beta == Approx(a.beta).epsilon(1e-14));
    CHECK(b.gamma == Approx(a.gamma).epsilon(1e-14));
    CHECK(pt_symplectic_eigenvalue_minus(symmetric_state(kSource, kChannel.with_length(470.0))) < 1.0);
    CHECK(pt_symplectic_eigenvalue_minus(symmetric_state(kSource, kChannel.with_length(490.0))) > 1.0);
}

TEST_CASE("maximum reflectivity") {
    Source pure{0.8, 0.0};
    CHECK(max_reflectivity(pure, 1250.0) == Approx(1.0 / 1251.0).epsilon(1e-14));
    CHECK(max_reflectivity(kSource, 0.0) == 1.0);
    double emax = max_reflectivity(kSource, 1250.0);
    CHECK(emax == Approx(7.936743e-4).epsilon(1e-6));
    // oracle: bisection on nu_minus(eta) = 1
    auto f = [&](double eta) { return 1 - pt_symplectic_eigenvalue_minus(asymmetric_state_eta(kSource, 1250.0, eta)); };
    double eb = bisect(f, 0.0, 0.5, {1e-15, 400});
    CHECK(emax == Approx(eb).epsilon(1e-9));
    CHECK_THROWS_AS(max_reflectivity(Source{0.0, 0.0}, 1250.0), DomainError);
    CHECK_THROWS_AS(max_reflectivity(Source{1.0, 0.5}, 1250.0), DomainError);

    double es = max_reflectivity_symmetric(kSource, 1250.0);
    auto g = [&](double eta) {
        return 1 - pt_symplectic_eigenvalue_minus(symmetric_state_eta(kSource, 1250.0, eta, 1250.0, eta));
    };
    CHECK(es == Approx(bisect(g, 0.0, 0.5, {1e-15, 400})).epsilon(1e-9));
}

TEST_CASE("maximum distance") {
    double l = max_distance(max_reflectivity(kSource, 1250.0), 1.44e-6, 0.0);
    CHECK(l == Approx(551.38).epsilon(1e-4));
    CHECK(std::abs(l - 551) < 2);
    CHECK(max_distance(0.5, 1.0, 0.0) == Approx(std::log(2.0)));
    CHECK_THROWS_AS(max_distance(0.2, 1.0, 0.2), Unreachable);
    CHECK(std::abs(max_distance(kSource, kChannel, Geometry::Asymmetric) -
                   max_distance_bisection(kSource, kChannel, Geometry::Asymmetric)) < 0.01);
    double ls = max_distance(kSource, kChannel, Geometry::Symmetric);
    CHECK(std::abs(ls - max_distance_bisection(kSource, kChannel, Geometry::Symmetric)) < 0.01);
    CHECK(ls == Approx(478.783).epsilon(1e-5));
    // antenna loss shortens both
    Channel lossy = kChannel;
    lossy.eta_ant = 1e-4;
    CHECK(max_distance(kSource, lossy, Geometry::Asymmetric) < l);
    CHECK(std::abs(max_distance(kSource, lossy, Geometry::Symmetric) -
                   max_distance_bisection(kSource, lossy, Geometry::Symmetric)) < 0.01);
    // 10x attenuation shrinks reach 10x
    Channel dense = kChannel;
    dense.mu *= 10;
    CHECK(max_distance(kSource, dense, Geometry::Asymmetric) == Approx(l / 10).epsilon(1e-12));
}

TEST_CASE("low-reflectivity eigenvalue approximation") {
    CHECK(approx_output_eigenvalue(kSource, 1250.0, 0.0).nu_minus == Approx(1.02 * std::exp(-2.0)).epsilon(1e-14));
    auto a = approx_output_eigenvalue(kSource, 1250.0, 1e-6);
    CHECK_FALSE(a.outside_regime);
    CHECK(a.nu_minus == Approx(0.139293).epsilon(1e-5));
    Channel ch = kChannel;
    ch.eta_ant = 1e-6;
    double exact = pt_symplectic_eigenvalue_minus(asymmetric_state(kSource, ch));
    CHECK(std::abs(a.nu_minus - exact) / exact < 1e-5);
    Source strong{8.0, 0.0};
    auto b = approx_output_eigenvalue(strong, 1250.0, 1e-5);
    ch.eta_ant = 1e-5;
    CHECK(b.nu_minus == Approx(0.0125).epsilon(1e-3));
    CHECK(b.nu_minus == Approx(pt_symplectic_eigenvalue_minus(asymmetric_state(strong, ch))).epsilon(1e-3));
    CHECK(approx_output_eigenvalue(kSource, 1250.0, 1e-3).outside_regime);
}

TEST_CASE("hemt amplification") {
    auto t = tmst(1.0, 0.01);
    auto same = hemt_amplify(t, 1.0, 15.0, Mode::A);
    CHECK(same.alpha == t.alpha);
    CHECK(same.gamma == t.gamma);
    CHECK(pt_symplectic_eigenvalue_minus(hemt_amplify(t, 2000.0, 15.0, Mode::B)) > 1.0);
    auto v = hemt_amplify(StandardState{1, 1, 0}, 2.0, 0.0, Mode::A);
    CHECK(v.alpha == Approx(3.0));
    CHECK(v.beta == 1.0);
    CHECK_THROWS_AS(hemt_amplify(t, 0.5, 0.0, Mode::A), DomainError);

    // oracle: amplifier as a two-mode squeezer with a thermal idler, traced out
    double g = 3.7, na = 0.4;
    Eigen::Matrix<double, 6, 6> sig = Eigen::Matrix<double, 6, 6>::Identity();
    sig.block<4, 4>(0, 0) = Covariance(t).sigma;
    sig.block<2, 2>(4, 4) *= 1 + 2 * na;
    Eigen::Matrix<double, 6, 6> s = Eigen::Matrix<double, 6, 6>::Identity();
    double c = std::sqrt(g), d = std::sqrt(g - 1);
    s.block<2, 2>(2, 2) = c * Mat2<double>::Identity();
    s.block<2, 2>(2, 4) = d * sigma_z<double>();
    s.block<2, 2>(4, 2) = d * sigma_z<double>();
    s.block<2, 2>(4, 4) = c * Mat2<double>::Identity();
    Eigen::Matrix<double, 6, 6> out = s * sig * s.transpose();
    auto h = hemt_amplify(t, g, na, Mode::B);
    CHECK(out(2, 2) == Approx(h.beta).epsilon(1e-12));
    CHECK(out(0, 0) == Approx(h.alpha).epsilon(1e-12));
    CHECK(out(0, 2) == Approx(h.gamma).epsilon(1e-12));
}

TEST_CASE("property: entanglement degrades monotonically") {
    for (double eant : {0.0, 1e-5, 1e-4}) {
        Channel ch = kChannel;
        ch.eta_ant = eant;
        double prev = 0;
        for (int l = 0; l <= 1000; l += 5) {
            double nu = pt_symplectic_eigenvalue_minus(asymmetric_state(kSource, ch.with_length(l)));
            CHECK(nu >= prev);
            prev = nu;
        }
    }
    for (int l = 0; l <= 800; l += 50) {
        double prev = 0;
        for (double eant : {0.0, 1e-6, 1e-5, 1e-4, 1e-3}) {
            Channel ch = kChannel.with_length(l);
            ch.eta_ant = eant;
            double nu = pt_symplectic_eigenvalue_minus(asymmetric_state(kSource, ch));
            CHECK(nu >= prev);
            prev = nu;
        }
    }
}

TEST_CASE("property: lossy states are valid and amplification never helps") {
    oracle::Rng rng;
    for (int i = 0; i < 500; ++i) {
        Source src{rng.uniform(0, 2), rng.uniform(0, 0.5)};
        Channel c1{rng.uniform(0, 1e-3), rng.uniform(0, 2000), rng.uniform(0, 0.5), rng.uniform(0, 3000)};
        Channel c2{rng.uniform(0, 1e-3), rng.uniform(0, 2000), rng.uniform(0, 0.5), rng.uniform(0, 3000)};
        CHECK(validity_theta(asymmetric_state(src, c1)) >= -1e-9);
        CHECK(validity_theta(symmetric_state(src, c1, c2)) >= -1e-9);
        auto s = oracle::random_state(rng);
        double g = rng.uniform(1, 50), na = rng.uniform(0, 20);
        for (Mode m : {Mode::A, Mode::B})
            CHECK(negativity(hemt_amplify(s, g, na, m)) <= negativity(s) + 1e-12);
    }
}
