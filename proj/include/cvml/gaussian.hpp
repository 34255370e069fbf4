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

#ifndef CVML_GAUSSIAN_HPP
#define CVML_GAUSSIAN_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "cvml/errors.hpp"

namespace cvml {

template <typename S> using Mat2 = Eigen::Matrix<S, 2, 2>;
template <typename S> using Mat4 = Eigen::Matrix<S, 4, 4>;
template <typename S> using Vec2 = Eigen::Matrix<S, 2, 1>;
template <typename S> using Vec4 = Eigen::Matrix<S, 4, 1>;

namespace tol {
inline constexpr double symmetry = 1e-12;
inline constexpr double physical = 1e-9;
inline constexpr double singular = 1e-14;
}  // namespace tol

template <typename S> Mat2<S> omega1() {
    Mat2<S> w;
    w << S(0), S(1), S(-1), S(0);
    return w;
}

template <typename S> Mat4<S> symplectic_form() {
    Mat4<S> w = Mat4<S>::Zero();
    w.template block<2, 2>(0, 0) = omega1<S>();
    w.template block<2, 2>(2, 2) = omega1<S>();
    return w;
}

template <typename S> Mat2<S> sigma_z() { return Vec2<S>(S(1), S(-1)).asDiagonal(); }

// Sigma_A = alpha I, Sigma_B = beta I, eps_AB = gamma sigma_z.
template <typename S> struct StandardTwoModeState {
    S alpha{1};
    S beta{1};
    S gamma{0};

    S det_sigma() const {
        S d = alpha * beta - gamma * gamma;
        return d * d;
    }
};

template <typename S> struct TwoModeCovariance {
    Mat4<S> sigma = Mat4<S>::Identity();
    Vec4<S> displacement = Vec4<S>::Zero();

    TwoModeCovariance() = default;
    explicit TwoModeCovariance(const Mat4<S> &s, const Vec4<S> &d = Vec4<S>::Zero()) : sigma(s), displacement(d) {}
    TwoModeCovariance(const Mat2<S> &a, const Mat2<S> &b, const Mat2<S> &eps) {
        sigma.template block<2, 2>(0, 0) = a;
        sigma.template block<2, 2>(2, 2) = b;
        sigma.template block<2, 2>(0, 2) = eps;
        sigma.template block<2, 2>(2, 0) = eps.transpose();
    }
    explicit TwoModeCovariance(const StandardTwoModeState<S> &st)
        : TwoModeCovariance(st.alpha * Mat2<S>::Identity(), st.beta * Mat2<S>::Identity(), st.gamma * sigma_z<S>()) {}

    Mat2<S> sigma_a() const { return sigma.template block<2, 2>(0, 0); }
    Mat2<S> sigma_b() const { return sigma.template block<2, 2>(2, 2); }
    Mat2<S> epsilon() const { return sigma.template block<2, 2>(0, 2); }
    bool displaced() const { return displacement.squaredNorm() != S(0); }
};

template <typename S> void require_zero_displacement(const TwoModeCovariance<S> &c, const char *what) {
    if (c.displaced())
        throw DomainError(std::string(what) + ": nonzero displacement is not supported");
}

// Smallest eigenvalue of sigma + i Omega.
template <typename S> S uncertainty_margin(const Mat4<S> &sigma) {
    using C = std::complex<S>;
    Eigen::Matrix<C, 4, 4> m = sigma.template cast<C>() + C(0, 1) * symplectic_form<S>().template cast<C>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<C, 4, 4>> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

template <typename S> bool is_physical(const TwoModeCovariance<S> &c) {
    using std::abs;
    S scale = std::max(S(1), c.sigma.cwiseAbs().maxCoeff());
    if ((c.sigma - c.sigma.transpose()).cwiseAbs().maxCoeff() > S(tol::symmetry) * scale)
        return false;
    return uncertainty_margin(c.sigma) >= -S(tol::physical) * scale;
}

template <typename S> void validate(const TwoModeCovariance<S> &c) {
    if (!is_physical(c))
        throw NonPhysicalState("covariance violates symmetry or the uncertainty principle");
}

// Standard-form validity scalar; the state is physical iff it is >= -1e-9.
template <typename S> S validity_theta(const StandardTwoModeState<S> &st) {
    using std::abs;
    using std::sqrt;
    return abs(sqrt(st.det_sigma()) - S(1)) - abs(st.alpha - st.beta);
}

template <typename S> bool is_valid(const StandardTwoModeState<S> &st) {
    return st.alpha >= S(1) - S(tol::physical) && st.beta >= S(1) - S(tol::physical) &&
           validity_theta(st) >= -S(tol::physical);
}

template <typename S> struct PtEigenvalues {
    S minus;
    S plus;
};

namespace detail {
template <typename S> PtEigenvalues<S> pt_from_invariants(S delta, S det_sigma) {
    using std::abs;
    using std::sqrt;
    S disc = delta * delta - S(4) * det_sigma;
    S scale = std::max(S(1), delta * delta);
    if (disc < -S(tol::physical) * scale)
        throw NonPhysicalState("complex partially transposed symplectic eigenvalue");
    S root = sqrt(std::max(disc, S(0)));
    S lo = (delta - root) / S(2);
    // cancellation-free form for the small root
    if (delta > S(0) && det_sigma > S(0))
        lo = det_sigma / ((delta + root) / S(2));
    return {sqrt(std::max(lo, S(0))), sqrt((delta + root) / S(2))};
}
}  // namespace detail

template <typename S> PtEigenvalues<S> pt_symplectic_eigenvalues(const TwoModeCovariance<S> &c) {
    S delta = c.sigma_a().determinant() + c.sigma_b().determinant() - S(2) * c.epsilon().determinant();
    // fixed-size determinant() expands cofactors and loses digits on squeezed states
    return detail::pt_from_invariants(delta, c.sigma.partialPivLu().determinant());
}

template <typename S> PtEigenvalues<S> pt_symplectic_eigenvalues(const StandardTwoModeState<S> &st) {
    S delta = st.alpha * st.alpha + st.beta * st.beta + S(2) * st.gamma * st.gamma;
    return detail::pt_from_invariants(delta, st.det_sigma());
}

template <typename S> S pt_symplectic_eigenvalue_minus(const TwoModeCovariance<S> &c) {
    return pt_symplectic_eigenvalues(c).minus;
}

template <typename S> S pt_symplectic_eigenvalue_minus(const StandardTwoModeState<S> &st) {
    return pt_symplectic_eigenvalues(st).minus;
}

// Check path: moduli of the eigenvalues of i Omega P Sigma P, P flipping mode-B momentum.
template <typename S> PtEigenvalues<S> pt_symplectic_eigenvalues_numeric(const TwoModeCovariance<S> &c) {
    Mat4<S> p = Vec4<S>(S(1), S(1), S(1), S(-1)).asDiagonal();
    Mat4<S> m = symplectic_form<S>() * p * c.sigma * p;
    Eigen::EigenSolver<Mat4<S>> es(m, false);
    std::array<S, 4> mods;
    for (int i = 0; i < 4; ++i)
        mods[i] = std::abs(es.eigenvalues()[i]);
    std::sort(mods.begin(), mods.end());
    return {(mods[0] + mods[1]) / S(2), (mods[2] + mods[3]) / S(2)};
}

template <typename S> S negativity(S nu_minus) {
    if (!(nu_minus > S(0)))
        throw DomainError("negativity: nu_minus must be positive");
    return std::max(S(0), (S(1) - nu_minus) / (S(2) * nu_minus));
}

template <typename S> S log_negativity(S neg) {
    using std::log2;
    if (!(neg >= S(0)))
        throw DomainError("log_negativity: negativity must be nonnegative");
    return log2(S(2) * neg + S(1));
}

template <typename S> S negativity(const StandardTwoModeState<S> &st) {
    return negativity(pt_symplectic_eigenvalue_minus(st));
}

template <typename S> S log_negativity(const StandardTwoModeState<S> &st) { return log_negativity(negativity(st)); }

template <typename S> std::complex<S> gaussian_cf(const TwoModeCovariance<S> &c, const Vec4<S> &r) {
    using std::exp;
    Mat4<S> w = symplectic_form<S>();
    S quad = r.dot(w * c.sigma * w.transpose() * r);
    S phase = r.dot(w * c.displacement);
    return std::exp(std::complex<S>(-quad / S(4), -phase));
}

template <typename S> StandardTwoModeState<S> tmsv(S r) {
    using std::cosh;
    using std::sinh;
    return {cosh(S(2) * r), cosh(S(2) * r), sinh(S(2) * r)};
}

template <typename S> StandardTwoModeState<S> tmst(S r, S n) {
    using std::cosh;
    using std::sinh;
    S f = S(1) + S(2) * n;
    return {f * cosh(S(2) * r), f * cosh(S(2) * r), f * sinh(S(2) * r)};
}

using StandardState = StandardTwoModeState<double>;
using Covariance = TwoModeCovariance<double>;

}  // namespace cvml

#endif
