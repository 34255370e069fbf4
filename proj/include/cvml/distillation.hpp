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

#ifndef CVML_DISTILLATION_HPP
#define CVML_DISTILLATION_HPP

#include <cmath>
#include <complex>

#include "cvml/channel.hpp"
#include "cvml/errors.hpp"
#include "cvml/gaussian.hpp"
#include "cvml/special.hpp"

namespace cvml {

// ---------------------------------------------------------------------------
// Photon-subtracted two-mode squeezed vacuum

template <typename S> S binomial(unsigned n, unsigned k) {
    S c(1);
    for (unsigned i = 1; i <= k; ++i)
        c = c * S(n - k + i) / S(i);
    return c;
}

template <typename S> void check_lambda_tau(S lambda, S tau) {
    if (!(lambda >= S(0) && lambda < S(1)) || !(tau > S(0) && tau <= S(1)))
        throw DomainError("photon subtraction: need lambda in [0,1) and tau in (0,1]");
}

// Amplitude of |n, n> once k photons have been removed from each mode (not normalised).
template <typename S> S tmsv_ps_coefficient(unsigned k, S lambda, S tau, unsigned n) {
    using std::pow;
    using std::sqrt;
    return sqrt(S(1) - lambda * lambda) * pow(lambda, S(n + k)) * binomial<S>(n + k, k) * pow(S(1) - tau, S(k)) *
           pow(tau, S(n));
}

template <typename S> S tmsv_ps_success_probability(unsigned k, S lambda, S tau) {
    using std::pow;
    check_lambda_tau(lambda, tau);
    S l2 = lambda * lambda, t = S(1) - tau;
    S z = l2 * tau * tau;
    switch (k) {
    case 1:
        return (S(1) - l2) * l2 * t * t * (S(1) + z) / pow(S(1) - z, 3);
    case 2:
        return (S(1) - l2) * l2 * l2 * pow(t, 4) * (S(1) + S(4) * z + z * z) / pow(S(1) - z, 5);
    default:
        return (S(1) - l2) * pow(lambda * t, S(2 * k)) * hyp2f1_diag(k, z);
    }
}

template <typename S> S tmsv_ps_negativity(unsigned k, S lambda_tau) {
    using std::pow;
    if (!(lambda_tau >= S(0) && lambda_tau < S(1)))
        throw DomainError("tmsv_ps_negativity: lambda_tau must lie in [0, 1)");
    S f = hyp2f1_diag(k, lambda_tau * lambda_tau);
    return (pow(S(1) - lambda_tau, -S(2 * (k + 1))) / f - S(1)) / S(2);
}

template <typename S> struct PhotonSubtractedTMSV {
    unsigned k;
    S lambda;
    S tau;

    S lambda_tau() const { return lambda * tau; }
    S success_probability() const { return tmsv_ps_success_probability(k, lambda, tau); }
    S coefficient(unsigned n) const { return tmsv_ps_coefficient(k, lambda, tau, n); }
    S negativity() const { return tmsv_ps_negativity(k, lambda_tau()); }
};

// ---------------------------------------------------------------------------
// Non-Gaussian resources after two-photon subtraction

enum class Flavor { Probabilistic, Heuristic };

template <typename S> struct NonGaussianResource {
    StandardTwoModeState<S> submatrices;   // Gaussian envelope
    S correction{0};                       // g (probabilistic) or h (heuristic)
    S success_probability{1};
    Flavor flavor{Flavor::Probabilistic};
    bool z_is_sigma_z{true};
};

// W_{X,M} = X^{-1} tr(X^{-1} M) - Omega M Omega^T / det X
template <typename S> Mat2<S> w_combinator(const Mat2<S> &x, const Mat2<S> &m) {
    Mat2<S> xi = x.inverse();
    Mat2<S> w = omega1<S>();
    return xi * (xi * m).trace() - w * m * w.transpose() / x.determinant();
}

template <typename S> struct ProbabilisticWorkspace {
    Mat2<S> xa, xb, h, y, xa_inv, y_inv, wx, wy;
    Mat2<S> j1, j2, k1, k2;
    Mat2<S> p1, p2, p12, q1, q2, q12, r1, r2, r12;
    Mat2<S> sigma_a, sigma_b, eps;   // output Gaussian envelope
    S m1, m2, m3;
    S probability;

    S norm() const { return m1 * m2 + m3; }
};

template <typename S>
ProbabilisticWorkspace<S> make_probabilistic_workspace(const Mat2<S> &sa, const Mat2<S> &sb, const Mat2<S> &e, S tau) {
    using std::abs;
    using std::sqrt;
    if (!(tau > S(0) && tau < S(1)))
        throw DomainError("probabilistic subtraction: tau must lie in (0, 1)");
    const Mat2<S> I = Mat2<S>::Identity(), om = omega1<S>(), omt = om.transpose();
    ProbabilisticWorkspace<S> w;
    w.xa = S(0.5) * om * ((S(1) - tau) * sa + (S(1) + tau) * I) * omt;
    w.xb = S(0.5) * om * ((S(1) - tau) * sb + (S(1) + tau) * I) * omt;
    w.h = -S(0.5) * (S(1) - tau) * om * e * omt;
    if (abs(w.xa.determinant()) < S(tol::singular))
        throw SingularWorkspace("det X_A vanishes");
    w.xa_inv = w.xa.inverse();
    w.y = w.xb - w.h * w.xa_inv * w.h;
    if (abs(w.y.determinant()) < S(tol::singular))
        throw SingularWorkspace("det Y vanishes");
    w.y_inv = w.y.inverse();
    w.wx = w_combinator(w.xa, I);
    w.wy = w_combinator(w.y, I);

    const Mat2<S> hwh = w.h * w.wx * w.h;
    w.m1 = S(1) - S(0.5) * w.y_inv.trace();
    w.m2 = S(1) - S(0.5) * w.xa_inv.trace() - S(0.5) * (w.y_inv * hwh).trace();
    w.m3 = S(0.5) * (w.wy * hwh).trace();

    const S s = S(0.5) * sqrt(tau * (S(1) - tau));
    w.k1 = s * (e * omt + (sa - I) * omt * w.xa_inv * w.h);
    w.k2 = s * ((sb - I) * omt + e * omt * w.xa_inv * w.h);
    w.j1 = s * (sa - I) * omt;
    w.j2 = s * e * omt;

    w.sigma_a = tau * sa + (S(1) - tau) * I - S(2) * (w.j1 * w.xa_inv * w.j1.transpose() + w.k1 * w.y_inv * w.k1.transpose());
    w.sigma_b = tau * sb + (S(1) - tau) * I - S(2) * (w.j2 * w.xa_inv * w.j2.transpose() + w.k2 * w.y_inv * w.k2.transpose());
    w.eps = tau * e - S(2) * (w.j1 * w.xa_inv * w.j2.transpose() + w.k1 * w.y_inv * w.k2.transpose());

    w.probability = w.norm() / sqrt(w.xa.determinant() * w.y.determinant());

    const Mat2<S> wyh = w_combinator(w.y, hwh);
    const Mat2<S> &j1 = w.j1, &j2 = w.j2, &k1 = w.k1, &k2 = w.k2, &wx = w.wx, &wy = w.wy, &yi = w.y_inv, &h = w.h;
    w.p1 = -S(0.5) * om * k1 * wy * k1.transpose() * omt;
    w.p2 = -S(0.5) * om * k2 * wy * k2.transpose() * omt;
    w.p12 = -om * k1 * wy * k2.transpose() * omt;
    w.q1 = -S(0.5) * om * (j1 * wx * j1.transpose() + S(2) * j1 * wx * h * yi * k1.transpose() + k1 * wyh * k1.transpose()) * omt;
    w.q2 = -S(0.5) * om * (j2 * wx * j2.transpose() + S(2) * j2 * wx * h * yi * k2.transpose() + k2 * wyh * k2.transpose()) * omt;
    w.q12 = -om *
            (j1 * wx * j2.transpose() + j1 * wx * h * yi * k2.transpose() + k1 * yi * h * wx * j2.transpose() +
             k1 * wyh * k2.transpose()) *
            omt;
    const Mat2<S> inner = wy * (yi * hwh).trace() + yi * (wy * hwh).trace() - om * hwh * omt / w.y.determinant() * yi.trace();
    w.r1 = om * (j1 * wx * h * wy * k1.transpose() + S(0.5) * k1 * inner * k1.transpose()) * omt;
    w.r2 = om * (j2 * wx * h * wy * k2.transpose() + S(0.5) * k2 * inner * k2.transpose()) * omt;
    w.r12 = om * (j1 * wx * h * wy * k2.transpose() + k1 * wy * h * wx * j2.transpose() + k1 * inner * k2.transpose()) * omt;

    if (!(w.norm() > S(0)))
        throw SingularWorkspace("normalisation m1 m2 + m3 is not positive");
    return w;
}

template <typename S> ProbabilisticWorkspace<S> make_probabilistic_workspace(const StandardTwoModeState<S> &st, S tau) {
    const Mat2<S> I = Mat2<S>::Identity();
    return make_probabilistic_workspace<S>(st.alpha * I, st.beta * I, st.gamma * sigma_z<S>(), tau);
}

// Teleportation matrix Gamma for general blocks.
template <typename S> Mat2<S> teleportation_gamma(const Mat2<S> &sa, const Mat2<S> &sb, const Mat2<S> &e) {
    const Mat2<S> z = sigma_z<S>();
    return z * sa * z + sb - z * e - e.transpose() * z;
}

template <typename S> S probabilistic_correction_g(const ProbabilisticWorkspace<S> &w) {
    const Mat2<S> I = Mat2<S>::Identity(), om = omega1<S>(), omt = om.transpose(), z = sigma_z<S>();
    const Mat2<S> a = I + S(0.5) * teleportation_gamma(w.sigma_a, w.sigma_b, w.eps);
    const Mat2<S> ai = om * a.inverse() * omt;
    const Mat2<S> pp = z * w.p1 * z + w.p2 + z * w.p12;
    const Mat2<S> qq = z * w.q1 * z + w.q2 + z * w.q12;
    const Mat2<S> rr = z * w.r1 * z + w.r2 + z * w.r12;
    const S tp = (ai * pp).trace(), tq = (ai * qq).trace();
    const S num = w.m1 * tq + w.m2 * tp + tp * tq + (ai * rr).trace() + S(2) * (w_combinator<S>(om * a * omt, pp) * qq).trace();
    return num / w.norm();
}

template <typename S> S probabilistic_correction_g(const StandardTwoModeState<S> &st, S tau) {
    return probabilistic_correction_g(make_probabilistic_workspace(st, tau));
}

namespace detail {
template <typename S> struct TwoPsClosed {
    S alpha, beta, gamma, probability;
};

template <typename S> TwoPsClosed<S> two_ps_closed(const StandardTwoModeState<S> &st, S t) {
    const S a = st.alpha, b = st.beta, c = st.gamma;
    const S k = (S(1) - a) * (S(1) - b) - c * c;
    const S d = (S(1) + a) * (S(1) + b) - c * c + S(2) * (S(1) - a * b + c * c) * t + k * t * t;
    const S u = S(1) - a * b + c * c + k * t;
    TwoPsClosed<S> o;
    o.alpha = S(1) - S(2) * t * ((S(1) - a) * (S(1) + b) + c * c + k * t) / d;
    o.beta = S(1) - S(2) * t * ((S(1) + a) * (S(1) - b) + c * c + k * t) / d;
    o.gamma = S(4) * t * c / d;
    o.probability = S(4) * (S(1) - t) * (S(1) - t) * (u * u - (a - b) * (a - b) + S(4) * c * c) / (d * d * d);
    return o;
}
}  // namespace detail

template <typename S> NonGaussianResource<S> probabilistic_2ps_standard(const StandardTwoModeState<S> &st, S tau) {
    if (!(tau > S(0) && tau < S(1)))
        throw DomainError("probabilistic subtraction: tau must lie in (0, 1)");
    auto c = detail::two_ps_closed(st, tau);
    NonGaussianResource<S> res;
    res.submatrices = {c.alpha, c.beta, c.gamma};
    res.success_probability = c.probability;
    res.flavor = Flavor::Probabilistic;
    if (validity_theta(res.submatrices) < -S(tol::physical))
        throw InvalidResource("photon-subtracted submatrices violate the validity condition");
    if (c.probability > S(0))
        res.correction = probabilistic_correction_g(st, tau);
    return res;
}

// ---------------------------------------------------------------------------
// Heuristic subtraction: the annihilation operators applied directly to both modes

template <typename S> struct HeuristicWorkspace {
    S ma, mb, mc, e0;
    Mat2<S> big_ma, big_mb, big_mc, mac, mbc;
    Mat2<S> e1, e2a, e2b;
    Mat2<S> sigma_a, sigma_b, eps;
};

template <typename S> HeuristicWorkspace<S> make_heuristic_workspace(const Mat2<S> &sa, const Mat2<S> &sb, const Mat2<S> &e) {
    using std::abs;
    const Mat2<S> I = Mat2<S>::Identity(), om = omega1<S>(), omt = om.transpose(), z = sigma_z<S>();
    HeuristicWorkspace<S> w;
    w.sigma_a = sa;
    w.sigma_b = sb;
    w.eps = e;
    w.ma = S(1) - S(0.5) * sa.trace();
    w.mb = S(1) - S(0.5) * sb.trace();
    w.mc = S(0.5) * (e * e).trace();
    w.big_ma = S(0.25) * (I - S(2) * om * sa * omt + om * sa * sa * omt);
    w.big_mb = S(0.25) * (I - S(2) * om * sb * omt + om * sb * sb * omt);
    w.big_mc = S(0.25) * om * e * e * omt;
    w.mac = S(0.5) * (om * sa * e * omt - om * e * omt);
    w.mbc = S(0.5) * (om * e * sb * omt - om * e * omt);
    w.e0 = w.ma * w.mb + w.mc;
    if (abs(w.e0) < S(tol::singular))
        throw SingularWorkspace("heuristic normalisation E0 vanishes");
    w.e1 = w.ma * (w.big_mb + z * w.big_mc * z + z * w.mbc) + w.mb * (z * w.big_ma * z + w.big_mc + z * w.mac) +
           (S(2) * w.big_mc + z * w.mac) * om * (I + z * e - sb) * omt;
    w.e2a = w.big_mc + z * w.mac + z * w.big_ma * z;
    w.e2b = w.big_mb + z * w.mbc + z * w.big_mc * z;
    return w;
}

template <typename S> HeuristicWorkspace<S> make_heuristic_workspace(const StandardTwoModeState<S> &st) {
    const Mat2<S> I = Mat2<S>::Identity();
    return make_heuristic_workspace<S>(st.alpha * I, st.beta * I, st.gamma * sigma_z<S>());
}

template <typename S> S heuristic_correction_h(const HeuristicWorkspace<S> &w) {
    const Mat2<S> I = Mat2<S>::Identity(), om = omega1<S>(), omt = om.transpose();
    const Mat2<S> a = I + S(0.5) * teleportation_gamma(w.sigma_a, w.sigma_b, w.eps);
    const Mat2<S> ai = om * a.inverse() * omt;
    const S num = (ai * w.e1).trace() - S(2) / a.determinant() * (om * w.e2a * omt * w.e2b).trace() +
                  S(3) * (ai * w.e2a).trace() * (ai * w.e2b).trace();
    return num / w.e0;
}

template <typename S> NonGaussianResource<S> heuristic_2ps_corrections(const StandardTwoModeState<S> &st) {
    NonGaussianResource<S> res;
    res.submatrices = st;
    res.correction = heuristic_correction_h(make_heuristic_workspace(st));
    res.success_probability = S(1);
    res.flavor = Flavor::Heuristic;
    return res;
}

// ---------------------------------------------------------------------------
// Re-Gaussification and characteristic functions

// Same as regaussify, without the validity check.
template <typename S> StandardTwoModeState<S> regaussified_state(const NonGaussianResource<S> &res, Geometry geometry) {
    const S g = res.correction;
    const auto &s = res.submatrices;
    StandardTwoModeState<S> out;
    if (geometry == Geometry::Symmetric) {
        out = {(s.alpha - g) / (S(1) + g), (s.beta - g) / (S(1) + g), s.gamma / (S(1) + g)};
    } else {
        S d = ((s.alpha + s.beta) / S(2) - g) / (S(1) + g);
        out = {d, d, s.gamma / (S(1) + g)};
    }
    return out;
}

template <typename S> StandardTwoModeState<S> regaussify(const NonGaussianResource<S> &res, Geometry geometry) {
    const auto out = regaussified_state(res, geometry);
    if (validity_theta(out) < -S(tol::physical))
        throw InvalidResource("re-Gaussified state violates the validity condition");
    return out;
}

// Teleportation fidelity carried by the resource, (1 + g) / sqrt(det(I + Gamma/2)).
template <typename S> S resource_fidelity(const NonGaussianResource<S> &res) {
    using std::sqrt;
    const Mat2<S> I = Mat2<S>::Identity();
    const auto &s = res.submatrices;
    const Mat2<S> a = I + S(0.5) * teleportation_gamma<S>(s.alpha * I, s.beta * I, s.gamma * sigma_z<S>());
    return (S(1) + res.correction) / sqrt(a.determinant());
}

namespace detail {
template <typename S> S quad(const Vec2<S> &u, const Mat2<S> &m, const Vec2<S> &v) { return u.dot(m * v); }

template <typename S> S envelope(const Mat2<S> &sa, const Mat2<S> &sb, const Mat2<S> &e, const Vec2<S> &a, const Vec2<S> &b) {
    using std::exp;
    const Mat2<S> om = omega1<S>(), omt = om.transpose();
    return exp(-S(0.25) * (quad(a, Mat2<S>(om * sa * omt), a) + quad(b, Mat2<S>(om * sb * omt), b) +
                          S(2) * quad(a, Mat2<S>(om * e * omt), b)));
}
}  // namespace detail

template <typename S> std::complex<S> nongaussian_cf(const ProbabilisticWorkspace<S> &w, const Vec4<S> &point) {
    using detail::quad;
    const Vec2<S> a = point.template head<2>(), b = point.template tail<2>();
    const S poly = (w.m1 + quad(a, w.p1, a) + quad(b, w.p2, b) + quad(a, w.p12, b)) *
                       (w.m2 + quad(a, w.q1, a) + quad(b, w.q2, b) + quad(a, w.q12, b)) +
                   w.m3 + quad(a, w.r1, a) + quad(b, w.r2, b) + quad(a, w.r12, b);
    return {detail::envelope(w.sigma_a, w.sigma_b, w.eps, a, b) * poly / w.norm(), S(0)};
}

template <typename S> std::complex<S> nongaussian_cf(const StandardTwoModeState<S> &st, S tau, const Vec4<S> &point) {
    return nongaussian_cf(make_probabilistic_workspace(st, tau), point);
}

// Theta_1 Theta_2 chi / E0. The alpha-beta coefficient carries 2 M_C Omega eps Omega^T, which is what
// applying the Theta operators to a Gaussian characteristic function produces.
template <typename S> std::complex<S> heuristic_cf(const HeuristicWorkspace<S> &w, const Vec4<S> &point) {
    using detail::quad;
    const Mat2<S> I = Mat2<S>::Identity(), om = omega1<S>(), omt = om.transpose();
    const Vec2<S> a = point.template head<2>(), b = point.template tail<2>();
    const Mat2<S> ve = om * w.eps * omt;
    const Mat2<S> vb = I - om * w.sigma_b * omt;
    const S poly = (w.mb + quad(b, w.big_mb, b) + quad(a, w.mbc, b) + quad(a, w.big_mc, a)) *
                       (w.ma + quad(a, w.big_ma, a) + quad(a, w.mac, b) + quad(b, w.big_mc, b)) +
                   w.mc - quad(a, Mat2<S>(w.mac * ve), a) + S(2) * quad(b, Mat2<S>(w.big_mc * vb), b) +
                   quad(a, Mat2<S>(w.mac * vb - S(2) * w.big_mc * ve), b);
    return {detail::envelope(w.sigma_a, w.sigma_b, w.eps, a, b) * poly / w.e0, S(0)};
}

template <typename S> std::complex<S> heuristic_cf(const StandardTwoModeState<S> &st, const Vec4<S> &point) {
    return heuristic_cf(make_heuristic_workspace(st), point);
}

using Resource = NonGaussianResource<double>;

}  // namespace cvml

#endif
