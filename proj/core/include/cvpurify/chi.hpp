// Copyright 2026 The cvpurify Authors
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

#ifndef CVPURIFY_CHI_HPP
#define CVPURIFY_CHI_HPP

#include <array>
#include <complex>
#include <string_view>

namespace cvpurify {

using Complex = std::complex<double>;

/// Light-atom coupling at each node.
///
/// Parametric:    H = i (a_l^dag b_l^dag - a_l b_l)   (pairs created together)
/// BeamSplitter:  H = i (a_l^dag b_l - a_l b_l^dag)   (excitation exchange)
///
/// The coupling strength is folded into the dimensionless time tau, so it is
/// never stored.
enum class InteractionKind { Parametric, BeamSplitter };

std::string_view to_string(InteractionKind kind);
/// Accepts "parametric" and "beam-splitter". Throws DomainError otherwise.
InteractionKind parse_interaction_kind(std::string_view text);

/// Input resource and interaction time.
struct ProtocolParams {
    double lambda = 0.0;  ///< two-mode squeezing parameter, 0 <= lambda < 1
    double n_th = 0.0;    ///< thermal photons per optical mode, >= 0
    double tau = 0.0;     ///< coupling x time, >= 0

    /// Throws DomainError when a field is out of range or not finite.
    void validate() const;
};

/// Exponent coefficients of the four-mode normally-ordered Gaussian
/// characteristic function. With optical arguments alpha_l and atomic
/// arguments beta_l,
///
///   ln chi = -A (|a1|^2 + |a2|^2) - B (|b1|^2 + |b2|^2)
///            + A12 (a1 a2 + c.c.) + B12 (b1 b2 + c.c.) + cross terms,
///
/// where the cross terms depend on the kind:
///
///   Parametric:   C (a1 b2* + a2 b1* + c.c.) + D (a1 b1 + a2 b2 + c.c.)
///   BeamSplitter: D (a1 b1* + a2 b2* + c.c.) + C (a1 b2 + a2 b1 + c.c.)
///
/// Field names follow the letters: `a` = A, `b` = B, and so on. A is the
/// optical occupation, B the atomic occupation, A12/B12 the optical/atomic
/// pair amplitudes, D the same-node optical-atomic correlation and C the
/// cross-node one.
struct GaussianChi4 {
    InteractionKind kind = InteractionKind::Parametric;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double a12 = 0.0;
    double b12 = 0.0;

    std::array<double, 6> coefficients() const {
        return {a, b, c, d, a12, b12};
    }
    static GaussianChi4 from_coefficients(InteractionKind kind, const std::array<double, 6> &v) {
        return {kind, v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    bool operator==(const GaussianChi4 &) const = default;
};

/// Default parametric time cap; cosh^2 grows as e^{2 tau} and the
/// low-excitation regime is long gone by then.
inline constexpr double kDefaultParametricTauCap = 5.0;
/// Default step for the coefficient ODE integrator.
inline constexpr double kDefaultOdeStep = 1e-3;

struct EvolutionOptions {
    double parametric_tau_cap = kDefaultParametricTauCap;
};

/// Two-mode squeezed thermal input with the atoms in vacuum. `params.tau` is ignored.
GaussianChi4 initial_chi(const ProtocolParams &params, InteractionKind kind);

/// Closed-form coefficients at time params.tau (hyperbolic for parametric,
/// trigonometric for beam splitter).
GaussianChi4 evolve_closed_form(const ProtocolParams &params, InteractionKind kind,
                                const EvolutionOptions &options = {});

/// Integrates the linear coefficient ODEs with fixed-step RK4.
GaussianChi4 evolve_ode(const GaussianChi4 &init, double tau, double step = kDefaultOdeStep);

/// Right-hand side d/dtau of the six coefficients (order a, b, c, d, a12, b12).
std::array<double, 6> coefficient_rates(InteractionKind kind, const std::array<double, 6> &coeffs);

/// Real exponent of chi at the given arguments; chi itself is exp of this.
double chi_exponent(const GaussianChi4 &state, Complex alpha1, Complex alpha2, Complex beta1, Complex beta2);

}  // namespace cvpurify

#endif  // CVPURIFY_CHI_HPP
