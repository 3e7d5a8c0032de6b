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

#ifndef CVPURIFY_ORACLE_FOCK_HPP
#define CVPURIFY_ORACLE_FOCK_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "cvpurify/chi.hpp"
#include "cvpurify/conditioning.hpp"
#include "cvpurify/oracle/quadrature.hpp"

namespace cvpurify::oracle {

/// Pure four-mode state in a photon-number basis truncated at `truncation`
/// quanta per mode. Modes are ordered (a1, a2, b1, b2), b2 fastest.
class FockState {
   public:
    explicit FockState(int truncation);

    int truncation() const {
        return truncation_;
    }
    int levels() const {
        return truncation_ + 1;
    }
    std::size_t index(int a1, int a2, int b1, int b2) const {
        const std::size_t l = static_cast<std::size_t>(levels());
        return ((static_cast<std::size_t>(a1) * l + a2) * l + b1) * l + b2;
    }
    Complex &operator()(int a1, int a2, int b1, int b2) {
        return amplitudes_[index(a1, a2, b1, b2)];
    }
    Complex operator()(int a1, int a2, int b1, int b2) const {
        return amplitudes_[index(a1, a2, b1, b2)];
    }
    std::vector<Complex> &amplitudes() {
        return amplitudes_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }

    double squared_norm() const;
    /// Probability of any mode sitting on the highest retained level.
    double top_level_population() const;
    /// <psi|other>, both on the same truncation.
    Complex overlap(const FockState &other) const;

   private:
    int truncation_;
    std::vector<Complex> amplitudes_;
};

/// sqrt(1 - l^2) sum_n l^n |n, n, 0, 0>, cut at `truncation`.
FockState build_initial_fock(double lambda, int truncation);

inline constexpr double kDefaultFockStep = 5e-3;
inline constexpr double kTopLevelTolerance = 1e-8;

/// Schrodinger evolution under the two-node Hamiltonian with fixed-step RK4.
/// Throws TruncationError if the top level ends up holding more than 1e-8.
FockState evolve_fock(FockState state, InteractionKind kind, double tau, double step = kDefaultFockStep);

/// Density operator of the two optical modes, rows/cols indexed n1 * levels + n2.
struct TwoModeDensity {
    int truncation = 0;
    Eigen::MatrixXcd matrix;

    int levels() const {
        return truncation + 1;
    }
    Eigen::Index index(int n1, int n2) const {
        return static_cast<Eigen::Index>(n1) * levels() + n2;
    }
};

struct FockProjection {
    double probability = 0.0;
    TwoModeDensity reduced;
};

/// Projects the atomic modes onto vacuum / not-vacuum per `outcome`, traces
/// them out and normalizes. Throws DegenerateError below 1e-12.
FockProjection project_outcome_fock(const FockState &state, Outcome outcome);

/// Reduced optical state with no measurement (trace over both atomic modes).
TwoModeDensity optical_density(const FockState &state);

/// Normally-ordered characteristic function Tr[rho e^{a1 a1^dag} e^{a2 a2^dag} e^{-a1* a1} e^{-a2* a2}].
Complex chi_fock(const TwoModeDensity &rho, Complex alpha1, Complex alpha2);

/// Teleportation fidelity int d^2 xi / pi e^{-2|xi|^2} chi(xi*, xi) by 2-D
/// Gauss-Hermite at quad.order, checked against 2 * quad.order.
double fidelity_fock(const TwoModeDensity &rho, const QuadratureSpec &quad = {});

/// <n1> for the first optical mode of the pure state.
double mean_photon_number_a1(const FockState &state);

}  // namespace cvpurify::oracle

#endif  // CVPURIFY_ORACLE_FOCK_HPP
