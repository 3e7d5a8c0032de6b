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

#include "cvpurify/oracle/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvpurify/errors.hpp"
#include "cvpurify/rk4.hpp"
#include "rule_cache.hpp"

namespace cvpurify::oracle {

FockState::FockState(int truncation) : truncation_(truncation) {
    if (truncation < 1) {
        throw DomainError("Fock truncation must be >= 1, got " + std::to_string(truncation));
    }
    const std::size_t l = static_cast<std::size_t>(levels());
    amplitudes_.assign(l * l * l * l, Complex(0.0));
}

double FockState::squared_norm() const {
    double total = 0.0;
    for (const auto &z : amplitudes_) {
        total += std::norm(z);
    }
    return total;
}

double FockState::top_level_population() const {
    const int top = truncation_;
    double total = 0.0;
    for (int a1 = 0; a1 <= top; ++a1) {
        for (int a2 = 0; a2 <= top; ++a2) {
            for (int b1 = 0; b1 <= top; ++b1) {
                for (int b2 = 0; b2 <= top; ++b2) {
                    if (a1 == top || a2 == top || b1 == top || b2 == top) {
                        total += std::norm((*this)(a1, a2, b1, b2));
                    }
                }
            }
        }
    }
    return total;
}

Complex FockState::overlap(const FockState &other) const {
    if (other.truncation_ != truncation_) {
        throw DomainError("overlap of Fock states with different truncations");
    }
    Complex total = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return total;
}

FockState build_initial_fock(double lambda, int truncation) {
    if (!(lambda >= 0.0 && lambda < 1.0)) {
        throw DomainError("lambda must lie in [0, 1), got " + std::to_string(lambda));
    }
    FockState state(truncation);
    const double norm = std::sqrt(1.0 - lambda * lambda);
    double power = 1.0;
    for (int n = 0; n <= truncation; ++n) {
        state(n, n, 0, 0) = norm * power;
        power *= lambda;
    }
    return state;
}

namespace {

// out = G in, with d psi / d tau = G psi.
//   Parametric:   G = sum_l (a_l^dag b_l^dag - a_l b_l)
//   BeamSplitter: G = sum_l (a_l^dag b_l - a_l b_l^dag)
// Matrix elements linking a retained level to a dropped one are discarded,
// which keeps G anti-Hermitian on the truncated space.
class Generator {
   public:
    Generator(InteractionKind kind, int truncation) : kind_(kind), top_(truncation), levels_(truncation + 1) {
        root_.resize(levels_ + 1);
        for (int n = 0; n <= levels_; ++n) {
            root_[n] = std::sqrt(static_cast<double>(n));
        }
    }

    void apply(const std::vector<Complex> &in, std::vector<Complex> &out) const {
        const std::size_t l = levels_;
        const std::size_t s_b1 = l, s_a2 = l * l, s_a1 = l * l * l;
        const bool parametric = kind_ == InteractionKind::Parametric;
        std::fill(out.begin(), out.end(), Complex(0.0));
        for (int a1 = 0; a1 <= top_; ++a1) {
            for (int a2 = 0; a2 <= top_; ++a2) {
                for (int b1 = 0; b1 <= top_; ++b1) {
                    const std::size_t row = a1 * s_a1 + a2 * s_a2 + b1 * s_b1;
                    Complex *o = out.data() + row;

                    // Node 1: shifts of a1 and b1, whole b2 rows at once.
                    if (parametric) {
                        if (a1 >= 1 && b1 >= 1) {
                            axpy(o, in.data() + row - s_a1 - s_b1, root_[a1] * root_[b1]);
                        }
                        if (a1 < top_ && b1 < top_) {
                            axpy(o, in.data() + row + s_a1 + s_b1, -root_[a1 + 1] * root_[b1 + 1]);
                        }
                    } else {
                        if (a1 >= 1 && b1 < top_) {
                            axpy(o, in.data() + row - s_a1 + s_b1, root_[a1] * root_[b1 + 1]);
                        }
                        if (a1 < top_ && b1 >= 1) {
                            axpy(o, in.data() + row + s_a1 - s_b1, -root_[a1 + 1] * root_[b1]);
                        }
                    }

                    // Node 2: shifts of a2 and b2.
                    if (parametric) {
                        if (a2 >= 1) {
                            const Complex *src = in.data() + row - s_a2;
                            const double ca = root_[a2];
                            for (int b2 = 1; b2 <= top_; ++b2) {
                                o[b2] += (ca * root_[b2]) * src[b2 - 1];
                            }
                        }
                        if (a2 < top_) {
                            const Complex *src = in.data() + row + s_a2;
                            const double ca = root_[a2 + 1];
                            for (int b2 = 0; b2 < top_; ++b2) {
                                o[b2] -= (ca * root_[b2 + 1]) * src[b2 + 1];
                            }
                        }
                    } else {
                        if (a2 >= 1) {
                            const Complex *src = in.data() + row - s_a2;
                            const double ca = root_[a2];
                            for (int b2 = 0; b2 < top_; ++b2) {
                                o[b2] += (ca * root_[b2 + 1]) * src[b2 + 1];
                            }
                        }
                        if (a2 < top_) {
                            const Complex *src = in.data() + row + s_a2;
                            const double ca = root_[a2 + 1];
                            for (int b2 = 1; b2 <= top_; ++b2) {
                                o[b2] -= (ca * root_[b2]) * src[b2 - 1];
                            }
                        }
                    }
                }
            }
        }
    }

   private:
    void axpy(Complex *out, const Complex *in, double scale) const {
        for (int i = 0; i < levels_; ++i) {
            out[i] += scale * in[i];
        }
    }

    InteractionKind kind_;
    int top_;
    int levels_;
    std::vector<double> root_;
};

}  // namespace

FockState evolve_fock(FockState state, InteractionKind kind, double tau, double step) {
    const std::size_t steps = rk4_step_count(tau, step);
    if (steps == 0) {
        return state;
    }
    const double h = tau / static_cast<double>(steps);
    const Generator generator(kind, state.truncation());
    const double norm_before = state.squared_norm();

    auto &y = state.amplitudes();
    const std::size_t size = y.size();
    std::vector<Complex> acc(size), stage(size), k(size);

    for (std::size_t s = 0; s < steps; ++s) {
        generator.apply(y, k);
        for (std::size_t i = 0; i < size; ++i) {
            acc[i] = y[i] + (h / 6.0) * k[i];
            stage[i] = y[i] + (0.5 * h) * k[i];
        }
        generator.apply(stage, k);
        for (std::size_t i = 0; i < size; ++i) {
            acc[i] += (h / 3.0) * k[i];
            stage[i] = y[i] + (0.5 * h) * k[i];
        }
        generator.apply(stage, k);
        for (std::size_t i = 0; i < size; ++i) {
            acc[i] += (h / 3.0) * k[i];
            stage[i] = y[i] + h * k[i];
        }
        generator.apply(stage, k);
        for (std::size_t i = 0; i < size; ++i) {
            y[i] = acc[i] + (h / 6.0) * k[i];
        }
    }

    const double top = state.top_level_population();
    if (top > kTopLevelTolerance) {
        throw TruncationError("Fock truncation " + std::to_string(state.truncation()) +
                              " too small: top level holds " + std::to_string(top));
    }
    if (kind == InteractionKind::Parametric) {
        const double drift = std::abs(state.squared_norm() - norm_before);
        if (drift > kTopLevelTolerance) {
            throw TruncationError("parametric Fock evolution drifted in norm by " + std::to_string(drift));
        }
    }
    return state;
}

namespace {

TwoModeDensity accumulate_density(const FockState &state, Outcome outcome, bool select) {
    const int l = state.levels();
    const int pairs = l * l;
    TwoModeDensity rho;
    rho.truncation = state.truncation();
    rho.matrix = Eigen::MatrixXcd::Zero(pairs, pairs);

    const auto &psi = state.amplitudes();
    std::vector<int> rows;
    std::vector<Complex> values;
    rows.reserve(pairs);
    values.reserve(pairs);
    for (int b1 = 0; b1 < l; ++b1) {
        if (select && ((outcome.x1 == 0) != (b1 == 0))) {
            continue;
        }
        for (int b2 = 0; b2 < l; ++b2) {
            if (select && ((outcome.x2 == 0) != (b2 == 0))) {
                continue;
            }
            // Exact zeros are structural (conserved quantities of the
            // generator) and contribute nothing.
            rows.clear();
            values.clear();
            for (int a = 0; a < pairs; ++a) {
                const Complex z = psi[static_cast<std::size_t>(a) * pairs + b1 * l + b2];
                if (z != Complex(0.0)) {
                    rows.push_back(a);
                    values.push_back(z);
                }
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    rho.matrix(rows[i], rows[j]) += values[i] * std::conj(values[j]);
                }
            }
        }
    }
    return rho;
}

}  // namespace

FockProjection project_outcome_fock(const FockState &state, Outcome outcome) {
    FockProjection out;
    out.reduced = accumulate_density(state, outcome, true);
    out.probability = out.reduced.matrix.trace().real();
    if (!(out.probability >= kDegeneracyThreshold)) {
        throw DegenerateError("Fock projection on outcome " + outcome.label() + " has probability " +
                              std::to_string(out.probability));
    }
    out.reduced.matrix /= out.probability;
    return out;
}

TwoModeDensity optical_density(const FockState &state) {
    auto rho = accumulate_density(state, {}, false);
    rho.matrix /= rho.matrix.trace().real();
    return rho;
}

namespace {

// <m| e^{alpha a^dag} e^{-alpha* a} |n> = alpha^{m-n} P_mn(|alpha|^2)        (m >= n)
//                                       = (-alpha*)^{n-m} P_mn(|alpha|^2)    (m <  n)
// with P_mn(x) = sum_k c(m,k) c(n,k) (-x)^{min(m,n)-k},
// c(m,k) = sqrt(m!/k!) / (m-k)!.
class NormalOrderedDisplacement {
   public:
    explicit NormalOrderedDisplacement(int levels) : levels_(levels), coeff_(levels * levels, 0.0) {
        for (int m = 0; m < levels; ++m) {
            for (int k = 0; k <= m; ++k) {
                coeff_[m * levels + k] =
                    std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(k + 1.0)) - std::lgamma(m - k + 1.0));
            }
        }
    }

    // Real polynomial part for modulus-squared x, row-major levels x levels.
    void polynomial(double x, std::vector<double> &out) const {
        out.assign(static_cast<std::size_t>(levels_) * levels_, 0.0);
        std::vector<double> powers(levels_);
        powers[0] = 1.0;
        for (int j = 1; j < levels_; ++j) {
            powers[j] = powers[j - 1] * (-x);
        }
        for (int m = 0; m < levels_; ++m) {
            for (int n = 0; n <= m; ++n) {
                double total = 0.0;
                for (int k = 0; k <= n; ++k) {
                    total += coeff_[m * levels_ + k] * coeff_[n * levels_ + k] * powers[n - k];
                }
                out[m * levels_ + n] = total;
                out[n * levels_ + m] = total;
            }
        }
    }

    void matrix(Complex alpha, const std::vector<double> &poly, std::vector<Complex> &out) const {
        out.resize(static_cast<std::size_t>(levels_) * levels_);
        std::vector<Complex> up(levels_), down(levels_);
        up[0] = down[0] = 1.0;
        for (int j = 1; j < levels_; ++j) {
            up[j] = up[j - 1] * alpha;
            down[j] = down[j - 1] * (-std::conj(alpha));
        }
        for (int m = 0; m < levels_; ++m) {
            for (int n = 0; n < levels_; ++n) {
                const Complex phase = m >= n ? up[m - n] : down[n - m];
                out[m * levels_ + n] = phase * poly[m * levels_ + n];
            }
        }
    }

   private:
    int levels_;
    std::vector<double> coeff_;
};

struct DensityEntry {
    int n1, n2, m1, m2;
    Complex value;
};

std::vector<DensityEntry> nonzero_entries(const TwoModeDensity &rho) {
    const int l = rho.levels();
    std::vector<DensityEntry> out;
    for (int n1 = 0; n1 < l; ++n1) {
        for (int n2 = 0; n2 < l; ++n2) {
            for (int m1 = 0; m1 < l; ++m1) {
                for (int m2 = 0; m2 < l; ++m2) {
                    const Complex v = rho.matrix(rho.index(n1, n2), rho.index(m1, m2));
                    if (v != Complex(0.0)) {
                        out.push_back({n1, n2, m1, m2, v});
                    }
                }
            }
        }
    }
    return out;
}

// Tr[rho X1 (x) X2] = sum rho_{(n1 n2),(m1 m2)} X1_{m1 n1} X2_{m2 n2}
Complex trace_product(const std::vector<DensityEntry> &entries, const std::vector<Complex> &x1,
                      const std::vector<Complex> &x2, int levels) {
    Complex total = 0.0;
    for (const auto &e : entries) {
        total += e.value * x1[e.m1 * levels + e.n1] * x2[e.m2 * levels + e.n2];
    }
    return total;
}

}  // namespace

Complex chi_fock(const TwoModeDensity &rho, Complex alpha1, Complex alpha2) {
    const int l = rho.levels();
    const NormalOrderedDisplacement disp(l);
    std::vector<double> p1, p2;
    std::vector<Complex> x1, x2;
    disp.polynomial(std::norm(alpha1), p1);
    disp.polynomial(std::norm(alpha2), p2);
    disp.matrix(alpha1, p1, x1);
    disp.matrix(alpha2, p2, x2);
    return trace_product(nonzero_entries(rho), x1, x2, l);
}

double fidelity_fock(const TwoModeDensity &rho, const QuadratureSpec &quad) {
    quad.validate();
    const int l = rho.levels();
    const NormalOrderedDisplacement disp(l);
    const auto entries = nonzero_entries(rho);

    auto at_order = [&](int order) {
        const auto &rule = cached_gauss_hermite(order);
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        std::vector<double> poly;
        std::vector<Complex> x1, x2;
        double total = 0.0;
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                const Complex xi = Complex(rule.nodes[i], rule.nodes[j]) * inv_sqrt2;
                // alpha1 = xi*, alpha2 = xi share |alpha|^2.
                disp.polynomial(std::norm(xi), poly);
                disp.matrix(std::conj(xi), poly, x1);
                disp.matrix(xi, poly, x2);
                total += rule.weights[i] * rule.weights[j] * trace_product(entries, x1, x2, l).real();
            }
        }
        return total / (2.0 * std::numbers::pi);
    };

    const double coarse = at_order(quad.order);
    const double fine = at_order(2 * quad.order);
    if (!(std::abs(fine - coarse) <= quad.convergence_tolerance)) {
        throw ConvergenceError("fidelity_fock: doubling the quadrature order from " + std::to_string(quad.order) +
                               " changed the result by " + std::to_string(std::abs(fine - coarse)));
    }
    return fine;
}

double mean_photon_number_a1(const FockState &state) {
    const int l = state.levels();
    double total = 0.0;
    for (int a1 = 0; a1 < l; ++a1) {
        for (int a2 = 0; a2 < l; ++a2) {
            for (int b1 = 0; b1 < l; ++b1) {
                for (int b2 = 0; b2 < l; ++b2) {
                    total += a1 * std::norm(state(a1, a2, b1, b2));
                }
            }
        }
    }
    return total;
}

}  // namespace cvpurify::oracle
