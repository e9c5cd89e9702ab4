// Copyright 2026 The pauliprobe Authors
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

#ifndef PAULIPROBE_QUANTUM_SIM_H
#define PAULIPROBE_QUANTUM_SIM_H

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pauliprobe/distribution.h"
#include "pauliprobe/rng.h"

namespace pauliprobe {

/// Largest qubit count simulated exactly. Choi states live on 2n qubits, so
/// n = 5 already means 1024x1024 complex matrices (16 MB).
inline constexpr int kDefaultMaxExactQubits = 5;

/// Tolerance used when validating density matrices.
inline constexpr double kStateTolerance = 1e-10;

struct StateCheck {
    double hermitian_deviation;
    double trace_deviation;
    double min_eigenvalue;
    bool valid(double tol = kStateTolerance) const noexcept {
        return hermitian_deviation <= tol && trace_deviation <= tol && min_eigenvalue >= -tol;
    }
};

/// Density operator on `num_qubits` qubits. Qubit 0 is the most significant
/// bit of the computational-basis index. Global phases never enter: states
/// are compared as matrices only.
class DensityMatrix {
   public:
    /// Validates Hermiticity, unit trace and positivity within `tol`.
    static DensityMatrix from_matrix(Eigen::MatrixXcd matrix, double tol = kStateTolerance);
    /// |psi><psi| for a normalized vector.
    static DensityMatrix from_pure_state(const Eigen::VectorXcd &psi);
    static DensityMatrix basis_state(int num_qubits, std::uint64_t bits);
    static DensityMatrix maximally_mixed(int num_qubits);
    /// Random pure state (Gaussian amplitudes, normalized).
    static DensityMatrix random_pure(int num_qubits, RngStream &rng);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    Eigen::Index dim() const noexcept {
        return matrix_.rows();
    }
    const Eigen::MatrixXcd &matrix() const noexcept {
        return matrix_;
    }

    StateCheck check() const;
    double max_abs_diff(const DensityMatrix &other) const;

   private:
    friend class DensityMatrixAccess;
    DensityMatrix(int num_qubits, Eigen::MatrixXcd matrix) : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    }
    int num_qubits_;
    Eigen::MatrixXcd matrix_;
};

/// sum_i P(i) tau_i rho tau_i^dagger.
DensityMatrix apply_channel(const PauliDistribution &dist, const DensityMatrix &rho);

/// tau rho tau^dagger for a single Pauli string.
DensityMatrix conjugate_by_pauli(PauliIndex pauli, const DensityMatrix &rho);

/// (I (x) channel)(|Phi_n><Phi_n|) on 2n qubits ordered A (qubits 0..n-1,
/// untouched) then A' (qubits n..2n-1, through the channel), with
/// |Phi_n> = 2^(-n/2) sum_x |x>_A |x>_A'.
DensityMatrix choi_state(const PauliDistribution &dist, int max_qubits = kDefaultMaxExactQubits);

/// Born probabilities of the 4^n product Bell projectors |tau_j><tau_j| on
/// the Choi state, where |tau_j> is the tensor product over pairs
/// (A_k, A'_k) of the two-qubit Bell states Phi+, Psi+, Psi-, Phi- for digit
/// 0, 1, 2, 3.
PauliDistribution bell_outcome_distribution(const PauliDistribution &dist, int max_qubits = kDefaultMaxExactQubits);

/// Outcome law of the measurement circuit: per pair (2k, 2k+1) prepare
/// H(2k), CNOT(2k -> 2k+1); apply the channel to the odd qubits; undo with
/// CNOT, H; read all qubits in the computational basis. Bits
/// (b_2k, b_2k+1) = (phase, flip) map (0,0)->I, (0,1)->X, (1,1)->Y, (1,0)->Z.
/// The channel is expanded into its Pauli branches and each branch is
/// evolved as a state vector, so the result is exact.
PauliDistribution bell_circuit_distribution(const PauliDistribution &dist, int max_qubits = kDefaultMaxExactQubits);

/// Outcomes of N channel uses. Each sample costs exactly one channel use.
struct SampleBatch {
    int num_qubits = 1;
    std::vector<PauliIndex> outcomes;
    std::uint64_t seed = 0;
    std::uint64_t channel_uses = 0;

    std::size_t count() const noexcept {
        return outcomes.size();
    }
};

/// Inverse-CDF sampler over the positive entries of a distribution. Built
/// once and reused across draws.
class PauliSampler {
   public:
    explicit PauliSampler(const PauliDistribution &dist);
    PauliIndex draw(RngStream &rng) const;
    int num_qubits() const noexcept {
        return num_qubits_;
    }

   private:
    int num_qubits_;
    std::vector<PauliIndex> indices_;
    std::vector<double> cumulative_;
};

SampleBatch draw_samples(const PauliSampler &sampler, std::size_t count, RngStream &rng);
SampleBatch draw_samples(const PauliDistribution &dist, std::size_t count, RngStream &rng);
SampleBatch draw_samples(const PauliDistribution &dist, std::size_t count, std::uint64_t seed);

/// One channel use simulated from one sample of P: draws i, returns
/// tau_i rho tau_i^dagger.
DensityMatrix simulate_channel_from_samples(const PauliDistribution &dist, const DensityMatrix &rho, RngStream &rng);

}  // namespace pauliprobe

#endif
