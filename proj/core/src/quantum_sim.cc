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

#include "pauliprobe/quantum_sim.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "pauliprobe/errors.h"

namespace pauliprobe {

class DensityMatrixAccess {
   public:
    static DensityMatrix make(int num_qubits, Eigen::MatrixXcd m) {
        return DensityMatrix(num_qubits, std::move(m));
    }
};

namespace {

using cd = std::complex<double>;

/// tau|x> = i^(#Y) (-1)^popcount(x & phase) |x ^ flip>. Bit (n-1-q) of a
/// basis index holds qubit q.
struct PauliAction {
    std::uint64_t flip = 0;
    std::uint64_t phase = 0;
};

PauliAction pauli_action(PauliIndex index, int num_qubits) {
    PauliAction a;
    for (int q = 0; q < num_qubits; ++q) {
        auto digit = (index >> (2 * (num_qubits - 1 - q))) & 3;
        std::uint64_t bit = std::uint64_t{1} << (num_qubits - 1 - q);
        if (digit == 1 || digit == 2) {
            a.flip |= bit;
        }
        if (digit == 2 || digit == 3) {
            a.phase |= bit;
        }
    }
    return a;
}

/// out += weight * tau m tau^dagger. The i^(#Y) factors cancel between the
/// two sides, leaving real signs.
void accumulate_conjugation(Eigen::MatrixXcd &out, const Eigen::MatrixXcd &m, const PauliAction &a, double weight) {
    const auto dim = static_cast<std::uint64_t>(m.rows());
    std::vector<double> sign(dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        sign[x] = (std::popcount(x & a.phase) & 1) ? -weight : weight;
    }
    const cd *src = m.data();
    cd *dst = out.data();
    for (std::uint64_t y = 0; y < dim; ++y) {
        double sy = (std::popcount(y & a.phase) & 1) ? -1.0 : 1.0;
        const cd *src_col = src + y * dim;
        cd *dst_col = dst + (y ^ a.flip) * dim;
        for (std::uint64_t x = 0; x < dim; ++x) {
            dst_col[x ^ a.flip] += (sign[x] * sy) * src_col[x];
        }
    }
}

void check_exact_size(int num_qubits, int max_qubits) {
    if (num_qubits > max_qubits) {
        throw ResourceLimitError("exact simulation limited to " + std::to_string(max_qubits) + " qubits, got " +
                                 std::to_string(num_qubits));
    }
}

/// Born probabilities below this are reported as exact zeros.
constexpr double kProbabilityChop = 1e-13;

PauliDistribution distribution_from_probabilities(int num_qubits, std::vector<double> probs) {
    for (auto &p : probs) {
        if (std::abs(p) < kProbabilityChop) {
            p = 0;
        }
    }
    return PauliDistribution::dense(num_qubits, std::move(probs));
}

// Two-qubit Bell states indexed by the digit they flag, amplitudes over the
// pair basis |a a'> as 2a + a'.
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kBellAmplitudes[4][4] = {
    {kInvSqrt2, 0, 0, kInvSqrt2},   // Phi+  = (|00> + |11>)/sqrt2 : I
    {0, kInvSqrt2, kInvSqrt2, 0},   // Psi+  = (|01> + |10>)/sqrt2 : X
    {0, kInvSqrt2, -kInvSqrt2, 0},  // Psi-  = (|01> - |10>)/sqrt2 : Y
    {kInvSqrt2, 0, 0, -kInvSqrt2},  // Phi-  = (|00> - |11>)/sqrt2 : Z
};

using Gate = std::array<cd, 4>;  // row-major 2x2

const Gate kHadamard = {cd(kInvSqrt2), cd(kInvSqrt2), cd(kInvSqrt2), cd(-kInvSqrt2)};
const Gate kPauliGates[4] = {
    Gate{cd(1), cd(0), cd(0), cd(1)},
    Gate{cd(0), cd(1), cd(1), cd(0)},
    Gate{cd(0), cd(0, -1), cd(0, 1), cd(0)},
    Gate{cd(1), cd(0), cd(0), cd(-1)},
};

void apply_gate(Eigen::VectorXcd &psi, int qubit, int total_qubits, const Gate &g) {
    std::uint64_t bit = std::uint64_t{1} << (total_qubits - 1 - qubit);
    const auto dim = static_cast<std::uint64_t>(psi.size());
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (x & bit) {
            continue;
        }
        cd a0 = psi[static_cast<Eigen::Index>(x)];
        cd a1 = psi[static_cast<Eigen::Index>(x | bit)];
        psi[static_cast<Eigen::Index>(x)] = g[0] * a0 + g[1] * a1;
        psi[static_cast<Eigen::Index>(x | bit)] = g[2] * a0 + g[3] * a1;
    }
}

void apply_cnot(Eigen::VectorXcd &psi, int control, int target, int total_qubits) {
    std::uint64_t cbit = std::uint64_t{1} << (total_qubits - 1 - control);
    std::uint64_t tbit = std::uint64_t{1} << (total_qubits - 1 - target);
    const auto dim = static_cast<std::uint64_t>(psi.size());
    for (std::uint64_t x = 0; x < dim; ++x) {
        if ((x & cbit) && !(x & tbit)) {
            std::swap(psi[static_cast<Eigen::Index>(x)], psi[static_cast<Eigen::Index>(x | tbit)]);
        }
    }
}

int qubits_for_dim(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw ShapeError("density matrix dimension must be a power of two >= 2, got " + std::to_string(dim));
    }
    return std::countr_zero(static_cast<std::uint64_t>(dim));
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd matrix, double tol) {
    if (matrix.rows() != matrix.cols()) {
        throw ShapeError("density matrix must be square");
    }
    int n = qubits_for_dim(matrix.rows());
    DensityMatrix rho(n, std::move(matrix));
    if (!rho.check().valid(tol)) {
        throw InvalidParameterError("matrix is not a density operator (Hermitian, PSD, unit trace)");
    }
    return rho;
}

DensityMatrix DensityMatrix::from_pure_state(const Eigen::VectorXcd &psi) {
    int n = qubits_for_dim(psi.size());
    if (std::abs(psi.squaredNorm() - 1.0) > kStateTolerance) {
        throw InvalidParameterError("state vector is not normalized");
    }
    return DensityMatrix(n, psi * psi.adjoint());
}

DensityMatrix DensityMatrix::basis_state(int num_qubits, std::uint64_t bits) {
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (num_qubits < 1 || static_cast<Eigen::Index>(bits) >= dim) {
        throw InvalidParameterError("basis state out of range");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(static_cast<Eigen::Index>(bits), static_cast<Eigen::Index>(bits)) = 1.0;
    return DensityMatrix(num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::random_pure(int num_qubits, RngStream &rng) {
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        // Box-Muller on the stream's own uniforms.
        double r = std::sqrt(-2.0 * std::log1p(-rng.uniform01()));
        double theta = 2.0 * std::numbers::pi * rng.uniform01();
        psi[i] = cd(r * std::cos(theta), r * std::sin(theta));
    }
    psi.normalize();
    return DensityMatrix(num_qubits, psi * psi.adjoint());
}

StateCheck DensityMatrix::check() const {
    StateCheck c{};
    c.hermitian_deviation = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    c.trace_deviation = std::abs(matrix_.trace() - cd(1.0));
    Eigen::MatrixXcd herm = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    c.min_eigenvalue = solver.eigenvalues().minCoeff();
    return c;
}

double DensityMatrix::max_abs_diff(const DensityMatrix &other) const {
    if (dim() != other.dim()) {
        throw ShapeError("density matrices of different dimension");
    }
    return (matrix_ - other.matrix_).cwiseAbs().maxCoeff();
}

DensityMatrix apply_channel(const PauliDistribution &dist, const DensityMatrix &rho) {
    if (rho.num_qubits() != dist.num_qubits()) {
        throw ShapeError("channel on " + std::to_string(dist.num_qubits()) + " qubits applied to a " +
                         std::to_string(rho.num_qubits()) + "-qubit state");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
    dist.for_each_nonzero([&](PauliIndex i, double w) {
        accumulate_conjugation(out, rho.matrix(), pauli_action(i, dist.num_qubits()), w);
    });
    return DensityMatrixAccess::make(rho.num_qubits(), std::move(out));
}

DensityMatrix conjugate_by_pauli(PauliIndex pauli, const DensityMatrix &rho) {
    if (pauli >= domain_size(rho.num_qubits())) {
        throw ShapeError("Pauli index out of range for the state");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
    accumulate_conjugation(out, rho.matrix(), pauli_action(pauli, rho.num_qubits()), 1.0);
    return DensityMatrixAccess::make(rho.num_qubits(), std::move(out));
}

DensityMatrix choi_state(const PauliDistribution &dist, int max_qubits) {
    const int n = dist.num_qubits();
    check_exact_size(n, max_qubits);
    const Eigen::Index half = Eigen::Index{1} << n;
    const Eigen::Index dim = half * half;
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(half));
    for (Eigen::Index x = 0; x < half; ++x) {
        phi[x * half + x] = amp;
    }
    Eigen::MatrixXcd projector = phi * phi.adjoint();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    // I (x) tau_i acts on the low n bits (the A' register).
    dist.for_each_nonzero(
        [&](PauliIndex i, double w) { accumulate_conjugation(out, projector, pauli_action(i, n), w); });
    return DensityMatrixAccess::make(2 * n, std::move(out));
}

PauliDistribution bell_outcome_distribution(const PauliDistribution &dist, int max_qubits) {
    const int n = dist.num_qubits();
    DensityMatrix lambda = choi_state(dist, max_qubits);
    const std::uint64_t half = std::uint64_t{1} << n;
    const auto dim = static_cast<Eigen::Index>(half * half);
    const PauliIndex outcomes = domain_size(n);
    std::vector<double> probs(outcomes);
    Eigen::VectorXcd bell(dim);
    for (PauliIndex j = 0; j < outcomes; ++j) {
        // |tau_j> over (A, A') ordering: amplitude of |a>_A |a'>_A' is the
        // product over pairs k of the Bell amplitude at (a_k, a'_k).
        for (std::uint64_t a = 0; a < half; ++a) {
            for (std::uint64_t ap = 0; ap < half; ++ap) {
                double amp = 1.0;
                for (int k = 0; k < n && amp != 0.0; ++k) {
                    auto digit = (j >> (2 * (n - 1 - k))) & 3;
                    auto ak = (a >> (n - 1 - k)) & 1;
                    auto apk = (ap >> (n - 1 - k)) & 1;
                    amp *= kBellAmplitudes[digit][2 * ak + apk];
                }
                bell[static_cast<Eigen::Index>(a * half + ap)] = amp;
            }
        }
        probs[j] = bell.dot(lambda.matrix() * bell).real();
    }
    return distribution_from_probabilities(n, std::move(probs));
}

PauliDistribution bell_circuit_distribution(const PauliDistribution &dist, int max_qubits) {
    const int n = dist.num_qubits();
    check_exact_size(n, max_qubits);
    const int total = 2 * n;
    const Eigen::Index dim = Eigen::Index{1} << total;

    Eigen::VectorXcd prepared = Eigen::VectorXcd::Zero(dim);
    prepared[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        apply_gate(prepared, 2 * k, total, kHadamard);
        apply_cnot(prepared, 2 * k, 2 * k + 1, total);
    }

    static constexpr std::uint64_t kDigitOfBits[4] = {0, 1, 3, 2};  // (phase, flip) -> I X Z Y
    std::vector<double> probs(domain_size(n), 0.0);
    dist.for_each_nonzero([&](PauliIndex i, double w) {
        Eigen::VectorXcd psi = prepared;
        for (int k = 0; k < n; ++k) {
            auto digit = (i >> (2 * (n - 1 - k))) & 3;
            apply_gate(psi, 2 * k + 1, total, kPauliGates[digit]);
        }
        for (int k = 0; k < n; ++k) {
            apply_cnot(psi, 2 * k, 2 * k + 1, total);
            apply_gate(psi, 2 * k, total, kHadamard);
        }
        for (Eigen::Index x = 0; x < dim; ++x) {
            double p = std::norm(psi[x]);
            if (p == 0) {
                continue;
            }
            PauliIndex outcome = 0;
            for (int k = 0; k < n; ++k) {
                auto pair_bits = (static_cast<std::uint64_t>(x) >> (total - 2 - 2 * k)) & 3;
                outcome = (outcome << 2) | kDigitOfBits[pair_bits];
            }
            probs[outcome] += w * p;
        }
    });
    return distribution_from_probabilities(n, std::move(probs));
}

PauliSampler::PauliSampler(const PauliDistribution &dist) : num_qubits_(dist.num_qubits()) {
    double running = 0;
    dist.for_each_nonzero([&](PauliIndex i, double w) {
        running += w;
        indices_.push_back(i);
        cumulative_.push_back(running);
    });
}

PauliIndex PauliSampler::draw(RngStream &rng) const {
    double u = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    auto pos = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), indices_.size() - 1);
    return indices_[pos];
}

SampleBatch draw_samples(const PauliSampler &sampler, std::size_t count, RngStream &rng) {
    SampleBatch batch;
    batch.num_qubits = sampler.num_qubits();
    batch.seed = rng.seed();
    batch.outcomes.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        batch.outcomes.push_back(sampler.draw(rng));
    }
    batch.channel_uses = count;
    return batch;
}

SampleBatch draw_samples(const PauliDistribution &dist, std::size_t count, RngStream &rng) {
    return draw_samples(PauliSampler(dist), count, rng);
}

SampleBatch draw_samples(const PauliDistribution &dist, std::size_t count, std::uint64_t seed) {
    RngStream rng(seed);
    return draw_samples(dist, count, rng);
}

DensityMatrix simulate_channel_from_samples(const PauliDistribution &dist, const DensityMatrix &rho, RngStream &rng) {
    if (rho.num_qubits() != dist.num_qubits()) {
        throw ShapeError("channel and state qubit counts differ");
    }
    PauliSampler sampler(dist);
    return conjugate_by_pauli(sampler.draw(rng), rho);
}

}  // namespace pauliprobe
