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

#ifndef PAULIPROBE_DISTRIBUTION_H
#define PAULIPROBE_DISTRIBUTION_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pauliprobe/pauli_string.h"

namespace pauliprobe {

/// Inputs whose weights sum to within this much of 1 are accepted and then
/// renormalized exactly once.
inline constexpr double kNormalizationTolerance = 1e-9;

struct DistributionLimits {
    /// Dense storage holds 4^n doubles; refuse above this qubit count.
    int max_dense_qubits = 10;
    /// Cap on stored entries for sparse storage.
    std::size_t max_sparse_entries = std::size_t{1} << 22;
};

struct WeightEntry {
    PauliIndex index;
    double weight;
    bool operator==(const WeightEntry &) const = default;
};

/// Error distribution P over the 4^n Pauli strings of an n-qubit channel.
///
/// Storage is either a dense vector indexed by PauliIndex or a sparse list of
/// (index, weight) entries sorted by index with no zero weights. Both hold
/// the same semantics; every metric treats absent indices as weight 0.
/// Instances are immutable once constructed.
class PauliDistribution {
   public:
    enum class Storage { Dense, Sparse };

    /// Validates (finite, non-negative, sum within kNormalizationTolerance
    /// of 1) then renormalizes. `weights.size()` must equal 4^n.
    static PauliDistribution dense(int num_qubits, std::vector<double> weights, const DistributionLimits &limits = {});

    /// Entries may come in any order; duplicate indices are rejected and
    /// explicit zero weights are dropped.
    static PauliDistribution sparse(
        int num_qubits, std::vector<WeightEntry> entries, const DistributionLimits &limits = {});

    static PauliDistribution point_mass(int num_qubits, PauliIndex index);
    static PauliDistribution uniform(int num_qubits, const DistributionLimits &limits = {});

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    PauliIndex domain_size() const noexcept;
    Storage storage() const noexcept {
        return storage_;
    }

    /// Weight of one string; O(1) dense, O(log s) sparse.
    double weight(PauliIndex index) const;

    /// Number of stored slots (4^n when dense).
    std::size_t stored_size() const noexcept;

    /// Calls f(index, weight) for every strictly positive weight in
    /// ascending index order.
    template <typename F>
    void for_each_nonzero(F &&f) const {
        if (storage_ == Storage::Dense) {
            for (std::size_t i = 0; i < dense_.size(); ++i) {
                if (dense_[i] > 0) {
                    f(static_cast<PauliIndex>(i), dense_[i]);
                }
            }
        } else {
            for (const auto &e : sparse_) {
                f(e.index, e.weight);
            }
        }
    }

    /// All positive entries in ascending order (copies).
    std::vector<WeightEntry> nonzero_entries() const;

    std::vector<double> to_dense_vector(const DistributionLimits &limits = {}) const;
    PauliDistribution as_dense(const DistributionLimits &limits = {}) const;
    PauliDistribution as_sparse() const;

    /// Dense storage span; empty when sparse.
    std::span<const double> dense_weights() const noexcept {
        return dense_;
    }
    std::span<const WeightEntry> sparse_entries() const noexcept {
        return sparse_;
    }

    /// Exact equality of the represented function, independent of storage.
    bool same_weights(const PauliDistribution &other) const;

   private:
    PauliDistribution() = default;

    int num_qubits_ = 0;
    Storage storage_ = Storage::Sparse;
    std::vector<double> dense_;
    std::vector<WeightEntry> sparse_;
};

/// Forward cursor over the positive entries of a distribution, independent of
/// storage. Used to merge two distributions index by index.
class NonzeroCursor {
   public:
    explicit NonzeroCursor(const PauliDistribution &dist);
    bool done() const noexcept {
        return pos_ >= end_;
    }
    PauliIndex index() const noexcept;
    double weight() const noexcept;
    void advance() noexcept;

   private:
    void skip_zeros() noexcept;
    std::span<const double> dense_;
    std::span<const WeightEntry> sparse_;
    std::size_t pos_ = 0;
    std::size_t end_ = 0;
};

}  // namespace pauliprobe

#endif
