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

#include "pauliprobe/distribution.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pauliprobe/errors.h"
#include "summation.h"

namespace pauliprobe {

namespace {

void check_dense_allowed(int num_qubits, const DistributionLimits &limits) {
    if (num_qubits > limits.max_dense_qubits) {
        throw ResourceLimitError("dense storage for " + std::to_string(num_qubits) +
                                 " qubits exceeds the cap of " + std::to_string(limits.max_dense_qubits) +
                                 " qubits; use sparse storage");
    }
}

double checked_total(double total) {
    if (!std::isfinite(total) || std::abs(total - 1.0) > kNormalizationTolerance) {
        throw InvalidParameterError("weights must sum to 1 within 1e-9, got sum " + std::to_string(total));
    }
    return total;
}

void check_weight(double w, PauliIndex index) {
    if (!std::isfinite(w) || w < 0) {
        throw InvalidParameterError("weight of index " + std::to_string(index) +
                                    " must be finite and non-negative, got " + std::to_string(w));
    }
}

}  // namespace

PauliDistribution PauliDistribution::dense(int num_qubits, std::vector<double> weights,
                                           const DistributionLimits &limits) {
    PauliIndex k = pauliprobe::domain_size(num_qubits);
    check_dense_allowed(num_qubits, limits);
    if (weights.size() != k) {
        throw ShapeError("dense weights have " + std::to_string(weights.size()) + " entries, expected 4^" +
                         std::to_string(num_qubits) + " = " + std::to_string(k));
    }
    detail::CompensatedSum sum;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        check_weight(weights[i], i);
        sum.add(weights[i]);
    }
    double total = checked_total(sum.value());
    if (total != 1.0) {
        for (auto &w : weights) {
            w /= total;
        }
    }
    PauliDistribution d;
    d.num_qubits_ = num_qubits;
    d.storage_ = Storage::Dense;
    d.dense_ = std::move(weights);
    return d;
}

PauliDistribution PauliDistribution::sparse(int num_qubits, std::vector<WeightEntry> entries,
                                            const DistributionLimits &limits) {
    PauliIndex k = pauliprobe::domain_size(num_qubits);
    if (entries.size() > limits.max_sparse_entries) {
        throw ResourceLimitError("sparse distribution with " + std::to_string(entries.size()) +
                                 " entries exceeds the cap of " + std::to_string(limits.max_sparse_entries));
    }
    std::sort(entries.begin(), entries.end(),
              [](const WeightEntry &a, const WeightEntry &b) { return a.index < b.index; });
    detail::CompensatedSum sum;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].index >= k) {
            throw ShapeError("index " + std::to_string(entries[i].index) + " out of range for " +
                             std::to_string(num_qubits) + " qubits");
        }
        if (i > 0 && entries[i].index == entries[i - 1].index) {
            throw InvalidParameterError("duplicate index " + std::to_string(entries[i].index));
        }
        check_weight(entries[i].weight, entries[i].index);
        sum.add(entries[i].weight);
    }
    double total = checked_total(sum.value());
    std::erase_if(entries, [](const WeightEntry &e) { return e.weight == 0.0; });
    if (total != 1.0) {
        for (auto &e : entries) {
            e.weight /= total;
        }
    }
    PauliDistribution d;
    d.num_qubits_ = num_qubits;
    d.storage_ = Storage::Sparse;
    d.sparse_ = std::move(entries);
    return d;
}

PauliDistribution PauliDistribution::point_mass(int num_qubits, PauliIndex index) {
    return sparse(num_qubits, {{index, 1.0}});
}

PauliDistribution PauliDistribution::uniform(int num_qubits, const DistributionLimits &limits) {
    check_dense_allowed(num_qubits, limits);
    PauliIndex k = pauliprobe::domain_size(num_qubits);
    return dense(num_qubits, std::vector<double>(k, 1.0 / static_cast<double>(k)), limits);
}

PauliIndex PauliDistribution::domain_size() const noexcept {
    return PauliIndex{1} << (2 * num_qubits_);
}

double PauliDistribution::weight(PauliIndex index) const {
    if (index >= domain_size()) {
        throw ShapeError("index " + std::to_string(index) + " out of range");
    }
    if (storage_ == Storage::Dense) {
        return dense_[index];
    }
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), index,
                               [](const WeightEntry &e, PauliIndex i) { return e.index < i; });
    return (it != sparse_.end() && it->index == index) ? it->weight : 0.0;
}

std::size_t PauliDistribution::stored_size() const noexcept {
    return storage_ == Storage::Dense ? dense_.size() : sparse_.size();
}

std::vector<WeightEntry> PauliDistribution::nonzero_entries() const {
    std::vector<WeightEntry> out;
    for_each_nonzero([&](PauliIndex i, double w) { out.push_back({i, w}); });
    return out;
}

std::vector<double> PauliDistribution::to_dense_vector(const DistributionLimits &limits) const {
    if (storage_ == Storage::Dense) {
        return dense_;
    }
    check_dense_allowed(num_qubits_, limits);
    std::vector<double> out(domain_size(), 0.0);
    for (const auto &e : sparse_) {
        out[e.index] = e.weight;
    }
    return out;
}

PauliDistribution PauliDistribution::as_dense(const DistributionLimits &limits) const {
    if (storage_ == Storage::Dense) {
        return *this;
    }
    PauliDistribution d;
    d.num_qubits_ = num_qubits_;
    d.storage_ = Storage::Dense;
    d.dense_ = to_dense_vector(limits);
    return d;
}

PauliDistribution PauliDistribution::as_sparse() const {
    if (storage_ == Storage::Sparse) {
        return *this;
    }
    PauliDistribution d;
    d.num_qubits_ = num_qubits_;
    d.storage_ = Storage::Sparse;
    d.sparse_ = nonzero_entries();
    return d;
}

bool PauliDistribution::same_weights(const PauliDistribution &other) const {
    if (num_qubits_ != other.num_qubits_) {
        return false;
    }
    NonzeroCursor a(*this);
    NonzeroCursor b(other);
    while (!a.done() && !b.done()) {
        if (a.index() != b.index() || a.weight() != b.weight()) {
            return false;
        }
        a.advance();
        b.advance();
    }
    return a.done() && b.done();
}

NonzeroCursor::NonzeroCursor(const PauliDistribution &dist)
    : dense_(dist.dense_weights()), sparse_(dist.sparse_entries()) {
    end_ = dist.storage() == PauliDistribution::Storage::Dense ? dense_.size() : sparse_.size();
    skip_zeros();
}

PauliIndex NonzeroCursor::index() const noexcept {
    return dense_.empty() ? sparse_[pos_].index : static_cast<PauliIndex>(pos_);
}

double NonzeroCursor::weight() const noexcept {
    return dense_.empty() ? sparse_[pos_].weight : dense_[pos_];
}

void NonzeroCursor::advance() noexcept {
    ++pos_;
    skip_zeros();
}

void NonzeroCursor::skip_zeros() noexcept {
    if (!dense_.empty()) {
        while (pos_ < end_ && dense_[pos_] <= 0) {
            ++pos_;
        }
    }
}

}  // namespace pauliprobe
