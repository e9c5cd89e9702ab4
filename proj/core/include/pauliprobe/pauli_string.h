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

#ifndef PAULIPROBE_PAULI_STRING_H
#define PAULIPROBE_PAULI_STRING_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauliprobe {

/// Position of an error string in the canonical ordering of {I,X,Y,Z}^n.
using PauliIndex = std::uint64_t;

/// Largest qubit count whose 4^n domain still fits a PauliIndex.
inline constexpr int kMaxQubits = 31;

/// Number of error strings on `num_qubits` qubits, i.e. 4^n.
PauliIndex domain_size(int num_qubits);

/// A tensor product of single-qubit Paulis, one base-4 digit per qubit
/// (0=I, 1=X, 2=Y, 3=Z). The first qubit is the most significant digit of
/// the index, so "ZX" has index 3*4 + 1 = 13.
class PauliString {
   public:
    /// Parses a label over the alphabet "IXYZ". Throws InvalidLabelError on
    /// an empty label, an unknown symbol, or more than kMaxQubits symbols.
    static PauliString from_label(std::string_view label);
    static PauliString from_index(PauliIndex index, int num_qubits);

    int num_qubits() const noexcept {
        return static_cast<int>(digits_.size());
    }
    std::span<const std::uint8_t> digits() const noexcept {
        return digits_;
    }
    std::uint8_t operator[](std::size_t qubit) const {
        return digits_[qubit];
    }

    PauliIndex index() const noexcept;
    std::string label() const;

    bool operator==(const PauliString &) const = default;

   private:
    explicit PauliString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    }
    std::vector<std::uint8_t> digits_;
};

/// Shorthand for PauliString::from_label(label).index().
PauliIndex encode_label(std::string_view label);
std::string decode_index(PauliIndex index, int num_qubits);

}  // namespace pauliprobe

#endif
