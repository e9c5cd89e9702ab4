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

#include "pauliprobe/pauli_string.h"

#include <string>

#include "pauliprobe/errors.h"

namespace pauliprobe {

namespace {

constexpr char kAlphabet[] = {'I', 'X', 'Y', 'Z'};

void check_qubits(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw InvalidParameterError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(num_qubits));
    }
}

}  // namespace

PauliIndex domain_size(int num_qubits) {
    check_qubits(num_qubits);
    return PauliIndex{1} << (2 * num_qubits);
}

PauliString PauliString::from_label(std::string_view label) {
    if (label.empty()) {
        throw InvalidLabelError("empty Pauli label");
    }
    if (label.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw InvalidLabelError("Pauli label longer than " + std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<std::uint8_t> digits;
    digits.reserve(label.size());
    for (char c : label) {
        switch (c) {
            case 'I':
                digits.push_back(0);
                break;
            case 'X':
                digits.push_back(1);
                break;
            case 'Y':
                digits.push_back(2);
                break;
            case 'Z':
                digits.push_back(3);
                break;
            default:
                throw InvalidLabelError("invalid Pauli symbol '" + std::string(1, c) + "' in label \"" +
                                        std::string(label) + "\"");
        }
    }
    return PauliString(std::move(digits));
}

PauliString PauliString::from_index(PauliIndex index, int num_qubits) {
    if (index >= domain_size(num_qubits)) {
        throw InvalidParameterError("Pauli index " + std::to_string(index) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
    }
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(num_qubits));
    for (int q = num_qubits - 1; q >= 0; --q) {
        digits[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>(index & 3);
        index >>= 2;
    }
    return PauliString(std::move(digits));
}

PauliIndex PauliString::index() const noexcept {
    PauliIndex result = 0;
    for (auto d : digits_) {
        result = (result << 2) | d;
    }
    return result;
}

std::string PauliString::label() const {
    std::string out;
    out.reserve(digits_.size());
    for (auto d : digits_) {
        out.push_back(kAlphabet[d]);
    }
    return out;
}

PauliIndex encode_label(std::string_view label) {
    return PauliString::from_label(label).index();
}

std::string decode_index(PauliIndex index, int num_qubits) {
    return PauliString::from_index(index, num_qubits).label();
}

}  // namespace pauliprobe
