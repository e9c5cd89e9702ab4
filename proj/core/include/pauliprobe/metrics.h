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

#ifndef PAULIPROBE_METRICS_H
#define PAULIPROBE_METRICS_H

#include <cstdint>
#include <string>
#include <string_view>

#include "pauliprobe/distribution.h"

namespace pauliprobe {

/// Order p of an l_p distance, p in [1, inf]. Infinity is a distinct state
/// rather than a large double.
class LpOrder {
   public:
    /// Throws InvalidParameterError unless 1 <= p < inf.
    static LpOrder finite(double p);
    static LpOrder infinity() noexcept {
        return LpOrder(0.0, true);
    }
    /// Accepts "inf", "infinity", "Inf" or a decimal >= 1.
    static LpOrder parse(std::string_view text);

    bool is_infinite() const noexcept {
        return infinite_;
    }
    /// +inf for the infinite order.
    double value() const noexcept;
    /// "inf" or the shortest decimal that round-trips.
    std::string to_string() const;

    bool operator==(const LpOrder &) const = default;

   private:
    LpOrder(double p, bool infinite) : p_(p), infinite_(infinite) {
    }
    double p_;
    bool infinite_;
};

/// (p, epsilon, delta) of a learning task.
struct LpParams {
    LpOrder p = LpOrder::finite(1.0);
    double epsilon = 0.1;
    double delta = 1.0 / 3.0;

    /// Throws InvalidParameterError unless epsilon and delta lie in (0,1).
    void validate() const;
};

/// (sum_i |P(i)-Q(i)|^p)^(1/p), or max_i |P(i)-Q(i)| for p = inf.
double lp_distance(const PauliDistribution &a, const PauliDistribution &b, LpOrder p);

/// sum_i max(P(i) - Q(i), 0); equals half the l_1 distance.
double total_variation(const PauliDistribution &a, const PauliDistribution &b);

/// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const PauliDistribution &dist);

/// Number of strings with strictly positive stored weight.
std::uint64_t support_size(const PauliDistribution &dist);

/// -e log2 e - (1-e) log2 (1-e) for e in [0,1].
double binary_entropy(double eps);

/// Fannes-Audenaert bound eps*log2(4^n - 1) + h_bin(eps) on the entropy gap
/// of two n-qubit error distributions at total-variation distance eps < 1/2.
double fannes_audenaert_bound(double eps, int num_qubits);

}  // namespace pauliprobe

#endif
