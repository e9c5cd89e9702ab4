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

#ifndef PAULIPROBE_SRC_POISSON_H
#define PAULIPROBE_SRC_POISSON_H

#include <cmath>
#include <cstdint>

namespace pauliprobe::detail {

inline double log_poisson(double lambda, std::uint64_t j) {
    if (lambda == 0) {
        return j == 0 ? 0.0 : -INFINITY;
    }
    double jd = static_cast<double>(j);
    return jd * std::log(lambda) - lambda - std::lgamma(jd + 1.0);
}

/// Pr[Poisson(lambda) > m], summed upward from m+1 in log space.
inline double poisson_upper_tail(double lambda, std::uint64_t m) {
    if (lambda == 0) {
        return 0;
    }
    double total = 0;
    for (std::uint64_t j = m + 1;; ++j) {
        double term = std::exp(log_poisson(lambda, j));
        total += term;
        if (static_cast<double>(j) > lambda && term <= 1e-18 * total) {
            break;
        }
        if (j > m + 100000) {
            break;
        }
    }
    return total;
}

}  // namespace pauliprobe::detail

#endif
