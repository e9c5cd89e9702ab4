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

#include "pauliprobe/metrics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pauliprobe/errors.h"
#include "summation.h"

namespace pauliprobe {

namespace {

void check_same_shape(const PauliDistribution &a, const PauliDistribution &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("distributions over " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
    }
}

/// Calls f(|a(i) - b(i)|, a(i), b(i)) for every index in the union of the
/// two supports.
template <typename F>
void merge_supports(const PauliDistribution &a, const PauliDistribution &b, F &&f) {
    NonzeroCursor ca(a);
    NonzeroCursor cb(b);
    while (!ca.done() || !cb.done()) {
        if (cb.done() || (!ca.done() && ca.index() < cb.index())) {
            f(ca.weight(), 0.0);
            ca.advance();
        } else if (ca.done() || cb.index() < ca.index()) {
            f(0.0, cb.weight());
            cb.advance();
        } else {
            f(ca.weight(), cb.weight());
            ca.advance();
            cb.advance();
        }
    }
}

}  // namespace

LpOrder LpOrder::finite(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw InvalidParameterError("l_p order must satisfy p >= 1 (use infinity() for p = inf), got " +
                                    std::to_string(p));
    }
    return LpOrder(p, false);
}

LpOrder LpOrder::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity" || text == "Infinity") {
        return infinity();
    }
    double p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidParameterError("cannot parse l_p order \"" + std::string(text) + "\"");
    }
    if (std::isinf(p)) {
        return infinity();
    }
    return finite(p);
}

double LpOrder::value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : p_;
}

std::string LpOrder::to_string() const {
    if (infinite_) {
        return "inf";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p_);
    return std::string(buf, ptr);
}

void LpParams::validate() const {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw InvalidParameterError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
    }
    if (!(delta > 0 && delta < 1)) {
        throw InvalidParameterError("delta must lie in (0, 1), got " + std::to_string(delta));
    }
}

double lp_distance(const PauliDistribution &a, const PauliDistribution &b, LpOrder p) {
    check_same_shape(a, b);
    if (p.is_infinite()) {
        double best = 0;
        merge_supports(a, b, [&](double x, double y) { best = std::max(best, std::abs(x - y)); });
        return best;
    }
    double order = p.value();
    if (order == 1.0) {
        detail::CompensatedSum sum;
        merge_supports(a, b, [&](double x, double y) { sum.add(std::abs(x - y)); });
        return sum.value();
    }
    // Scale by the largest gap so large p cannot underflow.
    double scale = 0;
    merge_supports(a, b, [&](double x, double y) { scale = std::max(scale, std::abs(x - y)); });
    if (scale == 0) {
        return 0;
    }
    detail::CompensatedSum sum;
    merge_supports(a, b, [&](double x, double y) {
        double d = std::abs(x - y) / scale;
        if (d > 0) {
            sum.add(std::pow(d, order));
        }
    });
    return scale * std::pow(sum.value(), 1.0 / order);
}

double total_variation(const PauliDistribution &a, const PauliDistribution &b) {
    check_same_shape(a, b);
    detail::CompensatedSum sum;
    merge_supports(a, b, [&](double x, double y) { sum.add(std::max(x - y, 0.0)); });
    return sum.value();
}

double shannon_entropy(const PauliDistribution &dist) {
    detail::CompensatedSum sum;
    dist.for_each_nonzero([&](PauliIndex, double w) { sum.add(-w * std::log2(w)); });
    return std::max(0.0, sum.value());
}

std::uint64_t support_size(const PauliDistribution &dist) {
    std::uint64_t count = 0;
    dist.for_each_nonzero([&](PauliIndex, double) { ++count; });
    return count;
}

double binary_entropy(double eps) {
    if (!(eps >= 0 && eps <= 1)) {
        throw InvalidParameterError("binary entropy argument must lie in [0, 1], got " + std::to_string(eps));
    }
    if (eps == 0 || eps == 1) {
        return 0;
    }
    return -eps * std::log2(eps) - (1 - eps) * std::log2(1 - eps);
}

double fannes_audenaert_bound(double eps, int num_qubits) {
    if (!(eps >= 0 && eps < 0.5)) {
        throw PreconditionError("Fannes-Audenaert bound needs total variation in [0, 1/2), got " +
                                std::to_string(eps));
    }
    double k = static_cast<double>(domain_size(num_qubits));
    return eps * std::log2(k - 1) + binary_entropy(eps);
}

}  // namespace pauliprobe
