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

#ifndef PAULIPROBE_ERRORS_H
#define PAULIPROBE_ERRORS_H

#include <stdexcept>
#include <string>

namespace pauliprobe {

/// Raised for caller mistakes: bad labels, mismatched shapes, out-of-range
/// parameters, violated preconditions. The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class InvalidLabelError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class InvalidParameterError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// The request is well formed but would exceed a configured size cap
/// (dense vectors, exact density-matrix simulation).
class ResourceLimitError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Runtime failure of an estimator, e.g. an infeasible or unbounded linear
/// program. Carries the solver status text.
class EstimationError : public std::runtime_error {
   public:
    EstimationError(const std::string &what, std::string status)
        : std::runtime_error(what + " (status: " + status + ")"), status_(std::move(status)) {
    }
    const std::string &status() const noexcept {
        return status_;
    }

   private:
    std::string status_;
};

class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace pauliprobe

#endif
