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

#ifndef PAULIPROBE_LINEAR_PROGRAM_H
#define PAULIPROBE_LINEAR_PROGRAM_H

#include <cstddef>
#include <string_view>
#include <vector>

namespace pauliprobe {

enum class RowSense { LessEqual, Equal, GreaterEqual };

/// minimize c.x subject to A_r.x (<=, =, >=) b_r for each row, x >= 0.
/// Rows are dense; these programs have at most a few thousand columns.
class LinearProgram {
   public:
    explicit LinearProgram(std::size_t num_vars) : objective_(num_vars, 0.0) {
    }

    std::size_t num_vars() const noexcept {
        return objective_.size();
    }
    std::size_t num_rows() const noexcept {
        return rows_.size();
    }

    void set_objective(std::size_t var, double coeff) {
        objective_.at(var) = coeff;
    }
    const std::vector<double> &objective() const noexcept {
        return objective_;
    }

    /// Returns the row id. `coeffs.size()` must equal num_vars().
    std::size_t add_row(std::vector<double> coeffs, RowSense sense, double rhs);

    const std::vector<double> &row(std::size_t r) const {
        return rows_.at(r);
    }
    RowSense sense(std::size_t r) const {
        return senses_.at(r);
    }
    double rhs(std::size_t r) const {
        return rhs_.at(r);
    }

   private:
    std::vector<double> objective_;
    std::vector<std::vector<double>> rows_;
    std::vector<RowSense> senses_;
    std::vector<double> rhs_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };
std::string_view to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0;
    std::size_t iterations = 0;
    /// max_r violation of row r at x, including x >= 0.
    double max_residual = 0;
};

enum class LpMethod { InteriorPoint, Simplex };

struct LpSolverOptions {
    LpMethod method = LpMethod::InteriorPoint;
    // Simplex.
    double pivot_tolerance = 1e-9;
    double optimality_tolerance = 1e-9;
    /// Phase-one objective above this means infeasible.
    double feasibility_tolerance = 1e-7;
    std::size_t max_iterations = 200000;
    // Interior point: target for max(relative primal residual, relative dual
    // residual, relative complementarity), and the looser level accepted
    // when rounding stalls progress before the target.
    double ipm_tolerance = 1e-10;
    double ipm_accept_tolerance = 1e-7;
    std::size_t ipm_max_iterations = 300;
};

/// Solves `lp` with the selected method. Both are deterministic for a fixed
/// program and keep no global state, so concurrent calls are safe.
///
/// InteriorPoint: Mehrotra predictor-corrector on the slack-augmented
/// standard form, dense normal equations solved by Cholesky. Rows owning a
/// column that appears in no other row get their residual repaired exactly
/// through that column at the end. Converges towards the centre of the
/// optimal face rather than to a vertex.
///
/// Simplex: dense two-phase primal tableau with a crash basis, Dantzig
/// pricing, Harris ratio test, and Bland's rule after a run of degenerate
/// pivots. The final basic solution is recomputed from the original rows
/// with a partial-pivot LU solve. Suits small programs; heavily degenerate
/// ones can stall.
LpSolution solve_linear_program(const LinearProgram &lp, const LpSolverOptions &options = {});

/// max violation of `lp`'s rows and bounds at x, computed independently of
/// the solver.
double max_constraint_violation(const LinearProgram &lp, const std::vector<double> &x);

}  // namespace pauliprobe

#endif
