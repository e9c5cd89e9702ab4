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

#include "pauliprobe/linear_program.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "pauliprobe/errors.h"

namespace pauliprobe {

std::size_t LinearProgram::add_row(std::vector<double> coeffs, RowSense sense, double rhs) {
    if (coeffs.size() != objective_.size()) {
        throw ShapeError("row has " + std::to_string(coeffs.size()) + " coefficients, program has " +
                         std::to_string(objective_.size()) + " variables");
    }
    if (!std::isfinite(rhs)) {
        throw InvalidParameterError("row right-hand side must be finite");
    }
    rows_.push_back(std::move(coeffs));
    senses_.push_back(sense);
    rhs_.push_back(rhs);
    return rows_.size() - 1;
}

std::string_view to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal:
            return "optimal";
        case LpStatus::Infeasible:
            return "infeasible";
        case LpStatus::Unbounded:
            return "unbounded";
        case LpStatus::IterationLimit:
            return "iteration-limit";
    }
    return "unknown";
}

double max_constraint_violation(const LinearProgram &lp, const std::vector<double> &x) {
    if (x.size() != lp.num_vars()) {
        throw ShapeError("solution length does not match the program");
    }
    double worst = 0;
    for (double v : x) {
        worst = std::max(worst, -v);
    }
    for (std::size_t r = 0; r < lp.num_rows(); ++r) {
        const auto &a = lp.row(r);
        long double lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            lhs += static_cast<long double>(a[j]) * x[j];
        }
        double diff = static_cast<double>(lhs - lp.rhs(r));
        switch (lp.sense(r)) {
            case RowSense::LessEqual:
                worst = std::max(worst, diff);
                break;
            case RowSense::GreaterEqual:
                worst = std::max(worst, -diff);
                break;
            case RowSense::Equal:
                worst = std::max(worst, std::abs(diff));
                break;
        }
    }
    return worst;
}

namespace {

// Tableau layout: columns [structural | slack/surplus | artificial | rhs].
class Tableau {
   public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    }
    double &at(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    double at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    double *row(std::size_t r) {
        return data_.data() + r * cols_;
    }
    const double *row(std::size_t r) const {
        return data_.data() + r * cols_;
    }
    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

class Simplex {
   public:
    Simplex(const LinearProgram &lp, const LpSolverOptions &options) : lp_(lp), opt_(options) {
        build();
    }

    LpSolution run() {
        LpSolution sol;
        sol.status = LpStatus::Optimal;
        if (num_artificial_ > 0) {
            std::vector<double> phase_one(total_cols_, 0.0);
            for (std::size_t j = art_begin_; j < total_cols_; ++j) {
                phase_one[j] = 1.0;
            }
            LpStatus st = optimize(phase_one, total_cols_);
            if (st == LpStatus::IterationLimit) {
                sol.status = st;
                sol.iterations = iterations_;
                return sol;
            }
            if (objective_value(phase_one) > opt_.feasibility_tolerance * std::max(1.0, rhs_scale_)) {
                sol.status = LpStatus::Infeasible;
                sol.iterations = iterations_;
                return sol;
            }
            drive_out_artificials();
        }
        std::vector<double> phase_two(total_cols_, 0.0);
        for (std::size_t j = 0; j < num_vars_; ++j) {
            phase_two[j] = lp_.objective()[j];
        }
        LpStatus st = optimize(phase_two, art_begin_);
        sol.iterations = iterations_;
        if (st != LpStatus::Optimal) {
            sol.status = st;
            return sol;
        }
        sol.x = polish();
        long double obj = 0;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            obj += static_cast<long double>(lp_.objective()[j]) * sol.x[j];
        }
        sol.objective = static_cast<double>(obj);
        sol.max_residual = max_constraint_violation(lp_, sol.x);
        return sol;
    }

   private:
    void build() {
        const std::size_t m = lp_.num_rows();
        num_vars_ = lp_.num_vars();
        // Normalize each row to a nonnegative right-hand side.
        std::vector<RowSense> sense(m);
        flipped_.assign(m, false);
        std::size_t num_slack = 0;
        for (std::size_t r = 0; r < m; ++r) {
            sense[r] = lp_.sense(r);
            if (lp_.rhs(r) < 0) {
                flipped_[r] = true;
                if (sense[r] == RowSense::LessEqual) {
                    sense[r] = RowSense::GreaterEqual;
                } else if (sense[r] == RowSense::GreaterEqual) {
                    sense[r] = RowSense::LessEqual;
                }
            }
            if (sense[r] != RowSense::Equal) {
                ++num_slack;
            }
        }
        // Crash basis: a structural column with a single positive entry in an
        // = or >= row starts basic there, so that row needs no artificial.
        std::vector<std::size_t> nonzeros(num_vars_, 0);
        std::vector<std::size_t> only_row(num_vars_, kNone);
        for (std::size_t r = 0; r < m; ++r) {
            const auto &a = lp_.row(r);
            for (std::size_t j = 0; j < num_vars_; ++j) {
                if (a[j] != 0) {
                    ++nonzeros[j];
                    only_row[j] = r;
                }
            }
        }
        std::vector<std::size_t> crash(m, kNone);
        for (std::size_t j = 0; j < num_vars_; ++j) {
            if (nonzeros[j] != 1) {
                continue;
            }
            const std::size_t r = only_row[j];
            const double coef = (flipped_[r] ? -1.0 : 1.0) * lp_.row(r)[j];
            if (sense[r] != RowSense::LessEqual && crash[r] == kNone && coef > 0) {
                crash[r] = j;
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (sense[r] != RowSense::LessEqual && crash[r] == kNone) {
                ++num_artificial_;
            }
        }
        slack_begin_ = num_vars_;
        art_begin_ = slack_begin_ + num_slack;
        total_cols_ = art_begin_ + num_artificial_;
        rhs_col_ = total_cols_;
        tab_ = Tableau(m, total_cols_ + 1);
        basis_.assign(m, 0);
        slack_of_row_.assign(m, kNone);
        std::size_t next_slack = slack_begin_;
        std::size_t next_art = art_begin_;
        for (std::size_t r = 0; r < m; ++r) {
            const auto &a = lp_.row(r);
            double largest = 0;
            for (double v : a) {
                largest = std::max(largest, std::abs(v));
            }
            // Rows are scaled to unit max-norm (or unit crash coefficient);
            // slack values change by the same factor, structural values do
            // not.
            const double flip = flipped_[r] ? -1.0 : 1.0;
            double divisor = largest > 0 ? largest : 1.0;
            if (crash[r] != kNone) {
                divisor = flip * a[crash[r]];
            }
            const double sign = flip / divisor;
            double *row = tab_.row(r);
            for (std::size_t j = 0; j < num_vars_; ++j) {
                row[j] = sign * a[j];
            }
            row[rhs_col_] = sign * lp_.rhs(r);
            rhs_scale_ = std::max(rhs_scale_, std::abs(row[rhs_col_]));
            if (sense[r] == RowSense::LessEqual) {
                row[next_slack] = 1.0;
                slack_of_row_[r] = next_slack;
                basis_[r] = next_slack++;
                continue;
            }
            if (sense[r] == RowSense::GreaterEqual) {
                row[next_slack] = -1.0;
                slack_of_row_[r] = next_slack++;
            }
            if (crash[r] != kNone) {
                row[crash[r]] = 1.0;
                basis_[r] = crash[r];
            } else {
                row[next_art] = 1.0;
                art_row_.push_back(r);
                basis_[r] = next_art++;
            }
        }
    }

    double objective_value(const std::vector<double> &cost) const {
        long double v = 0;
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
            v += static_cast<long double>(cost[basis_[r]]) * tab_.at(r, rhs_col_);
        }
        return static_cast<double>(v);
    }

    // Reduced costs d_j = c_j - c_B B^-1 A_j, recomputed from the tableau.
    void reduced_costs(const std::vector<double> &cost, std::size_t allowed, std::vector<double> &d) const {
        d.assign(allowed, 0.0);
        for (std::size_t j = 0; j < allowed; ++j) {
            d[j] = cost[j];
        }
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
            double cb = cost[basis_[r]];
            if (cb == 0) {
                continue;
            }
            const double *row = tab_.row(r);
            for (std::size_t j = 0; j < allowed; ++j) {
                d[j] -= cb * row[j];
            }
        }
    }

    void pivot(std::size_t pr, std::size_t pc, std::vector<double> &d) {
        double *prow = tab_.row(pr);
        const double inv = 1.0 / prow[pc];
        const std::size_t cols = tab_.cols();
        for (std::size_t j = 0; j < cols; ++j) {
            prow[j] *= inv;
        }
        prow[pc] = 1.0;
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
            if (r == pr) {
                continue;
            }
            double *row = tab_.row(r);
            double f = row[pc];
            if (f == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                row[j] -= f * prow[j];
            }
            row[pc] = 0.0;
            if (row[rhs_col_] < 0 && row[rhs_col_] > -1e-11) {
                row[rhs_col_] = 0.0;
            }
        }
        double f = d[pc];
        if (f != 0) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                d[j] -= f * prow[j];
            }
            d[pc] = 0.0;
        }
        basis_[pr] = pc;
        ++iterations_;
    }

    LpStatus optimize(const std::vector<double> &cost, std::size_t allowed) {
        std::vector<double> d;
        reduced_costs(cost, allowed, d);
        std::size_t degenerate_run = 0;
        std::size_t since_refresh = 0;
        for (;;) {
            if (iterations_ >= opt_.max_iterations) {
                return LpStatus::IterationLimit;
            }
            if (++since_refresh >= 200) {
                reduced_costs(cost, allowed, d);
                since_refresh = 0;
            }
            const bool bland = degenerate_run >= 50;
            std::size_t enter = kNone;
            double best = -opt_.optimality_tolerance;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (d[j] < best) {
                    enter = j;
                    if (bland) {
                        break;
                    }
                    best = d[j];
                }
            }
            if (enter == kNone) {
                return LpStatus::Optimal;
            }
            // Harris two-pass ratio test: bound the step with a small
            // feasibility allowance, then take the largest pivot within it.
            // Under Bland's rule ties go to the lowest basic index instead.
            const double allowance = bland ? 1e-13 : 1e-9;
            double bound = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < tab_.rows(); ++r) {
                double a = tab_.at(r, enter);
                if (a > opt_.pivot_tolerance) {
                    bound = std::min(bound, (std::max(0.0, tab_.at(r, rhs_col_)) + allowance) / a);
                }
            }
            std::size_t leave = kNone;
            double ratio = std::numeric_limits<double>::infinity();
            double best_pivot = 0;
            for (std::size_t r = 0; r < tab_.rows(); ++r) {
                double a = tab_.at(r, enter);
                if (a <= opt_.pivot_tolerance) {
                    continue;
                }
                double t = std::max(0.0, tab_.at(r, rhs_col_)) / a;
                if (t > bound) {
                    continue;
                }
                bool take = leave == kNone || (bland ? basis_[r] < basis_[leave] : a > best_pivot);
                if (take) {
                    leave = r;
                    best_pivot = a;
                    ratio = t;
                }
            }
            if (leave == kNone) {
                return LpStatus::Unbounded;
            }
            degenerate_run = ratio * std::abs(d[enter]) <= 1e-11 ? degenerate_run + 1 : 0;
            pivot(leave, enter, d);
        }
    }

    // After phase one, any artificial still basic sits at zero; swap it for
    // a structural or slack column when the row allows, else leave the row
    // redundant.
    void drive_out_artificials() {
        std::vector<double> dummy(total_cols_, 0.0);
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
            if (basis_[r] < art_begin_) {
                continue;
            }
            std::size_t best = kNone;
            double best_abs = opt_.pivot_tolerance;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                double a = std::abs(tab_.at(r, j));
                if (a > best_abs) {
                    best_abs = a;
                    best = j;
                }
            }
            if (best != kNone) {
                pivot(r, best, dummy);
            }
        }
    }

    // Column j of the original constraint system (after sign flips).
    double original_entry(std::size_t r, std::size_t j) const {
        const double sign = flipped_[r] ? -1.0 : 1.0;
        if (j < num_vars_) {
            return sign * lp_.row(r)[j];
        }
        if (j < art_begin_) {
            if (slack_of_row_[r] != j) {
                return 0.0;
            }
            RowSense s = lp_.sense(r);
            if (flipped_[r]) {
                s = s == RowSense::LessEqual ? RowSense::GreaterEqual : RowSense::LessEqual;
            }
            return s == RowSense::LessEqual ? 1.0 : -1.0;
        }
        return art_row_[j - art_begin_] == r ? 1.0 : 0.0;
    }

    // Re-solve B x_B = b from the original data for the final basis.
    std::vector<double> polish() const {
        const std::size_t m = tab_.rows();
        std::vector<double> full(total_cols_, 0.0);
        for (std::size_t r = 0; r < m; ++r) {
            full[basis_[r]] = std::max(0.0, tab_.at(r, rhs_col_));
        }
        if (m > 0) {
            Eigen::MatrixXd B(m, m);
            Eigen::VectorXd b(m);
            for (std::size_t r = 0; r < m; ++r) {
                b(static_cast<Eigen::Index>(r)) = (flipped_[r] ? -1.0 : 1.0) * lp_.rhs(r);
                for (std::size_t c = 0; c < m; ++c) {
                    B(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = original_entry(r, basis_[c]);
                }
            }
            Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
            if (std::abs(lu.determinant()) > 0 && std::isfinite(lu.determinant())) {
                Eigen::VectorXd xb = lu.solve(b);
                bool sane = xb.allFinite();
                for (std::size_t r = 0; sane && r < m; ++r) {
                    double tableau_value = tab_.at(r, rhs_col_);
                    if (std::abs(xb(static_cast<Eigen::Index>(r)) - tableau_value) >
                        1e-6 * std::max(1.0, std::abs(tableau_value))) {
                        sane = false;
                    }
                }
                if (sane) {
                    for (std::size_t r = 0; r < m; ++r) {
                        full[basis_[r]] = std::max(0.0, static_cast<double>(xb(static_cast<Eigen::Index>(r))));
                    }
                }
            }
        }
        return std::vector<double>(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(num_vars_));
    }

    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    const LinearProgram &lp_;
    LpSolverOptions opt_;
    Tableau tab_{0, 0};
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> slack_of_row_;
    std::vector<bool> flipped_;
    std::vector<std::size_t> art_row_;
    std::size_t num_vars_ = 0;
    std::size_t slack_begin_ = 0;
    std::size_t art_begin_ = 0;
    std::size_t num_artificial_ = 0;
    std::size_t total_cols_ = 0;
    std::size_t rhs_col_ = 0;
    std::size_t iterations_ = 0;
    double rhs_scale_ = 0;
};

// Primal-dual interior point on  min c.x  s.t.  A x = b, x >= 0, where the
// columns are the structural variables followed by one slack per inequality.
class InteriorPoint {
   public:
    InteriorPoint(const LinearProgram &lp, const LpSolverOptions &options) : lp_(lp), opt_(options) {
        build();
    }

    LpSolution run() {
        LpSolution sol;
        const std::size_t N = cols_.size();
        const std::size_t m = b_.size();
        Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(N));
        Eigen::VectorXd s = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(N));
        Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
        starting_point(x, y, s);
        const double bnorm = 1.0 + b_.lpNorm<Eigen::Infinity>();
        const double cnorm = 1.0 + c_.lpNorm<Eigen::Infinity>();
        LpStatus status = LpStatus::IterationLimit;
        std::size_t it = 0;
        // Rounding limits attainable accuracy on badly scaled programs, so
        // the best iterate by merit max(primal, dual, complementarity) is
        // kept and the loop stops once it has not improved for a while.
        double best_merit = std::numeric_limits<double>::infinity();
        Eigen::VectorXd best_x = x;
        std::size_t since_best = 0;
        double pres = 0;
        double dres = 0;
        for (; it < opt_.ipm_max_iterations; ++it) {
            Eigen::VectorXd rp = b_ - times(x);
            Eigen::VectorXd rd = c_ - transpose_times(y) - s;
            const double pobj = c_.dot(x);
            pres = rp.lpNorm<Eigen::Infinity>() / bnorm;
            dres = rd.lpNorm<Eigen::Infinity>() / cnorm;
            const double compl_gap = x.dot(s) / (1.0 + std::abs(pobj));
            const double merit = std::max({pres, dres, compl_gap});
            if (!std::isfinite(merit)) {
                break;
            }
            if (merit < best_merit) {
                best_merit = merit;
                best_x = x;
                since_best = 0;
            } else if (best_merit < 1e-5 && ++since_best >= 8) {
                break;
            }
            if (merit < opt_.ipm_tolerance) {
                status = LpStatus::Optimal;
                break;
            }
            const bool x_diverged = x.lpNorm<Eigen::Infinity>() > 1e14;
            if (x_diverged || y.lpNorm<Eigen::Infinity>() > 1e14 || s.lpNorm<Eigen::Infinity>() > 1e14) {
                // A lingering primal residual means no feasible point;
                // otherwise the dual side is what failed.
                const double xnorm = x.lpNorm<Eigen::Infinity>();
                if (rp.lpNorm<Eigen::Infinity>() > 1e-6 * (bnorm + xnorm)) {
                    status = LpStatus::Infeasible;
                } else if (dres > 1e-6) {
                    status = LpStatus::Unbounded;
                } else {
                    status = x_diverged ? LpStatus::Unbounded : LpStatus::Infeasible;
                }
                break;
            }
            const double mu = x.dot(s) / static_cast<double>(N);
            Eigen::VectorXd d = x.cwiseQuotient(s);
            if (!factor(d)) {
                break;
            }
            // Predictor.
            Eigen::VectorXd rc = -x.cwiseProduct(s);
            Eigen::VectorXd dx, dy, ds;
            direction(d, s, rp, rd, rc, dx, dy, ds);
            const double ap_aff = max_step(x, dx);
            const double ad_aff = max_step(s, ds);
            const double mu_aff = (x + ap_aff * dx).dot(s + ad_aff * ds) / static_cast<double>(N);
            const double sigma = std::pow(mu_aff / mu, 3);
            // Corrector.
            rc = -x.cwiseProduct(s) - dx.cwiseProduct(ds) + Eigen::VectorXd::Constant(x.size(), sigma * mu);
            direction(d, s, rp, rd, rc, dx, dy, ds);
            const double ap = std::min(1.0, 0.995 * max_step(x, dx));
            const double ad = std::min(1.0, 0.995 * max_step(s, ds));
            x += ap * dx;
            y += ad * dy;
            s += ad * ds;
        }
        sol.iterations = it;
        if (status == LpStatus::IterationLimit && best_merit < 1e-4) {
            // Stalled close to the optimum: accept when projecting back onto
            // the rows brings the best iterate to the acceptance level.
            Eigen::VectorXd candidate = best_x;
            refine(candidate);
            const double refined = (b_ - times(candidate)).lpNorm<Eigen::Infinity>() / bnorm;
            if (refined < opt_.ipm_accept_tolerance && best_merit < std::sqrt(opt_.ipm_accept_tolerance)) {
                status = LpStatus::Optimal;
                x = best_x;
            }
        }
        if (status != LpStatus::Optimal) {
            if (status == LpStatus::IterationLimit && !(pres <= 1e-6)) {
                status = LpStatus::Infeasible;
            } else if (status == LpStatus::IterationLimit && !(dres <= 1e-6)) {
                status = LpStatus::Unbounded;
            }
            sol.status = status;
            return sol;
        }
        refine(x);
        sol.status = LpStatus::Optimal;
        sol.x.resize(lp_.num_vars());
        for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
            sol.x[j] = std::max(0.0, x(static_cast<Eigen::Index>(j)));
        }
        long double obj = 0;
        for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
            obj += static_cast<long double>(lp_.objective()[j]) * sol.x[j];
        }
        sol.objective = static_cast<double>(obj);
        sol.max_residual = max_constraint_violation(lp_, sol.x);
        return sol;
    }

   private:
    struct Entry {
        std::size_t row;
        double value;
    };

    void build() {
        const std::size_t m = lp_.num_rows();
        const std::size_t n = lp_.num_vars();
        b_.resize(static_cast<Eigen::Index>(m));
        std::vector<double> scale(m, 1.0);
        for (std::size_t r = 0; r < m; ++r) {
            double largest = 0;
            for (double v : lp_.row(r)) {
                largest = std::max(largest, std::abs(v));
            }
            scale[r] = largest > 0 ? 1.0 / largest : 1.0;
            b_(static_cast<Eigen::Index>(r)) = scale[r] * lp_.rhs(r);
        }
        cols_.assign(n, {});
        for (std::size_t r = 0; r < m; ++r) {
            const auto &a = lp_.row(r);
            for (std::size_t j = 0; j < n; ++j) {
                if (a[j] != 0) {
                    cols_[j].push_back({r, scale[r] * a[j]});
                }
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (lp_.sense(r) == RowSense::LessEqual) {
                cols_.push_back({{r, scale[r]}});
            } else if (lp_.sense(r) == RowSense::GreaterEqual) {
                cols_.push_back({{r, -scale[r]}});
            }
        }
        c_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols_.size()));
        for (std::size_t j = 0; j < n; ++j) {
            c_(static_cast<Eigen::Index>(j)) = lp_.objective()[j];
        }
    }

    Eigen::VectorXd times(const Eigen::VectorXd &x) const {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(b_.size());
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const double v = x(static_cast<Eigen::Index>(j));
            if (v == 0) {
                continue;
            }
            for (const auto &e : cols_[j]) {
                out(static_cast<Eigen::Index>(e.row)) += e.value * v;
            }
        }
        return out;
    }

    Eigen::VectorXd transpose_times(const Eigen::VectorXd &y) const {
        Eigen::VectorXd out(static_cast<Eigen::Index>(cols_.size()));
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            double acc = 0;
            for (const auto &e : cols_[j]) {
                acc += e.value * y(static_cast<Eigen::Index>(e.row));
            }
            out(static_cast<Eigen::Index>(j)) = acc;
        }
        return out;
    }

    // Factor M = A diag(d) A^T (+ a small ridge when it is singular).
    bool factor(const Eigen::VectorXd &d) {
        const auto m = b_.size();
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const double dj = d(static_cast<Eigen::Index>(j));
            const auto &col = cols_[j];
            for (std::size_t p = 0; p < col.size(); ++p) {
                const double vp = dj * col[p].value;
                const auto rp = static_cast<Eigen::Index>(col[p].row);
                for (std::size_t q = 0; q <= p; ++q) {
                    M(rp, static_cast<Eigen::Index>(col[q].row)) += vp * col[q].value;
                }
            }
        }
        normal_ = M.selfadjointView<Eigen::Lower>();
        // Cholesky that skips pivots lost to cancellation: the column is
        // zeroed and the pivot made huge, which pins that component of the
        // solution to zero. Keeps degenerate programs solvable.
        chol_ = M;
        const Eigen::Index n = m;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double original = chol_(j, j);
            double djj = original - chol_.row(j).head(j).squaredNorm();
            if (!(djj > 1e-13 * std::max(original, 0.0)) || !(djj > 0)) {
                chol_(j, j) = kHugePivot;
                for (Eigen::Index i = j + 1; i < n; ++i) {
                    chol_(i, j) = 0;
                }
                continue;
            }
            const double ljj = std::sqrt(djj);
            chol_(j, j) = ljj;
            for (Eigen::Index i = j + 1; i < n; ++i) {
                chol_(i, j) = (chol_(i, j) - chol_.row(i).head(j).dot(chol_.row(j).head(j))) / ljj;
            }
        }
        return chol_.allFinite();
    }

    void direction(
        const Eigen::VectorXd &d, const Eigen::VectorXd &s, const Eigen::VectorXd &rp, const Eigen::VectorXd &rd,
        const Eigen::VectorXd &rc, Eigen::VectorXd &dx, Eigen::VectorXd &dy, Eigen::VectorXd &ds) const {
        Eigen::VectorXd rhs = rp - times(rc.cwiseQuotient(s) - d.cwiseProduct(rd));
        dy = solve_normal(rhs);
        ds = rd - transpose_times(dy);
        dx = rc.cwiseQuotient(s) - d.cwiseProduct(ds);
    }

    // Cholesky solve plus two rounds of iterative refinement against the
    // unridged matrix.
    Eigen::VectorXd solve_normal(const Eigen::VectorXd &rhs) const {
        Eigen::VectorXd v = cholesky_solve(rhs);
        for (int k = 0; k < 2; ++k) {
            v += cholesky_solve(rhs - normal_ * v);
        }
        return v;
    }

    Eigen::VectorXd cholesky_solve(const Eigen::VectorXd &rhs) const {
        const Eigen::Index n = rhs.size();
        Eigen::VectorXd z(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            z(i) = (rhs(i) - chol_.row(i).head(i).dot(z.head(i))) / chol_(i, i);
        }
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            z(i) = (z(i) - chol_.col(i).tail(n - 1 - i).dot(z.tail(n - 1 - i))) / chol_(i, i);
        }
        return z;
    }

    static double max_step(const Eigen::VectorXd &v, const Eigen::VectorXd &dv) {
        double alpha = 1.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (dv(i) < 0) {
                alpha = std::min(alpha, -v(i) / dv(i));
            }
        }
        return alpha;
    }

    void starting_point(Eigen::VectorXd &x, Eigen::VectorXd &y, Eigen::VectorXd &s) {
        const std::size_t N = cols_.size();
        if (!factor(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(N)))) {
            return;
        }
        x = transpose_times(solve_normal(b_));
        y = solve_normal(times(c_));
        s = c_ - transpose_times(y);
        const double dx = std::max(-1.5 * x.minCoeff(), 0.0);
        const double ds = std::max(-1.5 * s.minCoeff(), 0.0);
        x.array() += dx;
        s.array() += ds;
        const double xs = x.dot(s);
        const double sx = x.sum();
        const double ss = s.sum();
        if (sx <= 0 || ss <= 0 || xs <= 0) {
            x.setOnes();
            s.setOnes();
            return;
        }
        x.array() += 0.5 * xs / ss;
        s.array() += 0.5 * xs / sx;
    }

    // Affine-scaled least-norm corrections dx = X^2 A^T (A X^2 A^T)^-1 r
    // drive the equality residual to rounding level without leaving x >= 0.
    void refine(Eigen::VectorXd &x) {
        for (int pass = 0; pass < 3; ++pass) {
            Eigen::VectorXd r = b_ - times(x);
            if (r.lpNorm<Eigen::Infinity>() == 0) {
                return;
            }
            Eigen::VectorXd d = x.cwiseProduct(x);
            if (!factor(d)) {
                return;
            }
            Eigen::VectorXd step = d.cwiseProduct(transpose_times(solve_normal(r)));
            Eigen::VectorXd next = (x + step).cwiseMax(0.0);
            if ((b_ - times(next)).lpNorm<Eigen::Infinity>() >= r.lpNorm<Eigen::Infinity>()) {
                return;
            }
            x = next;
        }
    }

    const LinearProgram &lp_;
    LpSolverOptions opt_;
    std::vector<std::vector<Entry>> cols_;
    Eigen::VectorXd b_;
    Eigen::VectorXd c_;
    static constexpr double kHugePivot = 1e64;
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> chol_;
    Eigen::MatrixXd normal_;
};

}  // namespace

LpSolution solve_linear_program(const LinearProgram &lp, const LpSolverOptions &options) {
    for (double c : lp.objective()) {
        if (!std::isfinite(c)) {
            throw InvalidParameterError("objective coefficients must be finite");
        }
    }
    if (options.method == LpMethod::Simplex) {
        Simplex simplex(lp, options);
        return simplex.run();
    }
    InteriorPoint ipm(lp, options);
    return ipm.run();
}

}  // namespace pauliprobe
