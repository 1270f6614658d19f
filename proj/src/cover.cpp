// Copyright 2026 The tomoplan Authors
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

#include "tomo/cover.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>

namespace tomo {

namespace {

// Fixed-width bitset sized at construction.
class Bits {
  public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void or_with(const Bits &other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    std::size_t count_and_not(const Bits &mask) const {  // |this & ~mask|
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            c += std::popcount(words_[w] & ~mask.words_[w]);
        }
        return c;
    }

    std::size_t count_and(const Bits &other) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            c += std::popcount(words_[w] & other.words_[w]);
        }
        return c;
    }

    // index of the single set bit of (this & other); call only when count==1
    std::size_t first_common(const Bits &other) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t v = words_[w] & other.words_[w];
            if (v) return w * 64 + std::countr_zero(v);
        }
        return SIZE_MAX;
    }

    bool subset_of(const Bits &other) const {  // treats both as residuals
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & ~other.words_[w]) return false;
        }
        return true;
    }

    bool operator==(const Bits &) const = default;

    std::vector<std::uint64_t> words_;
};

// Depth-first branch and bound over flat preallocated per-depth state, so a
// node costs a few word scans and no allocation.
class ExactSolver {
  public:
    ExactSolver(const CoverProblem &p, const SolveBudget &budget)
        : problem_(p),
          budget_(budget),
          rows_(static_cast<int>(p.row_support.size())),
          cols_(p.num_cols),
          col_words_((cols_ + 63) / 64),
          row_words_((rows_ + 63) / 64),
          start_(std::chrono::steady_clock::now()) {
        supports_.assign(rows_ * col_words_, 0);
        col_rows_.assign(cols_ * row_words_, 0);
        for (int r = 0; r < rows_; ++r) {
            for (std::uint64_t col : p.row_support[r]) {
                supports_[r * col_words_ + (col - 1) / 64] |= std::uint64_t{1} << ((col - 1) % 64);
                col_rows_[(col - 1) * row_words_ + r / 64] |= std::uint64_t{1} << (r % 64);
            }
        }
        const std::size_t max_depth = static_cast<std::size_t>(rows_) + 2;
        covered_stack_.assign((max_depth + 1) * col_words_, 0);
        active_stack_.assign((max_depth + 1) * row_words_, 0);
        residual_.assign(rows_, 0);
        scratch_res_.assign(rows_ * col_words_, 0);
    }

    CoverSolution run() {
        const CoverSolution greedy = solve_greedy(problem_);
        best_.assign(greedy.selected.begin(), greedy.selected.end());
        for (int &r : best_) --r;  // to 0-based

        std::uint64_t *active = active_stack_.data();
        for (int r = 0; r < rows_; ++r) active[r / 64] |= std::uint64_t{1} << (r % 64);
        chosen_.clear();
        search(0);

        CoverSolution out;
        out.nodes = nodes_;
        out.objective = static_cast<int>(best_.size());
        out.status = exhausted_ ? SolveStatus::Feasible : SolveStatus::Optimal;
        out.lower_bound =
            exhausted_ ? std::min(out.objective, min_abandoned_bound_) : out.objective;
        out.selected.reserve(best_.size());
        for (int r : best_) out.selected.push_back(r + 1);
        std::sort(out.selected.begin(), out.selected.end());
        return out;
    }

  private:
    const std::uint64_t *support(int r) const { return &supports_[r * col_words_]; }
    std::uint64_t *covered_at(std::size_t depth) { return &covered_stack_[depth * col_words_]; }
    std::uint64_t *active_at(std::size_t depth) { return &active_stack_[depth * row_words_]; }

    bool over_budget() {
        if (nodes_ > budget_.max_nodes) return true;
        if (budget_.max_seconds > 0 && (nodes_ & 1023) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.max_seconds) wall_exceeded_ = true;
        }
        return wall_exceeded_;
    }

    void include_row(int r, std::uint64_t *covered, std::uint64_t *active) {
        chosen_.push_back(r);
        const std::uint64_t *sup = support(r);
        for (int w = 0; w < col_words_; ++w) covered[w] |= sup[w];
        active[r / 64] &= ~(std::uint64_t{1} << (r % 64));
    }

    void update_incumbent() {
        if (chosen_.size() < best_.size()) {
            best_ = chosen_;
            std::sort(best_.begin(), best_.end());
        }
    }

    void search(std::size_t depth) {
        ++nodes_;
        std::uint64_t *covered = covered_at(depth);
        std::uint64_t *active = active_at(depth);
        const std::size_t chosen_mark = chosen_.size();

        // Propagate to fixpoint: drop spent rows, include forced rows, prune
        // dominated rows; each inclusion can force more.
        std::uint64_t uncovered_count = 0;
        while (true) {
            bool changed = false;
            for (int rw = 0; rw < row_words_; ++rw) {
                std::uint64_t bits = active[rw];
                while (bits) {
                    const int r = rw * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t *sup = support(r);
                    std::size_t cnt = 0;
                    for (int w = 0; w < col_words_; ++w) cnt += std::popcount(sup[w] & ~covered[w]);
                    residual_[r] = cnt;
                    if (cnt == 0) active[r / 64] &= ~(std::uint64_t{1} << (r % 64));
                }
            }
            uncovered_count = 0;
            for (int w = 0; w < col_words_; ++w) uncovered_count += std::popcount(covered[w]);
            uncovered_count = cols_ - uncovered_count;
            if (uncovered_count == 0) {
                update_incumbent();
                chosen_.resize(chosen_mark);
                return;
            }
            // Forced rows: any uncovered column with a unique active cover.
            for (int w = 0; w < col_words_; ++w) {
                std::uint64_t open = ~covered[w];
                if (w == col_words_ - 1 && (cols_ % 64)) open &= (std::uint64_t{1} << (cols_ % 64)) - 1;
                while (open) {
                    const std::uint64_t c = w * 64ULL + std::countr_zero(open);
                    open &= open - 1;
                    if ((covered[w] >> (c % 64)) & 1) continue;  // covered by a force below
                    const std::uint64_t *cr = &col_rows_[c * row_words_];
                    std::size_t cnt = 0;
                    int last = -1;
                    for (int rw = 0; rw < row_words_ && cnt < 2; ++rw) {
                        const std::uint64_t v = cr[rw] & active[rw];
                        if (v) {
                            cnt += std::popcount(v);
                            last = rw * 64 + std::countr_zero(v);
                        }
                    }
                    if (cnt == 0) {  // this branch cannot cover column c
                        chosen_.resize(chosen_mark);
                        return;
                    }
                    if (cnt == 1) {
                        include_row(last, covered, active);
                        changed = true;
                    }
                }
            }
            if (!changed) changed = prune_dominated(covered, active);
            if (!changed) break;
        }

        std::size_t max_residual = 0;
        int branch_row = -1;
        for (int rw = 0; rw < row_words_; ++rw) {
            std::uint64_t bits = active[rw];
            while (bits) {
                const int r = rw * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (residual_[r] > max_residual) {
                    max_residual = residual_[r];
                    branch_row = r;
                }
            }
        }
        if (branch_row < 0) {  // no usable rows left
            chosen_.resize(chosen_mark);
            return;
        }

        const int bound = static_cast<int>(chosen_.size() +
                                           (uncovered_count + max_residual - 1) / max_residual);
        if (bound >= static_cast<int>(best_.size())) {
            chosen_.resize(chosen_mark);
            return;
        }

        if (exhausted_ || over_budget()) {
            exhausted_ = true;
            min_abandoned_bound_ = std::min(min_abandoned_bound_, bound);
            chosen_.resize(chosen_mark);
            return;
        }

        // Include branch first: the greedy-style dive reaches incumbents early.
        std::uint64_t *child_covered = covered_at(depth + 1);
        std::uint64_t *child_active = active_at(depth + 1);
        const std::uint64_t *sup = support(branch_row);
        for (int w = 0; w < col_words_; ++w) child_covered[w] = covered[w] | sup[w];
        std::copy(active, active + row_words_, child_active);
        child_active[branch_row / 64] &= ~(std::uint64_t{1} << (branch_row % 64));
        chosen_.push_back(branch_row);
        search(depth + 1);
        chosen_.pop_back();
        if (exhausted_) {
            min_abandoned_bound_ = std::min(min_abandoned_bound_, bound);
            chosen_.resize(chosen_mark);
            return;
        }

        std::copy(covered, covered + col_words_, child_covered);
        std::copy(active, active + row_words_, child_active);
        child_active[branch_row / 64] &= ~(std::uint64_t{1} << (branch_row % 64));
        search(depth + 1);
        if (exhausted_) {
            min_abandoned_bound_ = std::min(min_abandoned_bound_, bound);
        }
        chosen_.resize(chosen_mark);
    }

    // Removes every active row whose residual support is contained in another
    // active row's; equal supports keep the lower index. Returns whether any
    // row was removed. Uses residual_ counts computed by the caller.
    bool prune_dominated(const std::uint64_t *covered, std::uint64_t *active) {
        active_list_.clear();
        for (int rw = 0; rw < row_words_; ++rw) {
            std::uint64_t bits = active[rw];
            while (bits) {
                const int r = rw * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                active_list_.push_back(r);
                std::uint64_t *res = &scratch_res_[r * col_words_];
                const std::uint64_t *sup = support(r);
                for (int w = 0; w < col_words_; ++w) res[w] = sup[w] & ~covered[w];
            }
        }
        auto subset = [&](int a, int b) {
            const std::uint64_t *ra = &scratch_res_[a * col_words_];
            const std::uint64_t *rb = &scratch_res_[b * col_words_];
            for (int w = 0; w < col_words_; ++w) {
                if (ra[w] & ~rb[w]) return false;
            }
            return true;
        };
        auto deactivate = [&](int r) { active[r / 64] &= ~(std::uint64_t{1} << (r % 64)); };
        auto alive = [&](int r) { return (active[r / 64] >> (r % 64)) & 1; };

        bool removed = false;
        for (std::size_t i = 0; i < active_list_.size(); ++i) {
            const int a = active_list_[i];
            if (!alive(a)) continue;
            for (std::size_t j = i + 1; j < active_list_.size(); ++j) {
                const int b = active_list_[j];
                if (!alive(b)) continue;
                if (residual_[a] <= residual_[b] && subset(a, b)) {
                    if (residual_[a] == residual_[b] && subset(b, a)) {
                        deactivate(b);  // equal supports: keep the lower index
                    } else {
                        deactivate(a);
                    }
                    removed = true;
                    if (!alive(a)) break;
                } else if (residual_[b] <= residual_[a] && subset(b, a)) {
                    deactivate(b);
                    removed = true;
                }
            }
        }
        return removed;
    }

    const CoverProblem &problem_;
    SolveBudget budget_;
    int rows_;
    std::uint64_t cols_;
    int col_words_;
    int row_words_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::uint64_t> supports_;   // rows_ x col_words_
    std::vector<std::uint64_t> col_rows_;   // cols_ x row_words_
    std::vector<std::uint64_t> covered_stack_;
    std::vector<std::uint64_t> active_stack_;
    std::vector<std::size_t> residual_;
    std::vector<std::uint64_t> scratch_res_;
    std::vector<int> active_list_;
    std::vector<int> chosen_;
    std::vector<int> best_;  // 0-based, sorted
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool wall_exceeded_ = false;
    int min_abandoned_bound_ = std::numeric_limits<int>::max();
};

}  // namespace

std::string CoverProblem::col_label(std::uint64_t col) const {
    if (!col_labels.empty() && col >= 1 && col <= col_labels.size()) {
        return col_labels[col - 1];
    }
    return "col" + std::to_string(col);
}

CoverProblem make_problem(std::uint64_t num_cols,
                          std::vector<std::vector<std::uint64_t>> supports,
                          std::vector<std::string> col_labels,
                          std::vector<std::string> row_labels) {
    CoverProblem p;
    p.num_rows = static_cast<int>(supports.size());
    p.num_cols = num_cols;
    p.col_labels = std::move(col_labels);
    p.row_labels = std::move(row_labels);

    std::vector<bool> covered(num_cols, false);
    for (auto &sup : supports) {
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        for (std::uint64_t col : sup) {
            if (col < 1 || col > num_cols) {
                throw RangeError("support column " + std::to_string(col) + " out of range");
            }
            covered[col - 1] = true;
        }
    }
    p.row_support = std::move(supports);

    std::vector<std::string> uncovered;
    for (std::uint64_t c = 1; c <= num_cols; ++c) {
        if (!covered[c - 1]) uncovered.push_back(p.col_label(c));
    }
    if (!uncovered.empty()) {
        const std::string msg =
            "no row covers " + uncovered.front() +
            (uncovered.size() > 1 ? " (and " + std::to_string(uncovered.size() - 1) + " more)"
                                  : "");
        throw InfeasibleError(msg, std::move(uncovered));
    }
    return p;
}

CoverProblem make_problem(const CoverageMatrix &m) {
    std::vector<std::vector<std::uint64_t>> supports(m.row_entries.size());
    for (std::size_t r = 0; r < m.row_entries.size(); ++r) {
        supports[r].reserve(m.row_entries[r].size());
        for (const auto &[col, sign] : m.row_entries[r]) supports[r].push_back(col);
    }
    std::vector<std::string> col_labels;
    col_labels.reserve(m.cols);
    for (std::uint64_t c = 1; c <= m.cols; ++c) col_labels.push_back(m.col_label(c));
    return make_problem(m.cols, std::move(supports), std::move(col_labels), m.row_labels);
}

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Greedy: return "greedy";
    }
    throw ContractError("unknown solve status");
}

CoverSolution solve_greedy(const CoverProblem &p) {
    Bits covered(p.num_cols);
    std::vector<Bits> supports;
    supports.reserve(p.row_support.size());
    for (const auto &sup : p.row_support) {
        Bits b(p.num_cols);
        for (std::uint64_t col : sup) b.set(col - 1);
        supports.push_back(std::move(b));
    }

    std::size_t initial_max = 0;
    for (const auto &sup : p.row_support) initial_max = std::max(initial_max, sup.size());

    CoverSolution out;
    out.status = SolveStatus::Greedy;
    out.lower_bound = initial_max == 0
                          ? 0
                          : static_cast<int>((p.num_cols + initial_max - 1) / initial_max);
    while (covered.count() < p.num_cols) {
        std::size_t best_gain = 0;
        int best_row = -1;
        for (int r = 0; r < p.num_rows; ++r) {
            const std::size_t gain = supports[r].count_and_not(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best_row = r;
            }
        }
        if (best_row < 0) {
            throw InfeasibleError("greedy ran out of useful rows", {});
        }
        covered.or_with(supports[best_row]);
        out.selected.push_back(best_row + 1);
    }
    std::sort(out.selected.begin(), out.selected.end());
    out.objective = static_cast<int>(out.selected.size());
    return out;
}

CoverSolution solve_exact(const CoverProblem &p, const SolveBudget &budget) {
    if (budget.max_nodes == 0 || budget.max_seconds < 0) {
        throw RangeError("solver budget must be positive");
    }
    return ExactSolver(p, budget).run();
}

CoverReport verify_cover(const CoverageMatrix &m, const std::vector<int> &selected) {
    std::vector<bool> covered(m.cols, false);
    for (int row : selected) {
        if (row < 1 || row > m.rows) {
            throw RangeError("selected row " + std::to_string(row) + " out of range [1, " +
                             std::to_string(m.rows) + "]");
        }
        for (const auto &[col, sign] : m.row_entries[row - 1]) covered[col - 1] = true;
    }
    CoverReport report;
    report.complete = true;
    for (std::uint64_t c = 1; c <= m.cols; ++c) {
        if (!covered[c - 1]) {
            report.complete = false;
            report.uncovered.push_back(m.col_label(c));
        }
    }
    return report;
}

}  // namespace tomo
