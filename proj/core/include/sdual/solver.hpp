#pragma once

// Primal optimization by descent: every point visited is primal feasible and
// the recorded points have strictly fewer empty cells than their predecessor.
//
// The search runs in two phases. The first looks for a complete solution with
// candidate propagation and depth-first branching. If none exists, the second
// runs branch-and-bound over partial boards (a cell may stay empty) to find the
// minimum number of empty cells.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdual/problems.hpp"

namespace sdual {

/// Per-cell candidate sets as bitmasks (bit v-1 set iff v is a candidate).
class CandidateGrid {
public:
    using Mask = std::uint64_t;

    /// Givens as singletons, every other cell 1..n.
    static CandidateGrid from_instance(const PrimalInstance& inst);
    CandidateGrid(int n, std::vector<Mask> masks);

    int n() const { return n_; }
    Mask full_mask() const;
    Mask candidates(int cell) const { return masks_[static_cast<std::size_t>(cell)]; }
    void restrict_to(int cell, Mask mask) { masks_[static_cast<std::size_t>(cell)] &= mask; }
    void assign(int cell, int value) { masks_[static_cast<std::size_t>(cell)] = Mask{1} << (value - 1); }
    bool is_fixed(int cell) const;
    std::optional<int> fixed_value(int cell) const;
    bool has_empty_set() const;

    /// Fixed cells as values, every other cell INF.
    Board board() const;

    friend bool operator==(const CandidateGrid&, const CandidateGrid&) = default;

private:
    int n_ = 0;
    std::vector<Mask> masks_;
};

/// Fixpoint of naked-single elimination, single-candidate placement and
/// unique-placement within a group, over all three groupings. Returns
/// std::nullopt (contradiction) iff some candidate set becomes empty.
std::optional<CandidateGrid> propagate(const PrimalInstance& inst, CandidateGrid grid);

/// Primal feasible boards with strictly decreasing empty-cell counts.
class DescentTrace {
public:
    /// Throws std::logic_error unless b has fewer empty cells than the last entry.
    void push(Board b);
    std::span<const Board> steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }
    const Board& back() const { return steps_.back(); }

private:
    std::vector<Board> steps_;
};

struct PrimalOptimum {
    int value = 0;  ///< minimum number of empty cells
    Board board;    ///< a minimizer; equals trace.back()
    DescentTrace trace;
    std::uint64_t nodes = 0;
};

/// Exact primal optimum, or std::nullopt when the primal feasible set is
/// empty (the givens conflict). Deterministic: minimum-remaining-values
/// branching, lowest cell first on ties, values ascending, "leave empty" last.
/// Throws std::invalid_argument for n > 64.
std::optional<PrimalOptimum> solve(const PrimalInstance& inst);

}  // namespace sdual
