#pragma once

// Primal and dual instances of the generalized Sudoku model.
//
// Primal: find a board with values in 1..n such that, under each of the three
// groupings, no two cells of a group share a value, and every given cell holds
// its given value. Boards may contain INF (empty) cells; the feasible set
// admits them and the objective counts them.
//
// Dual: find a +-1 vector over the pair rows of the first grouping whose
// per-cell scores are pairwise distinct within every group of all three
// groupings, and whose score at each given cell equals 2*g - (n+1).

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdual/ext_int.hpp"
#include "sdual/pairdiff.hpp"

namespace sdual {

struct Given {
    int cell = 0;   ///< 0-based board index
    int value = 0;  ///< 1..n
    friend bool operator==(const Given&, const Given&) = default;
};

/// n*n cells, each INF or a value in 1..n.
class Board {
public:
    Board() = default;
    /// Throws std::invalid_argument on wrong length or out-of-range value.
    Board(int n, std::vector<ExtInt> cells);
    static Board empty(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(cells_.size()); }
    std::span<const ExtInt> cells() const { return cells_; }
    ExtInt operator[](int cell) const { return cells_[static_cast<std::size_t>(cell)]; }

    /// Throws std::invalid_argument if v is finite and outside 1..n.
    void set(int cell, ExtInt v);

    int empty_count() const;
    bool complete() const { return empty_count() == 0; }

    /// Structural equality (INF matches INF).
    friend bool operator==(const Board& a, const Board& b);

private:
    int n_ = 0;
    std::vector<ExtInt> cells_;
};

/// A vector in {-1,+1}^(n*s(n)), group-major and pair-lexicographic over the
/// first grouping.
class DualCertificate {
public:
    DualCertificate() = default;
    /// Throws std::invalid_argument on wrong length or a component not in {-1,+1}.
    DualCertificate(int n, std::vector<int> signs);

    int n() const { return n_; }
    int size() const { return static_cast<int>(signs_.size()); }
    std::span<const int> signs() const { return signs_; }

    friend bool operator==(const DualCertificate&, const DualCertificate&) = default;

private:
    int n_ = 0;
    std::vector<int> signs_;
};

class PrimalInstance {
public:
    int n() const { return n_; }
    const Permutation& perm(int r) const { return systems_[static_cast<std::size_t>(r)].perm(); }
    const GroupSystem& system(int r) const { return systems_[static_cast<std::size_t>(r)]; }
    std::span<const Given> givens() const { return givens_; }
    int given_count() const { return static_cast<int>(givens_.size()); }
    std::optional<int> given_at(int cell) const;

    /// Givens placed, every other cell INF.
    Board givens_board() const;

    friend bool operator==(const PrimalInstance& a, const PrimalInstance& b);

private:
    friend PrimalInstance make_primal(int n, std::array<Permutation, 3> perms, std::vector<Given> givens);
    PrimalInstance(int n, std::array<GroupSystem, 3> systems, std::vector<Given> givens);

    int n_;
    std::array<GroupSystem, 3> systems_;
    std::vector<Given> givens_;
    std::vector<int> given_value_;  // 0 = no given
};

/// Validated constructor. Throws std::invalid_argument naming the offending
/// item for n < 2, a permutation of the wrong size, a given cell out of range,
/// a duplicate given cell, or a given value outside 1..n.
PrimalInstance make_primal(int n, std::array<Permutation, 3> perms, std::vector<Given> givens);

/// Rows, columns, and the default third grouping (see default_third_perm).
/// Throws std::invalid_argument when no default third grouping exists for n.
PrimalInstance make_standard_primal(int n, std::vector<Given> givens = {});

/// Number of INF cells.
int primal_objective(const Board& b);

struct PrimalCheck {
    bool feasible = false;
    std::vector<std::string> reasons;  ///< empty iff feasible
};

/// Membership in the primal feasible set with a reason per violated row/given.
PrimalCheck check_primal(const PrimalInstance& inst, const Board& b);

bool is_primal_feasible(const PrimalInstance& inst, const Board& b);

/// The three all-different conditions alone; givens are ignored.
bool satisfies_alldifferent(const PrimalInstance& inst, const Board& b);

/// Complete and feasible.
bool solves_primal(const PrimalInstance& inst, const Board& b);

/// Per-cell scores of a certificate under the first grouping.
std::vector<int> dual_scores(const PrimalInstance& inst, const DualCertificate& c);

/// (number of givens whose score equals 2g - (n+1)) - (number of givens).
int dual_objective(const PrimalInstance& inst, const DualCertificate& c);

bool is_dual_feasible(const PrimalInstance& inst, const DualCertificate& c);

bool solves_dual(const PrimalInstance& inst, const DualCertificate& c);

}  // namespace sdual
