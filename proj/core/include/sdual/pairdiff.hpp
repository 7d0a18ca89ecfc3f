#pragma once

// Pair-difference systems.
//
// For a group of n values the pair-difference matrix has one row per pair
// p < q (lexicographic order) computing x_p - x_q. The full system stacks n
// such blocks, one per group, and a slot->cell permutation decides which
// board cells each group reads. Group g occupies slots g*n .. g*n+n-1 and
// slot i reads cell perm(i). Nothing is ever materialized densely except by
// dump_matrix().
//
// All indices in this API are 0-based.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdual/ext_int.hpp"

namespace sdual {

/// Number of unordered pairs in a group of n: n(n-1)/2.
int triangular_size(int n);

struct PairRow {
    int p = 0;
    int q = 0;
    friend bool operator==(const PairRow&, const PairRow&) = default;
};

/// Rows of the single-group matrix in order: (0,1),(0,2),...,(0,n-1),(1,2),...
std::vector<PairRow> pair_rows(int n);

/// Bijection slot -> cell on {0, ..., size-1}.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int size);
    /// Throws std::invalid_argument naming the offending entry if not a bijection.
    static Permutation from_slots(std::vector<int> slot_to_cell);
    static Permutation from_one_based(std::span<const int> slot_to_cell);

    int size() const { return static_cast<int>(map_.size()); }
    int cell(int slot) const { return map_[static_cast<std::size_t>(slot)]; }
    std::span<const int> slots() const { return map_; }
    std::vector<int> one_based() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> map) : map_(std::move(map)) {}
    std::vector<int> map_;
};

/// The permuted block-diagonal system, evaluated implicitly.
class GroupSystem {
public:
    /// Throws std::invalid_argument if perm.size() != n*n or n < 1.
    GroupSystem(int n, Permutation perm);

    int n() const { return n_; }
    int rows() const { return n_ * static_cast<int>(pairs_.size()); }
    int cells() const { return n_ * n_; }
    const Permutation& perm() const { return perm_; }
    std::span<const PairRow> pairs() const { return pairs_; }

    /// Board cell holding member `member` of group `group`.
    int group_cell(int group, int member) const { return perm_.cell(group * n_ + member); }

private:
    int n_;
    Permutation perm_;
    std::vector<PairRow> pairs_;
};

/// Single-block product: differences x_p - x_q over pair_rows(x.size()).
std::vector<ExtInt> pair_differences(std::span<const ExtInt> x);
/// Single-block transposed product for a vector of s(n) finite entries.
std::vector<int> pair_scores(int n, std::span<const int> lam);

/// System times x (x has n*n entries). Output is group-major, pair-lexicographic.
std::vector<ExtInt> group_apply(const GroupSystem& sys, std::span<const ExtInt> x);
/// Transposed system times lam (lam has n*s(n) finite entries); one entry per cell.
std::vector<int> group_apply_transpose(const GroupSystem& sys, std::span<const int> lam);

/// Componentwise sign of a vector with no zero and no INF component.
/// Throws std::domain_error otherwise.
std::vector<int> sgn_vec(std::span<const ExtInt> y);

struct StandardPerms {
    Permutation rows;
    Permutation cols;
    std::optional<Permutation> blocks;  ///< present only when n is a perfect square
};

/// Row, column and block groupings of an n x n board with cell(r,c) = r*n + c.
StandardPerms standard_perms(int n);

/// Third grouping used when none is supplied: blocks for square n, the row
/// grouping for n == 2, nothing otherwise.
std::optional<Permutation> default_third_perm(int n);

/// Dense rendering: one line per row, space-separated -1/0/1 entries.
std::string dump_matrix(const GroupSystem& sys);

}  // namespace sdual
