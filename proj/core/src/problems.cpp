#include "sdual/problems.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdual {

namespace {

void check_cell_value(int n, int cell, ExtInt v)
{
    if (v.is_finite() && (v.value() < 1 || v.value() > n))
        throw std::invalid_argument("cell " + std::to_string(cell + 1) + " holds " + to_string(v) +
                                    ", expected 1.." + std::to_string(n) + " or empty");
}

bool groups_nonzero(const PrimalInstance& inst, const Board& b)
{
    for (int r = 0; r < 3; ++r)
        if (!all_nonzero(group_apply(inst.system(r), b.cells())))
            return false;
    return true;
}

bool givens_match(const PrimalInstance& inst, const Board& b)
{
    return std::all_of(inst.givens().begin(), inst.givens().end(),
                       [&](const Given& g) { return b[g.cell] == ExtInt(g.value); });
}

}  // namespace

Board::Board(int n, std::vector<ExtInt> cells) : n_(n), cells_(std::move(cells))
{
    if (n < 1)
        throw std::invalid_argument("Board: n must be >= 1");
    if (static_cast<int>(cells_.size()) != n * n)
        throw std::invalid_argument("Board: expected " + std::to_string(n * n) + " cells, got " +
                                    std::to_string(cells_.size()));
    for (int i = 0; i < size(); ++i)
        check_cell_value(n_, i, cells_[static_cast<std::size_t>(i)]);
}

Board Board::empty(int n)
{
    return Board(n, std::vector<ExtInt>(static_cast<std::size_t>(n * n), kInf));
}

void Board::set(int cell, ExtInt v)
{
    check_cell_value(n_, cell, v);
    cells_.at(static_cast<std::size_t>(cell)) = v;
}

int Board::empty_count() const
{
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](ExtInt v) { return v.is_inf(); }));
}

bool operator==(const Board& a, const Board& b)
{
    return a.n_ == b.n_ &&
           std::equal(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                      [](ExtInt x, ExtInt y) { return identical(x, y); });
}

DualCertificate::DualCertificate(int n, std::vector<int> signs) : n_(n), signs_(std::move(signs))
{
    const int expected = n * triangular_size(n);
    if (static_cast<int>(signs_.size()) != expected)
        throw std::invalid_argument("DualCertificate: expected " + std::to_string(expected) +
                                    " components, got " + std::to_string(signs_.size()));
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] != 1 && signs_[i] != -1)
            throw std::invalid_argument("DualCertificate: component " + std::to_string(i + 1) + " is " +
                                        std::to_string(signs_[i]) + ", expected -1 or +1");
}

PrimalInstance::PrimalInstance(int n, std::array<GroupSystem, 3> systems, std::vector<Given> givens)
    : n_(n), systems_(std::move(systems)), givens_(std::move(givens)),
      given_value_(static_cast<std::size_t>(n * n), 0)
{
    for (const auto& g : givens_)
        given_value_[static_cast<std::size_t>(g.cell)] = g.value;
}

std::optional<int> PrimalInstance::given_at(int cell) const
{
    const int v = given_value_.at(static_cast<std::size_t>(cell));
    if (v == 0)
        return std::nullopt;
    return v;
}

Board PrimalInstance::givens_board() const
{
    Board b = Board::empty(n_);
    for (const auto& g : givens_)
        b.set(g.cell, g.value);
    return b;
}

bool operator==(const PrimalInstance& a, const PrimalInstance& b)
{
    if (a.n_ != b.n_ || a.givens_ != b.givens_)
        return false;
    for (int r = 0; r < 3; ++r)
        if (a.perm(r) != b.perm(r))
            return false;
    return true;
}

PrimalInstance make_primal(int n, std::array<Permutation, 3> perms, std::vector<Given> givens)
{
    if (n < 2)
        throw std::invalid_argument("instance: n must be >= 2, got " + std::to_string(n));
    const int cells = n * n;
    for (int r = 0; r < 3; ++r)
        if (perms[static_cast<std::size_t>(r)].size() != cells)
            throw std::invalid_argument("instance: permutation " + std::to_string(r + 1) + " has " +
                                        std::to_string(perms[static_cast<std::size_t>(r)].size()) +
                                        " entries, expected " + std::to_string(cells));
    std::vector<char> used(static_cast<std::size_t>(cells), 0);
    for (const auto& g : givens) {
        if (g.cell < 0 || g.cell >= cells)
            throw std::invalid_argument("instance: given cell " + std::to_string(g.cell + 1) +
                                        " out of range 1.." + std::to_string(cells));
        if (g.value < 1 || g.value > n)
            throw std::invalid_argument("instance: given value " + std::to_string(g.value) + " at cell " +
                                        std::to_string(g.cell + 1) + " out of range 1.." + std::to_string(n));
        if (used[static_cast<std::size_t>(g.cell)])
            throw std::invalid_argument("instance: duplicate given at cell " + std::to_string(g.cell + 1));
        used[static_cast<std::size_t>(g.cell)] = 1;
    }
    std::array<GroupSystem, 3> systems{GroupSystem(n, std::move(perms[0])), GroupSystem(n, std::move(perms[1])),
                                       GroupSystem(n, std::move(perms[2]))};
    return PrimalInstance(n, std::move(systems), std::move(givens));
}

PrimalInstance make_standard_primal(int n, std::vector<Given> givens)
{
    auto third = default_third_perm(n);
    if (!third)
        throw std::invalid_argument("instance: n = " + std::to_string(n) +
                                    " has no block grouping; supply a third permutation");
    auto std_perms = standard_perms(n);
    return make_primal(n, {std::move(std_perms.rows), std::move(std_perms.cols), std::move(*third)},
                       std::move(givens));
}

int primal_objective(const Board& b)
{
    return b.empty_count();
}

PrimalCheck check_primal(const PrimalInstance& inst, const Board& b)
{
    PrimalCheck out;
    if (b.n() != inst.n()) {
        out.reasons.push_back("board size n=" + std::to_string(b.n()) + " does not match instance n=" +
                              std::to_string(inst.n()));
        return out;
    }
    const int n = inst.n();
    for (int r = 0; r < 3; ++r) {
        const auto& sys = inst.system(r);
        const auto diffs = group_apply(sys, b.cells());
        std::size_t row = 0;
        for (int g = 0; g < n; ++g) {
            for (const auto& [p, q] : sys.pairs()) {
                if (!diffs[row].is_nonzero()) {
                    const int a = sys.group_cell(g, p), c = sys.group_cell(g, q);
                    out.reasons.push_back("grouping " + std::to_string(r + 1) + " group " + std::to_string(g + 1) +
                                          ": cells " + std::to_string(a + 1) + " and " + std::to_string(c + 1) +
                                          " both hold " + to_string(b[a]));
                }
                ++row;
            }
        }
    }
    for (const auto& g : inst.givens()) {
        if (!(b[g.cell] == ExtInt(g.value)))
            out.reasons.push_back("given at cell " + std::to_string(g.cell + 1) + " expects " +
                                  std::to_string(g.value) + ", board has " + to_string(b[g.cell]));
    }
    out.feasible = out.reasons.empty();
    return out;
}

bool is_primal_feasible(const PrimalInstance& inst, const Board& b)
{
    return b.n() == inst.n() && givens_match(inst, b) && groups_nonzero(inst, b);
}

bool satisfies_alldifferent(const PrimalInstance& inst, const Board& b)
{
    return b.n() == inst.n() && groups_nonzero(inst, b);
}

bool solves_primal(const PrimalInstance& inst, const Board& b)
{
    return b.complete() && is_primal_feasible(inst, b);
}

std::vector<int> dual_scores(const PrimalInstance& inst, const DualCertificate& c)
{
    if (c.n() != inst.n())
        throw std::invalid_argument("certificate size n=" + std::to_string(c.n()) +
                                    " does not match instance n=" + std::to_string(inst.n()));
    return group_apply_transpose(inst.system(0), c.signs());
}

int dual_objective(const PrimalInstance& inst, const DualCertificate& c)
{
    const auto scores = dual_scores(inst, c);
    const int n = inst.n();
    int matched = 0;
    for (const auto& g : inst.givens())
        if (scores[static_cast<std::size_t>(g.cell)] == 2 * g.value - (n + 1))
            ++matched;
    return matched - inst.given_count();
}

bool is_dual_feasible(const PrimalInstance& inst, const DualCertificate& c)
{
    const auto scores = dual_scores(inst, c);
    const std::vector<ExtInt> ext(scores.begin(), scores.end());
    for (int r = 0; r < 3; ++r)
        if (!all_nonzero(group_apply(inst.system(r), ext)))
            return false;
    return true;
}

bool solves_dual(const PrimalInstance& inst, const DualCertificate& c)
{
    return is_dual_feasible(inst, c) && dual_objective(inst, c) == 0;
}

}  // namespace sdual
