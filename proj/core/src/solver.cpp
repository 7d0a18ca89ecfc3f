#include "sdual/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdual {

namespace {

using Mask = CandidateGrid::Mask;

// Cells of every group of every grouping, plus the deduplicated peer list of
// each cell.
struct Topology {
    int n = 0;
    std::vector<std::vector<int>> groups;
    std::vector<std::vector<int>> peers;

    explicit Topology(const PrimalInstance& inst) : n(inst.n())
    {
        const int cells = n * n;
        peers.resize(static_cast<std::size_t>(cells));
        for (int r = 0; r < 3; ++r) {
            for (int g = 0; g < n; ++g) {
                std::vector<int> members;
                for (int p = 0; p < n; ++p)
                    members.push_back(inst.system(r).group_cell(g, p));
                for (int a : members)
                    for (int b : members)
                        if (a != b)
                            peers[static_cast<std::size_t>(a)].push_back(b);
                groups.push_back(std::move(members));
            }
        }
        for (auto& list : peers) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }
};

std::optional<CandidateGrid> propagate_with(const Topology& topo, CandidateGrid grid)
{
    const int cells = topo.n * topo.n;
    std::vector<int> queue;
    std::vector<char> done(static_cast<std::size_t>(cells), 0);
    for (int c = 0; c < cells; ++c) {
        if (grid.candidates(c) == 0)
            return std::nullopt;
        if (grid.is_fixed(c))
            queue.push_back(c);
    }

    for (;;) {
        while (!queue.empty()) {
            const int c = queue.back();
            queue.pop_back();
            if (done[static_cast<std::size_t>(c)])
                continue;
            done[static_cast<std::size_t>(c)] = 1;
            const Mask bit = grid.candidates(c);
            for (int peer : topo.peers[static_cast<std::size_t>(c)]) {
                if (!(grid.candidates(peer) & bit))
                    continue;
                grid.restrict_to(peer, ~bit);
                if (grid.candidates(peer) == 0)
                    return std::nullopt;
                if (grid.is_fixed(peer))
                    queue.push_back(peer);
            }
        }

        bool placed = false;
        for (const auto& group : topo.groups) {
            for (int v = 1; v <= topo.n; ++v) {
                const Mask bit = Mask{1} << (v - 1);
                int holder = -1, count = 0;
                for (int c : group) {
                    if (grid.candidates(c) & bit) {
                        holder = c;
                        ++count;
                    }
                }
                if (count == 1 && !grid.is_fixed(holder)) {
                    grid.assign(holder, v);
                    queue.push_back(holder);
                    placed = true;
                }
            }
        }
        if (!placed)
            return grid;
    }
}

class Search {
public:
    explicit Search(const PrimalInstance& inst) : inst_(inst), topo_(inst) {}

    PrimalOptimum run()
    {
        record(inst_.givens_board());
        if (primal_objective(trace_.back()) > 0 && !complete_search(CandidateGrid::from_instance(inst_)))
            partial_search();
        PrimalOptimum out;
        out.value = primal_objective(trace_.back());
        out.board = trace_.back();
        out.trace = std::move(trace_);
        out.nodes = nodes_;
        return out;
    }

private:
    int best() const { return primal_objective(trace_.back()); }

    void record(Board b)
    {
        if (trace_.empty() || primal_objective(b) < best())
            trace_.push(std::move(b));
    }

    // A value with no remaining cell in some group rules out a complete board.
    bool value_unplaceable(const CandidateGrid& grid) const
    {
        const Mask full = grid.full_mask();
        return std::any_of(topo_.groups.begin(), topo_.groups.end(), [&](const std::vector<int>& group) {
            Mask seen = 0;
            for (int c : group)
                seen |= grid.candidates(c);
            return seen != full;
        });
    }

    bool complete_search(CandidateGrid grid)
    {
        ++nodes_;
        auto next = propagate_with(topo_, std::move(grid));
        if (!next)
            return false;
        record(next->board());
        if (best() == 0)
            return true;
        if (value_unplaceable(*next))
            return false;

        const int cells = topo_.n * topo_.n;
        int pick = -1, pick_count = 0;
        for (int c = 0; c < cells; ++c) {
            const int count = std::popcount(next->candidates(c));
            if (count > 1 && (pick < 0 || count < pick_count)) {
                pick = c;
                pick_count = count;
            }
        }
        if (pick < 0)
            return false;
        for (Mask m = next->candidates(pick); m; m &= m - 1) {
            CandidateGrid child = *next;
            child.assign(pick, std::countr_zero(m) + 1);
            if (complete_search(std::move(child)))
                return true;
        }
        return false;
    }

    // Branch-and-bound over partial boards. Every node board (undecided cells
    // read as empty) is primal feasible, so each one is a valid upper bound.
    void partial_search()
    {
        const int cells = topo_.n * topo_.n;
        board_ = inst_.givens_board();
        decided_.assign(static_cast<std::size_t>(cells), 0);
        for (const auto& g : inst_.givens())
            decided_[static_cast<std::size_t>(g.cell)] = 1;
        branch(0);
    }

    Mask open_candidates(int cell) const
    {
        Mask m = (topo_.n == 64) ? ~Mask{0} : ((Mask{1} << topo_.n) - 1);
        for (int peer : topo_.peers[static_cast<std::size_t>(cell)]) {
            const ExtInt v = board_[peer];
            if (decided_[static_cast<std::size_t>(peer)] && v.is_finite())
                m &= ~(Mask{1} << (v.value() - 1));
        }
        return m;
    }

    void branch(int empties)
    {
        ++nodes_;
        const int cells = topo_.n * topo_.n;

        // Cells without candidates stay empty for good: constraints only grow.
        std::vector<int> forced;
        std::vector<Mask> masks(static_cast<std::size_t>(cells), 0);
        int undecided = 0;
        for (int c = 0; c < cells; ++c) {
            if (decided_[static_cast<std::size_t>(c)])
                continue;
            masks[static_cast<std::size_t>(c)] = open_candidates(c);
            if (masks[static_cast<std::size_t>(c)] == 0)
                forced.push_back(c);
            else
                ++undecided;
        }
        for (int c : forced)
            decided_[static_cast<std::size_t>(c)] = 1;
        empties += static_cast<int>(forced.size());
        auto undo_forced = [&] {
            for (int c : forced)
                decided_[static_cast<std::size_t>(c)] = 0;
        };

        // Lower bound: in each group, undecided cells beyond the number of
        // values still available to them must stay empty.
        int deficit = 0;
        for (const auto& group : topo_.groups) {
            Mask avail = 0;
            int open = 0;
            for (int c : group) {
                if (!decided_[static_cast<std::size_t>(c)]) {
                    avail |= masks[static_cast<std::size_t>(c)];
                    ++open;
                }
            }
            deficit = std::max(deficit, open - std::popcount(avail));
        }
        if (empties + deficit >= best()) {
            undo_forced();
            return;
        }
        record(board_);
        if (undecided == 0) {
            undo_forced();
            return;
        }

        int pick = -1, pick_count = 0;
        for (int c = 0; c < cells; ++c) {
            if (decided_[static_cast<std::size_t>(c)])
                continue;
            const int count = std::popcount(masks[static_cast<std::size_t>(c)]);
            if (pick < 0 || count < pick_count) {
                pick = c;
                pick_count = count;
            }
        }

        decided_[static_cast<std::size_t>(pick)] = 1;
        for (Mask m = masks[static_cast<std::size_t>(pick)]; m; m &= m - 1) {
            board_.set(pick, std::countr_zero(m) + 1);
            branch(empties);
        }
        board_.set(pick, kInf);
        branch(empties + 1);
        decided_[static_cast<std::size_t>(pick)] = 0;
        undo_forced();
    }

    const PrimalInstance& inst_;
    Topology topo_;
    DescentTrace trace_;
    std::uint64_t nodes_ = 0;
    Board board_;
    std::vector<char> decided_;
};

}  // namespace

CandidateGrid CandidateGrid::from_instance(const PrimalInstance& inst)
{
    const int n = inst.n();
    CandidateGrid grid(n, std::vector<Mask>(static_cast<std::size_t>(n * n), 0));
    const Mask full = grid.full_mask();
    for (int c = 0; c < n * n; ++c) {
        if (auto g = inst.given_at(c))
            grid.assign(c, *g);
        else
            grid.masks_[static_cast<std::size_t>(c)] = full;
    }
    return grid;
}

CandidateGrid::CandidateGrid(int n, std::vector<Mask> masks) : n_(n), masks_(std::move(masks))
{
    if (n < 1 || n > 64)
        throw std::invalid_argument("CandidateGrid: n must be in 1..64");
    if (static_cast<int>(masks_.size()) != n * n)
        throw std::invalid_argument("CandidateGrid: expected " + std::to_string(n * n) + " cells");
    const Mask full = full_mask();
    for (auto m : masks_)
        if (m & ~full)
            throw std::invalid_argument("CandidateGrid: candidate outside 1..n");
}

CandidateGrid::Mask CandidateGrid::full_mask() const
{
    return n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
}

bool CandidateGrid::is_fixed(int cell) const
{
    return std::has_single_bit(masks_[static_cast<std::size_t>(cell)]);
}

std::optional<int> CandidateGrid::fixed_value(int cell) const
{
    if (!is_fixed(cell))
        return std::nullopt;
    return std::countr_zero(masks_[static_cast<std::size_t>(cell)]) + 1;
}

bool CandidateGrid::has_empty_set() const
{
    return std::any_of(masks_.begin(), masks_.end(), [](Mask m) { return m == 0; });
}

Board CandidateGrid::board() const
{
    Board b = Board::empty(n_);
    for (int c = 0; c < n_ * n_; ++c)
        if (auto v = fixed_value(c))
            b.set(c, *v);
    return b;
}

std::optional<CandidateGrid> propagate(const PrimalInstance& inst, CandidateGrid grid)
{
    if (grid.n() != inst.n())
        throw std::invalid_argument("propagate: grid size does not match instance");
    return propagate_with(Topology(inst), std::move(grid));
}

void DescentTrace::push(Board b)
{
    if (!steps_.empty() && primal_objective(b) >= primal_objective(steps_.back()))
        throw std::logic_error("DescentTrace: empty-cell count must strictly decrease");
    steps_.push_back(std::move(b));
}

std::optional<PrimalOptimum> solve(const PrimalInstance& inst)
{
    if (inst.n() > 64)
        throw std::invalid_argument("solve: n > 64 is not supported");
    if (!is_primal_feasible(inst, inst.givens_board()))
        return std::nullopt;
    return Search(inst).run();
}

}  // namespace sdual
