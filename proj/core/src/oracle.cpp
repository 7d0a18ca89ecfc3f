#include "sdual/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace sdual {

namespace {

bool certificate_less(const DualCertificate& a, const DualCertificate& b)
{
    return std::lexicographical_compare(a.signs().begin(), a.signs().end(), b.signs().begin(), b.signs().end());
}

// Peers of each cell under the given groupings.
std::vector<std::vector<int>> peer_lists(const PrimalInstance& inst, std::initializer_list<int> groupings)
{
    const int n = inst.n();
    std::vector<std::vector<int>> peers(static_cast<std::size_t>(n * n));
    for (int r : groupings)
        for (int g = 0; g < n; ++g)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (p != q)
                        peers[static_cast<std::size_t>(inst.system(r).group_cell(g, p))].push_back(
                            inst.system(r).group_cell(g, q));
    for (auto& list : peers) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return peers;
}

// Index-order enumeration of partial boards; value 0 = INF.
class PartialEnumerator {
public:
    explicit PartialEnumerator(const PrimalInstance& inst)
        : inst_(inst), n_(inst.n()), peers_(peer_lists(inst, {0, 1, 2})),
          values_(static_cast<std::size_t>(n_ * n_), 0)
    {
    }

    std::optional<int> run()
    {
        descend(0, 0);
        if (best_ == INT_MAX)
            return std::nullopt;
        return best_;
    }

private:
    bool conflicts(int cell, int v) const
    {
        for (int peer : peers_[static_cast<std::size_t>(cell)])
            if (peer < cell && values_[static_cast<std::size_t>(peer)] == v)
                return true;
        return false;
    }

    void descend(int cell, int empties)
    {
        if (empties >= best_)
            return;
        if (cell == n_ * n_) {
            best_ = empties;
            return;
        }
        auto& slot = values_[static_cast<std::size_t>(cell)];
        if (auto g = inst_.given_at(cell)) {
            if (!conflicts(cell, *g)) {
                slot = *g;
                descend(cell + 1, empties);
            }
            slot = 0;
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (conflicts(cell, v))
                continue;
            slot = v;
            descend(cell + 1, empties);
        }
        slot = 0;
        descend(cell + 1, empties + 1);
    }

    const PrimalInstance& inst_;
    int n_;
    std::vector<std::vector<int>> peers_;
    std::vector<int> values_;
    int best_ = INT_MAX;
};

void odometer(int n, int digits, const std::function<void(const Board&)>& fn)
{
    const int cells = n * n;
    std::vector<int> digit(static_cast<std::size_t>(cells), 0);
    std::vector<ExtInt> cellv(static_cast<std::size_t>(cells));
    const auto to_ext = [n](int d) { return d < n ? ExtInt(d + 1) : kInf; };
    for (;;) {
        for (int c = 0; c < cells; ++c)
            cellv[static_cast<std::size_t>(c)] = to_ext(digit[static_cast<std::size_t>(c)]);
        fn(Board(n, cellv));
        int c = cells - 1;
        while (c >= 0 && ++digit[static_cast<std::size_t>(c)] == digits) {
            digit[static_cast<std::size_t>(c)] = 0;
            --c;
        }
        if (c < 0)
            return;
    }
}

}  // namespace

void for_each_certificate(int n, const std::function<void(const DualCertificate&)>& fn)
{
    const int len = n * triangular_size(n);
    if (len > 24)
        throw CapabilityError("certificate enumeration supports n*s(n) <= 24, got " + std::to_string(len));
    std::vector<int> signs(static_cast<std::size_t>(len));
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << len); ++bits) {
        for (int i = 0; i < len; ++i)
            signs[static_cast<std::size_t>(i)] = (bits >> (len - 1 - i)) & 1U ? 1 : -1;
        fn(DualCertificate(n, signs));
    }
}

void for_each_extended_board(int n, const std::function<void(const Board&)>& fn)
{
    if (n > 3)
        throw CapabilityError("extended-board enumeration supports n <= 3");
    odometer(n, n + 1, fn);
}

void for_each_complete_board(int n, const std::function<void(const Board&)>& fn)
{
    if (n > 3)
        throw CapabilityError("complete-board enumeration supports n <= 3");
    odometer(n, n, fn);
}

std::optional<int> exact_primal_value(const PrimalInstance& inst)
{
    if (inst.n() > 4)
        throw CapabilityError("exact primal value supports n <= 4, got n=" + std::to_string(inst.n()));
    if (inst.n() == 4)
        return PartialEnumerator(inst).run();
    int best = INT_MAX;
    for_each_extended_board(inst.n(), [&](const Board& b) {
        if (is_primal_feasible(inst, b))
            best = std::min(best, primal_objective(b));
    });
    if (best == INT_MAX)
        return std::nullopt;
    return best;
}

std::optional<int> exact_dual_value(const PrimalInstance& inst)
{
    if (inst.n() > 5)
        throw CapabilityError("exact dual value supports n <= 5, got n=" + std::to_string(inst.n()));
    const auto feasible = inst.n() <= 3 ? dual_feasible_set_raw(inst) : dual_feasible_set_by_group(inst);
    if (feasible.empty())
        return std::nullopt;
    int best = INT_MIN;
    for (const auto& c : feasible)
        best = std::max(best, dual_objective(inst, c));
    return best;
}

std::vector<DualCertificate> dual_feasible_set_raw(const PrimalInstance& inst)
{
    std::vector<DualCertificate> out;
    for_each_certificate(inst.n(), [&](const DualCertificate& c) {
        if (is_dual_feasible(inst, c))
            out.push_back(c);
    });
    std::sort(out.begin(), out.end(), certificate_less);
    return out;
}

std::vector<DualCertificate> dual_feasible_set_by_group(const PrimalInstance& inst)
{
    const int n = inst.n();
    if (n > 5)
        throw CapabilityError("per-group enumeration supports n <= 5, got n=" + std::to_string(n));

    // Sign block and value assignment of every strict ordering of a group.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<std::vector<int>> orderings;
    std::vector<std::vector<int>> blocks;
    do {
        std::vector<ExtInt> x(order.begin(), order.end());
        orderings.push_back(order);
        blocks.push_back(sgn_vec(pair_differences(x)));
    } while (std::next_permutation(order.begin(), order.end()));

    const auto peers = peer_lists(inst, {1, 2});
    const auto& rows = inst.system(0);
    std::vector<int> values(static_cast<std::size_t>(n * n), 0);
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<DualCertificate> out;

    const std::function<void(int)> place = [&](int g) {
        if (g == n) {
            std::vector<int> signs;
            for (int h = 0; h < n; ++h) {
                const auto& b = blocks[choice[static_cast<std::size_t>(h)]];
                signs.insert(signs.end(), b.begin(), b.end());
            }
            DualCertificate c(n, std::move(signs));
            if (is_dual_feasible(inst, c))
                out.push_back(std::move(c));
            return;
        }
        for (std::size_t k = 0; k < orderings.size(); ++k) {
            bool ok = true;
            for (int p = 0; p < n && ok; ++p) {
                const int cell = rows.group_cell(g, p);
                values[static_cast<std::size_t>(cell)] = orderings[k][static_cast<std::size_t>(p)];
                for (int peer : peers[static_cast<std::size_t>(cell)])
                    if (values[static_cast<std::size_t>(peer)] == values[static_cast<std::size_t>(cell)]) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                choice[static_cast<std::size_t>(g)] = k;
                place(g + 1);
            }
            for (int p = 0; p < n; ++p)
                values[static_cast<std::size_t>(rows.group_cell(g, p))] = 0;
        }
    };
    place(0);
    std::sort(out.begin(), out.end(), certificate_less);
    return out;
}

std::optional<Permutation> find_empty_dual_grouping(int n)
{
    if (n < 2 || n > 3)
        throw CapabilityError("grouping search supports n in 2..3");
    const int cells = n * n;
    auto std_perms = standard_perms(n);
    std::vector<int> slots;
    std::vector<char> used(static_cast<std::size_t>(cells), 0);
    std::optional<Permutation> found;

    // Partitions are generated canonically: each group starts at the lowest
    // unused cell and lists its members in increasing order.
    std::function<void(int)> extend;
    extend = [&](int min_cell) {
        if (found)
            return;
        if (static_cast<int>(slots.size()) == cells) {
            auto perm = Permutation::from_slots(slots);
            auto inst = make_primal(n, {std_perms.rows, std_perms.cols, perm}, {});
            if (dual_feasible_set_by_group(inst).empty())
                found = std::move(perm);
            return;
        }
        const bool starting = slots.size() % static_cast<std::size_t>(n) == 0;
        if (starting) {
            const int first = static_cast<int>(std::find(used.begin(), used.end(), 0) - used.begin());
            used[static_cast<std::size_t>(first)] = 1;
            slots.push_back(first);
            extend(first + 1);
            slots.pop_back();
            used[static_cast<std::size_t>(first)] = 0;
            return;
        }
        for (int c = min_cell; c < cells; ++c) {
            if (used[static_cast<std::size_t>(c)])
                continue;
            used[static_cast<std::size_t>(c)] = 1;
            slots.push_back(c);
            extend(c + 1);
            slots.pop_back();
            used[static_cast<std::size_t>(c)] = 0;
        }
    };
    extend(0);
    return found;
}

}  // namespace sdual
