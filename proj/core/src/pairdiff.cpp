#include "sdual/pairdiff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdual {

namespace {

int exact_sqrt(int n)
{
    int m = 0;
    while ((m + 1) * (m + 1) <= n)
        ++m;
    return m * m == n ? m : -1;
}

}  // namespace

int triangular_size(int n)
{
    if (n < 1)
        throw std::domain_error("triangular_size: n must be >= 1, got " + std::to_string(n));
    return n * (n - 1) / 2;
}

std::vector<PairRow> pair_rows(int n)
{
    std::vector<PairRow> rows;
    rows.reserve(static_cast<std::size_t>(triangular_size(n)));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            rows.push_back({p, q});
    return rows;
}

Permutation Permutation::identity(int size)
{
    std::vector<int> map(static_cast<std::size_t>(size));
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::from_slots(std::vector<int> slot_to_cell)
{
    const int size = static_cast<int>(slot_to_cell.size());
    std::vector<char> seen(slot_to_cell.size(), 0);
    for (int slot = 0; slot < size; ++slot) {
        const int cell = slot_to_cell[static_cast<std::size_t>(slot)];
        if (cell < 0 || cell >= size)
            throw std::invalid_argument("permutation entry " + std::to_string(slot + 1) + " = " +
                                        std::to_string(cell + 1) + " out of range 1.." +
                                        std::to_string(size));
        if (seen[static_cast<std::size_t>(cell)])
            throw std::invalid_argument("permutation is not a bijection: cell " +
                                        std::to_string(cell + 1) + " repeated at entry " +
                                        std::to_string(slot + 1));
        seen[static_cast<std::size_t>(cell)] = 1;
    }
    return Permutation(std::move(slot_to_cell));
}

Permutation Permutation::from_one_based(std::span<const int> slot_to_cell)
{
    std::vector<int> map(slot_to_cell.begin(), slot_to_cell.end());
    for (auto& c : map)
        --c;
    return from_slots(std::move(map));
}

std::vector<int> Permutation::one_based() const
{
    std::vector<int> out(map_);
    for (auto& c : out)
        ++c;
    return out;
}

GroupSystem::GroupSystem(int n, Permutation perm) : n_(n), perm_(std::move(perm))
{
    if (n < 1)
        throw std::invalid_argument("GroupSystem: n must be >= 1");
    if (perm_.size() != n * n)
        throw std::invalid_argument("GroupSystem: permutation has " + std::to_string(perm_.size()) +
                                    " entries, expected " + std::to_string(n * n));
    pairs_ = pair_rows(n);
}

std::vector<ExtInt> pair_differences(std::span<const ExtInt> x)
{
    const int n = static_cast<int>(x.size());
    std::vector<ExtInt> out;
    out.reserve(static_cast<std::size_t>(triangular_size(n)));
    for (const auto& [p, q] : pair_rows(n))
        out.push_back(ext_add(x[static_cast<std::size_t>(p)], ext_mul(-1, x[static_cast<std::size_t>(q)])));
    return out;
}

std::vector<int> pair_scores(int n, std::span<const int> lam)
{
    const auto rows = pair_rows(n);
    if (lam.size() != rows.size())
        throw std::domain_error("pair_scores: expected " + std::to_string(rows.size()) +
                                " entries, got " + std::to_string(lam.size()));
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out[static_cast<std::size_t>(rows[r].p)] += lam[r];
        out[static_cast<std::size_t>(rows[r].q)] -= lam[r];
    }
    return out;
}

std::vector<ExtInt> group_apply(const GroupSystem& sys, std::span<const ExtInt> x)
{
    if (static_cast<int>(x.size()) != sys.cells())
        throw std::domain_error("group_apply: expected " + std::to_string(sys.cells()) +
                                " entries, got " + std::to_string(x.size()));
    const int n = sys.n();
    std::vector<ExtInt> out;
    out.reserve(static_cast<std::size_t>(sys.rows()));
    for (int g = 0; g < n; ++g) {
        for (const auto& [p, q] : sys.pairs()) {
            const ExtInt a = x[static_cast<std::size_t>(sys.group_cell(g, p))];
            const ExtInt b = x[static_cast<std::size_t>(sys.group_cell(g, q))];
            out.push_back(ext_add(a, ext_mul(-1, b)));
        }
    }
    return out;
}

std::vector<int> group_apply_transpose(const GroupSystem& sys, std::span<const int> lam)
{
    if (static_cast<int>(lam.size()) != sys.rows())
        throw std::domain_error("group_apply_transpose: expected " + std::to_string(sys.rows()) +
                                " entries, got " + std::to_string(lam.size()));
    const int n = sys.n();
    std::vector<int> out(static_cast<std::size_t>(sys.cells()), 0);
    std::size_t r = 0;
    for (int g = 0; g < n; ++g) {
        for (const auto& [p, q] : sys.pairs()) {
            out[static_cast<std::size_t>(sys.group_cell(g, p))] += lam[r];
            out[static_cast<std::size_t>(sys.group_cell(g, q))] -= lam[r];
            ++r;
        }
    }
    return out;
}

std::vector<int> sgn_vec(std::span<const ExtInt> y)
{
    std::vector<int> out;
    out.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i].is_inf())
            throw std::domain_error("sgn_vec: component " + std::to_string(i + 1) + " is INF");
        if (y[i].value() == 0)
            throw std::domain_error("sgn_vec: component " + std::to_string(i + 1) + " is zero");
        out.push_back(y[i].value() > 0 ? 1 : -1);
    }
    return out;
}

StandardPerms standard_perms(int n)
{
    if (n < 2)
        throw std::domain_error("standard_perms: n must be >= 2");
    const auto cell = [n](int r, int c) { return r * n + c; };

    std::vector<int> cols(static_cast<std::size_t>(n * n));
    for (int g = 0; g < n; ++g)
        for (int p = 0; p < n; ++p)
            cols[static_cast<std::size_t>(g * n + p)] = cell(p, g);

    StandardPerms out{Permutation::identity(n * n), Permutation::from_slots(std::move(cols)), std::nullopt};

    const int m = exact_sqrt(n);
    if (m > 0) {
        std::vector<int> blocks(static_cast<std::size_t>(n * n));
        for (int g = 0; g < n; ++g) {
            const int br = g / m, bc = g % m;
            for (int p = 0; p < n; ++p) {
                const int ir = p / m, ic = p % m;
                blocks[static_cast<std::size_t>(g * n + p)] = cell(br * m + ir, bc * m + ic);
            }
        }
        out.blocks = Permutation::from_slots(std::move(blocks));
    }
    return out;
}

std::optional<Permutation> default_third_perm(int n)
{
    auto perms = standard_perms(n);
    if (perms.blocks)
        return perms.blocks;
    if (n == 2)
        return perms.rows;
    return std::nullopt;
}

std::string dump_matrix(const GroupSystem& sys)
{
    std::ostringstream os;
    const int n = sys.n();
    std::vector<int> row(static_cast<std::size_t>(sys.cells()));
    bool first = true;
    for (int g = 0; g < n; ++g) {
        for (const auto& [p, q] : sys.pairs()) {
            std::fill(row.begin(), row.end(), 0);
            row[static_cast<std::size_t>(sys.group_cell(g, p))] = 1;
            row[static_cast<std::size_t>(sys.group_cell(g, q))] = -1;
            if (!first)
                os << '\n';
            first = false;
            for (std::size_t j = 0; j < row.size(); ++j)
                os << (j ? " " : "") << row[j];
        }
    }
    return os.str();
}

}  // namespace sdual
