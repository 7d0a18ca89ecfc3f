#pragma once

#include <string>
#include <vector>

#include "sdual/problems.hpp"

namespace sdual::testing {

// The 24-component dual solution of the 4 x 4 worked example, row groups in order.
inline DualCertificate example_certificate_4x4()
{
    return DualCertificate(4, {-1, +1, +1, +1, +1, -1,  //
                               +1, -1, -1, -1, -1, -1,  //
                               -1, -1, -1, -1, -1, +1,  //
                               +1, +1, +1, +1, +1, +1});
}

// Rows (3,4,1,2), (2,1,3,4), (1,2,4,3), (4,3,2,1).
inline Board example_board_4x4()
{
    const std::vector<int> v{3, 4, 1, 2, 2, 1, 3, 4, 1, 2, 4, 3, 4, 3, 2, 1};
    return Board(4, std::vector<ExtInt>(v.begin(), v.end()));
}

inline Board board_from(int n, const std::vector<int>& values)
{
    std::vector<ExtInt> cells;
    for (int v : values)
        cells.push_back(v == 0 ? kInf : ExtInt(v));
    return Board(n, std::move(cells));
}

// Shifted-row pattern, a valid 9 x 9 solution.
inline Board pattern_board_9x9()
{
    std::vector<ExtInt> cells;
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c)
            cells.emplace_back((3 * (r % 3) + r / 3 + c) % 9 + 1);
    return Board(9, std::move(cells));
}

inline std::vector<Given> givens_of(const Board& b)
{
    std::vector<Given> out;
    for (int c = 0; c < b.size(); ++c)
        if (b[c].is_finite())
            out.push_back({c, b[c].value()});
    return out;
}

// 17-clue 9 x 9 puzzle from the public minimum-clue collection.
inline const std::string kSeventeenClue =
    ".......1.4.........2...........5.4.7..8...3....1.9....3..4..2...5.1........8.6...";

// Third grouping for 3 x 3 boards: cells with c - r fixed (mod 3).
inline Permutation cyclic_transversals_3x3()
{
    std::vector<int> slots;
    for (int g = 0; g < 3; ++g)
        for (int r = 0; r < 3; ++r)
            slots.push_back(r * 3 + (r + g) % 3);
    return Permutation::from_slots(slots);
}

inline PrimalInstance transversal_instance_3x3(std::vector<Given> givens = {})
{
    auto perms = standard_perms(3);
    return make_primal(3, {perms.rows, perms.cols, cyclic_transversals_3x3()}, std::move(givens));
}

}  // namespace sdual::testing
