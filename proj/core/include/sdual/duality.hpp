#pragma once

#include <optional>
#include <string>

#include "sdual/problems.hpp"

namespace sdual {

/// Sign of the first grouping's pair differences of a complete board.
/// Requires every cell filled and no two cells of a first-grouping group
/// equal; throws std::domain_error otherwise. If the board solves the
/// primal problem, the result solves the dual problem.
DualCertificate primal_to_dual(const PrimalInstance& inst, const Board& b);

struct DualToPrimal {
    Board board;
    /// The certificate is dual feasible, so the board is complete, within
    /// 1..n and satisfies all three all-different conditions.
    bool certificate_feasible = false;
    /// The certificate solves the dual problem, so the board solves the
    /// primal problem.
    bool certificate_solves = false;
};

/// Board with cell values (score + n + 1) / 2. Total on well-formed
/// certificates; feasibility of the certificate is reported, not required.
/// Throws std::logic_error if a score has the wrong parity (cannot happen for
/// +-1 certificates).
DualToPrimal dual_to_primal(const PrimalInstance& inst, const DualCertificate& c);

/// Optimal values of the two optimization problems and their gap. An absent
/// value means the corresponding feasible set is empty.
struct GapReport {
    std::optional<int> primal_value;
    std::optional<int> dual_value;

    std::optional<int> gap() const;
    /// Both values present and equal (hence both zero).
    bool strong_duality() const;
    std::string describe() const;
};

/// Assembles a report. Throws std::logic_error on a primal value below zero,
/// a dual value above zero, or (equivalently) a negative gap.
GapReport gap_report(std::optional<int> primal_value, std::optional<int> dual_value);

}  // namespace sdual
