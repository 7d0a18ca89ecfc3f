#include "sdual/duality.hpp"

#include <sstream>
#include <stdexcept>

namespace sdual {

DualCertificate primal_to_dual(const PrimalInstance& inst, const Board& b)
{
    if (b.n() != inst.n())
        throw std::domain_error("primal_to_dual: board size does not match instance");
    if (!b.complete())
        throw std::domain_error("primal_to_dual: board has " + std::to_string(b.empty_count()) + " empty cells");
    const auto diffs = group_apply(inst.system(0), b.cells());
    return DualCertificate(inst.n(), sgn_vec(diffs));
}

DualToPrimal dual_to_primal(const PrimalInstance& inst, const DualCertificate& c)
{
    const int n = inst.n();
    const auto scores = dual_scores(inst, c);
    std::vector<ExtInt> cells;
    cells.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const int shifted = scores[i] + n + 1;
        if (shifted % 2 != 0)
            throw std::logic_error("dual_to_primal: odd shifted score at cell " + std::to_string(i + 1));
        cells.emplace_back(shifted / 2);
    }
    DualToPrimal out{Board(n, std::move(cells))};
    out.certificate_feasible = is_dual_feasible(inst, c);
    out.certificate_solves = out.certificate_feasible && dual_objective(inst, c) == 0;
    return out;
}

std::optional<int> GapReport::gap() const
{
    if (primal_value && dual_value)
        return *primal_value - *dual_value;
    return std::nullopt;
}

bool GapReport::strong_duality() const
{
    const auto g = gap();
    return g && *g == 0;
}

std::string GapReport::describe() const
{
    std::ostringstream os;
    os << "primal_value=" << (primal_value ? std::to_string(*primal_value) : "UNSOLVABLE") << '\n'
       << "dual_value=" << (dual_value ? std::to_string(*dual_value) : "UNSOLVABLE") << '\n';
    if (const auto g = gap())
        os << "gap=" << *g << '\n' << (*g == 0 ? "note=no duality gap; the puzzle is solvable"
                                                : "note=positive duality gap; the puzzle has no completion");
    else
        os << "gap=undefined\nnote=" << (!primal_value ? "primal feasible set is empty" : "")
           << (!primal_value && !dual_value ? "; " : "") << (!dual_value ? "dual feasible set is empty" : "");
    return os.str();
}

GapReport gap_report(std::optional<int> primal_value, std::optional<int> dual_value)
{
    if (primal_value && *primal_value < 0)
        throw std::logic_error("gap_report: negative primal value " + std::to_string(*primal_value));
    if (dual_value && *dual_value > 0)
        throw std::logic_error("gap_report: positive dual value " + std::to_string(*dual_value));
    GapReport report{primal_value, dual_value};
    if (const auto g = report.gap(); g && *g < 0)
        throw std::logic_error("gap_report: negative duality gap");
    return report;
}

}  // namespace sdual
