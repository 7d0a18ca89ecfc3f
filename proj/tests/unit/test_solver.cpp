#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "sdual/duality.hpp"
#include "sdual/oracle.hpp"
#include "sdual/solver.hpp"
#include "sdual/verify.hpp"

using namespace sdual;
using namespace sdual::testing;

namespace {

PrimalInstance seventeen_clue()
{
    std::vector<Given> givens;
    for (int c = 0; c < 81; ++c)
        if (kSeventeenClue[static_cast<std::size_t>(c)] != '.')
            givens.push_back({c, kSeventeenClue[static_cast<std::size_t>(c)] - '0'});
    return make_standard_primal(9, givens);
}

void check_trace(const PrimalInstance& inst, const PrimalOptimum& r)
{
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.steps().front() == inst.givens_board());
    CHECK(r.trace.back() == r.board);
    CHECK(primal_objective(r.board) == r.value);
    int last = inst.n() * inst.n() + 1;
    for (const auto& b : r.trace.steps()) {
        CHECK(is_primal_feasible(inst, b));
        CHECK(primal_objective(b) < last);
        last = primal_objective(b);
    }
}

}  // namespace

TEST_CASE("propagation")
{
    const auto inst = make_standard_primal(2, {{0, 1}});
    const auto grid = propagate(inst, CandidateGrid::from_instance(inst));
    REQUIRE(grid);
    CHECK(grid->board() == board_from(2, {1, 2, 2, 1}));

    const auto clash = make_standard_primal(2, {{0, 1}, {1, 1}});
    CHECK_FALSE(propagate(clash, CandidateGrid::from_instance(clash)));

    const auto free = make_standard_primal(4);
    const auto start = CandidateGrid::from_instance(free);
    const auto same = propagate(free, start);
    REQUIRE(same);
    CHECK(*same == start);
    CHECK(same->candidates(5) == start.full_mask());
}

TEST_CASE("candidate grid")
{
    CandidateGrid g(3, std::vector<CandidateGrid::Mask>(9, 0b111));
    CHECK_FALSE(g.is_fixed(0));
    g.assign(0, 2);
    CHECK(g.fixed_value(0) == 2);
    g.restrict_to(1, 0b100);
    CHECK(g.fixed_value(1) == 3);
    CHECK_FALSE(g.has_empty_set());
    g.restrict_to(2, 0);
    CHECK(g.has_empty_set());
    CHECK_THROWS_AS(CandidateGrid(65, std::vector<CandidateGrid::Mask>(65 * 65, 1)), std::invalid_argument);
}

TEST_CASE("descent trace rejects non-decreasing steps")
{
    DescentTrace t;
    t.push(Board::empty(2));
    t.push(board_from(2, {1, 0, 0, 0}));
    CHECK_THROWS_AS(t.push(board_from(2, {2, 0, 0, 0})), std::logic_error);
    CHECK(t.size() == 2);
}

TEST_CASE("solve completable instances")
{
    const auto ref = example_board_4x4();
    auto givens = givens_of(ref);
    givens.erase(givens.begin());
    const auto inst = make_standard_primal(4, givens);
    const auto r = solve(inst);
    REQUIRE(r);
    CHECK(r->value == 0);
    CHECK(r->board == ref);
    check_trace(inst, *r);

    const auto full = pattern_board_9x9();
    const auto inst9 = make_standard_primal(9, givens_of(full));
    const auto r9 = solve(inst9);
    REQUIRE(r9);
    CHECK(r9->value == 0);
    CHECK(r9->board == full);
    CHECK(r9->trace.size() == 1);
}

TEST_CASE("solve reports conflicting givens")
{
    CHECK_FALSE(solve(make_standard_primal(2, {{0, 1}, {1, 1}})));
}

TEST_CASE("17-clue puzzle")
{
    const auto inst = seventeen_clue();
    const auto r = solve(inst);
    REQUIRE(r);
    CHECK(r->value == 0);
    CHECK(solves_primal(inst, r->board));
    check_trace(inst, *r);
    CHECK(solves_dual(inst, primal_to_dual(inst, r->board)));
}

TEST_CASE("uncompletable instance")
{
    const auto inst = uncompletable_instance_4x4();
    const auto r = solve(inst);
    REQUIRE(r);
    CHECK(r->value > 0);
    CHECK(r->value == exact_primal_value(inst));
    CHECK(r->board[2].is_inf());
    check_trace(inst, *r);
}

TEST_CASE("solve is deterministic")
{
    const auto inst = make_standard_primal(4, {{0, 1}, {5, 3}});
    const auto a = solve(inst);
    const auto b = solve(inst);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->board == b->board);
    CHECK(a->nodes == b->nodes);
    CHECK(a->trace.size() == b->trace.size());
}

TEST_CASE("solver agrees with enumeration on the n = 2 instances")
{
    for (const auto& givens : default_verify_config(2).given_sets) {
        const auto inst = make_standard_primal(2, givens);
        const auto r = solve(inst);
        const auto v = exact_primal_value(inst);
        CHECK(r.has_value() == v.has_value());
        if (r && v)
            CHECK(r->value == *v);
    }
}
