#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "sdual/oracle.hpp"
#include "sdual/verify.hpp"

using namespace sdual;
using namespace sdual::testing;

TEST_CASE("certificate and board enumeration sizes")
{
    int certs = 0;
    for_each_certificate(2, [&](const DualCertificate&) { ++certs; });
    CHECK(certs == 4);
    int boards = 0;
    for_each_extended_board(2, [&](const Board&) { ++boards; });
    CHECK(boards == 81);
    int complete = 0;
    for_each_complete_board(2, [&](const Board& b) { complete += b.complete(); });
    CHECK(complete == 16);
    CHECK_THROWS_AS(for_each_certificate(5, [](const DualCertificate&) {}), CapabilityError);
    CHECK_THROWS_AS(for_each_extended_board(4, [](const Board&) {}), CapabilityError);
}

TEST_CASE("exact primal values")
{
    CHECK(exact_primal_value(make_standard_primal(2)) == 0);
    CHECK(exact_primal_value(make_standard_primal(2, {{0, 1}, {3, 2}})) == 2);
    CHECK_FALSE(exact_primal_value(make_standard_primal(2, {{0, 1}, {1, 1}})));
    CHECK(exact_primal_value(make_standard_primal(4)) == 0);
    CHECK(exact_primal_value(uncompletable_instance_4x4()) == 2);
    CHECK_THROWS_AS(exact_primal_value(make_standard_primal(9)), CapabilityError);
}

TEST_CASE("exact dual values")
{
    CHECK(exact_dual_value(make_standard_primal(2)) == 0);
    CHECK(exact_dual_value(make_standard_primal(2, {{0, 1}, {3, 2}})) == -1);
    CHECK(exact_dual_value(make_standard_primal(4, {{0, 3}})) == 0);
    CHECK(exact_dual_value(uncompletable_instance_4x4()) < 0);
    CHECK_THROWS_AS(exact_dual_value(make_standard_primal(9)), CapabilityError);
}

TEST_CASE("group-wise and raw dual enumeration agree")
{
    const auto p = standard_perms(2);
    const PrimalInstance insts[] = {make_standard_primal(2), make_primal(2, {p.rows, p.cols, p.cols}, {}),
                                    make_standard_primal(2, {{1, 2}}), transversal_instance_3x3()};
    for (const auto& inst : insts)
        CHECK(dual_feasible_set_raw(inst) == dual_feasible_set_by_group(inst));
    CHECK(dual_feasible_set_by_group(make_standard_primal(4)).size() == 288);
}

TEST_CASE("a third grouping with an empty dual feasible set")
{
    const auto perm = find_empty_dual_grouping(2);
    REQUIRE(perm);
    const auto p = standard_perms(2);
    CHECK(dual_feasible_set_raw(make_primal(2, {p.rows, p.cols, *perm}, {})).empty());
    CHECK_THROWS_AS(find_empty_dual_grouping(4), CapabilityError);
}
