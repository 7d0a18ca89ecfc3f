#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "formats.hpp"

using namespace sdual;
using namespace sdual::cli;
using namespace sdual::testing;

TEST_CASE("parse the n = 2 puzzle")
{
    const auto p = parse_puzzle("n=2\n1 .\n. .\n");
    CHECK(p.instance.n() == 2);
    CHECK(p.instance.given_count() == 1);
    CHECK(p.instance.given_at(0) == 1);
    CHECK(p.board == board_from(2, {1, 0, 0, 0}));
    CHECK(p.instance.perm(2) == standard_perms(2).rows);
}

TEST_CASE("parse a full 4 x 4 grid")
{
    const auto p = parse_puzzle("n=4\n3 4 1 2\n2 1 3 4\n1 2 4 3\n4 3 2 1\n");
    CHECK(p.board == example_board_4x4());
    CHECK(p.instance.perm(2) == *standard_perms(4).blocks);
}

TEST_CASE("non-square sizes need a third grouping")
{
    CHECK_THROWS_AS(parse_puzzle("n=3\n. . .\n. . .\n. . .\n"), ParseError);
    const auto p = parse_puzzle("n=3\nperm3=1 5 9 2 6 7 3 4 8\n. . .\n. . .\n. . .\n");
    CHECK(p.instance.perm(2).cell(1) == 4);
}

TEST_CASE("81-character form")
{
    const auto bare = parse_puzzle(kSeventeenClue);
    const auto headed = parse_puzzle("n=9\n" + kSeventeenClue + "\n");
    CHECK(bare.instance == headed.instance);
    CHECK(bare.instance.given_count() == 17);
    CHECK(bare.instance.given_at(7) == 1);
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_puzzle("n=2\n1 .\n. 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
    try {
        parse_puzzle("n=2\n1 . .\n. .\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_puzzle(""), ParseError);
    CHECK_THROWS_AS(parse_puzzle("size=2\n1 .\n. .\n"), ParseError);
    CHECK_THROWS_AS(parse_puzzle("n=65\n"), ParseError);
    CHECK_THROWS_AS(parse_puzzle("n=2\nperm2=1 2 3\n. .\n. .\n"), ParseError);
    CHECK_THROWS_AS(parse_puzzle("n=2\nperm2=1 1 2 3\n. .\n. .\n"), ParseError);
    CHECK_THROWS_AS(parse_board("n=3\n. . .\n. . .\n. . .\n", 2), ParseError);
    CHECK_THROWS_AS(parse_certificate("-\n*\n", 2), ParseError);
    CHECK_THROWS_AS(parse_certificate("-\n", 2), ParseError);
}

TEST_CASE("emit certificates")
{
    CHECK(emit_certificate(example_certificate_4x4()) == "-++++-\n+-----\n-----+\n++++++");
    CHECK(emit_certificate(DualCertificate(2, {-1, 1})) == "-\n+");
    CHECK(parse_certificate("-++++-\n+-----\n-----+\n++++++\n", 4) == example_certificate_4x4());
}

TEST_CASE("emit boards")
{
    CHECK(emit_board(board_from(2, {1, 0, 0, 2})) == "1 .\n. 2");
    CHECK(parse_board("1 .\n. 2", 2) == board_from(2, {1, 0, 0, 2}));
    CHECK(parse_board("n=2\n1 .\n. 2\n", 2) == board_from(2, {1, 0, 0, 2}));
}

TEST_CASE("random round trips")
{
    std::mt19937 rng(5);
    for (int n : {2, 3, 4, 9}) {
        const int len = n * triangular_size(n);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> signs(static_cast<std::size_t>(len));
            for (auto& s : signs)
                s = rng() % 2 ? 1 : -1;
            const DualCertificate c(n, signs);
            CHECK(parse_certificate(emit_certificate(c), n) == c);

            std::vector<int> slots(static_cast<std::size_t>(n * n));
            std::iota(slots.begin(), slots.end(), 0);
            std::shuffle(slots.begin(), slots.end(), rng);
            const auto p = standard_perms(n);
            std::vector<Given> givens;
            for (int cell = 0; cell < n * n; ++cell)
                if (rng() % 3 == 0)
                    givens.push_back({cell, static_cast<int>(rng() % static_cast<unsigned>(n)) + 1});
            const auto inst = make_primal(n, {p.rows, p.cols, Permutation::from_slots(slots)}, givens);
            CHECK(parse_puzzle(emit_puzzle(inst)).instance == inst);
        }
    }
}
