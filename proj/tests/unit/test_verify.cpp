#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "sdual/verify.hpp"

using namespace sdual;
using namespace sdual::testing;

TEST_CASE("n = 2 ledger passes")
{
    const auto ledger = verify_theorems(default_verify_config(2));
    CHECK(ledger.all_pass());
    for (const auto& t : ledger.tallies()) {
        INFO(t.id);
        CHECK(t.pass());
        CHECK(t.checked > 0);
    }
    const auto text = ledger.to_text();
    CHECK(text.find("THEOREM weak-duality PASS checked=") != std::string::npos);
    CHECK(text.find("COUNTEREXAMPLE") == std::string::npos);
    CHECK(text.find("# empty dual feasible set for perm3=1,4,2,3") != std::string::npos);
}

TEST_CASE("a faulty sign identity is caught with a counterexample")
{
    auto cfg = default_verify_config(2);
    cfg.check_solver = false;
    cfg.sign_identity = [](std::span<const int> p) {
        auto lhs = sign_identity_lhs(p);
        for (auto& v : lhs)
            v -= static_cast<int>(p.size()) + 1;
        return lhs;
    };
    const auto ledger = verify_theorems(cfg);
    CHECK_FALSE(ledger.all_pass());
    const auto* t = ledger.find("sign-identity");
    REQUIRE(t);
    CHECK_FALSE(t->pass());
    REQUIRE(t->counterexample);
    const auto text = ledger.to_text();
    CHECK(text.find("THEOREM sign-identity FAIL") != std::string::npos);
    CHECK(text.find("COUNTEREXAMPLE sign-identity failed=") != std::string::npos);
    CHECK(text.find("\nEND") != std::string::npos);
}

TEST_CASE("ledger bookkeeping")
{
    VerificationLedger a;
    a.declare("x");
    a.record("x", true, [] { return Counterexample{}; });
    a.record("x", false, [] { return Counterexample{"n=2", std::nullopt, std::nullopt, "first"}; });
    a.record("x", false, [] { return Counterexample{"n=2", std::nullopt, std::nullopt, "second"}; });
    const auto* t = a.find("x");
    REQUIRE(t);
    CHECK(t->checked == 3);
    CHECK(t->failed == 2);
    CHECK(t->counterexample->detail == "first");

    VerificationLedger b;
    b.record_passed("x", 5);
    b.record_passed("y", 1);
    a.merge(b);
    CHECK(a.find("x")->checked == 8);
    CHECK(a.find("y")->pass());
    CHECK_FALSE(a.all_pass());
    CHECK(a.find("z") == nullptr);
}

TEST_CASE("instance line")
{
    const auto line = instance_line(make_standard_primal(2, {{0, 1}}));
    CHECK(line.find("n=2 ") == 0);
    CHECK(line.find("givens=1:1") != std::string::npos);
}

TEST_CASE("verify rejects unsupported sizes")
{
    VerifyConfig cfg;
    cfg.n = 5;
    CHECK_THROWS_AS(verify_theorems(cfg), std::invalid_argument);
    CHECK_THROWS_AS(default_verify_config(5), std::invalid_argument);
}
