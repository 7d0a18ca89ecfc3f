#include <doctest.h>

#include <climits>
#include <stdexcept>
#include <vector>

#include "sdual/ext_int.hpp"

using namespace sdual;

TEST_CASE("addition absorbs INF")
{
    CHECK(identical(ext_add(3, -1), 2));
    CHECK(ext_add(kInf, 5).is_inf());
    CHECK(ext_add(5, kInf).is_inf());
    CHECK(ext_add(kInf, kInf).is_inf());
}

TEST_CASE("zero coefficient annihilates INF")
{
    CHECK(identical(ext_mul(0, kInf), 0));
    CHECK(ext_mul(-1, kInf).is_inf());
    CHECK(ext_mul(1, kInf).is_inf());
    CHECK(identical(ext_mul(-1, 7), -7));
}

TEST_CASE("INF is unequal to everything")
{
    for (int x = -3; x <= 3; ++x) {
        CHECK_FALSE(kInf == ExtInt(x));
        CHECK_FALSE(ExtInt(x) == kInf);
    }
    CHECK_FALSE(kInf == kInf);
    CHECK(identical(kInf, kInf));
    CHECK(ExtInt(4) == ExtInt(4));
}

TEST_CASE("nonzero predicate")
{
    CHECK(kInf.is_nonzero());
    CHECK_FALSE(ExtInt(0).is_nonzero());
    CHECK(all_nonzero(std::vector<ExtInt>{1, -1, kInf}));
    CHECK_FALSE(all_nonzero(std::vector<ExtInt>{1, 0}));
    CHECK(all_nonzero(std::vector<ExtInt>{}));
}

TEST_CASE("finite overflow is an arithmetic error")
{
    CHECK_THROWS_AS(ext_add(INT_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(ext_mul(-1, INT_MIN), std::overflow_error);
    CHECK_THROWS_AS((void)kInf.value(), std::domain_error);
    CHECK(to_string(kInf) == ".");
    CHECK(to_string(-4) == "-4");
}
