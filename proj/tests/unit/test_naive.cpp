#include <doctest.h>

#include "naive.hpp"

using crossl::LSpec;

TEST_CASE("reference oracles on hand-checked instances") {
    CHECK(naive::ksets(5, 2).size() == 10);
    CHECK(naive::cross2_max(4, 2, LSpec::parse("1", 2)) == 6u);
    CHECK_FALSE(naive::cross2_max(3, 2, LSpec::parse("0", 2)));
    CHECK(naive::pairwise_max(4, 2, 3, LSpec::parse("all", 2)) == 18u);
    CHECK(naive::rcross_max(4, 2, 3, LSpec::parse("all", 2)) == 18u);
    CHECK(naive::max_t_intersecting(5, 2, 1) == 4);
    CHECK(naive::max_t_intersecting(4, 2, 1) == 3);
    CHECK(naive::max_t_intersecting(6, 3, 2) == 4);
}
