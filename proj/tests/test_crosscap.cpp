#include <doctest.h>

#include "tanglebounds/crosscap.hpp"

using namespace tb;

TEST_CASE("continued fractions") {
    CHECK(continued_fraction(8, 3) == std::vector<long long>{2, 1, 2});
    CHECK(continued_fraction(3, 1) == std::vector<long long>{3});
    CHECK(continued_fraction(16, 9) == std::vector<long long>{1, 1, 3, 2});
    // trailing 1 is folded away: [1,1,2] -> [1,2] style expansions stay >= 2 at the end
    for (auto [p, q] : {std::pair<long long, long long>{7, 5}, {11, 4}, {23, 9}}) {
        std::vector<long long> a = continued_fraction(p, q);
        REQUIRE(!a.empty());
        CHECK(a.back() >= 2);
    }
    CHECK_THROWS_AS(continued_fraction(3, 0), std::invalid_argument);
}

TEST_CASE("half sums") {
    CHECK(half_sum(8, 3) == 2);
    CHECK(half_sum(2, 3) == 1);
    CHECK(half_sum(16, 9) == 2);
    CHECK(N(8, 3) == 2);
}

TEST_CASE("torus crosscap numbers") {
    CHECK(crosscap_torus(2, 3) == 1);
    CHECK(crosscap_torus(2, 5) == 1);
    CHECK(crosscap_torus(2, 7) == 1);
    CHECK(crosscap_torus(3, 4) == 2);
    CHECK(crosscap_torus(3, 5) == 2);
    CHECK(crosscap_torus(4, 3) == 2);  // symmetric in the arguments

    // the sweep values: p = 2 + 2qk
    CHECK(crosscap_torus(8, 3) == 2);
    CHECK(crosscap_torus(14, 3) == 3);
    CHECK(crosscap_torus(12, 5) == 2);
    CHECK(crosscap_torus(32, 5) == 4);

    CHECK_THROWS_AS(crosscap_torus(2, 4), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(crosscap_torus(1, 5), std::invalid_argument);  // unknot
}

TEST_CASE("torus sweep records") {
    std::vector<FamilyARecord> rows = family_part_a(3, 3);
    REQUIRE(rows.size() == 3);
    for (const FamilyARecord& r : rows) {
        CHECK(r.p == 2 + 2ll * r.q * r.k);
        CHECK(r.crosscap == r.k + 1);
        CHECK(r.crosscap_matches_k_plus_1);
        CHECK(r.t_l_at_most_2);
        CHECK(r.t_l <= 2);
        CHECK((r.alpha == 1 || r.alpha == -1));
    }
    CHECK(family_part_a(3, 0).empty());
    CHECK_THROWS_AS(family_part_a(4, 3), std::invalid_argument);  // q must be odd
    CHECK_THROWS_AS(family_part_a(3, -1), std::invalid_argument);
}
