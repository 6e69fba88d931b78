#include "doctest.h"

#include "qf/rational.hpp"

using qf::Dyadic;

TEST_CASE("dyadic normalization") {
    CHECK(Dyadic(2, 1) == Dyadic(1));
    CHECK(Dyadic(4, 2) == Dyadic(1));
    CHECK(Dyadic(0, 5) == Dyadic(0));
    CHECK(Dyadic(6, 1) == Dyadic(3));
    CHECK(Dyadic(3, 1).num == 3);
    CHECK(Dyadic(3, 1).log2_den == 1);
}

TEST_CASE("dyadic arithmetic") {
    Dyadic half(1, 1), quarter(1, 2);
    CHECK(half + half == Dyadic(1));
    CHECK(half - quarter == quarter);
    CHECK(half * half == quarter);
    CHECK(-half == Dyadic(-1, 1));
    CHECK(half.half() == quarter);
    CHECK(quarter < half);
    CHECK(Dyadic(-1, 1) < quarter);
    Dyadic acc;
    acc += half;
    acc += half;
    CHECK(acc == Dyadic(1));
}

TEST_CASE("dyadic conversions") {
    CHECK(Dyadic(3, 2).to_double() == doctest::Approx(0.75));
    CHECK(Dyadic(5).to_integer() == 5);
    CHECK_THROWS_AS(Dyadic(1, 1).to_integer(), std::logic_error);
    CHECK(Dyadic(1, 1).str() == "1/2");
    CHECK(Dyadic(-3, 2).str() == "-3/4");
    CHECK(Dyadic(7).str() == "7");
}
