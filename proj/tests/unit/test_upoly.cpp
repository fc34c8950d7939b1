#include <doctest.h>

#include "symci/upoly.hpp"

using namespace symci;

TEST_CASE("univariate arithmetic") {
    UnivariatePoly p = UnivariatePoly::monomial(2) + UnivariatePoly::monomial(4);
    CHECK(p.to_string() == "t^2 + t^4");
    CHECK(p.degree() == 4);
    CHECK(p.evaluate(1) == 2);
    CHECK(p.evaluate(2) == 20);
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK(UnivariatePoly().degree() == -1);

    const UnivariatePoly one_minus_t = UnivariatePoly::monomial(0) - UnivariatePoly::monomial(1);
    const UnivariatePoly one_plus_t = UnivariatePoly::monomial(0) + UnivariatePoly::monomial(1);
    CHECK((one_minus_t * one_plus_t) == UnivariatePoly::monomial(0) - UnivariatePoly::monomial(2));
    CHECK(UnivariatePoly::monomial(1, -3).to_string() == "-3t");
    CHECK_THROWS_AS(UnivariatePoly::monomial(-1), std::invalid_argument);
}

TEST_CASE("zero coefficients are never stored") {
    UnivariatePoly p;
    p.add_term(3, 2);
    p.add_term(3, -2);
    CHECK(p.is_zero());
    p.add_term(1, 0);
    CHECK(p.terms().empty());
}
