#include <doctest.h>

#include <random>

#include "symci/graded.hpp"
#include "symci/oracle.hpp"
#include "worked_examples.hpp"

using namespace symci;

namespace {

ClassFunction triv(int n) { return irreducible_character(Partition::row(n)); }

std::vector<mpz_class> binomial_row(int n, int bound) {
    // dim R_d = C(n-1+d, d)
    std::vector<mpz_class> out;
    for (int d = 0; d <= bound; ++d) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n - 1 + d), static_cast<unsigned long>(d));
        out.push_back(b);
    }
    return out;
}

}  // namespace

TEST_CASE("coinvariant character") {
    const auto g = coinvariant_character(4, 6);
    CHECK(g.exact());
    CHECK(g.coefficients() == worked::coinvariant());
    CHECK(coinvariant_character(4, 10).trimmed() == g);
    CHECK_FALSE(coinvariant_character(4, 5).exact());

    const auto one = coinvariant_character(1, 3);
    CHECK(one.top_degree() == 0);
    CHECK(one.coefficient(0) == triv(1));

    const auto three = coinvariant_character(3, 3);
    CHECK(three.top_degree() == 3);
    CHECK(three.coefficient(3) == irreducible_character(Partition::column(3)));

    for (int n = 1; n <= 6; ++n) {
        mpz_class total = 0;
        for (const auto& d : hilbert_series(coinvariant_character(n, n * (n - 1) / 2))) total += d;
        CHECK(total == factorial(n));
    }
}

TEST_CASE("polynomial ring character") {
    const auto g = polynomial_ring_character(4, 4);
    CHECK_FALSE(g.exact());
    CHECK(g.coefficients() == worked::polynomial_ring_low());
    CHECK_THROWS_AS(g.coefficient(5), std::out_of_range);
    for (int n = 1; n <= 5; ++n) {
        const auto r = polynomial_ring_character(n, 8);
        CHECK(r.coefficient(0) == triv(n));
        CHECK(hilbert_series(r) == binomial_row(n, 8));
    }
}

TEST_CASE("cyclotomic scaling") {
    GradedCharacter g = polynomial_ring_character(4, 12);
    for (int c = 1; c <= 4; ++c) g = scale_by_cyclotomic(g, c);
    CHECK(g.bound() == 12);
    CHECK(g.coefficient(0) == triv(4));
    for (int d = 0; d <= 12; ++d) CHECK(g.coefficient(d) == coinvariant_character(4, 12).coefficient(d));

    const auto r = polynomial_ring_character(3, 10);
    const auto back = divide_by_cyclotomic(divide_by_cyclotomic(scale_by_cyclotomic(scale_by_cyclotomic(r, 2), 3), 3), 2);
    CHECK(back.coefficients() == r.coefficients());

    const auto exact = scale_by_cyclotomic(GradedCharacter::monomial(triv(3)), 2);
    CHECK(exact.exact());
    CHECK(exact.coefficient(2) == -triv(3));
    CHECK(exact.coefficient(7).is_zero());
    CHECK_THROWS_AS(scale_by_cyclotomic(r, 0), std::invalid_argument);
}

TEST_CASE("truncated arithmetic keeps the reliable bound") {
    const auto a = polynomial_ring_character(3, 5);
    const auto b = polynomial_ring_character(3, 8);
    CHECK((a + b).bound() == 5);
    CHECK_FALSE((a * b).exact());
    CHECK((a * b).bound() == 5);
    const auto m = GradedCharacter::monomial(triv(3), 2);
    CHECK((m * m).exact());
    CHECK((m * m).coefficient(4) == triv(3));
    CHECK((a * m).bound() == 5);
    CHECK_THROWS_AS(a + polynomial_ring_character(4, 5), std::invalid_argument);
}

TEST_CASE("worked quotient examples") {
    for (const auto& ex : worked::quotient_examples()) {
        INFO(ex.name);
        const auto g = quotient_character(ex.type, 4, 10);
        CHECK(g.exact());
        CHECK(g.coefficients() == ex.expansion);
        const auto s = socle_analysis(g);
        CHECK(s.top_degree == static_cast<int>(ex.expansion.size()) - 1);
        CHECK(s.top_is_alternating == ex.socle_alternating);
        CHECK(s.top_is_trivial == !ex.socle_alternating);
        // Gorenstein symmetry on these examples
        for (int d = 0; d <= s.top_degree; ++d)
            CHECK(g.coefficient(s.top_degree - d) == g.coefficient(d) * s.top);
    }
    const auto ex4 = quotient_character({CaseTag::III, 2, {2}}, 4, 10);
    CHECK(hilbert_series(ex4) == std::vector<mpz_class>{1, 4, 6, 4, 1});
    CHECK(format_graded(ex4) == "χ[4] + (χ[4]+χ[3,1])·t + (χ[4]+χ[3,1]+χ[2,2])·t^2 + (χ[4]+χ[3,1])·t^3 + χ[4]·t^4");
}

TEST_CASE("case I with c = 1..n is the coinvariant algebra") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i + 1;
        const auto g = quotient_character({CaseTag::I, std::nullopt, c}, n, 0);
        CHECK(g == coinvariant_character(n, n * (n - 1) / 2).trimmed());
    }
}

TEST_CASE("case I Hilbert series") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            std::vector<int> c;
            for (int i = 0; i < m; ++i) c.push_back(1 + static_cast<int>(rng() % 4));
            const auto g = quotient_character({CaseTag::I, std::nullopt, c}, n, 20);
            auto h = hilbert_series(g);
            const auto expected = complete_intersection_hilbert(n, c, 20);
            h.resize(21, 0);
            CHECK(h == expected);
        }
}

TEST_CASE("formula coefficients are honest characters") {
    for (int n = 2; n <= 5; ++n) {
        const int vdm = n * (n - 1) / 2;
        for (int d = 1; d <= 3; ++d) {
            const std::vector<int> c2 = n == 2 ? std::vector<int>{1} : std::vector<int>{1, 2};
            std::vector<RepresentationType> types{{CaseTag::II, vdm, c2}, {CaseTag::II, vdm + d - 1, {}},
                                                  {CaseTag::III, d, {}}};
            for (const auto& rt : types) {
                const auto g = quotient_character(rt, n, 12);
                for (const auto& c : g.coefficients()) CHECK_NOTHROW(decompose(c, true));
            }
        }
    }
}

TEST_CASE("unrealizable types come back truncated") {
    const auto g = quotient_character({CaseTag::II, 1, {1, 2}}, 3, 8);
    CHECK_FALSE(g.exact());
    CHECK(g.bound() == 8);
    CHECK_THROWS(decompose(g.coefficient(4), true));
}

TEST_CASE("case III uses the exterior powers of the standard representation") {
    for (int n = 2; n <= 5; ++n) {
        const auto lift = standard_rep_lift(1, n);
        for (int u = 0; u <= n - 1; ++u)
            CHECK(exterior_power_character(lift.differences, u) == irreducible_character(Partition::hook(n - u, u)));
    }
}

TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_WITH_AS(quotient_character({CaseTag::IV, 2, {}}, 5, 5), doctest::Contains("Corollary 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(quotient_character({CaseTag::III, 2, {1, 2}}, 4, 5), doctest::Contains("length bound"),
                         std::invalid_argument);
    CHECK_THROWS_AS(quotient_character({CaseTag::I, 2, {1}}, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(quotient_character({CaseTag::II, std::nullopt, {1}}, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(quotient_character({CaseTag::I, std::nullopt, {}}, 4, 5), std::invalid_argument);
}

TEST_CASE("non-artinian types stay truncated") {
    const auto g = quotient_character({CaseTag::II, 3, {1}}, 4, 10);
    CHECK_FALSE(g.exact());
    CHECK(g.bound() == 10);
    CHECK(format_graded(g).ends_with("+ O(t^11)"));
    CHECK_THROWS_AS(socle_analysis(g), std::domain_error);
}
