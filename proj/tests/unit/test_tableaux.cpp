#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "symci/oracle.hpp"
#include "symci/tableau.hpp"

using namespace symci;

namespace {

// t-analogue of Kostant's partition function for the positive roots
// e_i - e_j of GL_l: sum over ways to write gamma as a nonnegative
// combination of roots, weighted by t^(number of roots used).
UnivariatePoly kostant(std::vector<int> gamma, std::size_t i = 0) {
    const std::size_t l = gamma.size();
    if (i + 1 >= l) return gamma.empty() || gamma.back() == 0 ? UnivariatePoly::monomial(0) : UnivariatePoly();
    if (gamma[i] < 0) return {};
    UnivariatePoly total;
    const int amount = gamma[i];
    std::vector<int> split(l, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
        if (j == l - 1) {
            split[j] = left;
            std::vector<int> next = gamma;
            next[i] = 0;
            for (std::size_t k = i + 1; k < l; ++k) next[k] += split[k];
            total += kostant(next, i + 1);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            split[j] = a;
            rec(j + 1, left - a);
        }
    };
    rec(i + 1, amount);
    return total * UnivariatePoly::monomial(amount);
}

// Lusztig: K_{lambda,mu}(t) = sum_w sgn(w) P_t(w(lambda+rho) - (mu+rho)).
UnivariatePoly kostka_foulkes_by_kostant(const Partition& lambda, const Partition& mu) {
    const std::size_t l = std::max(lambda.length(), mu.length());
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    UnivariatePoly total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < l; ++a)
            for (std::size_t b = a + 1; b < l; ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::vector<int> gamma(l);
        for (std::size_t k = 0; k < l; ++k) {
            const std::size_t src = static_cast<std::size_t>(perm[k]);
            const int rho_src = static_cast<int>(l - 1 - src);
            const int rho_k = static_cast<int>(l - 1 - k);
            gamma[k] = lambda[src] + rho_src - mu[k] - rho_k;
        }
        const UnivariatePoly p = kostant(gamma);
        if (inversions % 2)
            total -= p;
        else
            total += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

UnivariatePoly poly(std::initializer_list<int> exps) {
    UnivariatePoly p;
    for (int e : exps) p.add_term(e, 1);
    return p;
}

MultiPoly expand(const TableauCombination& c, int n) {
    MultiPoly p(n);
    for (const auto& [t, coeff] : c.terms()) p += coeff * specht_polynomial(t, n);
    return p;
}

const Tableau T1({{1, 2}, {3, 4}});
const Tableau T2({{1, 3}, {2, 4}});

}  // namespace

TEST_CASE("tableau predicates") {
    CHECK(T1.is_standard());
    CHECK(Tableau({{1, 1}, {2}}).is_semistandard());
    CHECK_FALSE(Tableau({{1, 1}, {2}}).is_standard());
    CHECK_FALSE(Tableau({{2, 1}}).is_semistandard());
    CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), std::invalid_argument);
    CHECK(T2.reading_word() == std::vector<int>{2, 4, 1, 3});
    CHECK(T2.same_column(1, 2));
    CHECK_FALSE(T1.same_column(1, 2));
    CHECK(T2.to_string() == "[[1,3],[2,4]]");
}

TEST_CASE("standard tableaux") {
    CHECK(standard_tableaux({2, 2}) == std::vector<Tableau>{T1, T2});
    CHECK(standard_tableaux({4}) == std::vector<Tableau>{Tableau({{1, 2, 3, 4}})});
    CHECK(standard_tableaux({3, 1}).size() == 3);
    for (int n = 1; n <= 7; ++n) {
        mpz_class total = 0;
        for (const auto& lambda : partitions_of(n)) {
            const auto ts = standard_tableaux(lambda);
            CHECK(mpz_class(static_cast<long>(ts.size())) == count_standard_tableaux(lambda));
            CHECK(std::is_sorted(ts.begin(), ts.end()));
            for (const auto& t : ts) CHECK(t.is_standard());
            total += count_standard_tableaux(lambda) * count_standard_tableaux(lambda);
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("semistandard tableaux") {
    CHECK(semistandard_tableaux({2, 2}, Partition::column(4)).size() == 2);
    CHECK(semistandard_tableaux({2}, {2}) == std::vector<Tableau>{Tableau({{1, 1}})});
    CHECK(semistandard_tableaux({1, 1}, {2}).empty());
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(semistandard_tableaux(lambda, Partition::column(n)) == standard_tableaux(lambda));
            for (const auto& mu : partitions_of(n))
                for (const auto& t : semistandard_tableaux(lambda, mu)) {
                    CHECK(t.is_semistandard());
                    CHECK(t.shape() == lambda);
                    std::vector<int> content(mu.parts());
                    CHECK(t.content() == content);
                }
        }
}

TEST_CASE("charge") {
    CHECK(charge(Tableau({{1}, {2}, {3}, {4}})) == 0);
    CHECK(charge(Tableau({{1, 2, 3, 4}})) == 6);
    std::multiset<int> charges;
    for (const auto& t : standard_tableaux({3, 1})) charges.insert(charge(t));
    CHECK(charges == std::multiset<int>{3, 4, 5});
    CHECK(charge(T1) == 4);
    CHECK(charge(T2) == 2);
    CHECK(charge(std::vector<int>{1, 1, 2, 2}) == 2);
    CHECK(charge(std::vector<int>{2, 2, 1, 1}) == 0);
}

TEST_CASE("Kostka-Foulkes polynomials, n = 4") {
    const Partition one4 = Partition::column(4);
    CHECK(kostka_foulkes({4}, one4) == poly({6}));
    CHECK(kostka_foulkes({2, 2}, one4) == poly({2, 4}));
    CHECK(kostka_foulkes_tilde({4}, one4) == poly({0}));
    CHECK(kostka_foulkes_tilde({3, 1}, one4) == poly({1, 2, 3}));
    CHECK(kostka_foulkes_tilde({2, 2}, one4) == poly({2, 4}));
    CHECK(kostka_foulkes_tilde({2, 1, 1}, one4) == poly({3, 4, 5}));
    CHECK(kostka_foulkes_tilde(one4, one4) == poly({6}));
    CHECK(kostka_foulkes({3, 1}, {2, 1, 1}) == poly({1, 2}));
    CHECK(kostka_foulkes({2, 2}, {2, 1, 1}) == poly({1}));
    CHECK(kostka_foulkes({4}, {2, 1, 1}) == poly({3}));
}

TEST_CASE("charge agrees with the Kostant partition function") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                INFO(lambda.to_string() << " " << mu.to_string());
                CHECK(kostka_foulkes(lambda, mu) == kostka_foulkes_by_kostant(lambda, mu));
            }
}

TEST_CASE("Kostka-Foulkes properties") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(kostka_foulkes(lambda, lambda) == poly({0}));
            CHECK(kostka_foulkes_tilde(lambda, Partition::column(n)).evaluate(1) == count_standard_tableaux(lambda));
            for (const auto& mu : partitions_of(n)) {
                const UnivariatePoly k = kostka_foulkes(lambda, mu);
                if (!dominates(lambda, mu)) CHECK(k.is_zero());
                CHECK(k.evaluate(1) == static_cast<long>(semistandard_tableaux(lambda, mu).size()));
                const UnivariatePoly kt = kostka_foulkes_tilde(lambda, mu);
                CHECK(kt.degree() <= n_stat(mu));
                for (const auto& [e, c] : kt.terms()) CHECK(c > 0);
            }
        }
}

TEST_CASE("transpositions on S(2,2)") {
    TableauCombination expected;
    expected.add(T1, 1);
    expected.add(T2, -1);
    CHECK(apply_transposition(1, 2, T1) == expected);
    TableauCombination minus_t2;
    minus_t2.add(T2, -1);
    CHECK(apply_transposition(1, 2, T2) == minus_t2);
    CHECK(apply_transposition(2, 1, T2) == minus_t2);
    CHECK_THROWS_AS(apply_transposition(1, 4, T2), std::invalid_argument);
    CHECK_THROWS_AS(apply_transposition(1, 1, T2), std::invalid_argument);

    // (1 2) on T1 ^ T2 is the determinant of its matrix; every adjacent
    // transposition acts by -1, so the exterior square is alternating.
    for (int i = 1; i <= 3; ++i) CHECK(determinant(transposition_matrix({2, 2}, i)) == -1);
}

TEST_CASE("column mates") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& t : standard_tableaux(lambda))
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        if (!t.same_column(i, j)) continue;
                        TableauCombination minus;
                        minus.add(t, -1);
                        CHECK(apply_transposition(i, j, t) == minus);
                        // applying twice gives back t
                        TableauCombination twice;
                        const auto once = apply_transposition(i, j, t);
                        for (const auto& [u, c] : once.terms())
                            twice += c * apply_transposition(i, j, u);
                        TableauCombination same;
                        same.add(t, 1);
                        CHECK(twice == same);
                    }
}

TEST_CASE("straightening agrees with Specht polynomials") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& t : standard_tableaux(lambda))
                for (int i = 1; i < n; ++i) {
                    INFO(t.to_string() << " (" << i << " " << i + 1 << ")");
                    const auto image = apply_transposition(i, i + 1, t);
                    CHECK(expand(image, n) == specht_polynomial(t, n).permuted(adjacent_transposition(n, i)));
                }
}

TEST_CASE("transposition matrices give the irreducible representation") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const std::size_t f = standard_tableaux(lambda).size();
            RationalMatrix id(f, std::vector<mpq_class>(f));
            for (std::size_t k = 0; k < f; ++k) id[k][k] = 1;
            for (int i = 1; i < n; ++i) {
                const auto s = transposition_matrix(lambda, i);
                CHECK(multiply(s, s) == id);
                if (i + 1 < n) {
                    const auto u = transposition_matrix(lambda, i + 1);
                    CHECK(multiply(multiply(s, u), s) == multiply(multiply(u, s), u));
                }
            }
        }
}
