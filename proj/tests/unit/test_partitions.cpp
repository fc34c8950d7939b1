#include <doctest.h>

#include <functional>
#include <set>

#include "symci/partition.hpp"

using namespace symci;

namespace {

// Weakly decreasing compositions of n, built independently of partitions_of.
std::set<std::vector<int>> brute_partitions(int n) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.insert(cur);
            return;
        }
        for (int k = 1; k <= std::min(left, cap); ++k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

mpz_class binom2(int k) { return mpz_class(k) * (k - 1) / 2; }

}  // namespace

TEST_CASE("construction validates") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    const Partition p{3, 1};
    CHECK(p.size() == 4);
    CHECK(p.length() == 2);
    CHECK(p[5] == 0);
    CHECK(Partition{}.size() == 0);
    CHECK(Partition::hook(3, 2) == Partition({3, 1, 1}));
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(5).size() == 7);
    for (int n = 0; n <= 10; ++n) {
        const auto ps = partitions_of(n);
        std::set<std::vector<int>> got;
        for (const auto& p : ps) got.insert(p.parts());
        CHECK(got == brute_partitions(n));
        CHECK(got.size() == ps.size());
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
        for (std::size_t i = 0; i < ps.size(); ++i) CHECK(partition_index(ps[i]) == i);
    }
}

TEST_CASE("contains") {
    CHECK(contains({3, 2}, {2, 2}));
    CHECK_FALSE(contains({4, 1}, {2, 2}));
    CHECK(contains({2, 1, 1}, {2, 1, 1}));
    CHECK_FALSE(contains({2, 1}, {1, 1, 1}));
}

TEST_CASE("contains is a partial order") {
    std::vector<Partition> all;
    for (int n = 0; n <= 5; ++n)
        for (const auto& p : partitions_of(n)) all.push_back(p);
    for (const auto& a : all) {
        CHECK(contains(a, a));
        for (const auto& b : all) {
            if (contains(a, b) && contains(b, a)) CHECK(a == b);
            for (const auto& c : all)
                if (contains(a, b) && contains(b, c)) CHECK(contains(a, c));
        }
    }
}

TEST_CASE("is_hook") {
    CHECK(is_hook(Partition::row(6)));
    CHECK_FALSE(is_hook({2, 2}));
    CHECK(is_hook({3, 1, 1}));
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) CHECK(is_hook(p) == !contains(p, {2, 2}));
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Partition::column(4)) == 6);
    CHECK(n_stat({4}) == 0);
    CHECK(n_stat({2, 2}) == 2);
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) {
            mpz_class s = 0;
            const Partition conj = conjugate(mu);
            for (int c : conj.parts()) s += binom2(c);
            CHECK(s == n_stat(mu));
        }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition::row(5)) == Partition::column(5));
    CHECK(conjugate({2, 2}) == Partition({2, 2}));
    CHECK(conjugate({3, 1}) == Partition({2, 1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("class sizes") {
    CHECK(class_size({2, 1, 1}) == 6);
    CHECK(class_size({2, 2}) == 3);
    CHECK(class_size({3, 1}) == 8);
    CHECK(class_size({4}) == 6);
    for (int n = 1; n <= 8; ++n) {
        CHECK(class_size(Partition::column(n)) == 1);
        mpz_class total = 0;
        for (const auto& p : partitions_of(n)) total += class_size(p);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("parse_partition") {
    CHECK(parse_partition("(2^2,1^3)") == Partition({2, 2, 1, 1, 1}));
    CHECK(parse_partition("[3,1]") == Partition({3, 1}));
    CHECK(parse_partition("3,1") == Partition({3, 1}));
    CHECK(parse_partition("()") == Partition{});
    CHECK_THROWS_AS(parse_partition("(1,3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("(a)"), std::invalid_argument);
    CHECK(Partition({2, 1, 1}).to_string() == "(2,1,1)");
    CHECK(Partition({2, 1, 1}).label() == "2,1,1");
}
