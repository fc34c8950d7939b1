#include <doctest.h>

#include <random>

#include "symci/classify.hpp"

using namespace symci;

namespace {

IrredMultiset make(int n, std::vector<std::pair<Partition, int>> items) {
    IrredMultiset ms{n, {}};
    for (auto& [p, d] : items) ms.summands.push_back({p, d});
    return ms;
}

// Direct pattern match against the four admissible shapes, written without
// the corollary chain.
std::optional<RepresentationType> pattern_match(const IrredMultiset& ms) {
    const int n = ms.n;
    std::vector<int> trivials;
    std::vector<Summand> others;
    for (const auto& s : ms.summands) {
        if (s.irreducible == Partition::row(n))
            trivials.push_back(s.degree);
        else
            others.push_back(s);
    }
    const int m = static_cast<int>(trivials.size());
    if (others.empty()) {
        if (m >= 1 && m <= n) return RepresentationType{CaseTag::I, std::nullopt, trivials};
        return std::nullopt;
    }
    if (others.size() != 1) return std::nullopt;
    const Partition& lambda = others[0].irreducible;
    const int d = others[0].degree;
    if (lambda == Partition::column(n) && m <= n - 1) return RepresentationType{CaseTag::II, d, trivials};
    if (lambda == Partition({n - 1, 1}) && m <= 1) return RepresentationType{CaseTag::III, d, trivials};
    if (n == 4 && lambda == Partition({2, 2}) && m <= 2) return RepresentationType{CaseTag::IV, d, trivials};
    return std::nullopt;
}

}  // namespace

TEST_CASE("admissible irreducibles") {
    CHECK(admissible_irreducibles(4) ==
          std::vector<Partition>{{4}, {1, 1, 1, 1}, {3, 1}, {2, 2}});
    CHECK(admissible_irreducibles(5) == std::vector<Partition>{{5}, {1, 1, 1, 1, 1}, {4, 1}});
    CHECK(admissible_irreducibles(2) == std::vector<Partition>{{2}, {1, 1}});
    CHECK_THROWS_AS(admissible_irreducibles(1), std::invalid_argument);
}

TEST_CASE("classify examples") {
    const auto ex2 = classify(make(4, {{{4}, 2}, {{4}, 3}, {{4}, 3}, {{4}, 4}}));
    REQUIRE(ex2.accepted());
    CHECK(ex2.type() == RepresentationType{CaseTag::I, std::nullopt, {2, 3, 3, 4}});
    CHECK_FALSE(ex2.degenerate_small_n);

    const auto two_std = classify(make(5, {{{4, 1}, 1}, {{4, 1}, 2}}));
    REQUIRE_FALSE(two_std.accepted());
    CHECK(two_std.rejection().rule == RejectionRule::Corollary3);
    CHECK(two_std.rejection().witness.size() == 2);

    const auto c1 = classify(make(5, {{{3, 2}, 2}}));
    REQUIRE_FALSE(c1.accepted());
    CHECK(c1.rejection().rule == RejectionRule::Corollary1);

    const auto c2 = classify(make(6, {{{4, 1, 1}, 3}}));
    REQUIRE_FALSE(c2.accepted());
    CHECK(c2.rejection().rule == RejectionRule::Corollary2);

    const auto ex5 = classify(make(4, {{{2, 2}, 2}, {{4}, 2}, {{4}, 3}}));
    REQUIRE(ex5.accepted());
    CHECK(ex5.type() == RepresentationType{CaseTag::IV, 2, {2, 3}});

    const auto too_long = classify(make(4, {{{3, 1}, 2}, {{4}, 2}, {{4}, 3}}));
    REQUIRE_FALSE(too_long.accepted());
    CHECK(too_long.rejection().rule == RejectionRule::LengthBound);

    const auto empty = classify(make(4, {}));
    REQUIRE_FALSE(empty.accepted());
    CHECK(empty.rejection().rule == RejectionRule::LengthBound);

    const auto n2 = classify(make(2, {{{1, 1}, 1}, {{2}, 2}}));
    REQUIRE(n2.accepted());
    CHECK(n2.type().case_tag == CaseTag::II);
    CHECK(n2.degenerate_small_n);

    CHECK_THROWS_AS(classify(make(4, {{{3}, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(classify(make(4, {{{4}, 0}})), std::invalid_argument);
}

TEST_CASE("rule names") {
    CHECK(to_string(RejectionRule::Corollary1) == "Corollary 1");
    CHECK(to_string(RejectionRule::Corollary3) == "Corollary 3");
    CHECK(to_string(RejectionRule::LengthBound) == "length bound");
    CHECK(parse_case_tag("IV") == CaseTag::IV);
    CHECK(parse_case_tag("2") == CaseTag::II);
    CHECK_THROWS_AS(parse_case_tag("V"), std::invalid_argument);
}

TEST_CASE("classify matches the admissible shapes on random multisets") {
    std::mt19937 rng(2024);
    int accepted = 0;
    for (int n = 2; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        const auto admissible = admissible_irreducibles(n);
        for (int trial = 0; trial < 400; ++trial) {
            IrredMultiset ms{n, {}};
            const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 2));
            for (int s = 0; s < k; ++s) {
                const unsigned pick = rng() % 4;
                Partition p;
                if (pick < 2)
                    p = Partition::row(n);
                else if (pick == 2)
                    p = admissible[rng() % admissible.size()];
                else
                    p = parts[rng() % parts.size()];
                ms.summands.push_back({p, 1 + static_cast<int>(rng() % 5)});
            }
            const auto verdict = classify(ms);
            const auto expected = pattern_match(ms);
            INFO("n = " << n << ", trial " << trial);
            REQUIRE(verdict.accepted() == expected.has_value());
            if (expected) {
                ++accepted;
                CHECK(verdict.type() == *expected);
                CHECK(verdict.type().generator_count(n) <= n);
            } else {
                // any offending irreducible is reported by its own rule
                bool cor1 = false;
                bool cor2 = false;
                for (const auto& s : ms.summands) {
                    const auto& l = s.irreducible;
                    if (l == Partition::row(n)) continue;
                    if (contains(l, {2, 2}) && !(n == 4 && l == Partition({2, 2}))) cor1 = true;
                    if (is_hook(l) && contains(l, {2, 1, 1})) cor2 = true;
                    if (cor1 || cor2) break;
                }
                const auto rule = verdict.rejection().rule;
                if (cor1) CHECK(rule == RejectionRule::Corollary1);
                if (cor2) CHECK(rule == RejectionRule::Corollary2);
                CHECK_FALSE(to_string(rule).empty());
            }
            CHECK(verdict.degenerate_small_n == (n <= 3));
        }
    }
    CHECK(accepted > 100);
}
