#include "symci/classify.hpp"

#include <stdexcept>

namespace symci {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
    }
    return "?";
}

CaseTag parse_case_tag(const std::string& text) {
    if (text == "I" || text == "1") return CaseTag::I;
    if (text == "II" || text == "2") return CaseTag::II;
    if (text == "III" || text == "3") return CaseTag::III;
    if (text == "IV" || text == "4") return CaseTag::IV;
    throw std::invalid_argument("unknown case '" + text + "' (expected I, II, III or IV)");
}

std::string to_string(RejectionRule rule) {
    switch (rule) {
        case RejectionRule::Corollary1: return "Corollary 1";
        case RejectionRule::Corollary2: return "Corollary 2";
        case RejectionRule::Corollary3: return "Corollary 3";
        case RejectionRule::LengthBound: return "length bound";
    }
    return "?";
}

std::optional<Partition> RepresentationType::special_irreducible(int n) const {
    switch (case_tag) {
        case CaseTag::I: return std::nullopt;
        case CaseTag::II: return Partition::column(n);
        case CaseTag::III:
            if (n < 2) throw std::invalid_argument("case III needs n >= 2");
            return Partition::hook(n - 1, 1);
        case CaseTag::IV:
            if (n != 4) throw std::invalid_argument("case IV exists only for n = 4 (Corollary 1)");
            return Partition{2, 2};
    }
    return std::nullopt;
}

int RepresentationType::special_dimension(int n) const {
    switch (case_tag) {
        case CaseTag::I: return 0;
        case CaseTag::II: return 1;
        case CaseTag::III: return n - 1;
        case CaseTag::IV: return 2;
    }
    return 0;
}

int RepresentationType::generator_count(int n) const {
    return special_dimension(n) + static_cast<int>(trivial_degrees.size());
}

IrredMultiset to_multiset(const RepresentationType& rt, int n) {
    IrredMultiset ms{n, {}};
    if (auto special = rt.special_irreducible(n)) {
        if (!rt.special_degree) throw std::invalid_argument("case " + to_string(rt.case_tag) + " needs a degree d");
        ms.summands.push_back({*special, *rt.special_degree});
    } else if (rt.special_degree) {
        throw std::invalid_argument("case I takes no degree d");
    }
    for (int c : rt.trivial_degrees) ms.summands.push_back({Partition::row(n), c});
    return ms;
}

std::vector<Partition> admissible_irreducibles(int n) {
    if (n < 2) throw std::invalid_argument("admissible_irreducibles: need n >= 2");
    std::vector<Partition> out{Partition::row(n), Partition::column(n)};
    const Partition standard = Partition::hook(n - 1, 1);
    if (standard != out.back()) out.push_back(standard);
    if (n == 4) out.push_back(Partition{2, 2});
    return out;
}

Classification classify(const IrredMultiset& ms) {
    const int n = ms.n;
    if (n < 1) throw std::invalid_argument("classify: n must be at least 1");
    for (const auto& s : ms.summands) {
        if (s.irreducible.size() != n)
            throw std::invalid_argument("classify: " + s.irreducible.to_string() + " is not a partition of " +
                                        std::to_string(n));
        if (s.degree < 1) throw std::invalid_argument("classify: summand degrees must be at least 1");
    }

    Classification out;
    out.degenerate_small_n = n <= 3;
    const Partition trivial = Partition::row(n);
    const Partition square{2, 2};
    const Partition hook211{2, 1, 1};

    std::vector<Summand> nontrivial;
    for (const auto& s : ms.summands) {
        if (s.irreducible == trivial) continue;
        const auto& lambda = s.irreducible;
        if (contains(lambda, square) && !(n == 4 && lambda == square)) {
            out.result = Rejection{RejectionRule::Corollary1, {s},
                                   "S" + lambda.to_string() + " contains (2,2); its images share the factor x1 - x2"};
            return out;
        }
        if (is_hook(lambda) && contains(lambda, hook211)) {
            out.result = Rejection{RejectionRule::Corollary2, {s},
                                   "S" + lambda.to_string() + " is a hook containing (2,1,1)"};
            return out;
        }
        nontrivial.push_back(s);
    }
    if (nontrivial.size() >= 2) {
        out.result = Rejection{RejectionRule::Corollary3, {nontrivial[0], nontrivial[1]},
                               "at least two non-trivial irreducible summands"};
        return out;
    }

    RepresentationType rt;
    for (const auto& s : ms.summands)
        if (s.irreducible == trivial) rt.trivial_degrees.push_back(s.degree);
    if (nontrivial.empty()) {
        rt.case_tag = CaseTag::I;
    } else {
        const auto& lambda = nontrivial.front().irreducible;
        rt.special_degree = nontrivial.front().degree;
        if (lambda == Partition::column(n))
            rt.case_tag = CaseTag::II;
        else if (lambda == Partition::hook(n - 1, 1))
            rt.case_tag = CaseTag::III;
        else if (n == 4 && lambda == square)
            rt.case_tag = CaseTag::IV;
        else
            throw std::logic_error("classify: unexpected admissible irreducible " + lambda.to_string());
    }

    const int generators = rt.generator_count(n);
    if (generators == 0) {
        out.result = Rejection{RejectionRule::LengthBound, {}, "no generators: case I needs at least one trivial summand"};
        return out;
    }
    if (generators > n) {
        out.result = Rejection{RejectionRule::LengthBound, ms.summands,
                               std::to_string(generators) + " generators exceed the bound n = " + std::to_string(n) +
                                   " on the length of a regular sequence"};
        return out;
    }
    out.result = std::move(rt);
    return out;
}

}  // namespace symci
