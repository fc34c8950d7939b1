#include "symci/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symci/tableau.hpp"

namespace symci {

GradedCharacter::GradedCharacter(int n, int bound, bool exact)
    : n_(n), exact_(exact), coeffs_(static_cast<std::size_t>(bound + 1), ClassFunction(n)) {
    if (bound < 0) throw std::invalid_argument("GradedCharacter: negative bound");
}

GradedCharacter::GradedCharacter(int n, std::vector<ClassFunction> coeffs, bool exact)
    : n_(n), exact_(exact), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("GradedCharacter: need at least the degree-0 coefficient");
    for (const auto& c : coeffs_)
        if (c.n() != n) throw std::invalid_argument("GradedCharacter: coefficient on the wrong symmetric group");
}

GradedCharacter GradedCharacter::monomial(const ClassFunction& c, int degree) {
    GradedCharacter g(c.n(), degree, true);
    g.coeffs_[static_cast<std::size_t>(degree)] = c;
    return g;
}

ClassFunction GradedCharacter::coefficient(int degree) const {
    if (degree < 0) return ClassFunction(n_);
    if (degree > bound()) {
        if (exact_) return ClassFunction(n_);
        throw std::out_of_range("GradedCharacter: degree " + std::to_string(degree) +
                                " lies beyond the truncation bound " + std::to_string(bound()));
    }
    return coeffs_[static_cast<std::size_t>(degree)];
}

void GradedCharacter::set_coefficient(int degree, const ClassFunction& c) {
    if (c.n() != n_) throw std::invalid_argument("GradedCharacter: coefficient on the wrong symmetric group");
    coeffs_.at(static_cast<std::size_t>(degree)) = c;
}

int GradedCharacter::top_degree() const {
    for (int d = bound(); d >= 0; --d)
        if (!coeffs_[static_cast<std::size_t>(d)].is_zero()) return d;
    return -1;
}

GradedCharacter GradedCharacter::truncated(int new_bound) const {
    if (new_bound < 0 || new_bound > bound())
        throw std::invalid_argument("GradedCharacter::truncated: bound out of range");
    GradedCharacter out = *this;
    out.coeffs_.resize(static_cast<std::size_t>(new_bound + 1));
    out.exact_ = exact_ && top_degree() <= new_bound;
    return out;
}

GradedCharacter GradedCharacter::trimmed() const {
    if (!exact_) throw std::logic_error("GradedCharacter::trimmed: series is truncated, not a polynomial");
    return truncated(std::max(top_degree(), 0));
}

namespace {

// Largest degree through which both operands are known.
int reliable_bound(const GradedCharacter& a, const GradedCharacter& b) {
    if (a.exact() && b.exact()) return std::max(a.bound(), b.bound());
    if (a.exact()) return b.bound();
    if (b.exact()) return a.bound();
    return std::min(a.bound(), b.bound());
}

void require_same_group(const GradedCharacter& a, const GradedCharacter& b) {
    if (a.n() != b.n()) throw std::invalid_argument("graded characters on different symmetric groups");
}

}  // namespace

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& other) {
    require_same_group(*this, other);
    const int b = reliable_bound(*this, other);
    GradedCharacter out(n_, b, exact_ && other.exact_);
    for (int d = 0; d <= b; ++d) out.coeffs_[static_cast<std::size_t>(d)] = coefficient(d) + other.coefficient(d);
    return *this = std::move(out);
}

GradedCharacter& GradedCharacter::operator-=(const GradedCharacter& other) {
    require_same_group(*this, other);
    const int b = reliable_bound(*this, other);
    GradedCharacter out(n_, b, exact_ && other.exact_);
    for (int d = 0; d <= b; ++d) out.coeffs_[static_cast<std::size_t>(d)] = coefficient(d) - other.coefficient(d);
    return *this = std::move(out);
}

GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b) {
    require_same_group(a, b);
    const bool exact = a.exact() && b.exact();
    const int bound = exact ? a.bound() + b.bound() : reliable_bound(a, b);
    GradedCharacter out(a.n(), bound, exact);
    for (int i = 0; i <= std::min(a.bound(), bound); ++i) {
        const auto& ca = a.coeffs_[static_cast<std::size_t>(i)];
        if (ca.is_zero()) continue;
        for (int j = 0; j <= std::min(b.bound(), bound - i); ++j) {
            const auto& cb = b.coeffs_[static_cast<std::size_t>(j)];
            if (cb.is_zero()) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += multiply(ca, cb);
        }
    }
    return out;
}

GradedCharacter coinvariant_character(int n, int bound) {
    if (n < 1) throw std::invalid_argument("coinvariant_character: n must be at least 1");
    if (bound < 0) throw std::invalid_argument("coinvariant_character: negative bound");
    const int top = n * (n - 1) / 2;
    GradedCharacter g(n, bound, bound >= top);
    const Partition column = Partition::column(n);
    for (const auto& lambda : partitions_of(n)) {
        const ClassFunction chi = irreducible_character(lambda);
        const UnivariatePoly k = kostka_foulkes_tilde(lambda, column);
        for (const auto& [e, c] : k.terms()) {
            if (e > bound) continue;
            g.set_coefficient(e, g.coefficient(e) + c * chi);
        }
    }
    return g;
}

GradedCharacter scale_by_cyclotomic(const GradedCharacter& g, int c) {
    if (c < 1) throw std::invalid_argument("scale_by_cyclotomic: degree must be positive");
    if (g.exact()) return g * (GradedCharacter::monomial(irreducible_character(Partition::row(g.n()))) -
                               GradedCharacter::monomial(irreducible_character(Partition::row(g.n())), c));
    GradedCharacter out = g;
    for (int d = c; d <= g.bound(); ++d) out.set_coefficient(d, g.coefficient(d) - g.coefficient(d - c));
    return out;
}

GradedCharacter divide_by_cyclotomic(const GradedCharacter& g, int c) {
    if (c < 1) throw std::invalid_argument("divide_by_cyclotomic: degree must be positive");
    std::vector<ClassFunction> h = g.coefficients();
    for (std::size_t d = static_cast<std::size_t>(c); d < h.size(); ++d) h[d] += h[d - static_cast<std::size_t>(c)];
    return GradedCharacter(g.n(), std::move(h), false);
}

GradedCharacter polynomial_ring_character(int n, int bound) {
    GradedCharacter g = coinvariant_character(n, bound);
    g = GradedCharacter(n, g.coefficients(), false);
    for (int j = 1; j <= n; ++j) g = divide_by_cyclotomic(g, j);
    return g;
}

GradedCharacter numerator_polynomial(const RepresentationType& rt, int n) {
    const ClassFunction trivial = irreducible_character(Partition::row(n));
    GradedCharacter koszul = GradedCharacter::monomial(trivial);
    const int d = rt.special_degree.value_or(0);
    switch (rt.case_tag) {
        case CaseTag::I:
            break;
        case CaseTag::II:
            koszul -= GradedCharacter::monomial(irreducible_character(Partition::column(n)), d);
            break;
        case CaseTag::III:
            // Exterior powers of the standard representation are the hooks.
            for (int u = 1; u <= n - 1; ++u) {
                const auto term = GradedCharacter::monomial(irreducible_character(Partition::hook(n - u, u)), d * u);
                if (u % 2)
                    koszul -= term;
                else
                    koszul += term;
            }
            break;
        case CaseTag::IV:
            koszul -= GradedCharacter::monomial(irreducible_character(Partition{2, 2}), d);
            koszul += GradedCharacter::monomial(irreducible_character(Partition::column(4)), 2 * d);
            break;
    }
    for (int c : rt.trivial_degrees) koszul = scale_by_cyclotomic(koszul, c);
    return koszul;
}

std::optional<int> artinian_top_degree(const RepresentationType& rt, int n) {
    if (rt.generator_count(n) != n) return std::nullopt;
    int total = rt.special_dimension(n) * rt.special_degree.value_or(0);
    total += std::accumulate(rt.trivial_degrees.begin(), rt.trivial_degrees.end(), 0);
    return total - n;
}

void validate_representation_type(const RepresentationType& rt, int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (rt.case_tag == CaseTag::I && rt.special_degree)
        throw std::invalid_argument("case I takes no degree d");
    if (rt.case_tag != CaseTag::I && !rt.special_degree)
        throw std::invalid_argument("case " + to_string(rt.case_tag) + " needs a degree d");
    if (rt.case_tag == CaseTag::III && n < 2) throw std::invalid_argument("case III needs n >= 2");
    if (rt.case_tag == CaseTag::IV && n != 4)
        throw std::invalid_argument("Corollary 1: case IV (S(2,2)) exists only for n = 4");
    const Classification verdict = classify(to_multiset(rt, n));
    if (!verdict.accepted()) {
        const auto& r = verdict.rejection();
        throw std::invalid_argument(to_string(r.rule) + ": " + r.message);
    }
}

GradedCharacter quotient_character(const RepresentationType& rt, int n, int bound) {
    if (bound < 0) throw std::invalid_argument("quotient_character: negative bound");
    validate_representation_type(rt, n);
    const GradedCharacter numerator = numerator_polynomial(rt, n);
    if (const auto top = artinian_top_degree(rt, n); top && *top >= 0) {
        const auto coeffs = (polynomial_ring_character(n, *top) * numerator).truncated(*top).coefficients();
        const GradedCharacter candidate(n, coeffs, true);
        GradedCharacter lifted = candidate;
        for (int j = 1; j <= n; ++j) lifted = scale_by_cyclotomic(lifted, j);
        const GradedCharacter target = coinvariant_character(n, n * (n - 1) / 2) * numerator;
        if (lifted.trimmed() == target.trimmed()) return candidate;
    }
    return polynomial_ring_character(n, bound) * numerator;
}

std::vector<mpz_class> hilbert_series(const GradedCharacter& g) {
    std::vector<mpz_class> dims;
    dims.reserve(g.coefficients().size());
    for (const auto& c : g.coefficients()) dims.push_back(c.degree());
    return dims;
}

SocleReport socle_analysis(const GradedCharacter& g) {
    if (!g.exact()) throw std::domain_error("socle_analysis: series is truncated, the quotient is not known to be artinian");
    SocleReport report;
    report.top_degree = g.top_degree();
    if (report.top_degree < 0) throw std::domain_error("socle_analysis: zero series");
    report.top = g.coefficient(report.top_degree);
    if (report.top.degree() != 1)
        throw std::domain_error("socle_analysis: top piece has dimension " + report.top.degree().get_str() +
                                ", expected 1 for a Gorenstein artinian quotient");
    report.top_is_trivial = report.top == irreducible_character(Partition::row(g.n()));
    report.top_is_alternating = report.top == irreducible_character(Partition::column(g.n()));
    return report;
}

std::string format_graded(const GradedCharacter& g) {
    std::string out;
    for (int d = 0; d <= g.bound(); ++d) {
        const auto& c = g.coefficients()[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        std::string body = format_character(c);
        const bool compound = body.find_first_of("+-", 1) != std::string::npos;
        bool negative = false;
        if (!compound && body.front() == '-') {
            negative = true;
            body.erase(0, 1);
        }
        if (d > 0) {
            if (compound) body = "(" + body + ")";
            body += d == 1 ? "·t" : "·t^" + std::to_string(d);
        }
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    if (out.empty()) out = "0";
    if (!g.exact()) out += " + O(t^" + std::to_string(g.bound() + 1) + ")";
    return out;
}

}  // namespace symci
