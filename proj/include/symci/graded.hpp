#ifndef SYMCI_GRADED_HPP
#define SYMCI_GRADED_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symci/class_function.hpp"
#include "symci/classify.hpp"

namespace symci {

/// A power series in t with class-function coefficients, truncated at an
/// inclusive degree bound.
///
/// When `exact()` is set the series is a polynomial whose terms all lie at or
/// below the bound, and coefficients past the bound read as zero. Otherwise
/// reading past the bound is an error: the information was never computed.
///
/// Arithmetic on series with different bounds keeps only the degrees that
/// are reliable in both operands.
class GradedCharacter {
public:
    GradedCharacter() = default;
    /// The zero series on S_n through `bound`.
    GradedCharacter(int n, int bound, bool exact);
    GradedCharacter(int n, std::vector<ClassFunction> coeffs, bool exact);

    /// c * t^degree as an exact polynomial.
    static GradedCharacter monomial(const ClassFunction& c, int degree = 0);

    int n() const noexcept { return n_; }
    int bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool exact() const noexcept { return exact_; }
    const std::vector<ClassFunction>& coefficients() const noexcept { return coeffs_; }

    ClassFunction coefficient(int degree) const;
    void set_coefficient(int degree, const ClassFunction& c);

    /// Highest degree with a nonzero coefficient, -1 for the zero series.
    int top_degree() const;

    /// Drops degrees above new_bound (which must not exceed bound()).
    GradedCharacter truncated(int new_bound) const;
    /// For an exact series: the same polynomial with bound = top degree.
    GradedCharacter trimmed() const;

    GradedCharacter& operator+=(const GradedCharacter& other);
    GradedCharacter& operator-=(const GradedCharacter& other);
    friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
    friend GradedCharacter operator-(GradedCharacter a, const GradedCharacter& b) { return a -= b; }
    friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b);

    friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

private:
    int n_ = 0;
    bool exact_ = false;
    std::vector<ClassFunction> coeffs_;
};

/// sum over lambda of chi^lambda Ktilde_{lambda,(1^n)}(t); exact when bound
/// reaches n(n-1)/2.
GradedCharacter coinvariant_character(int n, int bound);

/// chi_R through `bound`: the coinvariant character divided by
/// prod_{j=1..n} (1 - t^j).
GradedCharacter polynomial_ring_character(int n, int bound);

/// g * (1 - t^c). A truncated series keeps its bound; an exact one grows
/// by c.
GradedCharacter scale_by_cyclotomic(const GradedCharacter& g, int c);

/// g / (1 - t^c) as a power series, bound preserved, never exact.
GradedCharacter divide_by_cyclotomic(const GradedCharacter& g, int c);

/// The alternating sum of the Koszul terms attached to the non-trivial
/// summand, times prod (1 - t^{c_i}), as an exact polynomial.
GradedCharacter numerator_polynomial(const RepresentationType& rt, int n);

/// Top degree of R/I when the ideal has n generators (the artinian case).
std::optional<int> artinian_top_degree(const RepresentationType& rt, int n);

/// Validates rt through classify(); throws std::invalid_argument naming the
/// violated rule.
void validate_representation_type(const RepresentationType& rt, int n);

/// Graded character of R/I for an ideal of representation type rt.
/// Artinian types come back exact with the bound moved to the top degree;
/// the others are truncated at `bound`, as is any type whose series does not
/// terminate.
GradedCharacter quotient_character(const RepresentationType& rt, int n, int bound);

/// Dimension of each graded piece: each coefficient at the identity.
std::vector<mpz_class> hilbert_series(const GradedCharacter& g);

struct SocleReport {
    int top_degree = -1;
    bool top_is_trivial = false;
    bool top_is_alternating = false;
    ClassFunction top;
};

/// Inspects the top-degree piece of an exact series. Throws std::domain_error
/// when the series is not exact or the top piece is not one-dimensional.
SocleReport socle_analysis(const GradedCharacter& g);

/// "χ[4] + (χ[4]+χ[3,1])·t + χ[4]·t^2"; truncated series end in "+ O(t^k)".
std::string format_graded(const GradedCharacter& g);

}  // namespace symci

#endif  // SYMCI_GRADED_HPP
