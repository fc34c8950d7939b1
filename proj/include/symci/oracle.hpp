#ifndef SYMCI_ORACLE_HPP
#define SYMCI_ORACLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symci/class_function.hpp"
#include "symci/graded.hpp"
#include "symci/linalg.hpp"
#include "symci/multipoly.hpp"
#include "symci/tableau.hpp"

// Brute-force ground truth for the closed formulas: explicit generators,
// degree slices of the ideal by exact linear algebra, and traces of the
// permutation action on the quotient.

namespace symci {

/// 0-based permutations: sigma[i] is the image of i.
using Permutation = std::vector<int>;

/// The permutation (1 2 .. mu_1)(mu_1+1 ..)... of cycle type mu.
Permutation cycle_type_representative(const Partition& mu);
Partition cycle_type(const Permutation& sigma);
/// tau sigma tau^-1.
Permutation conjugated(const Permutation& sigma, const Permutation& tau);
/// The adjacent transposition (i i+1), i 1-based.
Permutation adjacent_transposition(int n, int i);

/// Homogeneous nonzero generators in a common polynomial ring.
class GeneratorSet {
public:
    /// Throws std::invalid_argument on an empty list (use the n-taking form),
    /// a zero or inhomogeneous generator, or mixed variable counts.
    explicit GeneratorSet(std::vector<MultiPoly> gens);
    GeneratorSet(int n, std::vector<MultiPoly> gens);

    int n() const noexcept { return n_; }
    const std::vector<MultiPoly>& gens() const noexcept { return gens_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return gens_.size(); }

    /// Whether the span <g_1..g_r> is closed under every adjacent
    /// transposition (hence under S_n). Computed at construction.
    bool is_stable() const noexcept { return stable_; }

private:
    int n_ = 0;
    std::vector<MultiPoly> gens_;
    std::vector<int> degrees_;
    bool stable_ = false;
};

/// prod over columns of prod_{a above b} (x_a - x_b).
MultiPoly specht_polynomial(const Tableau& t, int n);

/// Specht polynomials of every standard tableau of shape lambda, with each
/// variable raised to the power k (x_i -> x_i^k).
GeneratorSet specht_generators(const Partition& lambda, int k = 1);

/// g1 = (x1-x2)(x3-x4), g2 = (x1-x3)(x2-x4) in four variables.
GeneratorSet specht_square_generators();

struct StandardRepLift {
    GeneratorSet full;         ///< x_1^d, ..., x_n^d
    GeneratorSet differences;  ///< x_i^d - x_{i+1}^d, i = 1..n-1
};
StandardRepLift standard_rep_lift(int d, int n);

/// Matrix of sigma on the span of gs, in the echelon basis of that span.
RationalMatrix action_matrix(const GeneratorSet& gs, const Permutation& sigma);

/// Character of the (ungraded) representation on the span of gs.
ClassFunction span_character(const GeneratorSet& gs);

/// Character of the u-th exterior power of the span of gs.
ClassFunction exterior_power_character(const GeneratorSet& gs, int u);

/// I_d: the degree-d piece of the ideal, as a reduced echelon basis over
/// the degree-d monomials in decreasing grevlex order.
struct DegreeSlice {
    int degree = 0;
    std::vector<Exponent> monomials;
    std::map<Exponent, std::size_t> column;
    EchelonBasis basis{0};

    std::size_t ideal_dimension() const { return basis.rank(); }
    std::size_t quotient_dimension() const { return monomials.size() - basis.rank(); }
    /// Monomials outside the leading terms of I_d, a basis of (R/I)_d.
    std::vector<Exponent> standard_monomials() const;
};

DegreeSlice ideal_degree_slice(const GeneratorSet& gs, int d);

/// Trace of sigma acting on (R/I)_d, computed on the standard monomials.
mpz_class quotient_trace(const DegreeSlice& slice, const Permutation& sigma);

/// Character of R/(gs) degree by degree through `bound`. When some degree
/// of the quotient vanishes, every later one does too; the result is then
/// exact and trimmed to its top degree.
GradedCharacter quotient_graded_character(const GeneratorSet& gs, int bound);

/// Coefficients of prod (1 - t^{c_i}) / (1 - t)^n through `bound`.
std::vector<mpz_class> complete_intersection_hilbert(int n, const std::vector<int>& degrees, int bound);

struct RegularityReport {
    bool regular = false;
    /// True when the verdict is a proof: a mismatch was found, or r = n and
    /// the series agreed through the horizon.
    bool conclusive = false;
    int horizon = 0;
    std::vector<mpz_class> observed;
    std::vector<mpz_class> expected;
    std::optional<int> first_mismatch;
    mpz_class total_dimension;
    std::string summary;
};

/// Hilbert-series test for a homogeneous regular sequence: dim (R/I)_d must
/// equal the coefficient of t^d in prod (1 - t^{c_i}) / (1 - t)^n.
///
/// With r = n generators the check runs through sum c_i - n + 1 and is
/// conclusive. With r < n it runs through `horizon` (default sum c_i) and a
/// positive answer only means "verified up to degree horizon". More than n
/// generators are never regular.
RegularityReport is_regular_sequence(const GeneratorSet& gs, std::optional<int> horizon = std::nullopt);

}  // namespace symci

#endif  // SYMCI_ORACLE_HPP
