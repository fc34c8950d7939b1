#ifndef SYMCI_MULTIPOLY_HPP
#define SYMCI_MULTIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symci {

using Exponent = std::vector<int>;

/// Graded reverse lexicographic comparison: true when a is strictly greater
/// than b. Compares total degree first, then the smaller last nonzero
/// difference wins.
bool grevlex_greater(const Exponent& a, const Exponent& b);

/// All exponent vectors of total degree d in n variables, in decreasing
/// grevlex order.
std::vector<Exponent> monomials_of_degree(int n, int d);

/// A polynomial in x_1..x_n with rational coefficients, stored sparsely.
class MultiPoly {
public:
    MultiPoly() = default;
    /// The zero polynomial in n variables.
    explicit MultiPoly(int n);

    static MultiPoly constant(int n, const mpq_class& c);
    /// x_i, 1-based.
    static MultiPoly variable(int n, int i);
    static MultiPoly monomial(const Exponent& e, const mpq_class& c = 1);

    int n() const noexcept { return n_; }
    const std::map<Exponent, mpq_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    mpq_class coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const mpq_class& c);

    /// Total degree; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const mpq_class& scalar);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= -1; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const mpq_class& s, MultiPoly a) { return a *= s; }

    MultiPoly pow(int k) const;

    /// The permutation action x_i -> x_{sigma(i)}; sigma is 0-based, sigma[i]
    /// the image of i.
    MultiPoly permuted(const std::vector<int>& sigma) const;

    /// Substitutes x_i -> x_i^k for every variable.
    MultiPoly inflated(int k) const;

    /// Division by x_i - x_j (1-based) as a polynomial in x_i: returns
    /// (quotient, remainder) with the remainder free of x_i.
    std::pair<MultiPoly, MultiPoly> divmod_difference(int i, int j) const;
    bool divisible_by_difference(int i, int j) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// "x1^2*x2 - 3*x3"; zero prints as "0".
    std::string to_string() const;

private:
    int n_ = 0;
    std::map<Exponent, mpq_class> terms_;
};

/// e_k(x_1..x_n).
MultiPoly elementary_symmetric(int k, int n);

/// prod_{i<j} (x_i - x_j).
MultiPoly vandermonde(int n);

/// sum x_i^k.
MultiPoly power_sum(int k, int n);

}  // namespace symci

#endif  // SYMCI_MULTIPOLY_HPP
