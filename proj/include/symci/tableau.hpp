#ifndef SYMCI_TABLEAU_HPP
#define SYMCI_TABLEAU_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symci/linalg.hpp"
#include "symci/partition.hpp"
#include "symci/upoly.hpp"

namespace symci {

/// A left-justified filling of a Young diagram by positive integers.
///
/// The type only enforces the diagram shape; standardness and
/// semistandardness are predicates.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }

    /// Bijective filling by 1..n, strictly increasing along rows and columns.
    bool is_standard() const;
    /// Rows weakly increase, columns strictly increase.
    bool is_semistandard() const;

    /// Multiplicity of each entry value 1..max, as a vector indexed from 0.
    std::vector<int> content() const;

    /// Row by row, bottom row first, left to right within each row.
    std::vector<int> reading_word() const;

    /// (row, column) of a value, which must occur exactly once.
    std::pair<std::size_t, std::size_t> position(int value) const;

    bool same_column(int a, int b) const;

    /// "[[1,3],[2,4]]"
    std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    /// Row-reading-word lexicographic (rows top to bottom), shape as tiebreak.
    friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Semistandard tableaux of shape lambda and content mu.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Partition& mu);

/// Number of standard tableaux (hook length formula); equals dim S^lambda.
mpz_class count_standard_tableaux(const Partition& lambda);

/// Charge of a word whose content is a partition (letter i appears mu_i
/// times, mu weakly decreasing).
///
/// For a standard word: letter 1 has index 0; letter r+1 gets the index of r,
/// plus one when r+1 stands to the right of r. The charge is the sum of the
/// indices. A general word is split into standard subwords first: scanning
/// leftwards from the right end, pick the first 1, then continue leftwards
/// (wrapping around) to the next 2, and so on up to the largest letter; the
/// charge is additive over the subwords.
int charge(const std::vector<int>& word);

/// Charge of the reading word of a semistandard tableau with partition content.
int charge(const Tableau& t);

/// K_{lambda,mu}(t) = sum of t^charge(T) over semistandard T of shape lambda
/// and content mu.
UnivariatePoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// t^{n(mu)} K_{lambda,mu}(1/t).
UnivariatePoly kostka_foulkes_tilde(const Partition& lambda, const Partition& mu);

/// A formal combination of standard tableaux of one shape, read as
/// polytabloids in the Specht module.
class TableauCombination {
public:
    TableauCombination() = default;

    void add(const Tableau& t, const mpq_class& coeff);
    mpq_class coefficient(const Tableau& t) const;
    const std::map<Tableau, mpq_class>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    TableauCombination& operator+=(const TableauCombination& other);
    friend TableauCombination operator*(const mpq_class& s, TableauCombination c);

    friend bool operator==(const TableauCombination&, const TableauCombination&) = default;

    std::string to_string() const;

private:
    std::map<Tableau, mpq_class> terms_;
};

/// The transposition (i j) applied to a standard tableau, expanded in the
/// standard basis. Implemented when i and j share a column of t (giving -t)
/// or when j = i + 1; any other pair throws std::invalid_argument.
TableauCombination apply_transposition(int i, int j, const Tableau& t);

/// Matrix of (i i+1) on the standard basis of S^lambda, ordered as
/// standard_tableaux(lambda); column l holds the image of the l-th tableau.
RationalMatrix transposition_matrix(const Partition& lambda, int i);

}  // namespace symci

#endif  // SYMCI_TABLEAU_HPP
