#ifndef SYMCI_CLASSIFY_HPP
#define SYMCI_CLASSIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symci/partition.hpp"

namespace symci {

/// The four families of isomorphism types of I/mI for a symmetric-group-stable
/// complete intersection I.
enum class CaseTag {
    I,    ///< trivial summands only
    II,   ///< one alternating summand plus trivials
    III,  ///< one standard summand S^(n-1,1) plus trivials
    IV,   ///< n = 4: one S^(2,2) plus trivials
};

std::string to_string(CaseTag tag);
CaseTag parse_case_tag(const std::string& text);

/// Isomorphism type of I/mI: the case, the degree of the non-trivial
/// summand (absent in case I) and the degrees c_1..c_m of the trivial ones.
struct RepresentationType {
    CaseTag case_tag = CaseTag::I;
    std::optional<int> special_degree;
    std::vector<int> trivial_degrees;

    /// The non-trivial irreducible for this case at a given n.
    std::optional<Partition> special_irreducible(int n) const;
    /// Dimension of the non-trivial summand: 0, 1, n-1 or 2.
    int special_dimension(int n) const;
    /// Number of minimal generators of I (dimension of I/mI).
    int generator_count(int n) const;

    friend bool operator==(const RepresentationType&, const RepresentationType&) = default;
};

/// One irreducible summand S^lambda placed in a degree.
struct Summand {
    Partition irreducible;
    int degree = 0;

    friend bool operator==(const Summand&, const Summand&) = default;
};

struct IrredMultiset {
    int n = 0;
    std::vector<Summand> summands;
};

/// Summands of the given type, in the order: special summand, then trivials.
IrredMultiset to_multiset(const RepresentationType& rt, int n);

enum class RejectionRule {
    Corollary1,   ///< irreducible containing (2,2), other than S^(2,2) at n = 4
    Corollary2,   ///< hook containing (2,1,1)
    Corollary3,   ///< two or more non-trivial irreducible summands
    LengthBound,  ///< more than n generators, or none at all
};

std::string to_string(RejectionRule rule);

struct Rejection {
    RejectionRule rule;
    std::vector<Summand> witness;
    std::string message;
};

struct Classification {
    std::variant<RepresentationType, Rejection> result;
    /// Set for n <= 3, where the standard and alternating labels can coincide
    /// and S^(n-1,1) may be the alternating representation.
    bool degenerate_small_n = false;

    bool accepted() const { return std::holds_alternative<RepresentationType>(result); }
    const RepresentationType& type() const { return std::get<RepresentationType>(result); }
    const Rejection& rejection() const { return std::get<Rejection>(result); }
};

/// The irreducibles that can generate a complete intersection: (n), (1^n),
/// (n-1,1), and (2,2) for n = 4. Coinciding labels appear once.
std::vector<Partition> admissible_irreducibles(int n);

/// Decides whether ms can be I/mI for a stable complete intersection.
/// Rejections name the first violated rule, checking the summands in order
/// against Corollaries 1 and 2, then the count of non-trivial summands, then
/// the generator count. Summands whose partition is not a partition of ms.n,
/// or whose degree is below 1, throw std::invalid_argument.
Classification classify(const IrredMultiset& ms);

}  // namespace symci

#endif  // SYMCI_CLASSIFY_HPP
