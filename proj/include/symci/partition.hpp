#ifndef SYMCI_PARTITION_HPP
#define SYMCI_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace symci {

/// A weakly decreasing sequence of positive integers.
///
/// Partitions index both the irreducible representations and the conjugacy
/// classes (cycle types) of the symmetric group. The constructor validates its
/// input and never sorts: an out-of-order argument is a caller bug.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// The one-row partition (n).
    static Partition row(int n);
    /// The one-column partition (1^n).
    static Partition column(int n);
    /// The hook (a, 1^b).
    static Partition hook(int a, int b);

    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    /// i-th part, zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Multiplicity of the part value k.
    int multiplicity(int k) const noexcept;

    /// "(3,1)"; the empty partition prints as "()".
    std::string to_string() const;
    /// "3,1" -- the bracket-free form used inside chi[...] labels.
    std::string label() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, starting from (n).
std::vector<Partition> partitions_of(int n);

/// Index of lambda within partitions_of(lambda.size()).
std::size_t partition_index(const Partition& lambda);

/// True iff lambda has at least as many parts as mu and lambda_i >= mu_i.
bool contains(const Partition& lambda, const Partition& mu);

/// Dominance order on partitions of the same size.
bool dominates(const Partition& lambda, const Partition& mu);

bool is_hook(const Partition& lambda);

/// n(mu) = sum (i-1) mu_i.
int n_stat(const Partition& mu);

Partition conjugate(const Partition& lambda);

/// z_lambda = prod k^{m_k} m_k!.
mpz_class centralizer_size(const Partition& lambda);

/// Size of the conjugacy class with cycle type lambda: n! / z_lambda.
mpz_class class_size(const Partition& lambda);

mpz_class factorial(int n);

/// Parses "(3,1)", "3,1", "[3,1]" or the exponent shorthand "(2^2,1^3)".
Partition parse_partition(std::string_view text);

}  // namespace symci

#endif  // SYMCI_PARTITION_HPP
