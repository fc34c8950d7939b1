#ifndef SYMCI_CLASS_FUNCTION_HPP
#define SYMCI_CLASS_FUNCTION_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symci/partition.hpp"

namespace symci {

/// An integer-valued class function on S_n, stored as one value per cycle
/// type in the order of partitions_of(n).
class ClassFunction {
public:
    ClassFunction() = default;
    /// The zero class function on S_n.
    explicit ClassFunction(int n);
    ClassFunction(int n, std::vector<mpz_class> values);

    int n() const noexcept { return n_; }
    const std::vector<mpz_class>& values() const noexcept { return values_; }

    /// Value at a cycle type.
    mpz_class operator()(const Partition& cycle_type) const;
    void set(const Partition& cycle_type, const mpz_class& value);

    /// Value at the identity, i.e. the dimension for a true character.
    mpz_class degree() const;
    bool is_zero() const;

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    ClassFunction& operator*=(const mpz_class& scalar);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator-(ClassFunction a) { return a *= -1; }
    friend ClassFunction operator*(const mpz_class& s, ClassFunction a) { return a *= s; }

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int n_ = 0;
    std::vector<mpz_class> values_;
};

/// Pointwise product; throws std::invalid_argument on mismatched n.
ClassFunction multiply(const ClassFunction& a, const ClassFunction& b);
inline ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) { return multiply(a, b); }

/// (1/n!) sum over classes of |class| a(mu) b(mu). Both functions are
/// integer-valued characters of real representations, so no conjugation.
mpq_class inner_product(const ClassFunction& a, const ClassFunction& b);

/// chi^lambda via the Murnaghan-Nakayama rule (memoized, thread safe).
ClassFunction irreducible_character(const Partition& lambda);

/// chi^lambda evaluated at one cycle type.
mpz_class character_value(const Partition& lambda, const Partition& cycle_type);

/// Rows chi^lambda in the order of partitions_of(n).
std::vector<ClassFunction> character_table(int n);

/// Multiplicities <a, chi^lambda>, omitting zeros.
///
/// Throws std::domain_error when some inner product is not an integer (a is
/// not a virtual character) or, with require_character set, when some
/// multiplicity is negative.
std::map<Partition, mpz_class> decompose(const ClassFunction& a, bool require_character = false);

/// sum m_lambda chi^lambda.
ClassFunction compose(int n, const std::map<Partition, mpz_class>& multiplicities);

/// "2χ[3,1]+χ[2,2]" with multiplicities in partitions_of order.
std::string format_character(const ClassFunction& a);

}  // namespace symci

#endif  // SYMCI_CLASS_FUNCTION_HPP
