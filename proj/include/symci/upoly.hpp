#ifndef SYMCI_UPOLY_HPP
#define SYMCI_UPOLY_HPP

#include <map>
#include <string>

#include <gmpxx.h>

namespace symci {

/// Sparse polynomial in one variable t with integer coefficients.
/// Zero coefficients are never stored.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(const std::map<int, mpz_class>& terms);

    static UnivariatePoly monomial(int exponent, const mpz_class& coeff = 1);

    const std::map<int, mpz_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Highest exponent; -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    mpz_class coefficient(int exponent) const;
    mpz_class evaluate(const mpz_class& t) const;

    void add_term(int exponent, const mpz_class& coeff);

    UnivariatePoly& operator+=(const UnivariatePoly& other);
    UnivariatePoly& operator-=(const UnivariatePoly& other);
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);

    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    /// "t^2 + t^4"; the zero polynomial prints as "0".
    std::string to_string(const char* var = "t") const;

private:
    std::map<int, mpz_class> terms_;
};

}  // namespace symci

#endif  // SYMCI_UPOLY_HPP
