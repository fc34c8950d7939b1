#include "symci/upoly.hpp"

#include <stdexcept>

namespace symci {

UnivariatePoly::UnivariatePoly(const std::map<int, mpz_class>& terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

UnivariatePoly UnivariatePoly::monomial(int exponent, const mpz_class& coeff) {
    UnivariatePoly p;
    p.add_term(exponent, coeff);
    return p;
}

mpz_class UnivariatePoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class UnivariatePoly::evaluate(const mpz_class& t) const {
    // Horner over the sparse exponents, highest first.
    mpz_class acc = 0;
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = it->first; k < prev; ++k) acc *= t;
        acc += it->second;
        prev = it->first;
    }
    for (int k = 0; k < prev; ++k) acc *= t;
    return acc;
}

void UnivariatePoly::add_term(int exponent, const mpz_class& coeff) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in UnivariatePoly");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string UnivariatePoly::to_string(const char* var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const bool unit = mag == 1;
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (!unit) out += mag.get_str();
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace symci
