#include "symci/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symci {

bool grevlex_greater(const Exponent& a, const Exponent& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

std::vector<Exponent> monomials_of_degree(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("monomials_of_degree: need n >= 1 and d >= 0");
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == n - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(var)] = k;
            rec(var + 1, left - k);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

MultiPoly::MultiPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("MultiPoly: need at least one variable");
}

MultiPoly MultiPoly::constant(int n, const mpq_class& c) {
    MultiPoly p(n);
    p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("MultiPoly::variable: index out of range");
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const mpq_class& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

mpq_class MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("MultiPoly: exponent of wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.n_ != n_) throw std::invalid_argument("MultiPoly: variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (other.n_ != n_) throw std::invalid_argument("MultiPoly: variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("MultiPoly: variable counts differ");
    MultiPoly out(a.n_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly result = constant(n_, 1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_) throw std::invalid_argument("MultiPoly::permuted: wrong length");
    MultiPoly out(n_);
    Exponent f(static_cast<std::size_t>(n_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(sigma[i])] = e[i];
        out.add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::inflated(int k) const {
    if (k < 1) throw std::invalid_argument("MultiPoly::inflated: k must be positive");
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (int& x : f) x *= k;
        out.add_term(f, c);
    }
    return out;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divmod_difference(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
        throw std::invalid_argument("divmod_difference: bad variable indices");
    const auto xi = static_cast<std::size_t>(i - 1);
    const auto xj = static_cast<std::size_t>(j - 1);
    // Synthetic division by (x_i - x_j) in the variable x_i: repeatedly strip
    // the term of highest x_i-degree c*x_i^a*m, which is
    // c*x_i^{a-1}*m*(x_i - x_j) + c*x_i^{a-1}*x_j*m.
    MultiPoly quotient(n_);
    MultiPoly rest = *this;
    while (true) {
        auto top = std::max_element(rest.terms_.begin(), rest.terms_.end(),
                                    [xi](const auto& a, const auto& b) { return a.first[xi] < b.first[xi]; });
        if (top == rest.terms_.end() || top->first[xi] == 0) break;
        Exponent lowered = top->first;
        lowered[xi] -= 1;
        const mpq_class c = top->second;
        quotient.add_term(lowered, c);
        Exponent shifted = lowered;
        shifted[xj] += 1;
        rest.add_term(top->first, -c);
        rest.add_term(shifted, c);
    }
    return {quotient, rest};
}

bool MultiPoly::divisible_by_difference(int i, int j) const { return divmod_difference(i, j).second.is_zero(); }

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, mpq_class>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        const mpq_class mag = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

MultiPoly elementary_symmetric(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("elementary_symmetric: need 1 <= k <= n");
    MultiPoly p(n);
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Exponent e(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < pick.size(); ++i) e[i] = pick[i] ? 1 : 0;
        p.add_term(e, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return p;
}

MultiPoly vandermonde(int n) {
    if (n < 2) throw std::invalid_argument("vandermonde: need n >= 2");
    MultiPoly v = MultiPoly::constant(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v = v * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
    return v;
}

MultiPoly power_sum(int k, int n) {
    if (k < 0) throw std::invalid_argument("power_sum: negative degree");
    MultiPoly p(n);
    for (int i = 1; i <= n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = k;
        p.add_term(e, 1);
    }
    return p;
}

}  // namespace symci
