#include "symci/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace symci {

mpq_class determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

mpq_class exterior_power_trace(const RationalMatrix& m, int u) {
    const int n = static_cast<int>(m.size());
    if (u < 0 || u > n) return 0;
    if (u == 0) return 1;
    mpq_class total = 0;
    std::vector<int> idx(static_cast<std::size_t>(u));
    for (int i = 0; i < u; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        RationalMatrix minor(static_cast<std::size_t>(u), std::vector<mpq_class>(static_cast<std::size_t>(u)));
        for (int a = 0; a < u; ++a)
            for (int b = 0; b < u; ++b)
                minor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    m.at(static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]))
                        .at(static_cast<std::size_t>(idx[static_cast<std::size_t>(b)]));
        total += determinant(std::move(minor));
        int k = u - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - u + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < u; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return total;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    RationalMatrix out(a.size(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

SparseVector to_integer_vector(const std::vector<mpq_class>& dense) {
    mpz_class lcm = 1;
    for (const auto& x : dense)
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] == 0) continue;
        out.emplace_back(i, mpz_class(dense[i].get_num() * (lcm / dense[i].get_den())));
    }
    return out;
}

namespace {

mpz_class lookup(const SparseVector& v, std::size_t column) {
    auto it = std::lower_bound(v.begin(), v.end(), column,
                               [](const auto& entry, std::size_t c) { return entry.first < c; });
    return it != v.end() && it->first == column ? it->second : mpz_class(0);
}

/// a*x - b*y
SparseVector combine(const mpz_class& a, const SparseVector& x, const mpz_class& b, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            mpz_class val = a * x[i].second - b * y[j].second;
            if (val != 0) out.emplace_back(x[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    return out;
}

void make_primitive(SparseVector& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool EchelonBasis::insert(SparseVector v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector merged;
    for (auto& [c, x] : v) {
        if (c >= columns_) throw std::out_of_range("EchelonBasis::insert: column out of range");
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += x;
        else
            merged.emplace_back(c, std::move(x));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    v = std::move(merged);

    std::vector<std::size_t> hits;
    for (const auto& [c, x] : v)
        if (pivot_row_[c] >= 0) hits.push_back(c);
    for (std::size_t p : hits) {
        mpz_class val = lookup(v, p);
        if (val == 0) continue;
        const auto& r = rows_[static_cast<std::size_t>(pivot_row_[p])];
        v = combine(r.front().second, v, val, r);
        make_primitive(v);
    }
    if (v.empty()) return false;
    make_primitive(v);

    const std::size_t q = v.front().first;
    for (auto& r : rows_) {
        mpz_class val = lookup(r, q);
        if (val == 0) continue;
        r = combine(v.front().second, r, val, v);
        make_primitive(r);
    }
    pivot_row_[q] = static_cast<long>(rows_.size());
    pivots_.push_back(q);
    rows_.push_back(std::move(v));
    return true;
}

std::optional<std::size_t> EchelonBasis::row_with_pivot(std::size_t column) const {
    const long k = pivot_row_.at(column);
    if (k < 0) return std::nullopt;
    return static_cast<std::size_t>(k);
}

mpz_class EchelonBasis::entry(std::size_t k, std::size_t column) const { return lookup(rows_.at(k), column); }

std::vector<std::size_t> EchelonBasis::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

std::vector<mpq_class> EchelonBasis::reduce(const std::vector<mpq_class>& v) const {
    if (v.size() != columns_) throw std::invalid_argument("EchelonBasis::reduce: length mismatch");
    std::vector<mpq_class> out = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (out[p] == 0) continue;
        const mpq_class f = out[p] / mpq_class(leading(k));
        for (const auto& [c, x] : rows_[k]) out[c] -= f * mpq_class(x);
    }
    return out;
}

bool EchelonBasis::contains(const std::vector<mpq_class>& v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const mpq_class& x) { return x == 0; });
}

std::optional<std::vector<mpq_class>> EchelonBasis::coordinates(const std::vector<mpq_class>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<mpq_class> coords(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        coords[k] = v[pivots_[k]] / mpq_class(leading(k));
        coords[k].canonicalize();
    }
    return coords;
}

}  // namespace symci
