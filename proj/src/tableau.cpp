#include "symci/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace symci {

namespace {

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return lens;
}

std::vector<int> concatenated(const std::vector<std::vector<int>>& rows) {
    std::vector<int> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        for (int v : r)
            if (v < 1) throw std::invalid_argument("tableau entries must be positive");
    try {
        shape_ = Partition(row_lengths(rows_));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("tableau rows must be nonempty and weakly decreasing in length");
    }
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = concatenated(a.rows_) <=> concatenated(b.rows_); c != 0) return c;
    return a.shape_ <=> b.shape_;
}

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
            if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    const auto word = concatenated(rows_);
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) return false;
    return is_semistandard();
}

std::vector<int> Tableau::content() const {
    std::vector<int> out;
    for (const auto& r : rows_)
        for (int v : r) {
            if (static_cast<std::size_t>(v) > out.size()) out.resize(static_cast<std::size_t>(v), 0);
            ++out[static_cast<std::size_t>(v - 1)];
        }
    return out;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
    return word;
}

std::pair<std::size_t, std::size_t> Tableau::position(int value) const {
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == value) {
                if (found) throw std::invalid_argument("Tableau::position: value occurs more than once");
                found = std::pair{r, c};
            }
    if (!found) throw std::invalid_argument("Tableau::position: value " + std::to_string(value) + " not present");
    return *found;
}

bool Tableau::same_column(int a, int b) const { return position(a).second == position(b).second; }

std::string Tableau::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ",";
        out += "[";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ",";
            out += std::to_string(rows_[r][c]);
        }
        out += "]";
    }
    return out + "]";
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("standard_tableaux: empty shape");
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(lambda.length());
    const int n = lambda.size();
    std::function<void(int)> place = [&](int next) {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto len = rows[r].size();
            if (static_cast<int>(len) >= lambda[r]) continue;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            rows[r].push_back(next);
            place(next + 1);
            rows[r].pop_back();
        }
    };
    place(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("semistandard_tableaux: |lambda| != |mu|");
    std::vector<Tableau> out;
    if (lambda.empty()) {
        out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> rows(lambda.length());
    // Letter i occupies a horizontal strip added to the shape filled so far:
    // a new cell in row r must sit under a cell filled by an earlier letter.
    std::vector<int> before(rows.size(), 0);
    std::function<void(std::size_t)> add_letter;
    std::function<void(std::size_t, std::size_t, int)> fill_strip = [&](std::size_t letter, std::size_t r, int left) {
        if (r == rows.size()) {
            if (left == 0) add_letter(letter + 1);
            return;
        }
        const int cur = static_cast<int>(rows[r].size());
        const int limit = r == 0 ? lambda[0] : std::min(lambda[r], before[r - 1]);
        for (int k = std::min(left, limit - cur); k >= 0; --k) {
            rows[r].insert(rows[r].end(), static_cast<std::size_t>(k), static_cast<int>(letter) + 1);
            fill_strip(letter, r + 1, left - k);
            rows[r].resize(static_cast<std::size_t>(cur));
        }
    };
    add_letter = [&](std::size_t letter) {
        if (letter == mu.length()) {
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (static_cast<int>(rows[r].size()) != lambda[r]) return;
            out.emplace_back(rows);
            return;
        }
        const auto saved = before;
        for (std::size_t r = 0; r < rows.size(); ++r) before[r] = static_cast<int>(rows[r].size());
        fill_strip(letter, 0, mu[letter]);
        before = saved;
    };
    add_letter(0);
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class count_standard_tableaux(const Partition& lambda) {
    if (lambda.empty()) return 1;
    const Partition conj = conjugate(lambda);
    mpz_class hooks = 1;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            hooks *= (lambda[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

int charge(const std::vector<int>& word) {
    std::vector<int> counts;
    for (int v : word) {
        if (v < 1) throw std::invalid_argument("charge: letters must be positive");
        if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
        ++counts[static_cast<std::size_t>(v - 1)];
    }
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > counts[i - 1]) throw std::invalid_argument("charge: word content is not a partition");

    const std::size_t len = word.size();
    std::vector<bool> used(len, false);
    std::size_t remaining = len;
    int total = 0;
    while (remaining > 0) {
        std::size_t pos = len;  // scanning starts just past the right end
        int index = 0;
        for (int letter = 1;; ++letter) {
            bool found = false;
            bool wrapped = false;
            std::size_t p = pos;
            for (std::size_t step = 0; step < len; ++step) {
                if (p == 0) {
                    p = len;
                    wrapped = true;
                }
                --p;
                if (!used[p] && word[p] == letter) {
                    found = true;
                    break;
                }
            }
            if (!found) break;
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[p] = true;
            --remaining;
            pos = p;
        }
    }
    return total;
}

int charge(const Tableau& t) {
    if (!t.is_semistandard()) throw std::invalid_argument("charge: tableau is not semistandard");
    return charge(t.reading_word());
}

UnivariatePoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    UnivariatePoly k;
    for (const auto& t : semistandard_tableaux(lambda, mu)) k.add_term(charge(t), 1);
    return k;
}

UnivariatePoly kostka_foulkes_tilde(const Partition& lambda, const Partition& mu) {
    const int top = n_stat(mu);
    UnivariatePoly out;
    const UnivariatePoly k = kostka_foulkes(lambda, mu);
    for (const auto& [e, c] : k.terms()) {
        if (e > top) throw std::logic_error("kostka_foulkes_tilde: charge exceeds n(mu)");
        out.add_term(top - e, c);
    }
    return out;
}

void TableauCombination::add(const Tableau& t, const mpq_class& coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && terms_.begin()->first.shape() != t.shape())
        throw std::invalid_argument("TableauCombination: mixed shapes");
    auto [it, inserted] = terms_.try_emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class TableauCombination::coefficient(const Tableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

TableauCombination& TableauCombination::operator+=(const TableauCombination& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

TableauCombination operator*(const mpq_class& s, TableauCombination c) {
    if (s == 0) return {};
    for (auto& [t, v] : c.terms_) v *= s;
    return c;
}

std::string TableauCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        const mpq_class mag = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += t.to_string();
    }
    return out;
}

namespace {

using Filling = std::vector<std::vector<int>>;

int inversion_parity(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return inv & 1;
}

/// Sorts each column ascending; returns the sign of the sorting permutation.
int sort_columns(Filling& f) {
    int parity = 0;
    const std::size_t width = f.empty() ? 0 : f.front().size();
    for (std::size_t c = 0; c < width; ++c) {
        std::vector<int> col;
        for (std::size_t r = 0; r < f.size() && c < f[r].size(); ++r) col.push_back(f[r][c]);
        parity ^= inversion_parity(col);
        std::sort(col.begin(), col.end());
        for (std::size_t r = 0; r < col.size(); ++r) f[r][c] = col[r];
    }
    return parity ? -1 : 1;
}

/// Expresses the polytabloid of a bijective filling in the standard basis by
/// column sorting and Garnir relations.
class Straightener {
public:
    TableauCombination operator()(Filling f) {
        const int sign = sort_columns(f);
        return mpq_class(sign) * column_sorted(f);
    }

private:
    TableauCombination column_sorted(const Filling& f) {
        if (auto it = memo_.find(f); it != memo_.end()) return it->second;
        TableauCombination result;
        const auto descent = first_row_descent(f);
        if (!descent) {
            result.add(Tableau(f), 1);
        } else {
            const auto [row, col] = *descent;
            // A: column col from `row` down; B: column col+1 from the top to `row`.
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (std::size_t r = row; r < f.size() && col < f[r].size(); ++r) cells.emplace_back(r, col);
            const std::size_t a_size = cells.size();
            for (std::size_t r = 0; r <= row; ++r) cells.emplace_back(r, col + 1);

            std::vector<int> original;
            for (auto [r, c] : cells) original.push_back(f[r][c]);
            std::vector<int> pool = original;
            std::sort(pool.begin(), pool.end());
            const int base_parity = inversion_parity(original);

            // Each coset of S_A x S_B in S_{A u B} is a choice of which values
            // fill the A cells; both blocks are kept sorted.
            std::vector<bool> pick(pool.size(), false);
            std::fill(pick.begin(), pick.begin() + static_cast<long>(a_size), true);
            std::vector<int> sorted_a(original.begin(), original.begin() + static_cast<long>(a_size));
            std::sort(sorted_a.begin(), sorted_a.end());
            do {
                std::vector<int> seq;
                for (std::size_t k = 0; k < pool.size(); ++k)
                    if (pick[k]) seq.push_back(pool[k]);
                if (seq == sorted_a) continue;  // the identity coset is f itself
                for (std::size_t k = 0; k < pool.size(); ++k)
                    if (!pick[k]) seq.push_back(pool[k]);
                Filling g = f;
                for (std::size_t k = 0; k < cells.size(); ++k) g[cells[k].first][cells[k].second] = seq[k];
                const int perm_sign = ((base_parity + inversion_parity(seq)) & 1) ? -1 : 1;
                const int col_sign = sort_columns(g);
                result += mpq_class(-perm_sign * col_sign) * column_sorted(g);
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        memo_.emplace(f, result);
        return result;
    }

    static std::optional<std::pair<std::size_t, std::size_t>> first_row_descent(const Filling& f) {
        const std::size_t width = f.empty() ? 0 : f.front().size();
        for (std::size_t c = 0; c + 1 < width; ++c)
            for (std::size_t r = 0; r < f.size() && c + 1 < f[r].size(); ++r)
                if (f[r][c] > f[r][c + 1]) return std::pair{r, c};
        return std::nullopt;
    }

    std::map<Filling, TableauCombination> memo_;
};

}  // namespace

TableauCombination apply_transposition(int i, int j, const Tableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("apply_transposition: tableau is not standard");
    if (i > j) std::swap(i, j);
    const int n = t.shape().size();
    if (i < 1 || j > n || i == j) throw std::invalid_argument("apply_transposition: entries out of range");
    if (t.same_column(i, j)) {
        TableauCombination out;
        out.add(t, -1);
        return out;
    }
    if (j != i + 1)
        throw std::invalid_argument("apply_transposition: only adjacent or column-mate transpositions are supported");
    Filling f = t.rows();
    for (auto& row : f)
        for (int& v : row) {
            if (v == i)
                v = j;
            else if (v == j)
                v = i;
        }
    return Straightener{}(std::move(f));
}

RationalMatrix transposition_matrix(const Partition& lambda, int i) {
    const auto basis = standard_tableaux(lambda);
    RationalMatrix m(basis.size(), std::vector<mpq_class>(basis.size()));
    for (std::size_t l = 0; l < basis.size(); ++l) {
        const auto image = apply_transposition(i, i + 1, basis[l]);
        for (std::size_t k = 0; k < basis.size(); ++k) m[k][l] = image.coefficient(basis[k]);
    }
    return m;
}

}  // namespace symci
