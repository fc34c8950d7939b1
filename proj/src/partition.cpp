#include "symci/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace symci {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    return n == 0 ? Partition{} : Partition{std::vector<int>{n}};
}

Partition Partition::column(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    return Partition{std::vector<int>(static_cast<std::size_t>(n), 1)};
}

Partition Partition::hook(int a, int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("hook (a,1^b) needs a >= 1, b >= 0");
    std::vector<int> p{a};
    p.insert(p.end(), static_cast<std::size_t>(b), 1);
    return Partition{std::move(p)};
}

int Partition::multiplicity(int k) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::label() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::to_string() const { return "(" + label() + ")"; }

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

std::size_t partition_index(const Partition& lambda) {
    // Reverse-lex order is descending in the natural vector ordering.
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(lambda.size());
    if (inserted) it->second = partitions_of(lambda.size());
    const auto& all = it->second;
    auto pos = std::lower_bound(all.begin(), all.end(), lambda, std::greater<>{});
    if (pos == all.end() || *pos != lambda)
        throw std::logic_error("partition_index: lookup failed for " + lambda.to_string());
    return static_cast<std::size_t>(pos - all.begin());
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (lambda.length() < mu.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (lambda[i] < mu[i]) return false;
    return true;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return false;
    int a = 0;
    int b = 0;
    for (std::size_t i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return true;
}

bool is_hook(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("is_hook: empty partition");
    return lambda.length() < 2 || lambda[1] == 1;
}

int n_stat(const Partition& mu) {
    int total = 0;
    for (std::size_t i = 0; i < mu.length(); ++i) total += static_cast<int>(i) * mu[i];
    return total;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    for (int j = 0; j < lambda[0]; ++j) {
        int len = 0;
        while (static_cast<std::size_t>(len) < lambda.length() && lambda[len] > j) ++len;
        cols.push_back(len);
    }
    return Partition{std::move(cols)};
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class centralizer_size(const Partition& lambda) {
    mpz_class z = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const int m = static_cast<int>(j - i);
        mpz_class km;
        mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(p[i]), static_cast<unsigned long>(m));
        z *= km * factorial(m);
        i = j;
    }
    return z;
}

mpz_class class_size(const Partition& lambda) {
    if (lambda.size() < 1) throw std::invalid_argument("class_size: need n >= 1");
    return factorial(lambda.size()) / centralizer_size(lambda);
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '(' ||
                                   text[i] == ')' || text[i] == '[' || text[i] == ']'))
            ++i;
    };
    auto number = [&]() -> int {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed partition: " + std::string(text));
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw std::invalid_argument("partition part too large");
            ++i;
        }
        return v;
    };
    skip();
    while (i < text.size()) {
        const int part = number();
        int reps = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip();
            reps = number();
            skip();
        }
        parts.insert(parts.end(), static_cast<std::size_t>(reps), part);
        if (i < text.size()) {
            if (text[i] != ',') throw std::invalid_argument("malformed partition: " + std::string(text));
            ++i;
            skip();
        }
    }
    return Partition{std::move(parts)};
}

}  // namespace symci
