#include "symci/class_function.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace symci {

ClassFunction::ClassFunction(int n) : n_(n), values_(partitions_of(n).size()) {
    if (n < 1) throw std::invalid_argument("ClassFunction: n must be at least 1");
}

ClassFunction::ClassFunction(int n, std::vector<mpz_class> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("ClassFunction: n must be at least 1");
    if (values_.size() != partitions_of(n).size())
        throw std::invalid_argument("ClassFunction: need one value per cycle type");
}

mpz_class ClassFunction::operator()(const Partition& cycle_type) const {
    if (cycle_type.size() != n_) throw std::invalid_argument("ClassFunction: cycle type of wrong size");
    return values_[partition_index(cycle_type)];
}

void ClassFunction::set(const Partition& cycle_type, const mpz_class& value) {
    if (cycle_type.size() != n_) throw std::invalid_argument("ClassFunction: cycle type of wrong size");
    values_[partition_index(cycle_type)] = value;
}

mpz_class ClassFunction::degree() const { return values_.empty() ? mpz_class(0) : values_.back(); }

bool ClassFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const mpz_class& v) { return v == 0; });
}

namespace {

void require_same(const ClassFunction& a, const ClassFunction& b, const char* op) {
    if (a.n() != b.n())
        throw std::invalid_argument(std::string(op) + ": class functions on S_" + std::to_string(a.n()) +
                                    " and S_" + std::to_string(b.n()));
}

}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    require_same(*this, other, "add");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
    require_same(*this, other, "subtract");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const mpz_class& scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
}

ClassFunction multiply(const ClassFunction& a, const ClassFunction& b) {
    require_same(a, b, "multiply");
    std::vector<mpz_class> out(a.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values()[i] * b.values()[i];
    return ClassFunction(a.n(), std::move(out));
}

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) {
    require_same(a, b, "inner_product");
    const auto classes = partitions_of(a.n());
    mpz_class total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) total += class_size(classes[i]) * a.values()[i] * b.values()[i];
    mpq_class q(total, factorial(a.n()));
    q.canonicalize();
    return q;
}

namespace {

// Murnaghan-Nakayama on beta-sets. A partition with l parts is encoded by
// the strictly decreasing beta numbers lambda_i + (l - i); removing a rim hook
// of length k moves one bead from b to b - k, with sign (-1)^(beads strictly
// between).
std::vector<int> beta_set(const Partition& lambda) {
    const int l = static_cast<int>(lambda.length());
    std::vector<int> beta(lambda.length());
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>{});
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

class CharacterCache {
public:
    mpz_class value(const Partition& lambda, const std::vector<int>& cycles) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find({lambda, cycles}); it != memo_.end()) return it->second;
        }
        mpz_class result = compute(lambda, cycles);
        std::lock_guard lock(mutex_);
        memo_.emplace(std::pair{lambda, cycles}, result);
        return result;
    }

private:
    mpz_class compute(const Partition& lambda, const std::vector<int>& cycles) {
        if (cycles.empty()) return lambda.empty() ? 1 : 0;
        const int k = cycles.front();
        const std::vector<int> rest(cycles.begin() + 1, cycles.end());
        const auto beta = beta_set(lambda);
        mpz_class total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - k;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            auto moved = beta;
            moved[i] = target;
            const mpz_class sub = value(from_beta_set(std::move(moved)), rest);
            total += (between % 2 ? -sub : sub);
        }
        return total;
    }

    std::mutex mutex_;
    std::map<std::pair<Partition, std::vector<int>>, mpz_class> memo_;
};

CharacterCache& cache() {
    static CharacterCache instance;
    return instance;
}

}  // namespace

mpz_class character_value(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("character_value: " + lambda.to_string() + " and " + cycle_type.to_string() +
                                    " partition different integers");
    return cache().value(lambda, cycle_type.parts());
}

ClassFunction irreducible_character(const Partition& lambda) {
    if (lambda.size() < 1) throw std::invalid_argument("irreducible_character: need n >= 1");
    const auto classes = partitions_of(lambda.size());
    std::vector<mpz_class> values;
    values.reserve(classes.size());
    for (const auto& mu : classes) values.push_back(character_value(lambda, mu));
    return ClassFunction(lambda.size(), std::move(values));
}

std::vector<ClassFunction> character_table(int n) {
    std::vector<ClassFunction> rows;
    for (const auto& lambda : partitions_of(n)) rows.push_back(irreducible_character(lambda));
    return rows;
}

std::map<Partition, mpz_class> decompose(const ClassFunction& a, bool require_character) {
    std::map<Partition, mpz_class> out;
    for (const auto& lambda : partitions_of(a.n())) {
        const mpq_class m = inner_product(a, irreducible_character(lambda));
        if (m.get_den() != 1)
            throw std::domain_error("decompose: <a, chi" + lambda.to_string() + "> = " + m.get_str() +
                                    " is not an integer");
        if (require_character && m < 0)
            throw std::domain_error("decompose: negative multiplicity of chi" + lambda.to_string());
        if (m != 0) out.emplace(lambda, m.get_num());
    }
    return out;
}

ClassFunction compose(int n, const std::map<Partition, mpz_class>& multiplicities) {
    ClassFunction out(n);
    for (const auto& [lambda, m] : multiplicities) out += m * irreducible_character(lambda);
    return out;
}

std::string format_character(const ClassFunction& a) {
    const auto parts = decompose(a);
    if (parts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& lambda : partitions_of(a.n())) {
        auto it = parts.find(lambda);
        if (it == parts.end()) continue;
        const mpz_class& m = it->second;
        if (m < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        const mpz_class mag = abs(m);
        if (mag != 1) out += mag.get_str();
        out += "χ[" + lambda.label() + "]";
    }
    return out;
}

}  // namespace symci
