#include "symci/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symci {

Permutation cycle_type_representative(const Partition& mu) {
    Permutation sigma(static_cast<std::size_t>(mu.size()));
    int start = 0;
    for (int len : mu.parts()) {
        for (int k = 0; k < len; ++k) sigma[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
        start += len;
    }
    return sigma;
}

Partition cycle_type(const Permutation& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>{});
    return Partition(std::move(lens));
}

Permutation conjugated(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("conjugated: permutations of different degree");
    Permutation out(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        out[static_cast<std::size_t>(tau[i])] = tau[static_cast<std::size_t>(sigma[i])];
    return out;
}

Permutation adjacent_transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("adjacent_transposition: index out of range");
    Permutation s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    return s;
}

namespace {

Exponent permute_exponent(const Exponent& e, const Permutation& sigma) {
    Exponent f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(sigma[i])] = e[i];
    return f;
}

/// Homogeneous polynomial of degree d as a dense vector over `column`.
std::vector<mpq_class> to_dense(const MultiPoly& p, const std::map<Exponent, std::size_t>& column) {
    std::vector<mpq_class> v(column.size());
    for (const auto& [e, c] : p.terms()) v[column.at(e)] = c;
    return v;
}

std::map<Exponent, std::size_t> index_columns(const std::vector<Exponent>& monomials) {
    std::map<Exponent, std::size_t> column;
    for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);
    return column;
}

/// Echelon bases of the span of gs, one per generator degree.
struct SpanBlock {
    int degree;
    std::vector<Exponent> monomials;
    std::map<Exponent, std::size_t> column;
    EchelonBasis basis;
};

std::vector<SpanBlock> span_blocks(const GeneratorSet& gs) {
    std::vector<int> degrees = gs.degrees();
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::vector<SpanBlock> blocks;
    for (int d : degrees) {
        auto monomials = monomials_of_degree(gs.n(), d);
        auto column = index_columns(monomials);
        SpanBlock block{d, std::move(monomials), std::move(column), EchelonBasis(0)};
        block.basis = EchelonBasis(block.monomials.size());
        for (std::size_t k = 0; k < gs.size(); ++k)
            if (gs.degrees()[k] == d) block.basis.insert(to_dense(gs.gens()[k], block.column));
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// sigma applied to row k of a block, evaluated at every pivot of the block.
std::vector<mpq_class> image_coordinates(const SpanBlock& block, std::size_t k, const Permutation& sigma) {
    std::vector<mpq_class> image(block.monomials.size());
    for (const auto& [c, x] : block.basis.row(k))
        image[block.column.at(permute_exponent(block.monomials[c], sigma))] = mpq_class(x);
    auto coords = block.basis.coordinates(image);
    if (!coords) throw std::invalid_argument("span is not stable under the permutation action");
    return *coords;
}

mpz_class integral(const mpq_class& q, const char* what) {
    if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integer trace " + q.get_str());
    return q.get_num();
}

int common_variable_count(const std::vector<MultiPoly>& gens) {
    if (gens.empty()) throw std::invalid_argument("GeneratorSet: empty generator list needs n");
    return gens.front().n();
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<MultiPoly> gens) : GeneratorSet(common_variable_count(gens), gens) {}

GeneratorSet::GeneratorSet(int n, std::vector<MultiPoly> gens) : n_(n), gens_(std::move(gens)) {
    if (n < 1) throw std::invalid_argument("GeneratorSet: need at least one variable");
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        const auto& g = gens_[k];
        if (g.n() != n) throw std::invalid_argument("GeneratorSet: generator in the wrong number of variables");
        if (g.is_zero()) throw std::invalid_argument("GeneratorSet: generator " + std::to_string(k + 1) + " is zero");
        if (!g.is_homogeneous())
            throw std::invalid_argument("GeneratorSet: generator " + std::to_string(k + 1) + " is not homogeneous");
        degrees_.push_back(g.degree());
    }
    stable_ = true;
    for (const auto& block : span_blocks(*this)) {
        for (int i = 1; i < n && stable_; ++i) {
            const auto s = adjacent_transposition(n, i);
            for (std::size_t k = 0; k < gens_.size() && stable_; ++k)
                if (degrees_[k] == block.degree && !block.basis.contains(to_dense(gens_[k].permuted(s), block.column)))
                    stable_ = false;
        }
    }
}

MultiPoly specht_polynomial(const Tableau& t, int n) {
    MultiPoly p = MultiPoly::constant(n, 1);
    const auto& rows = t.rows();
    for (std::size_t c = 0; c < rows.front().size(); ++c)
        for (std::size_t a = 0; a < rows.size() && c < rows[a].size(); ++a)
            for (std::size_t b = a + 1; b < rows.size() && c < rows[b].size(); ++b)
                p = p * (MultiPoly::variable(n, rows[a][c]) - MultiPoly::variable(n, rows[b][c]));
    return p;
}

GeneratorSet specht_generators(const Partition& lambda, int k) {
    std::vector<MultiPoly> gens;
    for (const auto& t : standard_tableaux(lambda)) gens.push_back(specht_polynomial(t, lambda.size()).inflated(k));
    return GeneratorSet(lambda.size(), std::move(gens));
}

GeneratorSet specht_square_generators() {
    const auto x = [](int i) { return MultiPoly::variable(4, i); };
    return GeneratorSet({(x(1) - x(2)) * (x(3) - x(4)), (x(1) - x(3)) * (x(2) - x(4))});
}

StandardRepLift standard_rep_lift(int d, int n) {
    if (d < 1 || n < 2) throw std::invalid_argument("standard_rep_lift: need d >= 1 and n >= 2");
    std::vector<MultiPoly> full;
    std::vector<MultiPoly> diffs;
    for (int i = 1; i <= n; ++i) full.push_back(MultiPoly::variable(n, i).pow(d));
    for (int i = 1; i < n; ++i) diffs.push_back(full[static_cast<std::size_t>(i - 1)] - full[static_cast<std::size_t>(i)]);
    return {GeneratorSet(n, std::move(full)), GeneratorSet(n, std::move(diffs))};
}

RationalMatrix action_matrix(const GeneratorSet& gs, const Permutation& sigma) {
    const auto blocks = span_blocks(gs);
    std::size_t dim = 0;
    for (const auto& b : blocks) dim += b.basis.rank();
    RationalMatrix m(dim, std::vector<mpq_class>(dim));
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t l = 0; l < b.basis.rank(); ++l) {
            const auto coords = image_coordinates(b, l, sigma);
            for (std::size_t k = 0; k < coords.size(); ++k) m[offset + k][offset + l] = coords[k];
        }
        offset += b.basis.rank();
    }
    return m;
}

ClassFunction span_character(const GeneratorSet& gs) {
    const auto blocks = span_blocks(gs);
    const auto classes = partitions_of(gs.n());
    std::vector<mpz_class> values;
    for (const auto& mu : classes) {
        const auto sigma = cycle_type_representative(mu);
        mpq_class trace = 0;
        for (const auto& b : blocks)
            for (std::size_t k = 0; k < b.basis.rank(); ++k) trace += image_coordinates(b, k, sigma)[k];
        values.push_back(integral(trace, "span_character"));
    }
    return ClassFunction(gs.n(), std::move(values));
}

ClassFunction exterior_power_character(const GeneratorSet& gs, int u) {
    std::vector<mpz_class> values;
    for (const auto& mu : partitions_of(gs.n()))
        values.push_back(
            integral(exterior_power_trace(action_matrix(gs, cycle_type_representative(mu)), u), "exterior_power_character"));
    return ClassFunction(gs.n(), std::move(values));
}

std::vector<Exponent> DegreeSlice::standard_monomials() const {
    std::vector<Exponent> out;
    for (std::size_t c : basis.free_columns()) out.push_back(monomials[c]);
    return out;
}

DegreeSlice ideal_degree_slice(const GeneratorSet& gs, int d) {
    if (d < 0) throw std::invalid_argument("ideal_degree_slice: negative degree");
    DegreeSlice slice;
    slice.degree = d;
    slice.monomials = monomials_of_degree(gs.n(), d);
    slice.column = index_columns(slice.monomials);
    slice.basis = EchelonBasis(slice.monomials.size());
    for (std::size_t k = 0; k < gs.size(); ++k) {
        const int gap = d - gs.degrees()[k];
        if (gap < 0) continue;
        // Integer multiple of the generator; the ideal is unchanged.
        mpz_class lcm = 1;
        for (const auto& [e, c] : gs.gens()[k].terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        std::vector<std::pair<Exponent, mpz_class>> terms;
        for (const auto& [e, c] : gs.gens()[k].terms()) terms.emplace_back(e, mpz_class(c.get_num() * (lcm / c.get_den())));
        Exponent sum(static_cast<std::size_t>(gs.n()));
        for (const auto& m : monomials_of_degree(gs.n(), gap)) {
            SparseVector row;
            row.reserve(terms.size());
            for (const auto& [e, c] : terms) {
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e[i] + m[i];
                row.emplace_back(slice.column.at(sum), c);
            }
            slice.basis.insert(std::move(row));
        }
    }
    return slice;
}

mpz_class quotient_trace(const DegreeSlice& slice, const Permutation& sigma) {
    mpq_class trace = 0;
    for (std::size_t m : slice.basis.free_columns()) {
        const std::size_t image = slice.column.at(permute_exponent(slice.monomials[m], sigma));
        if (const auto k = slice.basis.row_with_pivot(image)) {
            // image = -(1/a) * sum over free columns j of row[j] x_j  (mod I_d)
            trace -= mpq_class(slice.basis.entry(*k, m), slice.basis.leading(*k));
        } else if (image == m) {
            trace += 1;
        }
    }
    trace.canonicalize();
    return integral(trace, "quotient_trace");
}

GradedCharacter quotient_graded_character(const GeneratorSet& gs, int bound) {
    if (bound < 0) throw std::invalid_argument("quotient_graded_character: negative bound");
    if (!gs.is_stable()) throw std::invalid_argument("quotient_graded_character: generator span is not S_n-stable");
    const auto classes = partitions_of(gs.n());
    std::vector<Permutation> reps;
    for (const auto& mu : classes) reps.push_back(cycle_type_representative(mu));

    std::vector<ClassFunction> coeffs;
    for (int d = 0; d <= bound; ++d) {
        const DegreeSlice slice = ideal_degree_slice(gs, d);
        if (slice.quotient_dimension() == 0) {
            if (coeffs.empty()) coeffs.emplace_back(gs.n());
            return GradedCharacter(gs.n(), std::move(coeffs), true);
        }
        std::vector<mpz_class> values;
        values.reserve(reps.size());
        for (const auto& sigma : reps) values.push_back(quotient_trace(slice, sigma));
        coeffs.emplace_back(gs.n(), std::move(values));
    }
    return GradedCharacter(gs.n(), std::move(coeffs), false);
}

std::vector<mpz_class> complete_intersection_hilbert(int n, const std::vector<int>& degrees, int bound) {
    if (bound < 0) return {};
    std::vector<mpz_class> h(static_cast<std::size_t>(bound + 1));
    h[0] = 1;
    for (int c : degrees)
        for (int d = bound; d >= c; --d) h[static_cast<std::size_t>(d)] -= h[static_cast<std::size_t>(d - c)];
    for (int k = 0; k < n; ++k)
        for (std::size_t d = 1; d < h.size(); ++d) h[d] += h[d - 1];
    return h;
}

RegularityReport is_regular_sequence(const GeneratorSet& gs, std::optional<int> horizon) {
    RegularityReport report;
    const int n = gs.n();
    const int r = static_cast<int>(gs.size());
    const int degree_sum = std::accumulate(gs.degrees().begin(), gs.degrees().end(), 0);
    std::ostringstream summary;
    if (r > n) {
        report.regular = false;
        report.conclusive = true;
        summary << r << " generators exceed the maximal length " << n << " of a regular sequence";
        report.summary = summary.str();
        return report;
    }
    const bool artinian = r == n;
    report.horizon = artinian ? degree_sum - n + 1 : horizon.value_or(degree_sum);
    report.expected = complete_intersection_hilbert(n, gs.degrees(), report.horizon);
    report.regular = true;
    for (int d = 0; d <= report.horizon; ++d) {
        const mpz_class observed = static_cast<unsigned long>(ideal_degree_slice(gs, d).quotient_dimension());
        report.observed.push_back(observed);
        report.total_dimension += observed;
        if (observed != report.expected[static_cast<std::size_t>(d)]) {
            report.regular = false;
            report.first_mismatch = d;
            break;
        }
    }
    report.conclusive = !report.regular || artinian;
    if (!report.regular) {
        const auto d = static_cast<std::size_t>(*report.first_mismatch);
        summary << "not a regular sequence: dim (R/I)_" << d << " = " << report.observed[d].get_str()
                << ", a regular sequence of these degrees gives " << report.expected[d].get_str();
    } else if (artinian) {
        mpz_class product = 1;
        for (int c : gs.degrees()) product *= c;
        if (product != report.total_dimension)
            throw std::logic_error("is_regular_sequence: Hilbert series agrees but total dimension differs");
        summary << "regular sequence: Hilbert series agrees through degree " << report.horizon
                << ", dim R/I = " << report.total_dimension.get_str();
    } else {
        summary << "verified up to degree " << report.horizon;
    }
    report.summary = summary.str();
    return report;
}

}  // namespace symci
