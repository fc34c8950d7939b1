#include "symci/json_io.hpp"

#include <stdexcept>

namespace symci {

json to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("expected a partition, got " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers: " + j.dump());
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

json to_json(const Tableau& t) { return t.rows(); }

json to_json(const UnivariatePoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
    return out;
}

json to_json(const ClassFunction& f) {
    json out = json::object();
    const auto classes = partitions_of(f.n());
    for (std::size_t i = 0; i < classes.size(); ++i) out[classes[i].label()] = to_json(f.values()[i]);
    return out;
}

json to_json(const GradedCharacter& g) {
    json coeffs = json::array();
    json decomposition = json::array();
    for (const auto& c : g.coefficients()) {
        coeffs.push_back(to_json(c));
        json parts = json::object();
        for (const auto& [lambda, m] : decompose(c)) parts[lambda.label()] = to_json(m);
        decomposition.push_back(parts);
    }
    json hilbert = json::array();
    for (const auto& d : hilbert_series(g)) hilbert.push_back(to_json(d));
    return json{{"n", g.n()},
                {"bound", g.bound()},
                {"exact", g.exact()},
                {"coeffs", coeffs},
                {"decomposition", decomposition},
                {"hilbert", hilbert},
                {"text", format_graded(g)}};
}

json to_json(const RepresentationType& rt) {
    json out{{"case", to_string(rt.case_tag)}};
    out["d"] = rt.special_degree ? json(*rt.special_degree) : json(nullptr);
    out["c"] = rt.trivial_degrees;
    return out;
}

json to_json(const Summand& s) { return json{{"partition", to_json(s.irreducible)}, {"degree", s.degree}}; }

json to_json(const Rejection& r) {
    json witness = json::array();
    for (const auto& s : r.witness) witness.push_back(to_json(s));
    return json{{"rule", to_string(r.rule)}, {"witness", witness}, {"message", r.message}};
}

json to_json(const Classification& c) {
    json out{{"accepted", c.accepted()}};
    if (c.accepted())
        out["type"] = to_json(c.type());
    else
        out["rejection"] = to_json(c.rejection());
    out["degenerate_small_n"] = c.degenerate_small_n;
    return out;
}

json to_json(const RegularityReport& r) {
    json observed = json::array();
    json expected = json::array();
    for (const auto& v : r.observed) observed.push_back(to_json(v));
    for (const auto& v : r.expected) expected.push_back(to_json(v));
    json out{{"regular", r.regular},  {"conclusive", r.conclusive}, {"horizon", r.horizon},
             {"observed", observed},  {"expected", expected}};
    out["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    out["total_dimension"] = to_json(r.total_dimension);
    out["summary"] = r.summary;
    return out;
}

IrredMultiset multiset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("summands"))
        throw std::invalid_argument("multiset must be an object with 'n' and 'summands'");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("'n' must be an integer");
    if (!j["summands"].is_array()) throw std::invalid_argument("'summands' must be an array");
    IrredMultiset ms;
    ms.n = j["n"].get<int>();
    for (const auto& s : j["summands"]) {
        if (!s.is_object() || !s.contains("partition") || !s.contains("degree") || !s["degree"].is_number_integer())
            throw std::invalid_argument("each summand needs 'partition' and an integer 'degree': " + s.dump());
        const int count = s.contains("multiplicity") ? s["multiplicity"].get<int>() : 1;
        if (count < 1) throw std::invalid_argument("multiplicity must be positive: " + s.dump());
        for (int k = 0; k < count; ++k) ms.summands.push_back({partition_from_json(s["partition"]), s["degree"].get<int>()});
    }
    return ms;
}

json document(const std::string& kind, json body) {
    json out{{"schema", kJsonSchemaVersion}, {"kind", kind}};
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    return out;
}

}  // namespace symci
