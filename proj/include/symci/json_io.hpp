#ifndef SYMCI_JSON_IO_HPP
#define SYMCI_JSON_IO_HPP

#include <gmpxx.h>
#include <json.hpp>

#include "symci/class_function.hpp"
#include "symci/classify.hpp"
#include "symci/graded.hpp"
#include "symci/oracle.hpp"
#include "symci/tableau.hpp"
#include "symci/upoly.hpp"

namespace symci {

using json = nlohmann::ordered_json;

/// Version stamped into every top-level document as "schema".
inline constexpr int kJsonSchemaVersion = 1;

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
json to_json(const mpz_class& v);
mpz_class mpz_from_json(const json& j);

json to_json(const Partition& p);
/// Accepts [3,1], "3,1", "(3,1)" and "(2^2,1)".
Partition partition_from_json(const json& j);

json to_json(const Tableau& t);
/// {"1": 1, "2": 1} keyed by exponent.
json to_json(const UnivariatePoly& p);
/// {"2,1,1": -1, ...} keyed by cycle type.
json to_json(const ClassFunction& f);
json to_json(const GradedCharacter& g);
json to_json(const RepresentationType& rt);
json to_json(const Summand& s);
json to_json(const Rejection& r);
json to_json(const Classification& c);
json to_json(const RegularityReport& r);

/// {"n": 4, "summands": [{"partition": [3,1], "degree": 2}, ...]}.
/// Throws std::invalid_argument on a malformed document.
IrredMultiset multiset_from_json(const json& j);

/// A top-level document: {"schema": 1, "kind": kind, ...body}.
json document(const std::string& kind, json body);

}  // namespace symci

#endif  // SYMCI_JSON_IO_HPP
