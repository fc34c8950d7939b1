#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "symci/classify.hpp"
#include "symci/json_io.hpp"
#include "symci/oracle.hpp"
#include "symci/parser.hpp"
#include "symci/partition.hpp"
#include "symci/tableau.hpp"

namespace py = pybind11;
using namespace symci;

namespace {

std::vector<std::vector<int>> partition_list(int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts());
    return out;
}

std::string kostka_json(const std::string& lambda, const std::string& mu) {
    return to_json(kostka_foulkes_tilde(parse_partition(lambda), parse_partition(mu))).dump();
}

std::string classify_json(const std::string& text) {
    return document("classification", to_json(classify(multiset_from_json(json::parse(text))))).dump();
}

std::string oracle_json(const std::string& gens_text, int bound) {
    const GeneratorSet gs = parse_generator_file(gens_text);
    return document("oracle", json{{"series", to_json(quotient_graded_character(gs, bound))}}).dump();
}

std::string regularity_json(const std::string& gens_text) {
    return document("regularity", to_json(is_regular_sequence(parse_generator_file(gens_text)))).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graded characters of symmetric-group-stable complete intersections";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("partitions", &partition_list, py::arg("n"));
    m.def("kostka_foulkes_tilde_json", &kostka_json, py::arg("lam"), py::arg("mu"));
    m.def("classify_json", &classify_json, py::arg("text"));
    m.def("oracle_json", &oracle_json, py::arg("gens"), py::arg("bound"));
    m.def("regularity_json", &regularity_json, py::arg("gens"));
    m.def("run_cli", &run_cli, py::arg("args"));
    m.attr("schema_version") = kJsonSchemaVersion;
}
