#ifndef SYMCI_PARSER_HPP
#define SYMCI_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "symci/classify.hpp"
#include "symci/multipoly.hpp"
#include "symci/oracle.hpp"

namespace symci {

/// Input that does not follow the generator-file or type-spec grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A polynomial expression in n variables.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*     division by a nonzero constant only
///   factor := atom ('^' integer)?
///   atom   := integer | x<i> | e<k> | vdm | '(' expr ')'
///
/// Juxtaposition such as 2x1 or (x1-x2)(x3-x4) multiplies.
MultiPoly parse_polynomial(std::string_view text, int n);

/// Generator file: a header line `n = N`, then generators separated by
/// newlines or commas. `#` starts a comment.
GeneratorSet parse_generator_file(std::string_view text);
GeneratorSet load_generator_file(const std::string& path);

/// A representation type such as "case IV d=2 c=2,3". The leading word
/// "case" is optional; an `n=N` field may be included.
struct TypeSpec {
    RepresentationType type;
    std::optional<int> n;
};
TypeSpec parse_type_spec(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace symci

#endif  // SYMCI_PARSER_HPP
