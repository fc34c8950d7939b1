#include "symci/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace symci {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int n, int line) : text_(text), n_(n), line_(line) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
    int line_;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'", line_);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom() {
        const char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    mpz_class integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer() {
        const mpz_class v = integer();
        if (!v.fits_sint_p() || v > 1000000) fail("integer too large");
        return static_cast<int>(v.get_si());
    }

    MultiPoly expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        MultiPoly p = term();
        if (negate) p = -p;
        while (peek() == '+' || peek() == '-') {
            const bool minus = text_[pos_++] == '-';
            if (minus)
                p -= term();
            else
                p += term();
        }
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                p = p * factor();
            } else if (peek() == '/') {
                ++pos_;
                const MultiPoly q = factor();
                if (q.is_zero() || q.degree() != 0) fail("division is only by a nonzero constant");
                p *= 1 / q.terms().begin()->second;
            } else if (starts_atom()) {
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            base = base.pow(small_integer());
        }
        return base;
    }

    MultiPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(n_, mpq_class(integer()));
        if (!std::isalpha(static_cast<unsigned char>(c))) fail(c ? "expected a term" : "unexpected end of expression");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "vdm") {
            if (n_ < 2) fail("vdm needs n >= 2");
            return vandermonde(n_);
        }
        if (name != "x" && name != "e") fail("unknown name '" + name + "'");
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an index after '" + name + "'");
        const int i = small_integer();
        if (i < 1 || i > n_) fail(name + std::to_string(i) + " is out of range for n = " + std::to_string(n_));
        return name == "x" ? MultiPoly::variable(n_, i) : elementary_symmetric(i, n_);
    }
};

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int parse_positive(const std::string& text, const std::string& field) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError("bad value '" + text + "' for " + field);
    }
    if (used != text.size() || v < 1) throw ParseError("bad value '" + text + "' for " + field);
    return v;
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text, int n) {
    if (n < 1) throw ParseError("need n >= 1");
    return PolyParser(text, n, 0).parse();
}

GeneratorSet parse_generator_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::optional<int> n;
    std::vector<MultiPoly> gens;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (line.empty()) continue;
        if (!n) {
            const auto eq = line.find('=');
            if (eq == std::string::npos || strip_comment(line.substr(0, eq)) != "n")
                throw ParseError("expected the header 'n = N'", line_no);
            try {
                n = parse_positive(strip_comment(line.substr(eq + 1)), "n");
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no);
            }
            continue;
        }
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i < line.size() && line[i] == '(') ++depth;
            if (i < line.size() && line[i] == ')') --depth;
            if (i == line.size() || (line[i] == ',' && depth == 0)) {
                const std::string piece = strip_comment(line.substr(start, i - start));
                if (piece.empty()) throw ParseError("empty generator", line_no);
                gens.push_back(PolyParser(piece, *n, line_no).parse());
                start = i + 1;
            }
        }
    }
    if (!n) throw ParseError("missing header 'n = N'");
    try {
        return GeneratorSet(*n, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GeneratorSet load_generator_file(const std::string& path) { return parse_generator_file(read_file(path)); }

TypeSpec parse_type_spec(std::string_view text) {
    // "d = 2" and "d=2" read the same.
    std::string norm;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '=') {
            while (!norm.empty() && norm.back() == ' ') norm.pop_back();
            norm += '=';
            while (i + 1 < text.size() && text[i + 1] == ' ') ++i;
        } else {
            norm += text[i];
        }
    }
    std::istringstream in(norm);
    std::string word;
    TypeSpec spec;
    bool have_case = false;
    while (in >> word) {
        const auto eq = word.find('=');
        const std::string key = eq == std::string::npos ? word : word.substr(0, eq);
        const std::string value = eq == std::string::npos ? "" : word.substr(eq + 1);
        if (eq == std::string::npos && (key == "case" || key == "Case")) continue;
        if (eq == std::string::npos || key == "case") {
            try {
                spec.type.case_tag = parse_case_tag(eq == std::string::npos ? key : value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            have_case = true;
        } else if (key == "d") {
            spec.type.special_degree = parse_positive(value, "d");
        } else if (key == "n") {
            spec.n = parse_positive(value, "n");
        } else if (key == "c") {
            std::istringstream list(value);
            std::string item;
            while (std::getline(list, item, ','))
                if (!item.empty()) spec.type.trivial_degrees.push_back(parse_positive(item, "c"));
        } else {
            throw ParseError("unknown field '" + key + "' in type spec");
        }
    }
    if (!have_case) throw ParseError("type spec names no case (I, II, III or IV)");
    return spec;
}

}  // namespace symci
