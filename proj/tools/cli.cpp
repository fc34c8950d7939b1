#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "symci/graded.hpp"
#include "symci/json_io.hpp"
#include "symci/parser.hpp"

namespace symci::cli {

namespace {

std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

std::string describe(const RepresentationType& rt) {
    std::string out = "case " + to_string(rt.case_tag);
    if (rt.special_degree) out += ", d = " + std::to_string(*rt.special_degree);
    out += ", c = (" + join(rt.trivial_degrees) + ")";
    return out;
}

std::string join_mpz(const std::vector<mpz_class>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].get_str();
    return out;
}

// Display width of UTF-8 text.
std::size_t width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t w) { return std::string(w - std::min(w, width(s)), ' ') + s; }
std::string pad_right(const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, width(s)), ' '); }

/// "1" for the identity, otherwise disjoint cycles such as "(1 2)(3 4)".
std::string cycle_notation(const Partition& mu) {
    std::string out;
    int start = 1;
    for (int len : mu.parts()) {
        if (len > 1) {
            out += "(";
            for (int k = 0; k < len; ++k) out += (k ? " " : "") + std::to_string(start + k);
            out += ")";
        }
        start += len;
    }
    return out.empty() ? "1" : out;
}

/// Classes ordered by the number of moved points, then by the number of
/// non-trivial cycles.
std::vector<Partition> table_columns(int n) {
    auto classes = partitions_of(n);
    auto key = [](const Partition& mu) {
        int moved = 0;
        int cycles = 0;
        for (int p : mu.parts())
            if (p > 1) {
                moved += p;
                ++cycles;
            }
        return std::pair{moved, cycles};
    };
    std::stable_sort(classes.begin(), classes.end(),
                     [&](const Partition& a, const Partition& b) { return key(a) < key(b); });
    return classes;
}

std::string character_label(const Partition& lambda) { return "χ[" + lambda.label() + "]"; }

std::string socle_line(const GradedCharacter& g) {
    try {
        const SocleReport s = socle_analysis(g);
        std::string kind = s.top_is_trivial ? "trivial" : s.top_is_alternating ? "alternating" : format_character(s.top);
        return "socle: degree " + std::to_string(s.top_degree) + ", " + kind;
    } catch (const std::domain_error& e) {
        return std::string("socle: ") + e.what();
    }
}

json socle_json(const GradedCharacter& g) {
    try {
        const SocleReport s = socle_analysis(g);
        return json{{"top_degree", s.top_degree},
                    {"top_is_trivial", s.top_is_trivial},
                    {"top_is_alternating", s.top_is_alternating},
                    {"top", to_json(s.top)}};
    } catch (const std::domain_error&) {
        return nullptr;
    }
}

int do_character(int n, const std::string& tag, std::optional<int> d, const std::vector<int>& c, int bound, bool as_json,
                 std::ostream& out) {
    RepresentationType rt{parse_case_tag(tag), d, c};
    const GradedCharacter g = quotient_character(rt, n, bound);
    if (as_json) {
        out << document("character", json{{"type", to_json(rt)}, {"series", to_json(g)}, {"socle", socle_json(g)}})
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << describe(rt) << ", n = " << n << "\n";
    out << format_graded(g) << "\n";
    out << "hilbert: " << join_mpz(hilbert_series(g)) << "\n";
    if (g.exact()) out << socle_line(g) << "\n";
    return kExitOk;
}

int do_classify(const std::string& path, bool as_json, std::ostream& out) {
    json input;
    try {
        input = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    const IrredMultiset ms = multiset_from_json(input);
    const Classification verdict = classify(ms);
    if (as_json) {
        out << document("classification", to_json(verdict)).dump(2) << "\n";
        return kExitOk;
    }
    if (verdict.accepted()) {
        out << "accepted: " << describe(verdict.type()) << "\n";
    } else {
        const Rejection& r = verdict.rejection();
        out << "rejected: " << to_string(r.rule) << ": " << r.message << "\n";
        for (const auto& s : r.witness) out << "  witness: " << s.irreducible.to_string() << " in degree " << s.degree << "\n";
    }
    if (verdict.degenerate_small_n) out << "note: degenerate small n\n";
    return kExitOk;
}

int do_verify(const std::string& gens_path, const std::vector<std::string>& against, int bound, bool as_json,
              std::ostream& out) {
    std::string spec_text;
    for (const auto& w : against) spec_text += (spec_text.empty() ? "" : " ") + w;
    const TypeSpec spec = parse_type_spec(spec_text);
    const GeneratorSet gs = load_generator_file(gens_path);
    if (spec.n && *spec.n != gs.n())
        throw std::invalid_argument("type spec has n = " + std::to_string(*spec.n) + " but the generators use n = " +
                                    std::to_string(gs.n()));
    if (!gs.is_stable()) throw std::invalid_argument(gens_path + ": the span of the generators is not S_n-stable");
    const GradedCharacter formula = quotient_character(spec.type, gs.n(), bound);
    const int horizon = formula.exact() ? formula.bound() + 1 : formula.bound();
    const GradedCharacter oracle = quotient_graded_character(gs, horizon);
    const RegularityReport regular = is_regular_sequence(gs);

    bool all_match = true;
    json degrees = json::array();
    std::ostringstream lines;
    for (int deg = 0; deg <= horizon; ++deg) {
        const ClassFunction a = oracle.coefficient(deg);
        const ClassFunction b = formula.coefficient(deg);
        const bool match = a == b;
        all_match = all_match && match;
        degrees.push_back(json{{"degree", deg}, {"match", match}, {"oracle", to_json(a)}, {"formula", to_json(b)}});
        const std::string ta = a.is_zero() ? "0" : format_character(a);
        lines << "degree " << deg << ": " << (match ? "MATCH " : "MISMATCH ") << ta;
        if (!match) lines << " (formula " << (b.is_zero() ? "0" : format_character(b)) << ")";
        lines << "\n";
    }
    if (as_json) {
        out << document("verify", json{{"type", to_json(spec.type)},
                                       {"n", gs.n()},
                                       {"generator_degrees", gs.degrees()},
                                       {"regularity", to_json(regular)},
                                       {"degrees", degrees},
                                       {"result", all_match ? "MATCH" : "MISMATCH"}})
                   .dump(2)
            << "\n";
    } else {
        out << describe(spec.type) << ", n = " << gs.n() << "\n";
        out << "generators: " << gs.size() << " of degrees " << join(gs.degrees(), ", ") << "\n";
        out << regular.summary << "\n";
        out << lines.str();
        out << "result: " << (all_match ? "MATCH" : "MISMATCH") << "\n";
    }
    return all_match ? kExitOk : kExitMismatch;
}

int do_tables(int n, bool as_json, std::ostream& out) {
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    const auto columns = table_columns(n);
    const auto rows = partitions_of(n);
    const Partition column = Partition::column(n);
    if (as_json) {
        json classes = json::array();
        for (const auto& mu : columns)
            classes.push_back(json{{"cycle_type", to_json(mu)},
                                   {"size", to_json(class_size(mu))},
                                   {"representative", cycle_notation(mu)}});
        json characters = json::array();
        json kostka = json::array();
        for (const auto& lambda : rows) {
            json values = json::array();
            for (const auto& mu : columns) values.push_back(to_json(character_value(lambda, mu)));
            characters.push_back(json{{"partition", to_json(lambda)}, {"values", values}});
            kostka.push_back(json{{"partition", to_json(lambda)}, {"poly", to_json(kostka_foulkes_tilde(lambda, column))}});
        }
        out << document("tables", json{{"n", n}, {"classes", classes}, {"characters", characters},
                                       {"kostka_foulkes_tilde", kostka}})
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({""});
    grid.push_back({""});
    for (const auto& mu : columns) {
        grid[0].push_back(class_size(mu).get_str());
        grid[1].push_back(cycle_notation(mu));
    }
    for (const auto& lambda : rows) {
        std::vector<std::string> row{character_label(lambda)};
        for (const auto& mu : columns) row.push_back(character_value(lambda, mu).get_str());
        grid.push_back(std::move(row));
    }
    std::vector<std::size_t> w(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], width(row[k]));
    out << "character table of S_" << n << "\n";
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line = pad_right(grid[r][0], w[0]);
        for (std::size_t k = 1; k < grid[r].size(); ++k) line += "  " + pad_left(grid[r][k], w[k]);
        out << line << "\n";
        if (r == 1) out << std::string(width(line), '-') << "\n";
    }
    out << "\nKtilde_{λ,(1^" << n << ")}(t)\n";
    std::size_t lw = 0;
    for (const auto& lambda : rows) lw = std::max(lw, width(lambda.to_string()));
    for (const auto& lambda : rows)
        out << pad_right(lambda.to_string(), lw) << "  " << kostka_foulkes_tilde(lambda, column).to_string() << "\n";
    return kExitOk;
}

struct PaperExample {
    const char* title;
    RepresentationType type;
};

std::vector<PaperExample> quotient_examples() {
    return {{"Example 2", {CaseTag::I, std::nullopt, {2, 3, 3, 4}}},
            {"Example 3", {CaseTag::II, 6, {2, 2, 3}}},
            {"Example 4", {CaseTag::III, 2, {2}}},
            {"Example 5", {CaseTag::IV, 2, {2, 3}}}};
}

json examples_json() {
    const int n = 4;
    const Partition column = Partition::column(n);
    json kostka = json::array();
    for (const auto& lambda : partitions_of(n))
        kostka.push_back(json{{"partition", to_json(lambda)}, {"poly", to_json(kostka_foulkes_tilde(lambda, column))}});
    json list = json::array();
    list.push_back(json{{"title", "Example 1"},
                        {"kostka_foulkes_tilde", kostka},
                        {"coinvariant", to_json(coinvariant_character(n, n * (n - 1) / 2))},
                        {"polynomial_ring", to_json(polynomial_ring_character(n, 4))}});
    for (const auto& ex : quotient_examples()) {
        const GradedCharacter g = quotient_character(ex.type, n, 10);
        list.push_back(json{{"title", ex.title}, {"type", to_json(ex.type)}, {"series", to_json(g)}, {"socle", socle_json(g)}});
    }
    return document("examples", json{{"n", n}, {"examples", list}});
}

}  // namespace

std::string examples_text() {
    const int n = 4;
    std::ostringstream out;
    const Partition column = Partition::column(n);
    out << "Example 1: coinvariant algebra of S_4\n";
    for (const auto& lambda : partitions_of(n))
        out << "  Ktilde_{" << lambda.to_string() << ",(1^4)}(t) = " << kostka_foulkes_tilde(lambda, column).to_string()
            << "\n";
    out << "  coinvariant: " << format_graded(coinvariant_character(n, n * (n - 1) / 2)) << "\n";
    out << "  polynomial ring: " << format_graded(polynomial_ring_character(n, 4)) << "\n";
    for (const auto& ex : quotient_examples()) {
        const GradedCharacter g = quotient_character(ex.type, n, 10);
        out << ex.title << ": " << describe(ex.type) << "\n";
        out << "  quotient: " << format_graded(g) << "\n";
        out << "  hilbert: " << join_mpz(hilbert_series(g)) << "\n";
        out << "  " << socle_line(g) << "\n";
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graded characters of symmetric-group-stable complete intersections", "symci"};
    app.require_subcommand(1);

    int n = 0;
    std::string tag;
    int d = 0;
    std::vector<int> c;
    int bound = 10;
    bool as_json = false;
    std::string input;
    std::string gens;
    std::vector<std::string> against;

    auto* character = app.add_subcommand("character", "Graded character of R/I for a representation type");
    character->add_option("--n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
    character->add_option("--case", tag, "Case I, II, III or IV")->required();
    auto* d_opt = character->add_option("--d", d, "Degree of the non-trivial summand")->check(CLI::PositiveNumber);
    character->add_option("--c", c, "Degrees of the trivial summands")->delimiter(',');
    character->add_option("--bound", bound, "Truncation degree for non-artinian series")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    character->add_flag("--json", as_json, "JSON output");

    auto* classify_cmd = app.add_subcommand("classify", "Decide a multiset of irreducibles (JSON file)");
    classify_cmd->add_option("--input", input, "IrredMultiset JSON file")->required();
    classify_cmd->add_flag("--json", as_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Compare the brute-force quotient with the formula");
    verify->add_option("--gens", gens, "Generator file")->required();
    verify->add_option("--against", against, "Representation type, e.g. case IV d=2 c=2,3")
        ->required()
        ->expected(1, -1);
    verify->add_option("--bound", bound, "Truncation degree for non-artinian series")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", as_json, "JSON output");

    auto* tables = app.add_subcommand("tables", "Character table and Ktilde_{λ,(1^n)} table");
    tables->add_option("--n", n, "Symmetric group degree")->required()->check(CLI::PositiveNumber);
    tables->add_flag("--json", as_json, "JSON output");

    auto* examples = app.add_subcommand("examples", "Reproduce the worked examples for n = 4");
    examples->add_flag("--json", as_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*character)
            return do_character(n, tag, d_opt->count() ? std::optional<int>(d) : std::nullopt, c, bound, as_json, out);
        if (*classify_cmd) return do_classify(input, as_json, out);
        if (*verify) return do_verify(gens, against, bound, as_json, out);
        if (*tables) return do_tables(n, as_json, out);
        if (*examples) {
            if (as_json)
                out << examples_json().dump(2) << "\n";
            else
                out << examples_text();
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace symci::cli
