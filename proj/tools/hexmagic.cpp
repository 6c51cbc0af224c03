// hexmagic: verify, generate, combine and enumerate magic hexagons.
//
// Exit status: 0 success (or magic), 1 verified but not magic, 2 input error.

#include "hexmagic/hexmagic.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace hexmagic;

namespace {

constexpr int kOk = 0;
constexpr int kNotMagic = 1;
constexpr int kInputError = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string line_label(const Line& line) {
    static const char* names[] = {"r", "q", "s"};
    return std::string(names[static_cast<int>(line.direction)]) + "=" + std::to_string(line.value);
}

Assignment parse_assignments(const std::vector<std::string>& items) {
    Assignment a;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (a.count(name)) throw UsageError("parameter '" + name + "' given twice");
        a[name] = parse_rational_lenient(item.substr(eq + 1));
    }
    return a;
}

/// "M=<v>", "@q,r=<v>" or "<linear form>=<v>".
Constraint parse_constraint(const std::string& text) {
    auto eq = text.rfind('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("constraint needs 'target=value': '" + text + "'");
    const std::string lhs = text.substr(0, eq);
    Constraint c{MagicSumTarget{}, parse_rational_lenient(text.substr(eq + 1))};
    if (lhs == "M") return c;
    if (lhs.front() == '@') {
        auto comma = lhs.find(',');
        if (comma == std::string::npos) throw UsageError("cell constraint needs '@q,r': '" + text + "'");
        try {
            c.target = HexCoord{std::stoi(lhs.substr(1, comma - 1)), std::stoi(lhs.substr(comma + 1))};
        } catch (const std::logic_error&) {
            throw UsageError("malformed cell coordinate in '" + text + "'");
        }
        return c;
    }
    c.target = parse_linear_form(lhs);
    return c;
}

/// "lo..hi" or a comma-separated list of rationals.
std::vector<Rational> parse_entries(const std::string& text) {
    std::vector<Rational> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        const Rational lo = parse_rational(text.substr(0, dots));
        const Rational hi = parse_rational(text.substr(dots + 2));
        if (!is_integer(lo) || !is_integer(hi) || lo > hi) throw UsageError("entry range must be integer lo..hi");
        for (Rational v = lo; v <= hi; v += 1) out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational_lenient(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Writes h to path (or stdout) after checking that the written text
/// re-parses to the same hexagon.
void emit_hexagon(const Hexagon& h, const std::string& path) {
    const std::string text = render(h);
    if (parse_hexagon(text) != h) throw std::logic_error("rendered hexagon failed to round-trip");
    if (path.empty() || path == "-") std::cout << text;
    else save_hexagon(path, h);
}

std::ostream& summary_stream(const std::string& out_path) {
    return (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
}

std::string magic_text(const Hexagon& h) {
    const auto rep = verify(h);
    return rep.is_magic ? "M=" + to_string(*rep.magic_sum) : "not magic";
}

int cmd_verify(const std::string& path) {
    const Hexagon h = load_hexagon(path);
    const auto rep = verify(h);
    const LineSet lines(h.order());
    std::cout << "order: " << h.order() << "\n";
    std::cout << "line sums:";
    for (const auto& s : rep.line_sums) std::cout << ' ' << to_string(s);
    std::cout << "\n";
    if (rep.is_magic) {
        std::cout << "M=" << to_string(*rep.magic_sum) << "\n";
    } else {
        std::map<Rational, int> freq;
        for (const auto& s : rep.line_sums) ++freq[s];
        const Rational common =
            std::max_element(freq.begin(), freq.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
        std::cout << "not magic (most lines sum to " << to_string(common) << ")\n";
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (rep.line_sums[i] != common)
                std::cout << "  line " << line_label(lines[i]) << " sums to " << to_string(rep.line_sums[i]) << "\n";
    }
    std::cout << "entries: " << to_string(rep.entry_min) << ".." << to_string(rep.entry_max)
              << (rep.entries_distinct ? " distinct" : " with repeats") << "\n";
    std::cout << "normal: " << (rep.is_normal ? "yes" : "no") << "\n";
    return rep.is_magic ? kOk : kNotMagic;
}

struct GenOptions {
    int order = 0;
    std::string variant = "default";
    bool synthesized = false;
    std::vector<std::string> constraints;
    std::vector<std::string> assignments;
    std::string out;
};

Template select_template(int order, const std::string& variant, bool synthesized, const fs::path& corpus) {
    if (synthesized) return synthesize_template(order);
    return builtin_template(order, variant, corpus);
}

int cmd_gen(const GenOptions& o, const fs::path& corpus) {
    const Template t = select_template(o.order, o.variant, o.synthesized, corpus);
    Assignment values = parse_assignments(o.assignments);
    for (const auto& [name, v] : values)
        if (std::find(t.params.begin(), t.params.end(), name) == t.params.end())
            throw UsageError("template has no parameter '" + name + "'");
    if (!o.constraints.empty()) {
        std::vector<Constraint> cs;
        // Given assignments act as extra constraints.
        for (const auto& [name, v] : values) cs.push_back({LinearForm::parameter(name), v});
        for (const auto& c : o.constraints) cs.push_back(parse_constraint(c));
        values = solve_for_cells(t, cs);
    } else {
        // Unmentioned parameters default to zero only for synthesized templates.
        if (o.synthesized)
            for (const auto& p : t.params) values.try_emplace(p, Rational(0));
    }
    const Hexagon h = instantiate(t, values);
    emit_hexagon(h, o.out);
    summary_stream(o.out) << magic_text(h) << "\n";
    if (!o.constraints.empty()) {
        auto& s = summary_stream(o.out);
        s << "assignment:";
        for (const auto& p : t.params) s << ' ' << p << '=' << to_string(values.at(p));
        s << "\n";
    }
    return kOk;
}

int cmd_combine(const std::string& recipe, const std::string& out) {
    const Hexagon h = run_recipe(recipe);
    emit_hexagon(h, out);
    summary_stream(out) << magic_text(h) << "\n";
    return kOk;
}

struct SearchOptions {
    int order = 0;
    bool normal = false;
    std::string entries;
    std::string sum;
    std::string mode = "all";
    unsigned workers = 1;
    std::string out_dir;
};

int cmd_search(const SearchOptions& o) {
    SearchSpec spec;
    if (o.normal) {
        auto normal = normal_search_spec(o.order);
        if (!normal) {
            std::cout << "infeasible: no integral magic sum exists for a normal order-" << o.order << " hexagon\n";
            return kInputError;
        }
        spec = *normal;
    } else {
        if (o.entries.empty() || o.sum.empty()) throw UsageError("search needs --normal or both --entries and --sum");
        spec.order = o.order;
        spec.entries = parse_entries(o.entries);
        spec.target_sum = parse_rational_lenient(o.sum);
    }
    spec.workers = o.workers;
    if (o.mode == "all") spec.mode = SearchMode::AllSolutions;
    else if (o.mode == "first") spec.mode = SearchMode::FirstSolution;
    else if (o.mode == "count") spec.mode = SearchMode::CountCanonical;
    else throw UsageError("unknown mode '" + o.mode + "'");
    if (o.order >= 4) std::cerr << "warning: exhaustive search at order " << o.order << " may not finish\n";

    SearchResult res;
    try {
        res = enumerate(spec);
    } catch (const InfeasibleSearch& e) {
        std::cout << "infeasible: " << e.what() << "\n";
        return kInputError;
    }
    if (!o.out_dir.empty()) {
        fs::create_directories(o.out_dir);
        for (std::size_t i = 0; i < res.canonical_solutions.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "solution-%03zu.hex", i + 1);
            emit_hexagon(res.canonical_solutions[i], (fs::path(o.out_dir) / name).string());
        }
    }
    std::cout << "solutions: " << res.canonical_count << " labeled: " << res.labeled_count
              << " nodes: " << res.nodes_expanded << "\n";
    return kOk;
}

int cmd_mult(int order, const std::string& variant, const std::vector<std::string>& assignments,
             const std::string& out, const fs::path& corpus) {
    const Template t = builtin_template(order, variant, corpus);
    const Assignment values = parse_assignments(assignments);
    const Hexagon h = to_multiplicative(t, values);
    emit_hexagon(h, out);
    const auto p = magic_product(h);
    summary_stream(out) << (p ? "P=" + to_string(*p) : std::string("not multiplicatively magic")) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify and enumerate magic hexagons"};
    app.require_subcommand(1);
    std::string corpus = default_corpus_dir().string();
    app.add_option("--corpus", corpus, "Corpus directory with templates, hexagons and recipes");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check line sums of a hexagon file");
    verify_cmd->add_option("file", verify_path)->required();

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Instantiate a built-in or synthesized template");
    gen_cmd->add_option("--order", gen.order)->required()->check(CLI::Range(1, 64));
    gen_cmd->add_option("--variant", gen.variant, "Built-in variant (order 7: diagonal, sum)");
    gen_cmd->add_flag("--synthesized", gen.synthesized, "Use the general order-n template");
    gen_cmd->add_option("--constraint", gen.constraints, "M=v, @q,r=v or form=v");
    gen_cmd->add_option("assignments", gen.assignments, "name=value");
    gen_cmd->add_option("-o,--output", gen.out);

    std::string recipe, combine_out;
    auto* combine_cmd = app.add_subcommand("combine", "Run a linear-combination recipe");
    combine_cmd->add_option("recipe", recipe)->required();
    combine_cmd->add_option("-o,--output", combine_out);

    SearchOptions search;
    auto* search_cmd = app.add_subcommand("search", "Exhaustively enumerate magic hexagons");
    search_cmd->add_option("--order", search.order)->required()->check(CLI::Range(1, 64));
    search_cmd->add_flag("--normal", search.normal, "Entries 1..T with the normal magic sum");
    search_cmd->add_option("--entries", search.entries, "lo..hi or a comma-separated list");
    search_cmd->add_option("--sum", search.sum, "Target magic sum");
    search_cmd->add_option("--mode", search.mode, "all, first or count");
    search_cmd->add_option("--workers", search.workers)->check(CLI::Range(1u, 256u));
    search_cmd->add_option("--out", search.out_dir, "Directory for canonical solution files");

    int mult_order = 4;
    std::string mult_variant = "default", mult_out;
    std::vector<std::string> mult_assign;
    auto* mult_cmd = app.add_subcommand("mult", "Multiplicative hexagon from a built-in template");
    mult_cmd->add_option("--order", mult_order)->check(CLI::Range(3, 7));
    mult_cmd->add_option("--variant", mult_variant);
    mult_cmd->add_option("assignments", mult_assign, "name=value (nonzero)");
    mult_cmd->add_option("-o,--output", mult_out);

    std::string canon_path, canon_out;
    auto* canon_cmd = app.add_subcommand("canon", "Canonical representative under the 12 symmetries");
    canon_cmd->add_option("file", canon_path)->required();
    canon_cmd->add_option("-o,--output", canon_out);

    std::string render_path;
    auto* render_cmd = app.add_subcommand("render", "Draw a hexagon file as indented text");
    render_cmd->add_option("file", render_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*verify_cmd) return cmd_verify(verify_path);
        if (*gen_cmd) return cmd_gen(gen, corpus);
        if (*combine_cmd) return cmd_combine(recipe, combine_out);
        if (*search_cmd) return cmd_search(search);
        if (*mult_cmd) return cmd_mult(mult_order, mult_variant, mult_assign, mult_out, corpus);
        if (*canon_cmd) {
            emit_hexagon(canonical_form(load_hexagon(canon_path)), canon_out);
            return kOk;
        }
        if (*render_cmd) {
            const Hexagon h = load_hexagon(render_path);
            std::cout << render_ascii(h) << magic_text(h) << "\n";
            return kOk;
        }
    } catch (const linalg::InconsistentSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
