#pragma once

// Parametric hexagons: every cell is a linear form over named parameters and
// every line sums to the same form. Template files use
//
//   hexmagic-template v1
//   order: <n>
//   params: a b c ...
//   row: <form> <form> ...     (2n-1 rows, 'row:' layout as for hexagons)
//   magic: <form>
//
// with forms spelled like "2a+b-c+3". Loading re-derives the common line sum
// and rejects the file if any line disagrees or the trailer differs.

#include "hexmagic/hexagon.hpp"
#include "hexmagic/linalg.hpp"
#include "hexmagic/linear_form.hpp"
#include "hexmagic/verifier.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hexmagic {

class TemplateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Template {
    int order = 0;
    std::vector<std::string> params;  // declaration order
    HexArray<LinearForm> cells;
    LinearForm magic_form;
};

/// Symbolic sum of every line, in line_set order.
inline std::vector<LinearForm> symbolic_line_sums(const HexArray<LinearForm>& cells) {
    const LineSet lines(cells.order());
    std::vector<LinearForm> out;
    out.reserve(lines.size());
    for (const auto& line : lines) {
        LinearForm s;
        for (auto i : line.cells) s += cells[i];
        out.push_back(std::move(s));
    }
    return out;
}

/// The shared line sum of the cells; throws when two lines disagree.
inline LinearForm template_magic_form(const HexArray<LinearForm>& cells) {
    const auto sums = symbolic_line_sums(cells);
    const LineSet lines(cells.order());
    for (std::size_t i = 1; i < sums.size(); ++i) {
        if (sums[i] != sums[0]) {
            throw TemplateError("line " + std::to_string(i + 1) + " sums to " + to_string(sums[i]) +
                                " but line 1 sums to " + to_string(sums[0]));
        }
    }
    return sums.front();
}

inline LinearForm template_magic_form(const Template& t) { return template_magic_form(t.cells); }

/// Checks line-sum uniformity, the stored magic form and parameter declarations.
inline void validate(const Template& t) {
    const LinearForm m = template_magic_form(t.cells);
    if (m != t.magic_form)
        throw TemplateError("declared magic form " + to_string(t.magic_form) + " but lines sum to " + to_string(m));
    const std::set<std::string, NaturalLess> declared(t.params.begin(), t.params.end());
    for (const auto& cell : t.cells)
        for (const auto& [name, c] : cell.coefficients())
            if (!declared.count(name)) throw TemplateError("cell uses undeclared parameter '" + name + "'");
}

inline std::string render(const Template& t) {
    const int n = t.order;
    std::string out = "hexmagic-template v1\norder: " + std::to_string(n) + "\nparams:";
    for (const auto& p : t.params) out += " " + p;
    out += '\n';
    std::size_t idx = 0;
    for (int r = -(n - 1); r <= n - 1; ++r) {
        out += "row:";
        for (int k = 0; k < row_length(n, r); ++k) out += " " + to_string(t.cells[idx++]);
        out += '\n';
    }
    out += "magic: " + to_string(t.magic_form) + "\n";
    return out;
}

inline Template parse_template(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty() || lines[0].text != "hexmagic-template v1")
        throw ParseError("missing 'hexmagic-template v1' header", lines.empty() ? 1 : lines[0].number);
    if (lines.size() < 3) throw ParseError("truncated template");
    Template t;
    t.order = detail::parse_order(lines[1]);
    for (auto p : detail::split_ws(detail::expect_key(lines[2], "params"))) t.params.emplace_back(p);
    const std::size_t rows = static_cast<std::size_t>(2 * t.order - 1);
    if (lines.size() != rows + 4)
        throw ParseError("order " + std::to_string(t.order) + " template needs " + std::to_string(rows) +
                         " rows and a magic trailer");
    std::vector<LinearForm> cells;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& line = lines[i + 3];
        const int r = static_cast<int>(i) - (t.order - 1);
        const auto tokens = detail::split_ws(detail::expect_key(line, "row"));
        if (tokens.size() != static_cast<std::size_t>(row_length(t.order, r)))
            throw ParseError("row needs " + std::to_string(row_length(t.order, r)) + " cells, found " +
                                 std::to_string(tokens.size()),
                             line.number);
        for (auto tok : tokens) {
            try {
                cells.push_back(parse_linear_form(tok));
            } catch (const FormatError& e) {
                throw ParseError(e.what(), line.number);
            }
        }
    }
    t.cells = HexArray<LinearForm>(t.order, std::move(cells));
    const auto& trailer = lines.back();
    try {
        t.magic_form = parse_linear_form(std::string(detail::expect_key(trailer, "magic")));
    } catch (const FormatError& e) {
        throw ParseError(e.what(), trailer.number);
    }
    validate(t);
    return t;
}

inline Template load_template(const std::filesystem::path& path) { return parse_template(read_text_file(path)); }

// ---------------------------------------------------------------------------
// Built-in templates shipped in the corpus.

inline std::filesystem::path default_corpus_dir() {
#ifdef HEXMAGIC_CORPUS_DIR
    return HEXMAGIC_CORPUS_DIR;
#else
    return "corpus";
#endif
}

struct BuiltinTemplateInfo {
    int order;
    std::string_view variant;
    std::string_view file;
    std::string_view magic;  // expected magic form
};

inline constexpr BuiltinTemplateInfo builtin_templates[] = {
    {3, "default", "order3.tpl", "2a+2b+2c"},
    {4, "default", "order4.tpl", "a+2b+2c+2d+e"},
    {5, "default", "order5.tpl", "a+2b+2c+2d+2e+f"},
    {6, "default", "order6.tpl", "a+2b+2c+2d+2e+2f+g"},
    {7, "diagonal", "order7-diagonal.tpl", "z"},
    {7, "sum", "order7-sum.tpl", "t+u+v+w+x+y+z"},
};

inline const BuiltinTemplateInfo& builtin_template_info(int order, std::string_view variant = "default") {
    if (order == 7 && variant == "default") variant = "diagonal";
    for (const auto& info : builtin_templates)
        if (info.order == order && info.variant == variant) return info;
    throw std::invalid_argument("no built-in template for order " + std::to_string(order) + " variant '" +
                                std::string(variant) + "'");
}

/// Loads a shipped template and checks it against its expected magic form.
inline Template builtin_template(int order, std::string_view variant = "default",
                                 const std::filesystem::path& corpus = default_corpus_dir()) {
    const auto& info = builtin_template_info(order, variant);
    Template t = load_template(corpus / "templates" / info.file);
    if (t.order != order) throw TemplateError(std::string(info.file) + " has the wrong order");
    if (t.magic_form != parse_linear_form(info.magic))
        throw TemplateError(std::string(info.file) + ": magic form " + to_string(t.magic_form) + ", expected " +
                            std::string(info.magic));
    return t;
}

// ---------------------------------------------------------------------------

inline Hexagon instantiate(const Template& t, const Assignment& values) {
    for (const auto& p : t.params)
        if (!values.count(p)) throw MissingParameter(p);
    Hexagon h(t.order);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = t.cells[i].evaluate(values);
    return h;
}

struct MagicSumTarget {};

/// target = value, where target is the magic sum, one cell, or any form.
struct Constraint {
    std::variant<MagicSumTarget, HexCoord, LinearForm> target;
    Rational value;
};

inline LinearForm constraint_form(const Template& t, const Constraint& c) {
    if (std::holds_alternative<MagicSumTarget>(c.target)) return t.magic_form;
    if (const auto* coord = std::get_if<HexCoord>(&c.target)) {
        if (!in_bounds(*coord, t.order)) throw std::out_of_range("constraint cell outside hexagon");
        return t.cells.at(*coord);
    }
    return std::get<LinearForm>(c.target);
}

/// Conflicting constraint indices are available from InconsistentSystem.
inline Assignment solve_for_cells(const Template& t, const std::vector<Constraint>& constraints) {
    linalg::Matrix a;
    linalg::Vector b;
    for (const auto& c : constraints) {
        const LinearForm f = constraint_form(t, c);
        linalg::Vector row;
        for (const auto& p : t.params) row.push_back(f.coefficient(p));
        for (const auto& [name, coef] : f.coefficients()) {
            if (std::find(t.params.begin(), t.params.end(), name) == t.params.end())
                throw TemplateError("constraint mentions unknown parameter '" + name + "'");
        }
        a.push_back(std::move(row));
        b.push_back(c.value - f.constant());
    }
    const auto x = linalg::solve(a, b, t.params.size());
    Assignment out;
    for (std::size_t i = 0; i < t.params.size(); ++i) out[t.params[i]] = x[i];
    return out;
}

/// Order-3 zero-sum hexagon from a Pythagorean triple x^2 + y^2 = z^2 via
/// a = y^2, b = x^2, c = -z^2; d is free.
inline Hexagon pythagorean_zero_hexagon(long long x, long long y, long long z, const Rational& d,
                                        const std::filesystem::path& corpus = default_corpus_dir()) {
    if (x <= 0 || y <= 0 || z <= 0) throw std::invalid_argument("Pythagorean triple must be positive");
    const Integer X = x, Y = y, Z = z;
    if (X * X + Y * Y != Z * Z) throw std::invalid_argument("not a Pythagorean triple");
    const Template t = builtin_template(3, "default", corpus);
    return instantiate(t, {{"a", Rational(Y * Y)}, {"b", Rational(X * X)}, {"c", Rational(-Z * Z)}, {"d", d}});
}

/// Line-sum system over the cells plus the magic sum: one row per line,
/// coefficient 1 for each cell on it and -1 in the final column.
inline linalg::Matrix line_system(int n) {
    const LineSet lines(n);
    const std::size_t cells = static_cast<std::size_t>(cell_count(n));
    linalg::Matrix a;
    for (const auto& line : lines) {
        linalg::Vector row(cells + 1, Rational(0));
        for (auto i : line.cells) row[i] = 1;
        row[cells] = -1;
        a.push_back(std::move(row));
    }
    return a;
}

/// Dimension of the space of order-n hexagons whose lines all sum to zero.
inline std::size_t homogeneous_nullity(int n) {
    const std::size_t cells = static_cast<std::size_t>(cell_count(n));
    auto a = line_system(n);
    for (auto& row : a) row.pop_back();
    return cells - linalg::rank(a, cells);
}

/// General order-n magic hexagon as a template: parameter m scales a
/// particular solution with every line summing to 1, and k1, k2, ... scale
/// an integral basis of the zero-sum hexagons. The magic form is m.
inline Template synthesize_template(int n) {
    require_order(n);
    const std::size_t cells = static_cast<std::size_t>(cell_count(n));
    const auto echelon = linalg::rref(line_system(n), cells + 1);
    const auto basis = linalg::nullspace_basis(echelon);

    std::optional<linalg::Vector> particular;
    std::vector<linalg::Vector> homogeneous;
    for (const auto& v : basis) {
        if (v[cells] != 0) {
            if (particular) throw TemplateError("magic-sum column is not a single free column");
            linalg::Vector p = v;
            const Rational scale = Rational(1) / v[cells];
            for (auto& x : p) x *= scale;
            particular = std::move(p);
        } else {
            homogeneous.push_back(linalg::make_integral(v));
        }
    }
    if (!particular) throw TemplateError("no hexagon with nonzero magic sum exists for this order");

    Template t;
    t.order = n;
    t.params.push_back("m");
    for (std::size_t k = 0; k < homogeneous.size(); ++k) t.params.push_back("k" + std::to_string(k + 1));
    std::vector<LinearForm> forms(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        forms[i].add_term("m", (*particular)[i]);
        for (std::size_t k = 0; k < homogeneous.size(); ++k) forms[i].add_term(t.params[k + 1], homogeneous[k][i]);
    }
    t.cells = HexArray<LinearForm>(n, std::move(forms));
    t.magic_form = LinearForm::parameter("m");
    validate(t);
    return t;
}

}  // namespace hexmagic
