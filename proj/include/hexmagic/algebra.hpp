#pragma once

// Linear combinations of hexagons, derivation recipes and the
// multiplicative (line-product) form of templates.
//
// Recipe files:
//
//   hexmagic-recipe v1
//   term: <coef> <hexagon-file>       (one or more; paths relative to the recipe)
//   expect-magic: <rational>          (optional cross-check)

#include "hexmagic/hexagon.hpp"
#include "hexmagic/templates.hpp"
#include "hexmagic/verifier.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexmagic {

struct Term {
    Rational coefficient;
    Hexagon hexagon;
};

struct Combination {
    std::vector<Term> terms;
};

class DerivationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Hexagon combine(const Combination& c) {
    if (c.terms.empty()) throw std::invalid_argument("empty combination");
    const int n = c.terms.front().hexagon.order();
    Hexagon out(n);
    for (const auto& term : c.terms) {
        if (term.hexagon.order() != n) throw std::invalid_argument("combination mixes hexagon orders");
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += term.coefficient * term.hexagon[i];
    }
    return out;
}

struct Recipe {
    struct Entry {
        Rational coefficient;
        std::filesystem::path file;
    };
    std::vector<Entry> terms;
    std::optional<Rational> expect_magic;
};

inline Recipe parse_recipe(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty() || lines[0].text != "hexmagic-recipe v1")
        throw ParseError("missing 'hexmagic-recipe v1' header", lines.empty() ? 1 : lines[0].number);
    Recipe r;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        try {
            if (detail::has_key(line, "term")) {
                const auto tok = detail::split_ws(detail::expect_key(line, "term"));
                if (tok.size() != 2) throw ParseError("term needs a coefficient and a file", line.number);
                r.terms.push_back({parse_rational(tok[0]), std::filesystem::path(std::string(tok[1]))});
            } else if (detail::has_key(line, "expect-magic")) {
                if (r.expect_magic) throw ParseError("duplicate expect-magic", line.number);
                r.expect_magic = parse_rational(detail::expect_key(line, "expect-magic"));
            } else {
                throw ParseError("unknown recipe line '" + line.text + "'", line.number);
            }
        } catch (const NumberFormatError& e) {
            throw ParseError(e.what(), line.number);
        }
    }
    if (r.terms.empty()) throw ParseError("recipe has no terms");
    return r;
}

/// Loads the recipe's hexagons (relative to the recipe's directory),
/// combines them and checks the expected magic sum when one is given.
inline Hexagon run_recipe(const std::filesystem::path& recipe_path) {
    const Recipe r = parse_recipe(read_text_file(recipe_path));
    Combination c;
    for (const auto& e : r.terms) {
        const auto file = e.file.is_absolute() ? e.file : recipe_path.parent_path() / e.file;
        if (!std::filesystem::exists(file)) throw DerivationError("recipe input missing: " + file.string());
        c.terms.push_back({e.coefficient, load_hexagon(file)});
    }
    Hexagon h = combine(c);
    if (r.expect_magic) {
        const auto rep = verify(h);
        if (!rep.is_magic) throw DerivationError(recipe_path.filename().string() + ": result is not magic");
        if (*rep.magic_sum != *r.expect_magic)
            throw DerivationError(recipe_path.filename().string() + ": magic sum " + to_string(*rep.magic_sum) +
                                  ", expected " + to_string(*r.expect_magic));
    }
    return h;
}

/// Runs corpus/recipes/<id>.recipe.
inline Hexagon derive_corpus_hexagon(std::string_view recipe_id,
                                     const std::filesystem::path& corpus = default_corpus_dir()) {
    const auto path = corpus / "recipes" / (std::string(recipe_id) + ".recipe");
    if (!std::filesystem::exists(path)) throw DerivationError("no recipe " + path.string());
    return run_recipe(path);
}

// ---------------------------------------------------------------------------
// Multiplicative hexagons: a cell form c1*p1 + c2*p2 + ... becomes the
// product p1^c1 * p2^c2 * ..., turning equal line sums into equal line
// products.

class MultiplicativeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline long long integer_exponent(const Rational& c, const std::string& name) {
    if (!is_integer(c)) throw MultiplicativeError("non-integer exponent for parameter '" + name + "'");
    const Integer& v = boost::multiprecision::numerator(c);
    if (boost::multiprecision::abs(v) > 1'000'000) throw MultiplicativeError("exponent too large");
    return v.convert_to<long long>();
}

/// Product value of a form under the exponent map; constants must be zero.
inline Rational exponentiate(const LinearForm& f, const Assignment& values) {
    if (f.constant() != 0) throw MultiplicativeError("form has a nonzero constant term: " + to_string(f));
    Rational out = 1;
    for (const auto& [name, c] : f.coefficients()) {
        auto it = values.find(name);
        if (it == values.end()) throw MissingParameter(name);
        out *= pow(it->second, integer_exponent(c, name));
    }
    return out;
}

inline Hexagon to_multiplicative(const Template& t, const Assignment& values) {
    for (const auto& p : t.params) {
        auto it = values.find(p);
        if (it == values.end()) throw MissingParameter(p);
        if (it->second == 0) throw MultiplicativeError("parameter '" + p + "' is zero");
    }
    Hexagon h(t.order);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = exponentiate(t.cells[i], values);
    return h;
}

/// Expected common line product of to_multiplicative(t, values).
inline Rational template_magic_product(const Template& t, const Assignment& values) {
    return exponentiate(t.magic_form, values);
}

inline std::vector<Rational> line_products(const Hexagon& h) {
    for (const auto& v : h)
        if (v == 0) throw std::domain_error("zero cell in multiplicative hexagon");
    const LineSet lines(h.order());
    std::vector<Rational> out;
    for (const auto& line : lines) {
        Rational p = 1;
        for (auto i : line.cells) p *= h[i];
        out.push_back(std::move(p));
    }
    return out;
}

inline std::optional<Rational> magic_product(const Hexagon& h) {
    const auto prods = line_products(h);
    for (const auto& p : prods)
        if (p != prods.front()) return std::nullopt;
    return prods.front();
}

}  // namespace hexmagic
