#pragma once

#include "hexmagic/rational.hpp"

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexmagic {

/// Orders parameter names naturally: "k2" before "k10".
struct NaturalLess {
    using is_transparent = void;

    bool operator()(std::string_view a, std::string_view b) const {
        auto split = [](std::string_view s) {
            std::size_t i = s.size();
            while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
            return std::pair{s.substr(0, i), s.substr(i)};
        };
        auto [pa, da] = split(a);
        auto [pb, db] = split(b);
        if (pa != pb) return pa < pb;
        if (da.size() != db.size()) return da.size() < db.size();
        return da < db;
    }
};

using Assignment = std::map<std::string, Rational, NaturalLess>;

class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MissingParameter : public std::invalid_argument {
public:
    explicit MissingParameter(const std::string& name)
        : std::invalid_argument("no value for parameter '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// constant + sum of coefficient * parameter. Zero coefficients are never stored.
class LinearForm {
public:
    using Coefficients = std::map<std::string, Rational, NaturalLess>;

    LinearForm() = default;
    LinearForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT: implicit by intent

    static LinearForm parameter(const std::string& name, Rational coef = 1) {
        LinearForm f;
        f.add_term(name, coef);
        return f;
    }

    const Rational& constant() const { return constant_; }
    const Coefficients& coefficients() const { return coeffs_; }

    Rational coefficient(std::string_view name) const {
        auto it = coeffs_.find(name);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const { return coeffs_.empty(); }

    void add_term(const std::string& name, const Rational& coef) {
        if (coef == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(name, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LinearForm& operator+=(const LinearForm& o) {
        constant_ += o.constant_;
        for (const auto& [name, c] : o.coeffs_) add_term(name, c);
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        constant_ -= o.constant_;
        for (const auto& [name, c] : o.coeffs_) add_term(name, -c);
        return *this;
    }
    LinearForm& operator*=(const Rational& k) {
        if (k == 0) {
            *this = LinearForm{};
            return *this;
        }
        constant_ *= k;
        for (auto& [name, c] : coeffs_) c *= k;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rational& k) { return a *= k; }
    friend LinearForm operator*(const Rational& k, LinearForm a) { return a *= k; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    Rational evaluate(const Assignment& values) const {
        Rational v = constant_;
        for (const auto& [name, c] : coeffs_) {
            auto it = values.find(name);
            if (it == values.end()) throw MissingParameter(name);
            v += c * it->second;
        }
        return v;
    }

    std::set<std::string, NaturalLess> parameters() const {
        std::set<std::string, NaturalLess> out;
        for (const auto& [name, c] : coeffs_) out.insert(name);
        return out;
    }

private:
    Rational constant_ = 0;
    Coefficients coeffs_;
};

/// Compact spelling such as "2a+b-c+3" or "-3/2k1"; the zero form is "0".
inline std::string to_string(const LinearForm& f) {
    std::string out;
    for (const auto& [name, c] : f.coefficients()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (neg) out += '-';
        else if (!out.empty()) out += '+';
        if (mag != 1) out += to_string(mag);
        out += name;
    }
    const Rational& k = f.constant();
    if (k != 0 || out.empty()) {
        if (k >= 0 && !out.empty()) out += '+';
        out += to_string(k);
    }
    return out;
}

/// Inverse of to_string; also accepts unreduced term order and repeated names.
inline LinearForm parse_linear_form(std::string_view text) {
    auto fail = [&](const char* why) {
        throw FormatError(std::string(why) + " in linear form '" + std::string(text) + "'");
    };
    if (text.empty()) fail("empty term");
    LinearForm f;
    std::size_t i = 0;
    bool first = true;
    while (i < text.size()) {
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
        } else if (!first) {
            fail("missing operator");
        }
        first = false;
        std::size_t j = i;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
        Rational coef = 1;
        const bool has_number = j > i;
        if (has_number) {
            try {
                coef = parse_rational(text.substr(i, j - i));
            } catch (const NumberFormatError&) {
                fail("malformed coefficient");
            }
        }
        i = j;
        std::size_t k = i;
        if (k < text.size() && (std::isalpha(static_cast<unsigned char>(text[k])) || text[k] == '_')) {
            ++k;
            while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
        }
        if (k == i && !has_number) fail("empty term");
        if (neg) coef = -coef;
        if (k > i) f.add_term(std::string(text.substr(i, k - i)), coef);
        else f += LinearForm(coef);
        i = k;
    }
    return f;
}

}  // namespace hexmagic
