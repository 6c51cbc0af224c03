#pragma once

// Exact Gauss-Jordan elimination over the rationals.
//
// Pivoting is deterministic: columns are scanned left to right and the pivot
// is the first row at or below the current rank with a nonzero entry. Row
// operations are mirrored into a transform matrix so that an inconsistent
// row can be traced back to the original equations it combines.

#include "hexmagic/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexmagic::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct Echelon {
    Matrix reduced;                        // all rows, reduced; rows >= rank are zero
    std::vector<std::size_t> pivots;       // pivot column of row i, i < rank
    Matrix transform;                      // reduced = transform * original
    std::size_t cols = 0;

    std::size_t rank() const { return pivots.size(); }
};

inline Echelon rref(Matrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    Matrix t(rows, Vector(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) t[i][i] = 1;

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::swap(t[p], t[rank]);
        const Rational inv = Rational(1) / a[rank][c];
        for (auto& v : a[rank]) v *= inv;
        for (auto& v : t[rank]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (a[rank][k] != 0) a[i][k] -= f * a[rank][k];
            for (std::size_t k = 0; k < rows; ++k)
                if (t[rank][k] != 0) t[i][k] -= f * t[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(a), std::move(pivots), std::move(t), cols};
}

inline std::vector<std::size_t> free_columns(const Echelon& e) {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < e.cols; ++c) {
        if (p < e.pivots.size() && e.pivots[p] == c) ++p;
        else out.push_back(c);
    }
    return out;
}

/// One basis vector per free column: x_free = 1, other free columns 0.
inline Matrix nullspace_basis(const Echelon& e) {
    Matrix basis;
    for (std::size_t f : free_columns(e)) {
        Vector v(e.cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Scales v by a positive rational so its entries are coprime integers.
inline Vector make_integral(Vector v) {
    Integer den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    Integer g = 0;
    for (auto& x : v) {
        x *= Rational(den);
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(x));
    }
    if (g > 1)
        for (auto& x : v) x /= Rational(g);
    return v;
}

class InconsistentSystem : public std::runtime_error {
public:
    explicit InconsistentSystem(std::vector<std::size_t> equations)
        : std::runtime_error(describe(equations)), equations_(std::move(equations)) {}

    /// Indices of original equations whose combination yields 0 = nonzero.
    const std::vector<std::size_t>& equations() const { return equations_; }

private:
    static std::string describe(const std::vector<std::size_t>& eqs) {
        std::string s = "inconsistent linear system; conflicting equations:";
        for (auto i : eqs) s += " #" + std::to_string(i + 1);
        return s;
    }
    std::vector<std::size_t> equations_;
};

/// Solves A x = b exactly; free variables are set to zero.
inline Vector solve(const Matrix& a, const Vector& b, std::size_t cols) {
    if (a.size() != b.size()) throw std::invalid_argument("right-hand side size mismatch");
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const Echelon e = rref(std::move(aug), cols + 1);
    if (!e.pivots.empty() && e.pivots.back() == cols) {
        std::vector<std::size_t> eqs;
        const auto& combo = e.transform[e.rank() - 1];
        for (std::size_t i = 0; i < combo.size(); ++i)
            if (combo[i] != 0) eqs.push_back(i);
        throw InconsistentSystem(std::move(eqs));
    }
    Vector x(cols, Rational(0));
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced[i][cols];
    return x;
}

inline std::size_t rank(const Matrix& a, std::size_t cols) { return rref(a, cols).rank(); }

}  // namespace hexmagic::linalg
