#include <catch_amalgamated.hpp>

#include "hexmagic/linalg.hpp"
#include "hexmagic/templates.hpp"

#include <random>

using namespace hexmagic;
using namespace hexmagic::linalg;

namespace {

Matrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m;
    for (auto r : rows) {
        Vector v;
        for (int x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

Vector multiply(const Matrix& a, const Vector& x) {
    Vector out;
    for (const auto& row : a) {
        Rational s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("rref of a small matrix", "[linalg]") {
    const Matrix a = from_ints({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}});
    const auto e = rref(a, 3);
    CHECK(e.rank() == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced[0] == Vector{1, 0, -1});
    CHECK(e.reduced[1] == Vector{0, 1, 2});
    CHECK(e.reduced[2] == Vector{0, 0, 0});
    // transform really maps the original rows onto the reduced ones
    for (std::size_t i = 0; i < 3; ++i) {
        Vector row(3, Rational(0));
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t j = 0; j < 3; ++j) row[j] += e.transform[i][k] * a[k][j];
        CHECK(row == e.reduced[i]);
    }
}

TEST_CASE("null space vectors are annihilated", "[linalg][property]") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> val(-3, 3), dim(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
        Matrix a(rows, Vector(cols));
        for (auto& r : a)
            for (auto& x : r) x = val(rng);
        const auto e = rref(a, cols);
        const auto basis = nullspace_basis(e);
        CHECK(basis.size() + e.rank() == cols);
        for (const auto& v : basis) {
            for (const auto& x : multiply(a, v)) CHECK(x == 0);
            const auto w = make_integral(v);
            for (const auto& x : w) CHECK(is_integer(x));
            for (const auto& x : multiply(a, w)) CHECK(x == 0);
        }
    }
}

TEST_CASE("solve returns a particular solution with free variables zero", "[linalg]") {
    const Matrix a = from_ints({{1, 1, 0}, {0, 1, 1}});
    const Vector x = solve(a, {Rational(3), Rational(5)}, 3);
    CHECK(x == Vector{-2, 5, 0});
}

TEST_CASE("inconsistent systems name the conflicting equations", "[linalg]") {
    const Matrix a = from_ints({{1, 0}, {1, 1}, {0, 1}, {1, 1}});
    try {
        solve(a, {Rational(0), Rational(0), Rational(7), Rational(1)}, 2);
        FAIL("expected InconsistentSystem");
    } catch (const InconsistentSystem& e) {
        // x = 0, x + y = 0 and y = 7 are the first rows that cannot hold together.
        CHECK(e.equations() == std::vector<std::size_t>{0, 1, 2});
    }
}

TEST_CASE("make_integral", "[linalg]") {
    CHECK(make_integral({Rational(1, 2), Rational(-1, 3), Rational(0)}) == Vector{3, -2, 0});
    CHECK(make_integral({Rational(4), Rational(6)}) == Vector{2, 3});
}

TEST_CASE("homogeneous nullity of the line-sum system", "[linalg][templates]") {
    // Frozen from an independent sympy rank computation of the 3(2n-1) x T
    // line incidence matrix.
    const std::vector<std::size_t> expected{0, 1, 7, 19, 37, 61, 91};
    for (int n = 1; n <= 7; ++n) CHECK(homogeneous_nullity(n) == expected[static_cast<std::size_t>(n - 1)]);
}
