#pragma once

// Centred hexagonal grids in axial coordinates.
//
// A grid of order n holds every (q, r) with max(|q|, |r|, |q + r|) <= n - 1.
// Cells are stored row-major: rows by r ascending, q ascending within a row.
// The three line directions are the coordinate-constant sets r = k, q = k and
// s = -q - r = k for k in [-(n-1), n-1].

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hexmagic {

struct HexCoord {
    int q = 0;
    int r = 0;

    constexpr int s() const { return -q - r; }

    friend constexpr bool operator==(const HexCoord&, const HexCoord&) = default;
    friend constexpr auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

inline void require_order(int n) {
    if (n < 1) throw std::invalid_argument("hexagon order must be at least 1");
}

/// Number of cells of an order-n hexagon, 3n^2 - 3n + 1.
inline std::int64_t cell_count(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("hexagon order must be at least 1");
    return 3 * n * n - 3 * n + 1;
}

constexpr bool in_bounds(HexCoord c, int n) {
    const int m = n - 1;
    return std::abs(c.q) <= m && std::abs(c.r) <= m && std::abs(c.s()) <= m;
}

/// Length of row r (constant-r line) in an order-n grid.
constexpr int row_length(int n, int r) { return 2 * n - 1 - std::abs(r); }

/// First q in row r.
constexpr int row_first_q(int n, int r) { return std::max(-(n - 1), -(n - 1) - r); }

/// Row-major index of an in-bounds coordinate.
inline std::size_t index_of(HexCoord c, int n) {
    if (!in_bounds(c, n)) throw std::out_of_range("coordinate outside hexagon");
    std::size_t idx = 0;
    for (int r = -(n - 1); r < c.r; ++r) idx += static_cast<std::size_t>(row_length(n, r));
    return idx + static_cast<std::size_t>(c.q - row_first_q(n, c.r));
}

/// All coordinates of an order-n grid in row-major order.
inline std::vector<HexCoord> coordinates(int n) {
    require_order(n);
    std::vector<HexCoord> out;
    out.reserve(static_cast<std::size_t>(cell_count(n)));
    for (int r = -(n - 1); r <= n - 1; ++r)
        for (int q = row_first_q(n, r), k = 0; k < row_length(n, r); ++q, ++k) out.push_back({q, r});
    return out;
}

enum class Direction : std::uint8_t { Row = 0, ConstQ = 1, ConstS = 2 };

struct Line {
    Direction direction;
    int value;                        // the constant coordinate
    std::vector<std::size_t> cells;   // row-major indices, in grid order
};

/// The 3(2n-1) lines of an order-n grid: rows by r ascending, then
/// constant-q lines by q ascending, then constant-s lines by s ascending.
class LineSet {
public:
    explicit LineSet(int n) : order_(n) {
        require_order(n);
        const auto coords = coordinates(n);
        for (int d = 0; d < 3; ++d) {
            for (int k = -(n - 1); k <= n - 1; ++k) {
                Line line{static_cast<Direction>(d), k, {}};
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    const HexCoord c = coords[i];
                    const int key = d == 0 ? c.r : (d == 1 ? c.q : c.s());
                    if (key == k) line.cells.push_back(i);
                }
                lines_.push_back(std::move(line));
            }
        }
    }

    int order() const { return order_; }
    std::size_t size() const { return lines_.size(); }
    const Line& operator[](std::size_t i) const { return lines_[i]; }
    auto begin() const { return lines_.begin(); }
    auto end() const { return lines_.end(); }

private:
    int order_;
    std::vector<Line> lines_;
};

inline LineSet line_set(int n) { return LineSet(n); }

/// Cell storage for an order-n hexagon; T is the cell value type.
template <class T>
class HexArray {
public:
    using value_type = T;

    HexArray() = default;

    explicit HexArray(int n, const T& fill = T{})
        : order_(n), cells_(static_cast<std::size_t>(cell_count(n)), fill) {}

    HexArray(int n, std::vector<T> cells) : order_(n), cells_(std::move(cells)) {
        if (cells_.size() != static_cast<std::size_t>(cell_count(n)))
            throw std::invalid_argument("cell vector does not match hexagon order");
    }

    int order() const { return order_; }
    std::size_t size() const { return cells_.size(); }

    T& operator[](std::size_t i) { return cells_[i]; }
    const T& operator[](std::size_t i) const { return cells_[i]; }
    T& at(HexCoord c) { return cells_[index_of(c, order_)]; }
    const T& at(HexCoord c) const { return cells_[index_of(c, order_)]; }

    std::span<const T> values() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    auto begin() { return cells_.begin(); }
    auto end() { return cells_.end(); }

    friend bool operator==(const HexArray&, const HexArray&) = default;

private:
    int order_ = 0;
    std::vector<T> cells_;
};

/// Element of the dihedral group of order 12 acting on a hexagon: the point
/// map is c -> R^rotation(F^reflect(c)) with R the 60 degree rotation
/// (q, r) -> (-r, q + r) and F the reflection (q, r) -> (q, -q - r).
struct SymmetryOp {
    int rotation = 0;       // 0..5
    bool reflect = false;

    static constexpr SymmetryOp identity() { return {}; }

    constexpr HexCoord apply(HexCoord c) const {
        if (reflect) c = {c.q, -c.q - c.r};
        for (int k = 0; k < rotation; ++k) c = {-c.r, c.q + c.r};
        return c;
    }

    /// (this * other)(c) = this(other(c)); uses F R = R^-1 F.
    constexpr SymmetryOp compose(const SymmetryOp& other) const {
        const int k = reflect ? rotation - other.rotation : rotation + other.rotation;
        return {((k % 6) + 6) % 6, reflect != other.reflect};
    }

    constexpr SymmetryOp inverse() const {
        if (reflect) return *this;
        return {(6 - rotation) % 6, false};
    }

    friend constexpr bool operator==(const SymmetryOp&, const SymmetryOp&) = default;
};

inline std::array<SymmetryOp, 12> all_symmetries() {
    std::array<SymmetryOp, 12> ops{};
    for (int f = 0; f < 2; ++f)
        for (int k = 0; k < 6; ++k) ops[static_cast<std::size_t>(f * 6 + k)] = {k, f == 1};
    return ops;
}

/// Index permutation induced by op: perm[i] is the destination of cell i.
inline std::vector<std::size_t> symmetry_permutation(int n, const SymmetryOp& op) {
    const auto coords = coordinates(n);
    std::vector<std::size_t> perm(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) perm[i] = index_of(op.apply(coords[i]), n);
    return perm;
}

template <class T>
HexArray<T> apply_symmetry(const HexArray<T>& h, const SymmetryOp& op) {
    const auto perm = symmetry_permutation(h.order(), op);
    HexArray<T> out(h.order());
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = h[i];
    return out;
}

/// Lexicographically smallest row-major value sequence among the 12 images.
template <class T, class Less = std::less<T>>
HexArray<T> canonical_form(const HexArray<T>& h, Less less = {}) {
    HexArray<T> best = h;
    for (const auto& op : all_symmetries()) {
        HexArray<T> image = apply_symmetry(h, op);
        if (std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end(), less))
            best = std::move(image);
    }
    return best;
}

/// Number of distinct images of h under the symmetry group.
template <class T>
std::size_t orbit_size(const HexArray<T>& h) {
    std::vector<HexArray<T>> seen;
    for (const auto& op : all_symmetries()) {
        auto image = apply_symmetry(h, op);
        if (std::find(seen.begin(), seen.end(), image) == seen.end()) seen.push_back(std::move(image));
    }
    return seen.size();
}

}  // namespace hexmagic
