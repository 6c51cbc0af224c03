#pragma once

#include "hexmagic/hexagon.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hexmagic {

struct VerifyReport {
    bool is_magic = false;
    std::optional<Rational> magic_sum;
    std::vector<Rational> line_sums;   // in line_set order
    Rational entry_min = 0;
    Rational entry_max = 0;
    bool entries_distinct = false;
    bool is_normal = false;
};

inline std::vector<Rational> entry_multiset(const Hexagon& h) {
    std::vector<Rational> v(h.begin(), h.end());
    std::sort(v.begin(), v.end());
    return v;
}

inline VerifyReport verify(const Hexagon& h) {
    VerifyReport rep;
    rep.line_sums = line_sums(h);
    rep.is_magic = std::all_of(rep.line_sums.begin(), rep.line_sums.end(),
                               [&](const Rational& s) { return s == rep.line_sums.front(); });
    if (rep.is_magic) rep.magic_sum = rep.line_sums.front();

    const auto sorted = entry_multiset(h);
    rep.entry_min = sorted.front();
    rep.entry_max = sorted.back();
    rep.entries_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    // Normal: exactly the integers 1..T, each once.
    bool normal = rep.is_magic;
    for (std::size_t i = 0; normal && i < sorted.size(); ++i)
        normal = sorted[i] == Rational(static_cast<long long>(i + 1));
    rep.is_normal = normal;
    return rep;
}

inline bool is_magic(const Hexagon& h) { return verify(h).is_magic; }

/// The magic sum a normal order-n hexagon would need: with T = 3n^2-3n+1
/// and S = T(T+1)/2 the 2n-1 parallel rows share S, so M = S/(2n-1) when
/// that division is exact.
///
/// Writing m = 2n-1 gives 4T = 3m^2 + 1, hence 4T = 1 (mod m) and
/// 32S = 4T(4T+4) = 5 (mod m). Exact division therefore forces m | 5, so
/// only n = 1 (M = 1) and n = 3 (M = 38) survive.
inline std::optional<std::int64_t> normal_magic_sum(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("hexagon order must be at least 1");
    if (n > 1'000'000'000) throw std::invalid_argument("hexagon order too large");
    using u128 = unsigned __int128;
    const u128 t = static_cast<u128>(3) * static_cast<u128>(n) * static_cast<u128>(n - 1) + 1;
    const u128 s = t * (t + 1) / 2;
    const u128 rows = static_cast<u128>(2 * n - 1);
    if (s % rows != 0) return std::nullopt;
    return static_cast<std::int64_t>(s / rows);
}

/// Orders in 1..n_max whose normal magic sum is integral.
inline std::vector<std::int64_t> normal_existence_scan(std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= n_max; ++n)
        if (normal_magic_sum(n)) out.push_back(n);
    return out;
}

}  // namespace hexmagic
