#pragma once

// Shared generators and oracles for the test suites.

#include "hexmagic/hexmagic.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <vector>

namespace hexmagic::testing {

inline std::filesystem::path corpus() { return default_corpus_dir(); }

inline std::filesystem::path corpus_hexagon(const std::string& name) { return corpus() / "hexagons" / name; }

inline Rational random_rational(std::mt19937_64& rng, int num_range = 50, int den_max = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline Hexagon random_hexagon(std::mt19937_64& rng, int n) {
    Hexagon h(n);
    for (auto& v : h) v = random_rational(rng);
    return h;
}

/// Random magic hexagon: a synthesized template at random small values.
inline Hexagon random_magic_hexagon(std::mt19937_64& rng, const Template& t) {
    Assignment a;
    for (const auto& p : t.params) a[p] = random_rational(rng, 20, 4);
    return instantiate(t, a);
}

/// Oracle: every labeled magic arrangement of the given entries on the
/// free cells of `partial`, by plain permutation enumeration with no pruning.
inline std::vector<Hexagon> brute_force_completions(int n, std::vector<Rational> remaining,
                                                    const std::vector<std::optional<Rational>>& partial,
                                                    const Rational& target) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < partial.size(); ++i)
        if (!partial[i]) free.push_back(i);
    std::sort(remaining.begin(), remaining.end());
    std::vector<Hexagon> out;
    Hexagon h(n);
    for (std::size_t i = 0; i < partial.size(); ++i)
        if (partial[i]) h[i] = *partial[i];
    const LineSet lines(n);
    do {
        for (std::size_t k = 0; k < free.size(); ++k) h[free[k]] = remaining[k];
        bool ok = true;
        for (const auto& line : lines) {
            Rational s = 0;
            for (auto c : line.cells) s += h[c];
            if (s != target) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(h);
    } while (std::next_permutation(remaining.begin(), remaining.end()));
    return out;
}

inline std::vector<Rational> integer_range(long long lo, long long hi) {
    std::vector<Rational> v;
    for (long long x = lo; x <= hi; ++x) v.emplace_back(x);
    return v;
}

}  // namespace hexmagic::testing
