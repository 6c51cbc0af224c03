#pragma once

// Exhaustive enumeration of magic hexagons over a fixed entry multiset.
//
// Cells are filled in row-major order, which completes the top row first and
// then every further row, and walks each diagonal front to back, so lines
// close as early as the geometry allows. After each placement the three
// lines through the cell are checked: a closed line must hit the target, an
// open line with k cells left must leave a gap the k smallest / largest
// remaining entries can bridge. Equal entries are branched on once per
// depth, so each labeled hexagon is produced exactly once.
//
// Work is split on the values of the first two open cells; each subtree is
// an independent task and results are merged in task order.

#include "hexmagic/hexagon.hpp"
#include "hexmagic/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hexmagic {

enum class SearchMode { AllSolutions, FirstSolution, CountCanonical };

struct SearchSpec {
    int order = 3;
    std::vector<Rational> entries;   // multiset; each used exactly once
    Rational target_sum = 0;
    SearchMode mode = SearchMode::AllSolutions;
    unsigned workers = 1;
    std::vector<Rational> prefix;    // fixed values for the first cells in row-major order
};

struct SearchResult {
    std::vector<Hexagon> canonical_solutions;  // sorted; empty in CountCanonical mode
    std::size_t canonical_count = 0;
    std::uint64_t labeled_count = 0;
    std::uint64_t nodes_expanded = 0;
};

class InfeasibleSearch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws InfeasibleSearch when the entry count or total rules out any solution.
inline void check_search_spec(const SearchSpec& spec) {
    require_order(spec.order);
    const auto cells = static_cast<std::size_t>(cell_count(spec.order));
    if (spec.entries.size() != cells)
        throw InfeasibleSearch("order " + std::to_string(spec.order) + " needs " + std::to_string(cells) +
                               " entries, got " + std::to_string(spec.entries.size()));
    Rational total = 0;
    for (const auto& e : spec.entries) total += e;
    const Rational needed = spec.target_sum * (2 * spec.order - 1);
    if (total != needed)
        throw InfeasibleSearch("entries total " + to_string(total) + " but " + std::to_string(2 * spec.order - 1) +
                               " rows of sum " + to_string(spec.target_sum) + " need " + to_string(needed));
    if (spec.prefix.size() > cells) throw InfeasibleSearch("prefix longer than the hexagon");
}

namespace detail {

/// Remaining-entry bounds: sums of the k smallest and k largest values.
template <class Counts>
inline std::pair<std::int64_t, std::int64_t> extreme_sums(const std::vector<std::int64_t>& vals, const Counts& counts,
                                                          int k) {
    std::int64_t lo = 0, hi = 0;
    int need = k;
    for (std::size_t v = 0; v < vals.size() && need > 0; ++v) {
        const int take = std::min<int>(need, counts[v]);
        lo += take * vals[v];
        need -= take;
    }
    need = k;
    for (std::size_t v = vals.size(); v-- > 0 && need > 0;) {
        const int take = std::min<int>(need, counts[v]);
        hi += take * vals[v];
        need -= take;
    }
    return {lo, hi};
}

class SearchEngine {
public:
    using Key = std::vector<std::uint16_t>;

    explicit SearchEngine(const SearchSpec& spec) : spec_(spec), n_(spec.order) {
        check_search_spec(spec);
        cells_ = static_cast<std::size_t>(cell_count(n_));

        // Common denominator so the search runs on exact 64-bit integers.
        Integer den = boost::multiprecision::denominator(spec.target_sum);
        for (const auto& e : spec.entries) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(e));
        std::map<Rational, int> distinct;
        for (const auto& e : spec.entries) ++distinct[e];
        const Integer limit = Integer(std::numeric_limits<std::int64_t>::max() / 4) / Integer(cells_ + 1);
        for (const auto& [value, count] : distinct) {
            const Integer scaled = boost::multiprecision::numerator(value * Rational(den));
            if (boost::multiprecision::abs(scaled) > limit) throw InfeasibleSearch("entry magnitude too large");
            vals_.push_back(scaled.convert_to<std::int64_t>());
            values_.push_back(value);
            counts_.push_back(count);
        }
        target_ = boost::multiprecision::numerator(spec.target_sum * Rational(den)).convert_to<std::int64_t>();

        const LineSet lines(n_);
        cell_lines_.assign(cells_, {});
        remaining_after_.assign(cells_, {});
        for (std::size_t li = 0; li < lines.size(); ++li) {
            const auto& line = lines[li];
            const auto d = static_cast<std::size_t>(line.direction);
            for (std::size_t pos = 0; pos < line.cells.size(); ++pos) {
                cell_lines_[line.cells[pos]][d] = static_cast<int>(li);
                remaining_after_[line.cells[pos]][d] = static_cast<int>(line.cells.size() - pos - 1);
            }
        }
        line_count_ = lines.size();
        for (const auto& op : all_symmetries()) perms_.push_back(symmetry_permutation(n_, op));
    }

    SearchResult run() const {
        // Prefix placement.
        State root = fresh_state();
        std::uint64_t nodes = 0;
        for (std::size_t i = 0; i < spec_.prefix.size(); ++i) {
            auto it = std::find(values_.begin(), values_.end(), spec_.prefix[i]);
            if (it == values_.end()) return {};
            const auto v = static_cast<std::size_t>(it - values_.begin());
            if (root.counts[v] == 0 || !place(root, i, v)) return {};
            ++nodes;
        }

        // Split the next two open cells into tasks.
        const std::size_t start = spec_.prefix.size();
        std::vector<std::vector<std::size_t>> tasks;
        if (start + 2 <= cells_ && spec_.mode != SearchMode::FirstSolution) {
            State s = root;
            for (std::size_t a = 0; a < vals_.size(); ++a) {
                if (s.counts[a] == 0 || !place(s, start, a)) continue;
                ++nodes;
                for (std::size_t b = 0; b < vals_.size(); ++b) {
                    if (s.counts[b] == 0 || !place(s, start + 1, b)) continue;
                    ++nodes;
                    tasks.push_back({a, b});
                    unplace(s, start + 1, b);
                }
                unplace(s, start, a);
            }
        } else {
            tasks.push_back({});
        }

        std::vector<TaskResult> results(tasks.size());
        auto run_task = [&](std::size_t t) {
            State s = root;
            for (std::size_t k = 0; k < tasks[t].size(); ++k) place(s, start + k, tasks[t][k]);
            dfs(s, start + tasks[t].size(), results[t]);
        };
        const unsigned workers = std::max(1u, std::min<unsigned>(spec_.workers, static_cast<unsigned>(tasks.size())));
        if (workers == 1) {
            for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) run_task(t);
                });
            for (auto& th : pool) th.join();
        }

        SearchResult out;
        std::set<Key> keys;
        out.nodes_expanded = nodes;
        for (auto& r : results) {
            out.labeled_count += r.labeled;
            out.nodes_expanded += r.nodes;
            keys.insert(r.keys.begin(), r.keys.end());
        }
        out.canonical_count = keys.size();
        if (spec_.mode != SearchMode::CountCanonical)
            for (const auto& k : keys) out.canonical_solutions.push_back(to_hexagon(k));
        return out;
    }

    /// Sound pruning predicate on a partial assignment in row-major order.
    bool feasible(const std::vector<std::optional<Rational>>& partial) const {
        if (partial.size() != cells_) throw std::invalid_argument("partial assignment has the wrong size");
        std::vector<int> counts = counts_;
        std::vector<std::int64_t> sums(line_count_, 0);
        std::vector<int> open(line_count_, 0);
        for (std::size_t i = 0; i < cells_; ++i) {
            for (int l : cell_lines_[i]) ++open[static_cast<std::size_t>(l)];
            if (!partial[i]) continue;
            auto it = std::find(values_.begin(), values_.end(), *partial[i]);
            if (it == values_.end()) return false;
            const auto v = static_cast<std::size_t>(it - values_.begin());
            if (counts[v]-- == 0) return false;
            for (int l : cell_lines_[i]) {
                sums[static_cast<std::size_t>(l)] += vals_[v];
                --open[static_cast<std::size_t>(l)];
            }
        }
        for (std::size_t l = 0; l < line_count_; ++l) {
            if (open[l] == 0) {
                if (sums[l] != target_) return false;
                continue;
            }
            auto [lo, hi] = extreme_sums(vals_, counts, open[l]);
            if (sums[l] + lo > target_ || sums[l] + hi < target_) return false;
        }
        return true;
    }

private:
    struct State {
        std::vector<int> counts;
        std::vector<std::int64_t> line_sum;
        Key cell;  // value index per cell
    };

    struct TaskResult {
        std::uint64_t labeled = 0;
        std::uint64_t nodes = 0;
        std::set<Key> keys;
        bool stop = false;
    };

    State fresh_state() const { return {counts_, std::vector<std::int64_t>(line_count_, 0), Key(cells_, 0)}; }

    bool place(State& s, std::size_t cell, std::size_t v) const {
        --s.counts[v];
        s.cell[cell] = static_cast<std::uint16_t>(v);
        for (int l : cell_lines_[cell]) s.line_sum[static_cast<std::size_t>(l)] += vals_[v];
        for (std::size_t d = 0; d < 3; ++d) {
            const std::int64_t sum = s.line_sum[static_cast<std::size_t>(cell_lines_[cell][d])];
            const int left = remaining_after_[cell][d];
            bool ok = sum == target_;
            if (left > 0) {
                auto [lo, hi] = extreme_sums(vals_, s.counts, left);
                ok = sum + lo <= target_ && sum + hi >= target_;
            }
            if (!ok) {
                unplace(s, cell, v);
                return false;
            }
        }
        return true;
    }

    void unplace(State& s, std::size_t cell, std::size_t v) const {
        ++s.counts[v];
        for (int l : cell_lines_[cell]) s.line_sum[static_cast<std::size_t>(l)] -= vals_[v];
    }

    void dfs(State& s, std::size_t depth, TaskResult& out) const {
        if (depth == cells_) {
            ++out.labeled;
            out.keys.insert(canonical_key(s.cell));
            if (spec_.mode == SearchMode::FirstSolution) out.stop = true;
            return;
        }
        for (std::size_t v = 0; v < vals_.size() && !out.stop; ++v) {
            if (s.counts[v] == 0 || !place(s, depth, v)) continue;
            ++out.nodes;
            dfs(s, depth + 1, out);
            unplace(s, depth, v);
        }
    }

    Key canonical_key(const Key& cells) const {
        Key best = cells, image(cells_);
        for (const auto& perm : perms_) {
            for (std::size_t i = 0; i < cells_; ++i) image[perm[i]] = cells[i];
            if (image < best) best = image;
        }
        return best;
    }

    Hexagon to_hexagon(const Key& k) const {
        Hexagon h(n_);
        for (std::size_t i = 0; i < cells_; ++i) h[i] = values_[k[i]];
        return h;
    }

    const SearchSpec& spec_;
    int n_;
    std::size_t cells_ = 0;
    std::size_t line_count_ = 0;
    std::vector<std::int64_t> vals_;   // ascending, scaled
    std::vector<Rational> values_;     // ascending, exact
    std::vector<int> counts_;
    std::int64_t target_ = 0;
    std::vector<std::array<int, 3>> cell_lines_;
    std::vector<std::array<int, 3>> remaining_after_;
    std::vector<std::vector<std::size_t>> perms_;
};

}  // namespace detail

inline SearchResult enumerate(const SearchSpec& spec) { return detail::SearchEngine(spec).run(); }

/// False only when no completion of the partial assignment can be magic
/// with the spec's entries and target. Unassigned cells are nullopt.
inline bool is_extension_feasible(const SearchSpec& spec, const std::vector<std::optional<Rational>>& partial) {
    return detail::SearchEngine(spec).feasible(partial);
}

/// Entries 1..T with the normal magic sum; nullopt when none is integral.
inline std::optional<SearchSpec> normal_search_spec(int n) {
    const auto m = normal_magic_sum(n);
    if (!m) return std::nullopt;
    SearchSpec spec;
    spec.order = n;
    for (std::int64_t v = 1; v <= cell_count(n); ++v) spec.entries.emplace_back(v);
    spec.target_sum = *m;
    return spec;
}

}  // namespace hexmagic
