#include <catch_amalgamated.hpp>

#include "support.hpp"

#include <set>

using namespace hexmagic;
namespace ht = hexmagic::testing;

namespace {

std::vector<Rational> sorted_entries(const Hexagon& h) { return entry_multiset(h); }

std::vector<Rational> cells(const Hexagon& h) { return {h.values().begin(), h.values().end()}; }

std::set<std::vector<Rational>> canonical_set(const std::vector<Hexagon>& hs) {
    std::set<std::vector<Rational>> out;
    for (const auto& h : hs) out.insert(cells(canonical_form(h)));
    return out;
}

std::uint64_t orbit_total(const std::vector<Hexagon>& hs) {
    std::uint64_t total = 0;
    for (const auto& h : hs) total += orbit_size(h);
    return total;
}

}  // namespace

TEST_CASE("normal order-3 enumeration", "[search]") {
    auto spec = normal_search_spec(3);
    REQUIRE(spec);
    CHECK(spec->target_sum == 38);
    const auto res = enumerate(*spec);
    CHECK(res.canonical_count == 1);
    CHECK(res.labeled_count == 12);
    REQUIRE(res.canonical_solutions.size() == 1);
    const Hexagon& h = res.canonical_solutions.front();
    CHECK(verify(h).is_normal);
    CHECK(h == canonical_form(load_hexagon(ht::corpus_hexagon("order3-normal.hex"))));
    CHECK(orbit_total(res.canonical_solutions) == res.labeled_count);
}

TEST_CASE("infeasible specs are refused", "[search]") {
    CHECK_FALSE(normal_search_spec(2));
    SearchSpec spec;
    spec.order = 2;
    spec.entries = ht::integer_range(1, 7);
    // Consistent total but no arrangement exists.
    spec.target_sum = Rational(28, 3);
    CHECK(enumerate(spec).canonical_count == 0);
    spec.target_sum = 9;
    CHECK_THROWS_AS(enumerate(spec), InfeasibleSearch);
    spec.entries = ht::integer_range(1, 6);
    CHECK_THROWS_AS(enumerate(spec), InfeasibleSearch);
}

TEST_CASE("solutions are sound, canonical and sorted", "[search]") {
    // Entries of a zero-sum order-2 pattern with repetitions.
    const Template t = synthesize_template(2);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Assignment a;
        for (const auto& p : t.params) a[p] = std::uniform_int_distribution<int>(-4, 4)(rng);
        const Hexagon seed = instantiate(t, a);
        SearchSpec spec;
        spec.order = 2;
        spec.entries = sorted_entries(seed);
        spec.target_sum = *verify(seed).magic_sum;
        const auto res = enumerate(spec);
        REQUIRE(res.canonical_count >= 1);
        CHECK(std::is_sorted(res.canonical_solutions.begin(), res.canonical_solutions.end(),
                             [](const Hexagon& x, const Hexagon& y) { return cells(x) < cells(y); }));
        for (const auto& h : res.canonical_solutions) {
            CHECK(verify(h).magic_sum == spec.target_sum);
            CHECK(sorted_entries(h) == spec.entries);
            CHECK(canonical_form(h) == h);
        }
        CHECK(orbit_total(res.canonical_solutions) == res.labeled_count);
        CHECK(canonical_set({canonical_form(seed)}).size() == 1);
        CHECK(canonical_set(res.canonical_solutions).count(cells(canonical_form(seed))) == 1);
    }
}

TEST_CASE("search agrees with brute force on order 2", "[search][oracle]") {
    const Template t = synthesize_template(2);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        Assignment a;
        for (const auto& p : t.params) a[p] = std::uniform_int_distribution<int>(-6, 6)(rng);
        const Hexagon seed = instantiate(t, a);
        SearchSpec spec;
        spec.order = 2;
        spec.entries = sorted_entries(seed);
        spec.target_sum = *verify(seed).magic_sum;
        const auto brute = ht::brute_force_completions(2, spec.entries, std::vector<std::optional<Rational>>(7),
                                                       spec.target_sum);
        const auto res = enumerate(spec);
        CHECK(res.labeled_count == brute.size());
        CHECK(canonical_set(res.canonical_solutions) == canonical_set(brute));
    }
}

TEST_CASE("prefix-seeded order-3 search agrees with brute force", "[search][oracle]") {
    auto spec = normal_search_spec(3);
    REQUIRE(spec);
    const Hexagon normal = load_hexagon(ht::corpus_hexagon("order3-normal.hex"));
    std::mt19937_64 rng(5);
    std::vector<std::vector<Rational>> prefixes;
    for (const auto& op : all_symmetries()) {
        const auto v = cells(apply_symmetry(normal, op));
        prefixes.emplace_back(v.begin(), v.begin() + 11);
    }
    // Random prefixes, almost always dead ends.
    for (int trial = 0; trial < 6; ++trial) {
        auto v = ht::integer_range(1, 19);
        std::shuffle(v.begin(), v.end(), rng);
        prefixes.emplace_back(v.begin(), v.begin() + 11);
    }
    for (const auto& prefix : prefixes) {
        std::vector<std::optional<Rational>> partial(19);
        std::vector<Rational> remaining = ht::integer_range(1, 19);
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            partial[i] = prefix[i];
            remaining.erase(std::find(remaining.begin(), remaining.end(), prefix[i]));
        }
        const auto brute = ht::brute_force_completions(3, remaining, partial, 38);
        SearchSpec s = *spec;
        s.prefix = prefix;
        const auto res = enumerate(s);
        CHECK(res.labeled_count == brute.size());
        CHECK(canonical_set(res.canonical_solutions) == canonical_set(brute));
    }
}

TEST_CASE("worker count does not change results", "[search]") {
    const Template t = synthesize_template(3);
    std::mt19937_64 rng(8);
    Assignment a;
    for (const auto& p : t.params) a[p] = std::uniform_int_distribution<int>(-3, 3)(rng);
    a["m"] = 0;
    SearchSpec spec;
    spec.order = 3;
    spec.entries = sorted_entries(instantiate(t, a));
    spec.target_sum = 0;
    spec.prefix = {instantiate(t, a)[0]};
    const auto one = enumerate(spec);
    spec.workers = 3;
    const auto three = enumerate(spec);
    CHECK(one.canonical_solutions == three.canonical_solutions);
    CHECK(one.labeled_count == three.labeled_count);
    CHECK(one.nodes_expanded == three.nodes_expanded);
    spec.mode = SearchMode::CountCanonical;
    const auto counted = enumerate(spec);
    CHECK(counted.canonical_count == one.canonical_count);
    CHECK(counted.canonical_solutions.empty());
}

TEST_CASE("first-solution mode stops early", "[search]") {
    auto spec = normal_search_spec(3);
    spec->mode = SearchMode::FirstSolution;
    const auto res = enumerate(*spec);
    CHECK(res.labeled_count == 1);
    REQUIRE(res.canonical_solutions.size() == 1);
    CHECK(verify(res.canonical_solutions.front()).is_normal);
}

TEST_CASE("is_extension_feasible", "[search][pruning]") {
    auto spec = normal_search_spec(3);
    REQUIRE(spec);
    std::vector<std::optional<Rational>> partial(19);
    CHECK(is_extension_feasible(*spec, partial));
    // A top row summing to 38 is allowed; one summing to 39 is not.
    partial[0] = 3, partial[1] = 17, partial[2] = 18;
    CHECK(is_extension_feasible(*spec, partial));
    partial[2] = 19;
    CHECK_FALSE(is_extension_feasible(*spec, partial));
    // 1+2+3 in the second row cannot be rescued by 19 in its last cell.
    partial = std::vector<std::optional<Rational>>(19);
    partial[3] = 1;
    partial[4] = 2;
    CHECK(is_extension_feasible(*spec, partial));
    partial[5] = 3;
    CHECK_FALSE(is_extension_feasible(*spec, partial));
    // Values outside the multiset or used twice.
    partial = std::vector<std::optional<Rational>>(19);
    partial[0] = 20;
    CHECK_FALSE(is_extension_feasible(*spec, partial));
    partial[0] = 5, partial[5] = 5;
    CHECK_FALSE(is_extension_feasible(*spec, partial));
    CHECK_THROWS_AS(is_extension_feasible(*spec, std::vector<std::optional<Rational>>(18)), std::invalid_argument);
}

TEST_CASE("pruning never rejects a real solution", "[search][pruning][property]") {
    const auto spec = normal_search_spec(3);
    const Hexagon normal = load_hexagon(ht::corpus_hexagon("order3-normal.hex"));
    std::mt19937_64 rng(41);
    std::bernoulli_distribution keep(0.5);
    for (const auto& op : all_symmetries()) {
        const Hexagon h = apply_symmetry(normal, op);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::optional<Rational>> partial(19);
            for (std::size_t i = 0; i < 19; ++i)
                if (keep(rng)) partial[i] = h[i];
            CHECK(is_extension_feasible(*spec, partial));
        }
    }
    // Same property on order-2 zero-sum patterns.
    const Template t = synthesize_template(2);
    for (int trial = 0; trial < 100; ++trial) {
        Assignment a;
        for (const auto& p : t.params) a[p] = std::uniform_int_distribution<int>(-9, 9)(rng);
        const Hexagon h = instantiate(t, a);
        SearchSpec s;
        s.order = 2;
        s.entries = sorted_entries(h);
        s.target_sum = *verify(h).magic_sum;
        std::vector<std::optional<Rational>> partial(7);
        for (std::size_t i = 0; i < 7; ++i)
            if (keep(rng)) partial[i] = h[i];
        CHECK(is_extension_feasible(s, partial));
    }
}
