#include <doctest.h>

#include "support.hh"

#include <rainbow/families.hh>
#include <rainbow/io.hh>
#include <rainbow/rainbow_check.hh>
#include <rainbow/solver.hh>

using namespace rainbow;
using namespace rainbow::test;

namespace
{
    auto bits_of(const std::vector<ColorSet> & family) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        for (auto & s : family)
            out.push_back(s.bits());
        return out;
    }

    auto check_tree_witness(const Graph & g, const EdgeColoring & c, const Triple & s,
            const std::vector<EdgeIndex> & witness) -> void
    {
        unsigned mask = 0;
        REQUIRE(is_tree_edges(g, witness, mask));
        for (auto x : s)
            CHECK((mask & (1u << x)));
        std::set<Color> colours;
        for (auto e : witness)
            colours.insert(c[e]);
        CHECK(colours.size() == witness.size());
    }

    auto first_failing_by_oracle(const Graph & g, const EdgeColoring & c) -> std::vector<Vertex>
    {
        auto masks = brute_rainbow_tree_masks(g, c);
        for (Vertex a = 0 ; a < g.size() ; ++a)
            for (Vertex b = a + 1 ; b < g.size() ; ++b)
                for (Vertex d = b + 1 ; d < g.size() ; ++d)
                    if (! brute_has_rainbow_tree(masks, { a, b, d }))
                        return { a, b, d };
        return { };
    }
}

TEST_CASE("colouring validation")
{
    auto g = path(3);
    CHECK_NOTHROW(validate_coloring(g, coloring({ 0, 1 })));
    CHECK_THROWS_AS(validate_coloring(g, coloring({ 0 })), GraphError);
    CHECK_THROWS_AS(validate_coloring(g, EdgeColoring{ { 0, 2 }, 2 }), GraphError);
    CHECK_THROWS_AS(validate_coloring(g, EdgeColoring{ { 0, -1 }, 2 }), GraphError);
    CHECK(EdgeColoring{ { 0, 0, 3 }, 5 }.colors_used() == 2);
    CHECK(distinct_coloring(cycle(4)).colors == std::vector<Color>{ 0, 1, 2, 3 });
}

TEST_CASE("ColorSet operations")
{
    auto a = ColorSet::single(3).with(5), b = ColorSet::single(4);
    CHECK(a.size() == 2);
    CHECK(a.contains(5));
    CHECK(a.disjoint(b));
    CHECK(! a.disjoint(ColorSet::single(5)));
    CHECK(ColorSet::single(5).subset_of(a));
    CHECK(a.united(b).members() == std::vector<Color>{ 3, 4, 5 });
    CHECK(ColorSet{ }.empty());
    CHECK(ColorSet::single(63).contains(63));
}

TEST_CASE("rainbow_reach examples")
{
    auto p3 = path(3);
    CHECK(bits_of(rainbow_reach(p3, coloring({ 0, 1 }), 0).to(2)) == std::vector<std::uint64_t>{ 0b11 });
    CHECK(rainbow_reach(p3, coloring({ 0, 0 }), 0).to(2).empty());
    CHECK(bits_of(rainbow_reach(cycle(4), coloring({ 0, 1, 0, 1 }), 0).to(2)) == std::vector<std::uint64_t>{ 0b11 });
    CHECK(bits_of(rainbow_reach(p3, coloring({ 0, 1 }), 0).to(0)) == std::vector<std::uint64_t>{ 0 });
}

TEST_CASE("rainbow_reach errors")
{
    CHECK_THROWS_AS(rainbow_reach(path(3), coloring({ 0 }), 0), GraphError);
    CHECK_THROWS_AS(rainbow_reach(path(3), coloring({ 0, 1 }), 3), GraphError);
}

TEST_CASE("reach families equal the minimal colour sets of all simple rainbow paths")
{
    std::mt19937_64 rng(101);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = random_connected(2 + trial % 6, 0.1 + 0.15 * (trial % 5), rng());
        auto c = random_coloring(g, 1 + trial % 5, rng);
        for (Vertex s = 0 ; s < g.size() ; ++s) {
            auto family = rainbow_reach(g, c, s);
            for (Vertex t = 0 ; t < g.size() ; ++t) {
                if (t == s)
                    continue;
                REQUIRE(bits_of(family.to(t)) == brute_minimal_path_sets(g, c, s, t));
            }
        }
    }
}

TEST_CASE("has_rainbow_tree examples")
{
    auto star = make_graph(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } });
    CHECK(has_rainbow_tree(star, coloring({ 0, 1, 2 }), { 1, 2, 3 }));
    CHECK(! has_rainbow_tree(star, coloring({ 0, 1, 1 }), { 1, 2, 3 }));
    CHECK(has_rainbow_tree(path(4), coloring({ 0, 1, 2 }), { 0, 1, 3 }));

    auto w = find_rainbow_tree(star, coloring({ 0, 1, 2 }), { 1, 2, 3 });
    REQUIRE(w);
    CHECK(*w == std::vector<EdgeIndex>{ 0, 1, 2 });
    CHECK(! find_rainbow_tree(star, coloring({ 0, 1, 1 }), { 1, 2, 3 }));
}

TEST_CASE("has_rainbow_tree rejects bad vertex sets")
{
    CHECK_THROWS_AS(has_rainbow_tree(path(4), coloring({ 0, 1, 2 }), { 0, 0, 1 }), GraphError);
    CHECK_THROWS_AS(has_rainbow_tree(path(4), coloring({ 0, 1, 2 }), { 0, 1, 9 }), GraphError);
}

TEST_CASE("is_k_rainbow examples")
{
    CHECK(is_k_rainbow(cycle(4), coloring({ 0, 1, 0, 1 }), 3).ok);

    auto p5 = path(5);
    CHECK(is_k_rainbow(p5, coloring({ 0, 1, 2, 3 }), 3).ok);
    // every 3-colouring of P_5
    int checked = 0;
    for (int code = 0 ; code < 81 ; ++code) {
        EdgeColoring c{ { code % 3, code / 3 % 3, code / 9 % 3, code / 27 }, 3 };
        CHECK(! is_k_rainbow(p5, c, 3).ok);
        ++checked;
    }
    CHECK(checked == 81);

    auto k4 = complete(4);
    auto r = rx_exact(k4, 3);
    REQUIRE(r.exact());
    CHECK(r.value == 2);
    CHECK(is_k_rainbow(k4, r.witness, 3).ok);
}

TEST_CASE("failing verdicts carry the lexicographically first bad set")
{
    auto v = is_k_rainbow(path(5), coloring({ 0, 1, 2, 0 }), 3);
    CHECK(! v.ok);
    CHECK(v.failing == std::vector<Vertex>{ 0, 1, 4 });

    auto v2 = is_k_rainbow(path(4), coloring({ 0, 1, 0 }), 2);
    CHECK(v2.failing == std::vector<Vertex>{ 0, 3 });

    std::mt19937_64 rng(7);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = random_connected(3 + trial % 4, 0.3, rng());
        auto c = random_coloring(g, 1 + trial % 4, rng);
        auto verdict = is_k_rainbow(g, c, 3);
        auto expected = first_failing_by_oracle(g, c);
        CHECK(verdict.ok == expected.empty());
        CHECK(verdict.failing == expected);
    }
}

TEST_CASE("is_k_rainbow errors and degenerate inputs")
{
    CHECK_THROWS_AS(is_k_rainbow(path(3), coloring({ 0, 1 }), 4), std::invalid_argument);
    CHECK_THROWS_AS(is_k_rainbow(path(3), coloring({ 0, 1 }), 1), std::invalid_argument);
    CHECK(is_k_rainbow(path(2), coloring({ 0 }), 3).ok);
    CHECK(! is_k_rainbow(make_graph(3, { { 0, 1 } }), coloring({ 0 }), 2).ok);

    CheckOptions narrow;
    narrow.palette_limit = 2;
    CHECK_THROWS_AS(is_k_rainbow(path(4), coloring({ 0, 1, 2 }), 3, narrow), GraphError);
    CheckOptions bad;
    bad.palette_limit = 65;
    CHECK_THROWS_AS(is_k_rainbow(path(4), coloring({ 0, 1, 2 }), 3, bad), std::invalid_argument);
}

TEST_CASE("the palette limit can be widened to 64")
{
    auto g = path(50);
    auto c = distinct_coloring(g);
    CHECK_THROWS_AS(is_k_rainbow(g, c, 3), GraphError);
    CheckOptions wide;
    wide.palette_limit = max_palette_limit;
    CHECK(is_k_rainbow(g, c, 3, wide).ok);
}

TEST_CASE("has_rainbow_tree agrees with the subset oracle on small connected graphs")
{
    std::mt19937_64 rng(2024);
    long long triples = 0;
    for (int n = 3 ; n <= 5 ; ++n)
        for (auto & g : all_connected_graphs(n))
            for (int palette = 1 ; palette <= 4 ; ++palette) {
                auto c = random_coloring(g, palette, rng);
                auto masks = brute_rainbow_tree_masks(g, c);
                for (Vertex a = 0 ; a < n ; ++a)
                    for (Vertex b = a + 1 ; b < n ; ++b)
                        for (Vertex d = b + 1 ; d < n ; ++d) {
                            Triple s{ a, b, d };
                            bool expected = brute_has_rainbow_tree(masks, s);
                            REQUIRE(has_rainbow_tree(g, c, s) == expected);
                            auto w = find_rainbow_tree(g, c, s);
                            REQUIRE(w.has_value() == expected);
                            if (w)
                                check_tree_witness(g, c, s, *w);
                            ++triples;
                        }
            }
    CHECK(triples > 0);
}

TEST_CASE("k = 2 agrees with the subset oracle")
{
    std::mt19937_64 rng(55);
    for (int trial = 0 ; trial < 400 ; ++trial) {
        auto g = random_connected(2 + trial % 5, 0.3, rng());
        auto c = random_coloring(g, 1 + trial % 4, rng);
        CHECK(is_k_rainbow(g, c, 2).ok == brute_is_k_rainbow(g, c, 2));
    }
}

TEST_CASE("recolouring an edge with a fresh colour never breaks a valid colouring")
{
    std::mt19937_64 rng(66);
    int valid = 0;
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = random_connected(3 + trial % 4, 0.5, rng());
        auto c = random_coloring(g, 2 + trial % 3, rng);
        for (int k : { 2, 3 }) {
            if (! is_k_rainbow(g, c, k).ok)
                continue;
            ++valid;
            for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
                auto refined = c;
                refined.colors[e] = c.palette_size;
                refined.palette_size += 1;
                CHECK(is_k_rainbow(g, refined, k).ok);
            }
        }
    }
    CHECK(valid > 20);
}

TEST_CASE("valid colourings of a spanning subgraph extend arbitrarily")
{
    std::mt19937_64 rng(88);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto h = random_connected(3 + trial % 4, 0.3, rng());
        auto r = rx_exact(h, 3);
        REQUIRE(r.exact());

        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (auto & e : h.edges())
            pairs.emplace_back(e.u, e.v);
        for (Vertex a = 0 ; a < h.size() ; ++a)
            for (Vertex b = a + 1 ; b < h.size() ; ++b)
                if (! h.adjacent(a, b) && std::bernoulli_distribution(0.4)(rng))
                    pairs.emplace_back(a, b);
        Graph g(h.size(), pairs);

        auto c = r.witness;
        std::uniform_int_distribution<Color> pick(0, c.palette_size - 1);
        while (c.size() < g.edge_count())
            c.colors.push_back(pick(rng));
        CHECK(is_k_rainbow(g, c, 3).ok);
        CHECK(is_k_rainbow(g, c, 2).ok);
    }
}

TEST_CASE("parallel checking reproduces sequential verdicts")
{
    std::mt19937_64 rng(99);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = random_connected(4 + trial % 8, 0.3, rng());
        auto c = random_coloring(g, 2 + trial % 4, rng);
        for (int k : { 2, 3 }) {
            CheckOptions one, many;
            many.jobs = 4;
            CHECK(is_k_rainbow(g, c, k, one) == is_k_rainbow(g, c, k, many));
        }
    }
}

TEST_CASE("optimistic mode treats wildcard edges as fresh colours")
{
    auto g = path(4);
    std::vector<Color> partial{ 0, detail::wildcard, 0 };
    CHECK(! detail::check_colors(g, partial, 3).ok);
    std::vector<Color> open{ 0, detail::wildcard, detail::wildcard };
    CHECK(detail::check_colors(g, open, 3).ok);

    // agrees with replacing each wildcard by its own new colour
    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto h = random_connected(3 + trial % 4, 0.4, rng());
        auto c = random_coloring(h, 3, rng);
        std::vector<Color> masked = c.colors;
        EdgeColoring filled = c;
        for (EdgeIndex e = 0 ; e < h.edge_count() ; ++e)
            if (std::bernoulli_distribution(0.3)(rng)) {
                masked[e] = detail::wildcard;
                filled.colors[e] = filled.palette_size++;
            }
        CHECK(detail::check_colors(h, masked, 3).ok == is_k_rainbow(h, filled, 3).ok);
    }
}

TEST_CASE("colouring JSON round trip preserves verdicts")
{
    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = random_connected(3 + trial % 5, 0.3, rng());
        auto c = random_coloring(g, 1 + trial % 4, rng);
        auto g2 = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
        auto c2 = coloring_from_json(nlohmann::json::parse(coloring_to_json(c).dump()));
        CHECK(c2 == c);
        CHECK(is_k_rainbow(g, c, 3) == is_k_rainbow(g2, c2, 3));
        auto j = verdict_to_json(is_k_rainbow(g, c, 3));
        CHECK(j.contains("ok"));
        CHECK((j["ok"].get<bool>() ? j["failing"].is_null() : j["failing"].size() == 3u));
    }
    CHECK_THROWS_AS(coloring_from_json(nlohmann::json::parse(R"({"colors":[0]})")), GraphError);
}
