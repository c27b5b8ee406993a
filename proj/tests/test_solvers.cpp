#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ryser/errors.hpp"
#include "ryser/solvers.hpp"

using namespace ryser;

TEST_CASE("single edge basics") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    auto c = find_cover_leq(one, 1);
    REQUIRE(c.has_value());
    CHECK(c->vertices.size() == 1);
    CHECK(is_valid_cover(one, *c));
    CHECK(c->certified_for == fingerprint(one));
    CHECK_FALSE(find_cover_leq(one, 0).has_value());

    TauResult t = tau(one);
    CHECK(t.value == 1);
    CHECK(is_valid_cover(one, t.cover));

    Cover g = greedy_cover(one);
    CHECK(g.vertices.size() == 1);
}

TEST_CASE("disjoint edges") {
    PartiteHypergraph h = parse_digit_format("111 222", 3);
    CHECK(tau(h).value == 2);
    NuResult n = nu(h);
    CHECK(n.value == 2);
    CHECK(is_valid_matching(h, n.matching));
    CHECK(n.matching.edge_indices == std::set<int>{0, 1});
}

TEST_CASE("empty inputs") {
    PartiteHypergraph h;
    h.r = 2;
    h.side_sizes = {1, 1};
    CHECK_THROWS_AS(tau(h), DomainError);
    CHECK_THROWS_AS(greedy_cover(h), DomainError);
    CHECK(nu(h).value == 0);
    CHECK(find_cover_leq(h, 0).has_value());
    CHECK_THROWS_AS(find_cover_leq(h, -1), DomainError);
}

TEST_CASE("duplicate edges do not change tau or nu") {
    PartiteHypergraph h = parse_digit_format("12 21 12 12", 2);
    CHECK(tau(h).value == 2);
    CHECK(nu(h).value == 2);
    PartiteHypergraph twice = parse_digit_format("11 11", 2);
    CHECK(nu(twice).value == 1);
    CHECK(tau(twice).value == 1);
}

TEST_CASE("tau matches brute force on random instances") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 120; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 8);
        if (oracle::flat_vertex_count(h) > 15) continue;
        TauResult got = tau(h);
        CHECK(got.value == oracle::brute_tau(h));
        CHECK(is_valid_cover(h, got.cover));
        CHECK(static_cast<int>(got.cover.vertices.size()) == got.value);

        GeneralHypergraph g = to_general(h);
        TauResult got_g = tau(g);
        CHECK(got_g.value == got.value);
        CHECK(is_valid_cover(g, got_g.cover));
    }
}

TEST_CASE("nu matches brute force and the intersecting predicate") {
    std::mt19937_64 rng(556);
    for (int t = 0; t < 120; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 8);
        NuResult got = nu(h);
        CHECK(got.value == oracle::brute_nu(h));
        CHECK(is_valid_matching(h, got.matching));
        CHECK(static_cast<int>(got.matching.edge_indices.size()) == got.value);
        if (h.edges.size() >= 2) CHECK((got.value == 1) == is_intersecting(h));
        CHECK(nu(to_general(h)).value == got.value);
    }
}

TEST_CASE("tau is at most r times nu") {
    std::mt19937_64 rng(557);
    for (int t = 0; t < 60; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng);
        CHECK(tau(h).value <= h.r * nu(h).value);
    }
}

TEST_CASE("greedy cover bound on intersecting instances") {
    std::mt19937_64 rng(600);
    int found = 0;
    while (found < 40) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 2, 9);
        if (h.edges.size() < 2 || !is_intersecting(h)) continue;
        ++found;
        Cover g = greedy_cover(h);
        CHECK(is_valid_cover(h, g));
        CHECK(g.vertices.size() <= (h.edges.size() + 1) / 2);
        CHECK(tau(h).value <= static_cast<int>(g.vertices.size()));
    }
}

TEST_CASE("solver witnesses are deterministic") {
    std::mt19937_64 rng(601);
    for (int t = 0; t < 25; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng);
        CHECK(tau(h).cover.vertices == tau(h).cover.vertices);
        CHECK(nu(h).matching.edge_indices == nu(h).matching.edge_indices);
        CHECK(greedy_cover(h).vertices == greedy_cover(h).vertices);
    }
}

TEST_CASE("weighted cover with unit weights equals tau") {
    std::mt19937_64 rng(602);
    for (int t = 0; t < 30; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng);
        std::map<VertexRef, Rational> w;
        for (int s = 0; s < h.r; ++s)
            for (int i = 0; i < h.side_sizes[s]; ++i) w[{s, i}] = Rational(1);
        WeightedCoverResult res = weighted_min_cover(h, w);
        CHECK(res.value == Rational(tau(h).value));
        CHECK(is_valid_cover(h, res.cover));
    }
}

TEST_CASE("weighted cover with a free vertex per edge is zero") {
    PartiteHypergraph h = parse_digit_format("11 21 22", 2);
    std::map<VertexRef, Rational> w;
    for (int s = 0; s < h.r; ++s)
        for (int i = 0; i < h.side_sizes[s]; ++i) w[{s, i}] = Rational(1);
    w[{1, 0}] = Rational(0);
    w[{0, 1}] = Rational(0);
    WeightedCoverResult res = weighted_min_cover(h, w);
    CHECK(res.value == Rational(0));
    CHECK(is_valid_cover(h, res.cover));
}

TEST_CASE("weighted cover matches brute force") {
    std::mt19937_64 rng(603);
    for (int t = 0; t < 60; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 3, 3, 6);
        int n = oracle::flat_vertex_count(h);
        if (n > 14) continue;
        std::vector<Rational> flat(n);
        std::map<VertexRef, Rational> w;
        auto off = side_offsets(h);
        for (int s = 0; s < h.r; ++s)
            for (int i = 0; i < h.side_sizes[s]; ++i) {
                Rational val(bounded_int(rng, 5), 1 + bounded_int(rng, 3));
                w[{s, i}] = val;
                flat[off[s] + i] = val;
            }
        auto expect = oracle::brute_weighted_cover(n, oracle::flat_edges(h), flat,
                                                   std::vector<char>(n, 1));
        REQUIRE(expect.has_value());
        WeightedCoverResult res = weighted_min_cover(h, w);
        CHECK(res.value == *expect);
        CHECK(is_valid_cover(h, res.cover));
    }
}

TEST_CASE("weighted cover rejects bad weights") {
    PartiteHypergraph h = parse_digit_format("11", 2);
    std::map<VertexRef, Rational> w;
    w[{0, 0}] = Rational(1);
    CHECK_THROWS_AS(weighted_min_cover(h, w), DomainError);
    w[{1, 0}] = Rational(-1);
    CHECK_THROWS_AS(weighted_min_cover(h, w), DomainError);
}

TEST_CASE("biased cover on a single edge") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    WeightedCoverResult res = min_biased_cover(one, 2);
    CHECK(res.value == Rational(1, 2));
    CHECK(res.cover.vertices.size() == 1);
    CHECK(res.cover.vertices.begin()->side != 2);

    PartiteHypergraph doubled = parse_digit_format("111 111", 3);
    CHECK(min_biased_cover(doubled, 2).value == Rational(1, 2));

    CHECK_THROWS_AS(min_biased_cover(one, 3), DomainError);
}

TEST_CASE("biased cover matches weighted brute force") {
    std::mt19937_64 rng(604);
    for (int t = 0; t < 40; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 3, 3, 6);
        int n = oracle::flat_vertex_count(h);
        if (n > 14) continue;
        int side = bounded_int(rng, h.r);
        std::vector<Rational> flat(n);
        auto off = side_offsets(h);
        for (int s = 0; s < h.r; ++s)
            for (int i = 0; i < h.side_sizes[s]; ++i)
                flat[off[s] + i] = (s == side) ? Rational(1) : Rational(1, h.r - 1);
        auto expect = oracle::brute_weighted_cover(n, oracle::flat_edges(h), flat,
                                                   std::vector<char>(n, 1));
        CHECK(min_biased_cover(h, side).value == *expect);
    }
}

TEST_CASE("cover avoiding a side") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    auto res = min_cover_avoiding(one, 0);
    REQUIRE(res.has_value());
    CHECK(res->value == 1);
    for (const auto& v : res->cover.vertices) CHECK(v.side != 0);

    std::mt19937_64 rng(605);
    for (int t = 0; t < 60; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 3, 3, 6);
        if (oracle::flat_vertex_count(h) > 14) continue;
        int banned = bounded_int(rng, h.r);
        auto got = min_cover_avoiding(h, banned);
        auto expect = oracle::brute_cover_avoiding(h, banned);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
            CHECK(got->value == *expect);
            CHECK(is_valid_cover(h, got->cover));
            for (const auto& v : got->cover.vertices) CHECK(v.side != banned);
        }
    }
}

