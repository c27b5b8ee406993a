#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lp_oracles.hpp"
#include "oracles.hpp"
#include "ryser/errors.hpp"
#include "ryser/fractional.hpp"
#include "ryser/solvers.hpp"

using namespace ryser;

namespace {

// Rebuild the weight function induced by a strong witness and confirm it
// covers every edge, independently of the search that produced it.
bool strong_witness_covers(const PartiteHypergraph& h, const FractionalStrongWitness& w) {
    for (const auto& e : h.edges) {
        Rational total;
        if (w.beta.count(e[w.v1_side])) total += Rational(1);
        for (const auto& [k, a] : w.alpha.alpha) {
            if (a.sign() < 0) return false;
            int meet = 0;
            for (int s = 0; s < h.r; ++s)
                if (s != w.v1_side && h.edges[k][s] == e[s]) ++meet;
            total += a * Rational(meet);
        }
        if (total < Rational(1)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("fractional values on tiny instances") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    TauStarResult ts = tau_star(one);
    CHECK(ts.value == Rational(1));
    CHECK(is_valid_fractional_cover(one, ts.cover));
    CHECK(nu_star(one).value == Rational(1));

    PartiteHypergraph two = parse_digit_format("111 222", 3);
    CHECK(nu_star(two).value == Rational(2));
    CHECK(tau_s(two).value == Rational(2));

    PartiteHypergraph empty;
    empty.r = 2;
    empty.side_sizes = {1, 1};
    CHECK_THROWS_AS(tau_star(empty), DomainError);
    CHECK_THROWS_AS(nu_star(empty), DomainError);
    CHECK_THROWS_AS(tau_s(empty), DomainError);
}

TEST_CASE("strong duality and the integral sandwich on random instances") {
    std::mt19937_64 rng(1789);
    for (int t = 0; t < 50; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 7);
        TauStarResult ts = tau_star(h);
        NuStarResult ns = nu_star(h);
        CHECK(ts.value == ns.value);
        CHECK(is_valid_fractional_cover(h, ts.cover));
        CHECK(is_valid_fractional_matching(h, ns.weighting));
        CHECK(Rational(nu(h).value) <= ns.value);
        CHECK(ts.value <= Rational(tau(h).value));

        GeneralHypergraph g = to_general(h);
        CHECK(tau_star(g).value == ts.value);
        CHECK(nu_star(g).value == ns.value);
    }
}

TEST_CASE("edge-coefficient cover is 1 on intersecting instances") {
    std::mt19937_64 rng(1790);
    int seen = 0;
    while (seen < 25) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 2, 8);
        if (!is_intersecting(h)) continue;
        ++seen;
        TauSResult s = tau_s(h);
        CHECK(s.value == Rational(1));
        Rational total;
        for (const auto& [e, a] : s.weighting.alpha) {
            CHECK(a.sign() >= 0);
            total += a;
        }
        CHECK(total == s.value);
    }
}

TEST_CASE("edge-coefficient cover dominates tau_star over r") {
    std::mt19937_64 rng(1791);
    for (int t = 0; t < 30; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 6);
        CHECK(Rational(h.r) * tau_s(h).value >= tau_star(h).value);
    }
}

TEST_CASE("basic cover leaves a zero on all but at most one side") {
    PartiteHypergraph one = parse_digit_format("1111", 4);
    CertificateReport rep = check_cover_side_support(one);
    CHECK(rep.overall());

    std::mt19937_64 rng(1792);
    for (int t = 0; t < 50; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 7);
        CHECK(check_cover_side_support(h).overall());
    }
}

TEST_CASE("side-support report text shape") {
    CertificateReport rep = check_cover_side_support(parse_digit_format("11 22", 2));
    std::string text = rep.to_text();
    CHECK(text.find("OVERALL: PASS") != std::string::npos);
    CHECK(text.find("->") != std::string::npos);
    CHECK(rep.subject.find("cover-side-support") == 0);
}

TEST_CASE("deletion witness drops the fractional matching number") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    DropWitness w = lovasz_frac_witness(one);
    CHECK(w.before == Rational(1));
    CHECK(w.after == Rational(0));

    PartiteHypergraph two = parse_digit_format("111 222", 3);
    DropWitness w2 = lovasz_frac_witness(two);
    CHECK(w2.before == Rational(2));
    CHECK(w2.before - w2.after >= Rational(1));

    std::mt19937_64 rng(1793);
    for (int t = 0; t < 40; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 7);
        DropWitness dw = lovasz_frac_witness(h);
        CHECK(dw.before - dw.after >= Rational(1));
        CHECK(dw.before == nu_star(h).value);
        // The deletion really is edge minus vertex.
        CHECK(dw.vertex.side >= 0);
        CHECK(h.edges[dw.edge][dw.vertex.side] == dw.vertex.index);
    }
}

TEST_CASE("strong witness on a single edge") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    FractionalStrongWitness w = fractional_strong_witness(one, 0);
    CHECK(w.total <= Rational(1));
    CHECK(w.beta.empty());
    CHECK(strong_witness_covers(one, w));
}

TEST_CASE("strong witness picks the hub of a sunflower") {
    PartiteHypergraph h = parse_digit_format("111 122 133", 3);
    FractionalStrongWitness w = fractional_strong_witness(h, 0);
    CHECK(w.total == Rational(1));
    CHECK(w.beta == std::set<int>{0});
    CHECK(strong_witness_covers(h, w));
}

TEST_CASE("strong witness exists on random instances") {
    std::mt19937_64 rng(1794);
    for (int t = 0; t < 30; ++t) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 3, 6);
        for (int side = 0; side < h.r; ++side) {
            FractionalStrongWitness w = fractional_strong_witness(h, side);
            CHECK(w.total <= Rational(nu(h).value));
            CHECK(strong_witness_covers(h, w));
        }
    }
}

TEST_CASE("strong witness capacity bound") {
    PartiteHypergraph h;
    h.r = 2;
    h.side_sizes = {21, 1};
    h.edges = {{0, 0}};
    CHECK_THROWS_AS(fractional_strong_witness(h, 0), CapacityError);
    CHECK_THROWS_AS(fractional_strong_witness(h, 5), DomainError);
}

TEST_CASE("fractional cover versus integral matching bound") {
    PartiteHypergraph one = parse_digit_format("111", 3);
    CHECK(furedi_check(one, 0).overall());

    std::mt19937_64 rng(1795);
    int seen = 0;
    while (seen < 50) {
        PartiteHypergraph h = oracle::random_partite(rng, 4, 2, 8);
        if (!is_intersecting(h)) continue;
        ++seen;
        CHECK(furedi_check(h, 0).overall());
    }
}
