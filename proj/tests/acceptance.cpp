// Acceptance gate: recomputes every mandated result end to end and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "ryser/certificates.hpp"
#include "ryser/constructions.hpp"
#include "ryser/corpus.hpp"
#include "ryser/errors.hpp"
#include "ryser/fractional.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/rational.hpp"
#include "ryser/solvers.hpp"

using namespace ryser;

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Independent covering-number computation for small general hypergraphs:
// exhausts all vertex subsets as bitmasks. Usable up to ~20 vertices.
int brute_tau_general(const GeneralHypergraph& h) {
    int n = h.vertex_count;
    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : h.edges) {
        std::uint32_t m = 0;
        for (int v : e) m |= std::uint32_t(1) << v;
        edge_masks.push_back(m);
    }
    int best = n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        bool covers = true;
        for (std::uint32_t em : edge_masks)
            if ((mask & em) == 0) { covers = false; break; }
        if (covers) best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

bool criterion_1() {
    Clock::time_point start = Clock::now();
    PartiteHypergraph h = example_f7();
    TauResult t = tau(h);
    bool ok = t.value == 6 && is_valid_cover(h, t.cover);
    ok = ok && !find_cover_leq(h, 5).has_value();
    return ok && ms_since(start) < 30000;
}

bool criterion_2() {
    Clock::time_point start = Clock::now();
    PartiteHypergraph f6 = example_f6();
    PartiteHypergraph f6l = example_f6_linear();
    bool ok = tau(f6).value == 5 && tau(f6l).value == 5;
    ok = ok && is_linear(f6l) && !is_linear(example_f7()) && !is_linear(f6);
    return ok && ms_since(start) < 10000;
}

bool criterion_3() {
    Clock::time_point start = Clock::now();
    ExtremalSearchResult absent = extremal_search(4, 5, 3);
    bool ok = !absent.found && absent.classes_examined > 0;

    ExtremalSearchResult found = extremal_search(4, 6, 3);
    ok = ok && found.found && found.witness.has_value();
    if (ok) {
        const PartiteHypergraph& w = *found.witness;
        ok = w.edges.size() <= 6 && is_intersecting(w) && found.witness_tau == 3 &&
             tau(w).value == 3;
    }
    ok = ok && check_linearity_of_achievers(4).overall();
    return ok && ms_since(start) < 1800000;
}

bool criterion_4() {
    Clock::time_point start = Clock::now();
    bool ok = f_lower_bound(7) == 14 && f_lower_bound(8) == 18 && f_lower_bound(9) == 20 &&
              f_lower_bound(10) == 24;
    // The recurrence pinned by the anchors above drifts inside [-783, -584]
    // ninety-sixths of r; the certified window is the documented |.| <= 10.
    for (int r = 100; r <= 10000 && ok; ++r) {
        long diff = 96 * f_lower_bound(r) - 293L * r;
        ok = -960 <= diff && diff <= 960;
    }
    return ok && ms_since(start) < 1000;
}

bool criterion_5() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        GeneralHypergraph pg = projective_plane(q);
        int expected = q * q + q + 1;
        ok = ok && pg.vertex_count == expected &&
             static_cast<int>(pg.edges.size()) == expected;
        for (const auto& e : pg.edges) ok = ok && static_cast<int>(e.size()) == q + 1;
        for (size_t a = 0; a < pg.edges.size() && ok; ++a)
            for (size_t b = a + 1; b < pg.edges.size() && ok; ++b) {
                size_t i = 0, j = 0;
                int meet = 0;
                while (i < pg.edges[a].size() && j < pg.edges[b].size()) {
                    if (pg.edges[a][i] == pg.edges[b][j]) { ++meet; ++i; ++j; }
                    else if (pg.edges[a][i] < pg.edges[b][j]) ++i;
                    else ++j;
                }
                ok = meet == 1;
            }
        if (q <= 3) ok = ok && brute_tau_general(pg) == q + 1;
    }
    return ok && ms_since(start) < 60000;
}

bool criterion_6() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int q : {2, 3, 4, 5}) {
        PartiteHypergraph t = truncated_projective_plane(q);
        ok = ok && static_cast<int>(t.edges.size()) == q * q;
        TauResult res = tau(t);
        ok = ok && res.value == q && is_valid_cover(t, res.cover);
    }
    return ok && ms_since(start) < 300000;
}

bool criterion_7() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int q : {3, 5, 7}) {
        PartiteHypergraph o = oval_secant_subplane(q);
        ok = ok && static_cast<int>(o.edges.size()) == q * (q + 1) / 2;
    }
    ok = ok && tau(oval_secant_subplane(3)).value >= 3;
    ok = ok && tau(oval_secant_subplane(5)).value >= 5;
    return ok && ms_since(start) < 300000;
}

bool criterion_8() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int r : {3, 5, 7, 9})
        ok = ok && check_one_factorization_structure(one_factorization_instance(r)).overall();
    return ok && ms_since(start) < 10000;
}

bool criterion_9() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int r : {4, 5}) {
        PartiteHypergraph h = biased_counterexample(r);
        ok = ok && is_intersecting(h);
        for (int i = 0; i < h.side_sizes[h.r - 1]; ++i) {
            Cover single;
            single.vertices = {{h.r - 1, i}};
            single.certified_for = fingerprint(h);
            ok = ok && !is_valid_cover(h, single);
        }
        std::optional<TauResult> avoid = min_cover_avoiding(h, h.r - 1);
        ok = ok && avoid.has_value() && avoid->value == 2 * r - 4;
        ok = ok && min_biased_cover(h, h.r - 1).value > Rational(1);
    }
    return ok && ms_since(start) < 120000;
}

bool criterion_10() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int r : {4, 5}) {
        PartiteHypergraph h = exponential_counterexample(r);
        ok = ok && is_intersecting(h);
        for (const auto& edge : h.edges) {
            Cover rest;
            rest.certified_for = fingerprint(h);
            for (int s = 1; s < h.r; ++s) rest.vertices.insert({s, edge[s]});
            ok = ok && !is_valid_cover(h, rest);
        }
    }
    return ok && ms_since(start) < 60000;
}

bool criterion_11() {
    Clock::time_point start = Clock::now();
    const auto& corpus = verification_corpus();
    bool ok = corpus.size() >= 50;

    bool has_f7 = false, has_f6 = false, has_f6l = false;
    for (const CorpusEntry& e : corpus) {
        if (e.name == "f7") has_f7 = true;
        if (e.name == "f6") has_f6 = true;
        if (e.name == "f6linear") has_f6l = true;
    }
    ok = ok && has_f7 && has_f6 && has_f6l;

    for (const CorpusEntry& e : corpus) {
        if (!ok) break;
        const PartiteHypergraph& h = e.hypergraph;
        Rational ts = tau_star(h).value;
        Rational ns = nu_star(h).value;
        int tv = tau(h).value;
        int nv = nu(h).value;
        ok = ts == ns && Rational(nv) <= ns && ts <= Rational(tv);
        ok = ok && check_cover_side_support(h).overall();
        DropWitness drop = lovasz_frac_witness(h);
        ok = ok && drop.before - drop.after >= Rational(1);
        for (int s = 0; s < h.r && ok; ++s) {
            if (h.side_sizes[s] > 6) continue;
            try {
                ok = fractional_strong_witness(h, s).total <= Rational(nv);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        ok = ok && furedi_check(h, 0).overall();
        ok = ok && is_intersecting(h) && tau_s(h).value == Rational(1);
    }

    ok = ok && tau_star(projective_plane(2)).value == Rational(7, 3);
    return ok && ms_since(start) < 600000;
}

bool criterion_12() {
    Clock::time_point start = Clock::now();
    std::vector<PartiteHypergraph> pool;
    for (std::uint64_t seed = 0; pool.size() < 200; ++seed) {
        int r = 2 + static_cast<int>(seed % 3);
        int m = 2 + static_cast<int>(seed % 6);
        int cap = 3 + static_cast<int>(seed % 2);
        try {
            pool.push_back(random_intersecting(r, m, cap, seed));
        } catch (const CapacityError&) {
        }
    }
    for (const CorpusEntry& e : verification_corpus())
        if (e.name.rfind("random-", 0) != 0) pool.push_back(e.hypergraph);

    bool ok = true;
    for (const PartiteHypergraph& h : pool) {
        if (!ok) break;
        if (max_degree(h) <= 4) ok = ok && check_degree_count_bounds(h).overall();
        ok = ok && check_side_cover_bound(h).overall();
        ok = ok && check_min_degree(h).overall();
    }
    return ok && ms_since(start) < 600000;
}

bool criterion_13() {
    SubsetTauProbe pinned = tpp_subset_tau_probe(6, 20, 200, 0);
    bool ok = pinned.trials == 200 && pinned.hits == 199;
    SubsetTauProbe full = tpp_subset_tau_probe(4, 9, 5, 7);
    ok = ok && full.hits == 5;
    SubsetTauProbe tiny = tpp_subset_tau_probe(4, 1, 5, 7);
    ok = ok && tiny.hits == 0;
    return ok;
}

struct Criterion {
    int number;
    const char* text;
    bool (*check)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "7-side example: covering number 6, no 5-cover", criterion_1},
        {2, "6-side examples: covering number 5, linearity flags", criterion_2},
        {3, "exhaustive search: absence at 5 edges, witness at 6, linear achievers", criterion_3},
        {4, "lower-bound recurrence: anchors and asymptotic window", criterion_4},
        {5, "projective planes: counts, uniformity, meets, brute-force cover", criterion_5},
        {6, "truncated planes: edge counts and covering numbers", criterion_6},
        {7, "oval subplanes: edge counts and covering numbers", criterion_7},
        {8, "one-factorization instances pass the structure certificate", criterion_8},
        {9, "vertex-split family: avoiding-cover size, biased value above 1", criterion_9},
        {10, "exponential-side family: dropped first-side vertex never covers", criterion_10},
        {11, "fractional suite over the bundled corpus", criterion_11},
        {12, "counting, side-cover, min-degree checkers on 200 random plus constructed",
         criterion_12},
        {13, "seeded subset probe matches its pinned regression fraction", criterion_13},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Clock::time_point start = Clock::now();
        bool pass = false;
        std::string note;
        try {
            pass = c.check();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        std::printf("criterion %2d: %s - %s (%ld ms)%s\n", c.number, pass ? "PASS" : "FAIL",
                    c.text, ms_since(start), note.c_str());
        if (!pass) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
