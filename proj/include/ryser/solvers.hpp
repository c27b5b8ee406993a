#ifndef RYSER_SOLVERS_HPP
#define RYSER_SOLVERS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ryser/budget.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/rational.hpp"

namespace ryser {

struct Cover {
    std::set<VertexRef> vertices;
    // Fingerprint of the hypergraph this cover was computed for.
    std::string certified_for;
};

struct Matching {
    std::set<int> edge_indices;
};

struct TauResult {
    int value = 0;
    Cover cover;
};

struct NuResult {
    int value = 0;
    Matching matching;
};

struct WeightedCoverResult {
    Rational value;
    Cover cover;
};

bool is_valid_cover(const GeneralHypergraph& h, const Cover& c);
bool is_valid_cover(const PartiteHypergraph& h, const Cover& c);
bool is_valid_matching(const GeneralHypergraph& h, const Matching& m);
bool is_valid_matching(const PartiteHypergraph& h, const Matching& m);

// Depth-first branch and bound: branch on the vertices of an uncovered edge of
// minimum remaining size, vertices in ascending VertexRef order, excluding each
// tried vertex on backtrack. Returns a cover of size <= k or, exhaustively,
// nothing. Deterministic.
std::optional<Cover> find_cover_leq(const GeneralHypergraph& h, int k, Budget budget = Budget::none());
std::optional<Cover> find_cover_leq(const PartiteHypergraph& h, int k, Budget budget = Budget::none());

// Minimum cover size, by ascending find_cover_leq calls. Needs >= 1 edge.
TauResult tau(const GeneralHypergraph& h, Budget budget = Budget::none());
TauResult tau(const PartiteHypergraph& h, Budget budget = Budget::none());

// Maximum set of pairwise disjoint edges, by include/exclude branch and bound.
NuResult nu(const GeneralHypergraph& h, Budget budget = Budget::none());
NuResult nu(const PartiteHypergraph& h, Budget budget = Budget::none());

// Repeatedly picks a maximum-degree vertex of the hypergraph induced on the
// still-uncovered edges, ties broken by ascending VertexRef. For an
// intersecting hypergraph with >= 2 edges the result has <= ceil(|H|/2)
// vertices. Needs >= 1 edge.
Cover greedy_cover(const GeneralHypergraph& h);
Cover greedy_cover(const PartiteHypergraph& h);

// Cover minimizing the total vertex weight. Weights must be present and
// non-negative for every vertex.
WeightedCoverResult weighted_min_cover(const GeneralHypergraph& h,
                                       const std::map<VertexRef, Rational>& w,
                                       Budget budget = Budget::none());
WeightedCoverResult weighted_min_cover(const PartiteHypergraph& h,
                                       const std::map<VertexRef, Rational>& w,
                                       Budget budget = Budget::none());

// Cover minimizing |C on distinguished side| + |C elsewhere| / (r-1).
WeightedCoverResult min_biased_cover(const PartiteHypergraph& h, int distinguished,
                                     Budget budget = Budget::none());

// Minimum cover that uses no vertex of the banned side, or nothing if some
// edge can only be covered there.
std::optional<TauResult> min_cover_avoiding(const PartiteHypergraph& h, int banned,
                                            Budget budget = Budget::none());

}  // namespace ryser

#endif
