#ifndef RYSER_CONSTRUCTIONS_HPP
#define RYSER_CONSTRUCTIONS_HPP

// Generators for the hypergraph families used throughout the toolkit:
// projective planes and their truncations, the oval-based subplane, the
// one-factorization instances, the fixed extremal examples, the biased and
// exponential-side counterexample families, and seeded random instances.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ryser/budget.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

// Arithmetic of GF(q) for prime q up to 97 and for q in {4, 8, 9} via the
// fixed irreducible polynomials x^2+x+1, x^3+x+1 and x^2+1. Elements are
// 0..q-1; for prime powers an element encodes its coefficient vector in
// base p (low digit first). Field axioms are checked exhaustively at
// construction for q <= 9.
class FiniteField {
public:
    explicit FiniteField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    // Multiplicative inverse; a = 0 is rejected.
    int inv(int a) const;

private:
    int element(int a, const char* who) const;

    int q_ = 0;
    int p_ = 0;
    std::vector<int> add_table_;
    std::vector<int> mul_table_;
};

FiniteField finite_field(int q);

// The classical plane PG(2, q). Points and lines are homogeneous triples
// over GF(q), normalized so the first nonzero coordinate is 1, listed in a
// fixed order: (1,a,b) lexicographically, then (0,1,a), then (0,0,1).
// A point lies on a line exactly when their dot product vanishes.
class ProjectivePlaneModel {
public:
    explicit ProjectivePlaneModel(int q);

    const FiniteField& field() const { return field_; }
    int point_count() const { return static_cast<int>(triples_.size()); }
    int line_count() const { return static_cast<int>(triples_.size()); }
    const std::array<int, 3>& point(int i) const { return triples_.at(i); }
    const std::array<int, 3>& line(int i) const { return triples_.at(i); }

    bool incident(int line, int point) const;
    // Ascending indices of the points on a line.
    std::vector<int> line_points(int line) const;
    // Canonical representative of a nonzero triple.
    std::array<int, 3> normalize(const std::array<int, 3>& t) const;
    // Index of the point with the given (not necessarily normalized)
    // coordinates.
    int point_index(const std::array<int, 3>& t) const;

private:
    FiniteField field_;
    std::vector<std::array<int, 3>> triples_;
    std::map<std::array<int, 3>, int> index_;
};

// Lines of PG(2, q) as edges over its q^2+q+1 points.
GeneralHypergraph projective_plane(int q);

// Remove the point (0,0,1) and the lines through it; the punctured pencil
// lines become the q+1 sides of size q and the remaining q^2 lines the
// edges.
PartiteHypergraph truncated_projective_plane(int q);

// For odd q: truncate at the conic point (0,0,1) as above, then keep only
// the lines meeting the rest of the conic {(t^2,t,1)} + {(1,0,0)}. Yields
// (q^2+q)/2 edges on q+1 sides.
PartiteHypergraph oval_secant_subplane(int q);

// For odd r: the r-edge hypergraph obtained from the circle-method
// one-factorization of K_{r+1} (sides are the factors, vertices the factor
// edges, lines the K_{r+1} vertices) after removing the hub's line.
PartiteHypergraph one_factorization_instance(int r);

// Fixed extremal examples, stored as digit tables.
std::string example_f7_digits();
std::string example_f6_digits();
std::string example_f6_linear_digits();
PartiteHypergraph example_f7();
PartiteHypergraph example_f6();
PartiteHypergraph example_f6_linear();

// The vertex-split cross-intersecting family on r sides: r-2 edges through
// the first vertex of the last side, one edge per permutation of
// {1..r-1} through the second, with the shared vertex r-1 of each of the
// first r-1 sides split into one fresh vertex per edge. Requires
// 4 <= r <= 8.
PartiteHypergraph biased_counterexample(int r);

// Side 1 has 2^{r-2} vertices v_P indexed by the subsets P of {2..r}
// containing 2; every other side is a pair {a_i, b_i}; each P contributes
// the two edges {v_P, a_i (i in P), b_i (i not in P)} and its mirror.
// Requires 4 <= r <= 12.
PartiteHypergraph exponential_counterexample(int r);

// Random intersecting instance on r sides of size side_cap: edges are drawn
// uniformly and kept only if they meet every earlier edge. Throws
// CapacityError when the rejection budget runs out.
PartiteHypergraph random_intersecting(int r, int m, int side_cap, std::uint64_t seed);

// Uniform sample of m distinct edges of h, kept in their original order.
PartiteHypergraph random_line_subset(const PartiteHypergraph& h, int m, std::uint64_t seed);

struct SubsetTauProbe {
    int trials = 0;
    // Trials whose sampled sub-hypergraph has covering number >= r - 1.
    int hits = 0;
};

// Empirical probe: draws `trials` independent uniform m-subsets of the edges
// of truncated_projective_plane(r - 1) and counts how many have covering
// number at least r - 1. A single PRNG stream seeded once drives every
// trial, so the result is a pure function of (r, m, trials, seed).
SubsetTauProbe tpp_subset_tau_probe(int r, int m, int trials, std::uint64_t seed,
                                    Budget budget = Budget::none());

}  // namespace ryser

#endif
