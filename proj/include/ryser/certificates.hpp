#ifndef RYSER_CERTIFICATES_HPP
#define RYSER_CERTIFICATES_HPP

// Machine-checked certificates: degree-counting and side-cover inequalities,
// the structure forced on tight odd-r instances, minimum-degree thresholds
// with the induced lower-bound recurrence, and exhaustive isomorph-free
// searches over small intersecting instances.

#include <optional>

#include "ryser/budget.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/report.hpp"

namespace ryser {

// For an intersecting H with maximum degree at most 4 and x_i vertices of
// degree i, checks
//   x_1 + x_4   >= C(|H|,2) + 3r*tau - 2r|H|
//   x_3 + 3x_4  >= C(|H|,2) +  r*tau -  r|H|
// and that equality in each holds exactly when H is linear with exactly tau
// used vertices on every side. Throws DomainError when H is empty, not
// intersecting, or has a vertex of degree 5 or more.
CertificateReport check_degree_count_bounds(const PartiteHypergraph& h);

// For every side of an intersecting H, with y_1 degree-1 vertices and y_2
// vertices of degree at least 2 on it, checks (y_1+1)/2 + y_2 >= tau.
CertificateReport check_side_cover_bound(const PartiteHypergraph& h);

// Preconditions (reported, not assumed): r odd, H intersecting, |H| <= r,
// tau >= (r+1)/2. Conclusions: |H| = r, tau = (r+1)/2, every side has one
// degree-1 vertex and (r-1)/2 of degree 2, every edge has one degree-1
// vertex and r-1 of degree 2, and H is linear. A failed precondition
// leaves the conclusions unevaluated.
CertificateReport check_one_factorization_structure(const PartiteHypergraph& h);

// Largest degree forced by a covering requirement of t in an intersecting
// r-partite hypergraph: 1 when t = 1, and otherwise the largest d in
// {2,3,4,5} with
//   d=3 when 2t > r+1, d=4 when 3t > 2r+3, d=5 when 32t >= 25r+23.
int min_degree_floor(int r, int t);

// Greedy peel-off lower bound: sum of min_degree_floor(r, t) over
// t = 1..r-1. An intersecting r-partite hypergraph with covering number
// r-1 needs at least this many edges.
long f_lower_bound(int r);

// Checks max_degree(H) >= min_degree_floor(r, tau(H)) for intersecting H.
CertificateReport check_min_degree(const PartiteHypergraph& h);

enum class ExtensionOrder { forward, reverse };

struct ExtremalSearchResult {
    bool found = false;
    // First hypergraph encountered with covering number >= t, when any.
    std::optional<PartiteHypergraph> witness;
    int witness_tau = 0;
    // Isomorphism classes examined across all levels.
    long classes_examined = 0;
};

// Searches the intersecting r-partite hypergraphs with at most m distinct
// edges, grown one edge at a time with canonical-form rejection, for one
// with covering number >= t. `found == false` is an exhaustive absence
// certificate for every such hypergraph with at most m edges (repeated
// edges change nothing: the covering number only depends on the distinct
// edges). The verdict does not depend on the extension order; the witness
// identity may. Throws CapacityError when the budget expires before the
// search is complete.
ExtremalSearchResult extremal_search(int r, int m, int t, Budget budget = Budget::none(),
                                     ExtensionOrder order = ExtensionOrder::forward);

// Enumerates every isomorphism class of 6-edge intersecting 4-partite
// hypergraphs with covering number >= 3 and asserts each one is linear.
// Only r = 4 is exhaustible at desk scale; other r throw CapacityError.
CertificateReport check_linearity_of_achievers(int r, Budget budget = Budget::none());

}  // namespace ryser

#endif
