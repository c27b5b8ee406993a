#ifndef RYSER_FRACTIONAL_HPP
#define RYSER_FRACTIONAL_HPP

#include <map>
#include <set>

#include "ryser/hypergraph.hpp"
#include "ryser/rational.hpp"
#include "ryser/report.hpp"
#include "ryser/simplex.hpp"

namespace ryser {

struct FractionalCover {
    // Weight for every vertex, zeros included.
    std::map<VertexRef, Rational> weights;
    Rational value;
};

struct EdgeWeighting {
    // Weight per edge position, zeros included.
    std::map<int, Rational> alpha;
    Rational total() const {
        Rational t;
        for (const auto& [e, a] : alpha) t += a;
        return t;
    }
};

struct TauStarResult {
    Rational value;
    FractionalCover cover;
};

struct NuStarResult {
    Rational value;
    EdgeWeighting weighting;
};

struct TauSResult {
    Rational value;
    EdgeWeighting weighting;
};

// Witness that deleting S = edge minus vertex drops the fractional matching
// number by at least 1.
struct DropWitness {
    int edge = 0;
    VertexRef vertex;
    Rational before;
    Rational after;
};

struct FractionalStrongWitness {
    int v1_side = 0;
    // Indices on the V1 side carrying beta = 1; all others carry 0.
    std::set<int> beta;
    EdgeWeighting alpha;
    Rational total;
};

bool is_valid_fractional_cover(const GeneralHypergraph& h, const FractionalCover& fc);
bool is_valid_fractional_cover(const PartiteHypergraph& h, const FractionalCover& fc);
bool is_valid_fractional_matching(const GeneralHypergraph& h, const EdgeWeighting& w);
bool is_valid_fractional_matching(const PartiteHypergraph& h, const EdgeWeighting& w);

// Minimum-total fractional cover, solved exactly; the returned point is a
// vertex of the covering polytope. Needs >= 1 edge.
TauStarResult tau_star(const GeneralHypergraph& h);
TauStarResult tau_star(const PartiteHypergraph& h);

// Maximum-total fractional matching; equals tau_star by strong duality.
NuStarResult nu_star(const GeneralHypergraph& h);
NuStarResult nu_star(const PartiteHypergraph& h);

// Minimum total of non-negative per-edge coefficients such that every edge
// meets coefficient mass >= 1: minimize sum alpha_e subject to, for each edge
// f, sum of alpha_e over edges e meeting f being >= 1.
TauSResult tau_s(const GeneralHypergraph& h);
TauSResult tau_s(const PartiteHypergraph& h);

// Computes a basic optimal fractional cover and reports how many sides carry
// positive weight on all of their vertices; passes iff that count is <= 1.
CertificateReport check_cover_side_support(const PartiteHypergraph& h);

// Finds a zero-weight vertex v of a basic optimal fractional cover and an
// edge e through it such that deleting S = e minus v drops nu_star by >= 1.
// Falls back to trying every (edge, vertex) pair if the basic solution's
// zero-weight vertices are all isolated.
DropWitness lovasz_frac_witness(const PartiteHypergraph& h);

// Treats side v1 as the 1-side of a (1, r-1) partition and searches for 0/1
// weights beta on that side plus edge coefficients alpha whose induced weight
// function covers H with total <= nu(H). Subsets are tried by ascending size.
FractionalStrongWitness fractional_strong_witness(const PartiteHypergraph& h, int v1_side);

// Passes iff tau_star(H) <= (r-1) * nu(H) exactly.
CertificateReport furedi_check(const PartiteHypergraph& h, int v1_side);

}  // namespace ryser

#endif
