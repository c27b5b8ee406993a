#ifndef RYSER_HYPERGRAPH_HPP
#define RYSER_HYPERGRAPH_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ryser {

// Vertex address. For partite hypergraphs side is the 0-based side number and
// index the 0-based position within that side. For general hypergraphs side is
// kGeneralSide and index is the flat vertex index.
inline constexpr int kGeneralSide = -1;

struct VertexRef {
    int side = kGeneralSide;
    int index = 0;
    auto operator<=>(const VertexRef&) const = default;
};

struct GeneralHypergraph {
    int vertex_count = 0;
    // Each edge is a strictly ascending, non-empty list of vertex indices.
    // Edge identity is its position in this list.
    std::vector<std::vector<int>> edges;
    bool operator==(const GeneralHypergraph&) const = default;
};

struct PartiteHypergraph {
    int r = 0;
    std::vector<int> side_sizes;
    // edges[k][i] is the 0-based index on side i of edge k.
    std::vector<std::vector<int>> edges;
    bool operator==(const PartiteHypergraph&) const = default;
};

// degree -> number of vertices with that degree
using DegreeProfile = std::map<int, int>;

// Throw DomainError if the structural invariants fail. Side sizes of zero are
// tolerated so that vertex deletion can empty a side; the text parsers demand
// positive sizes on input.
void validate(const GeneralHypergraph& h);
void validate(const PartiteHypergraph& h);

// Whitespace-separated tokens of exactly r digits from {1..9}; digit d at
// position i is vertex d-1 on side i. side_sizes[i] = max digit seen on side i.
PartiteHypergraph parse_digit_format(const std::string& text, int r);

// Line format: header "r s_1 ... s_r", then one edge per line as r 1-based
// indices. '#' starts a comment. serialize_table is the exact inverse.
PartiteHypergraph parse_table_format(const std::string& text);
std::string serialize_table(const PartiteHypergraph& h);

// Vertex i on side s becomes flat index sum(side_sizes[0..s)) + i.
GeneralHypergraph to_general(const PartiteHypergraph& h);

std::vector<int> side_offsets(const PartiteHypergraph& h);

// Every pair of distinct edges shares at least one vertex. Requires >= 1 edge.
bool is_intersecting(const GeneralHypergraph& h);
bool is_intersecting(const PartiteHypergraph& h);

// Every pair of distinct edges shares exactly one vertex. Requires >= 2 edges.
bool is_linear(const GeneralHypergraph& h);
bool is_linear(const PartiteHypergraph& h);

DegreeProfile degree_profile(const GeneralHypergraph& h, bool include_isolated = true);
DegreeProfile degree_profile(const PartiteHypergraph& h, bool include_isolated = true);
DegreeProfile side_degree_profile(const PartiteHypergraph& h, int side,
                                  bool include_isolated = true);

int degree(const PartiteHypergraph& h, VertexRef v);
int max_degree(const PartiteHypergraph& h);

struct GeneralDeletion {
    GeneralHypergraph h;
    // remap[old_index] = new index, or -1 if the vertex was removed.
    std::vector<int> remap;
};

struct PartiteDeletion {
    PartiteHypergraph h;
    // remap[side][old_index] = new index on that side, or -1 if removed.
    std::vector<std::vector<int>> remap;
};

// Remove the vertices in S and every edge that meets S. Surviving vertices
// keep their relative order; the remap table records the renumbering.
GeneralDeletion delete_vertices(const GeneralHypergraph& h, const std::set<VertexRef>& s);
PartiteDeletion delete_vertices(const PartiteHypergraph& h, const std::set<VertexRef>& s);

// Remove the edges through v, then drop every vertex of degree 0.
GeneralDeletion remove_star(const GeneralHypergraph& h, VertexRef v);
PartiteDeletion remove_star(const PartiteHypergraph& h, VertexRef v);

// Drop every vertex of degree 0 (edges unchanged).
PartiteDeletion strip_isolated(const PartiteHypergraph& h);

// Canonical byte string: equal iff the hypergraphs are isomorphic under side
// permutations composed with per-side vertex relabelings. Isolated vertices do
// not contribute. Computed by minimizing the serialized edge matrix over the
// symmetry group with pruned backtracking.
std::string canonical_form(const PartiteHypergraph& h);

// FNV-1a 64-bit hash of the serialized hypergraph, as 16 hex digits.
std::string fingerprint(const GeneralHypergraph& h);
std::string fingerprint(const PartiteHypergraph& h);
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ryser

#endif
