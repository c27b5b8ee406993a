#include "ryser/hypergraph.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <sstream>

#include "ryser/errors.hpp"

namespace ryser {

void validate(const GeneralHypergraph& h) {
    if (h.vertex_count < 0) throw DomainError("negative vertex count");
    for (size_t k = 0; k < h.edges.size(); ++k) {
        const auto& e = h.edges[k];
        if (e.empty()) throw DomainError("edge " + std::to_string(k) + " is empty");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= h.vertex_count)
                throw DomainError("edge " + std::to_string(k) + " has vertex out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw DomainError("edge " + std::to_string(k) + " is not strictly sorted");
        }
    }
}

void validate(const PartiteHypergraph& h) {
    if (h.r < 1) throw DomainError("side count must be at least 1");
    if (static_cast<int>(h.side_sizes.size()) != h.r)
        throw DomainError("side_sizes length differs from r");
    for (int s = 0; s < h.r; ++s)
        if (h.side_sizes[s] < 0) throw DomainError("negative size on side " + std::to_string(s));
    for (size_t k = 0; k < h.edges.size(); ++k) {
        const auto& e = h.edges[k];
        if (static_cast<int>(e.size()) != h.r)
            throw DomainError("edge " + std::to_string(k) + " does not have one vertex per side");
        for (int s = 0; s < h.r; ++s)
            if (e[s] < 0 || e[s] >= h.side_sizes[s])
                throw DomainError("edge " + std::to_string(k) + " has index out of range on side " +
                                  std::to_string(s));
    }
}

PartiteHypergraph parse_digit_format(const std::string& text, int r) {
    if (r < 1) throw DomainError("side count must be at least 1");
    PartiteHypergraph h;
    h.r = r;
    h.side_sizes.assign(r, 0);
    std::istringstream in(text);
    std::string tok;
    int pos = 0;
    while (in >> tok) {
        ++pos;
        std::string where = "token " + std::to_string(pos) + " '" + tok + "'";
        if (static_cast<int>(tok.size()) != r)
            throw ParseError(where + ": expected " + std::to_string(r) + " characters");
        std::vector<int> e(r);
        for (int i = 0; i < r; ++i) {
            char c = tok[i];
            if (c == '0') throw ParseError(where + ": zero digit at position " + std::to_string(i + 1));
            if (c < '1' || c > '9')
                throw ParseError(where + ": non-digit character at position " + std::to_string(i + 1));
            e[i] = c - '1';
            h.side_sizes[i] = std::max(h.side_sizes[i], e[i] + 1);
        }
        h.edges.push_back(std::move(e));
    }
    if (h.edges.empty()) throw ParseError("no edge tokens in input");
    return h;
}

namespace {

// Strip a '#' comment and trailing CR, then split into int tokens.
std::vector<long> int_tokens(const std::string& raw, int lineno) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    std::istringstream in(line);
    std::vector<long> out;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

PartiteHypergraph parse_table_format(const std::string& text) {
    PartiteHypergraph h;
    bool have_header = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto nums = int_tokens(raw, lineno);
        if (nums.empty()) continue;
        std::string where = "line " + std::to_string(lineno) + ": ";
        if (!have_header) {
            long r = nums[0];
            if (r < 1) throw ParseError(where + "side count must be positive");
            if (static_cast<long>(nums.size()) != r + 1)
                throw ParseError(where + "header needs " + std::to_string(r) +
                                 " side sizes after the side count");
            h.r = static_cast<int>(r);
            for (long i = 1; i <= r; ++i) {
                if (nums[i] < 1) throw ParseError(where + "side sizes must be positive");
                h.side_sizes.push_back(static_cast<int>(nums[i]));
            }
            have_header = true;
            continue;
        }
        if (static_cast<int>(nums.size()) != h.r)
            throw ParseError(where + "expected " + std::to_string(h.r) + " vertex indices, got " +
                             std::to_string(nums.size()));
        std::vector<int> e(h.r);
        for (int s = 0; s < h.r; ++s) {
            if (nums[s] < 1 || nums[s] > h.side_sizes[s])
                throw ParseError(where + "index " + std::to_string(nums[s]) +
                                 " out of range on side " + std::to_string(s + 1));
            e[s] = static_cast<int>(nums[s]) - 1;
        }
        h.edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError("missing header line");
    return h;
}

std::string serialize_table(const PartiteHypergraph& h) {
    std::ostringstream out;
    out << h.r;
    for (int s : h.side_sizes) out << ' ' << s;
    out << '\n';
    for (const auto& e : h.edges) {
        for (int s = 0; s < h.r; ++s) {
            if (s) out << ' ';
            out << e[s] + 1;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<int> side_offsets(const PartiteHypergraph& h) {
    std::vector<int> off(h.r, 0);
    for (int s = 1; s < h.r; ++s) off[s] = off[s - 1] + h.side_sizes[s - 1];
    return off;
}

GeneralHypergraph to_general(const PartiteHypergraph& h) {
    auto off = side_offsets(h);
    GeneralHypergraph g;
    g.vertex_count = h.r ? off[h.r - 1] + h.side_sizes[h.r - 1] : 0;
    g.edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::vector<int> f(h.r);
        for (int s = 0; s < h.r; ++s) f[s] = off[s] + e[s];
        g.edges.push_back(std::move(f));
    }
    return g;
}

namespace {

// Size of the intersection of two strictly sorted lists.
int sorted_common(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

int partite_common(const std::vector<int>& a, const std::vector<int>& b) {
    int n = 0;
    for (size_t s = 0; s < a.size(); ++s)
        if (a[s] == b[s]) ++n;
    return n;
}

template <class Common>
bool pairwise_all(const std::vector<std::vector<int>>& edges, Common common, int lo, int hi) {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            int c = common(edges[i], edges[j]);
            if (c < lo || c > hi) return false;
        }
    return true;
}

}  // namespace

bool is_intersecting(const GeneralHypergraph& h) {
    if (h.edges.empty()) throw DomainError("intersecting is undefined for an empty edge list");
    return pairwise_all(h.edges, sorted_common, 1, INT_MAX);
}

bool is_intersecting(const PartiteHypergraph& h) {
    if (h.edges.empty()) throw DomainError("intersecting is undefined for an empty edge list");
    return pairwise_all(h.edges, partite_common, 1, INT_MAX);
}

bool is_linear(const GeneralHypergraph& h) {
    if (h.edges.size() < 2) throw DomainError("linearity needs at least 2 edges");
    return pairwise_all(h.edges, sorted_common, 1, 1);
}

bool is_linear(const PartiteHypergraph& h) {
    if (h.edges.size() < 2) throw DomainError("linearity needs at least 2 edges");
    return pairwise_all(h.edges, partite_common, 1, 1);
}

namespace {

DegreeProfile profile_of(const std::vector<int>& deg, bool include_isolated) {
    DegreeProfile p;
    for (int d : deg)
        if (d > 0 || include_isolated) ++p[d];
    return p;
}

}  // namespace

DegreeProfile degree_profile(const GeneralHypergraph& h, bool include_isolated) {
    std::vector<int> deg(h.vertex_count, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    return profile_of(deg, include_isolated);
}

DegreeProfile degree_profile(const PartiteHypergraph& h, bool include_isolated) {
    return degree_profile(to_general(h), include_isolated);
}

DegreeProfile side_degree_profile(const PartiteHypergraph& h, int side, bool include_isolated) {
    if (side < 0 || side >= h.r) throw DomainError("side out of range");
    std::vector<int> deg(h.side_sizes[side], 0);
    for (const auto& e : h.edges) ++deg[e[side]];
    return profile_of(deg, include_isolated);
}

int degree(const PartiteHypergraph& h, VertexRef v) {
    if (v.side < 0 || v.side >= h.r || v.index < 0 || v.index >= h.side_sizes[v.side])
        throw DomainError("vertex reference out of bounds");
    int d = 0;
    for (const auto& e : h.edges)
        if (e[v.side] == v.index) ++d;
    return d;
}

int max_degree(const PartiteHypergraph& h) {
    int best = 0;
    for (int s = 0; s < h.r; ++s) {
        std::vector<int> deg(h.side_sizes[s], 0);
        for (const auto& e : h.edges) best = std::max(best, ++deg[e[s]]);
    }
    return best;
}

GeneralDeletion delete_vertices(const GeneralHypergraph& h, const std::set<VertexRef>& s) {
    std::vector<char> drop(h.vertex_count, 0);
    for (const auto& v : s) {
        if (v.side != kGeneralSide) throw DomainError("partite vertex reference on a general hypergraph");
        if (v.index < 0 || v.index >= h.vertex_count) throw DomainError("vertex reference out of bounds");
        drop[v.index] = 1;
    }
    GeneralDeletion out;
    out.remap.assign(h.vertex_count, -1);
    for (int v = 0; v < h.vertex_count; ++v)
        if (!drop[v]) out.remap[v] = out.h.vertex_count++;
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : e)
            if (drop[v]) { hit = true; break; }
        if (hit) continue;
        std::vector<int> f;
        f.reserve(e.size());
        for (int v : e) f.push_back(out.remap[v]);
        out.h.edges.push_back(std::move(f));
    }
    return out;
}

PartiteDeletion delete_vertices(const PartiteHypergraph& h, const std::set<VertexRef>& s) {
    std::vector<std::vector<char>> drop(h.r);
    for (int i = 0; i < h.r; ++i) drop[i].assign(h.side_sizes[i], 0);
    for (const auto& v : s) {
        if (v.side < 0 || v.side >= h.r || v.index < 0 || v.index >= h.side_sizes[v.side])
            throw DomainError("vertex reference out of bounds");
        drop[v.side][v.index] = 1;
    }
    PartiteDeletion out;
    out.h.r = h.r;
    out.remap.resize(h.r);
    for (int i = 0; i < h.r; ++i) {
        out.remap[i].assign(h.side_sizes[i], -1);
        int next = 0;
        for (int v = 0; v < h.side_sizes[i]; ++v)
            if (!drop[i][v]) out.remap[i][v] = next++;
        out.h.side_sizes.push_back(next);
    }
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int i = 0; i < h.r; ++i)
            if (drop[i][e[i]]) { hit = true; break; }
        if (hit) continue;
        std::vector<int> f(h.r);
        for (int i = 0; i < h.r; ++i) f[i] = out.remap[i][e[i]];
        out.h.edges.push_back(std::move(f));
    }
    return out;
}

GeneralDeletion remove_star(const GeneralHypergraph& h, VertexRef v) {
    if (v.side != kGeneralSide || v.index < 0 || v.index >= h.vertex_count)
        throw DomainError("vertex reference out of bounds");
    GeneralHypergraph kept;
    kept.vertex_count = h.vertex_count;
    for (const auto& e : h.edges)
        if (!std::binary_search(e.begin(), e.end(), v.index)) kept.edges.push_back(e);
    std::vector<int> deg(h.vertex_count, 0);
    for (const auto& e : kept.edges)
        for (int u : e) ++deg[u];
    GeneralDeletion out;
    out.remap.assign(h.vertex_count, -1);
    for (int u = 0; u < h.vertex_count; ++u)
        if (deg[u] > 0) out.remap[u] = out.h.vertex_count++;
    for (const auto& e : kept.edges) {
        std::vector<int> f;
        f.reserve(e.size());
        for (int u : e) f.push_back(out.remap[u]);
        out.h.edges.push_back(std::move(f));
    }
    return out;
}

PartiteDeletion strip_isolated(const PartiteHypergraph& h) {
    std::vector<std::vector<int>> deg(h.r);
    for (int i = 0; i < h.r; ++i) deg[i].assign(h.side_sizes[i], 0);
    for (const auto& e : h.edges)
        for (int i = 0; i < h.r; ++i) ++deg[i][e[i]];
    PartiteDeletion out;
    out.h.r = h.r;
    out.remap.resize(h.r);
    for (int i = 0; i < h.r; ++i) {
        out.remap[i].assign(h.side_sizes[i], -1);
        int next = 0;
        for (int v = 0; v < h.side_sizes[i]; ++v)
            if (deg[i][v] > 0) out.remap[i][v] = next++;
        out.h.side_sizes.push_back(next);
    }
    for (const auto& e : h.edges) {
        std::vector<int> f(h.r);
        for (int i = 0; i < h.r; ++i) f[i] = out.remap[i][e[i]];
        out.h.edges.push_back(std::move(f));
    }
    return out;
}

PartiteDeletion remove_star(const PartiteHypergraph& h, VertexRef v) {
    if (v.side < 0 || v.side >= h.r || v.index < 0 || v.index >= h.side_sizes[v.side])
        throw DomainError("vertex reference out of bounds");
    PartiteHypergraph kept;
    kept.r = h.r;
    kept.side_sizes = h.side_sizes;
    for (const auto& e : h.edges)
        if (e[v.side] != v.index) kept.edges.push_back(e);
    return strip_isolated(kept);
}

namespace {

// Backtracking minimizer for the canonical form. Rows of the edge matrix are
// emitted one at a time; within a fixed side permutation, vertex labels are
// assigned in order of first appearance, which is optimal for a fixed row
// order, and all row orders tied on the current prefix are explored.
struct CanonSearch {
    int r = 0;
    int m = 0;
    const std::vector<std::vector<int>>* edges = nullptr;
    std::vector<int> perm;                     // new side i reads old side perm[i]
    std::vector<std::vector<int>> label;       // label[i][old index] or -1
    std::vector<int> next_label;
    std::vector<char> used;
    std::vector<int> current;                  // flattened rows built so far
    std::vector<int> best;
    bool have_best = false;

    void row_of(int k, std::vector<int>& out) const {
        for (int i = 0; i < r; ++i) {
            int u = (*edges)[k][perm[i]];
            int lab = label[i][u];
            out[i] = lab >= 0 ? lab : next_label[i];
        }
    }

    // Compare current-prefix + row against the same-length prefix of best.
    // Recomputed from scratch so updates to best deeper in the tree are seen.
    int prefix_cmp(const std::vector<int>& row, int depth) const {
        int n = depth * r;
        for (int i = 0; i < n; ++i)
            if (current[i] != best[i]) return current[i] < best[i] ? -1 : 1;
        for (int i = 0; i < r; ++i)
            if (row[i] != best[n + i]) return row[i] < best[n + i] ? -1 : 1;
        return 0;
    }

    void dfs(int depth) {
        if (depth == m) {
            if (!have_best || current < best) {
                best = current;
                have_best = true;
            }
            return;
        }
        std::vector<int> row(r), cand_row(r);
        std::vector<int> ties;
        for (int k = 0; k < m; ++k) {
            if (used[k]) continue;
            row_of(k, cand_row);
            if (ties.empty() || cand_row < row) {
                row = cand_row;
                ties.assign(1, k);
            } else if (cand_row == row) {
                ties.push_back(k);
            }
        }
        if (have_best && prefix_cmp(row, depth) > 0) return;
        for (int k : ties) {
            used[k] = 1;
            std::vector<int> fresh;
            for (int i = 0; i < r; ++i) {
                int u = (*edges)[k][perm[i]];
                if (label[i][u] < 0) {
                    label[i][u] = next_label[i]++;
                    fresh.push_back(i);
                }
                current.push_back(label[i][u]);
            }
            dfs(depth + 1);
            current.resize(current.size() - r);
            for (int i : fresh) {
                int u = (*edges)[k][perm[i]];
                label[i][u] = -1;
                --next_label[i];
            }
            used[k] = 0;
        }
    }
};

}  // namespace

std::string canonical_form(const PartiteHypergraph& h) {
    PartiteHypergraph g = strip_isolated(h).h;
    CanonSearch cs;
    cs.r = g.r;
    cs.m = static_cast<int>(g.edges.size());
    cs.edges = &g.edges;
    cs.perm.resize(g.r);
    for (int i = 0; i < g.r; ++i) cs.perm[i] = i;
    cs.label.resize(g.r);
    cs.next_label.assign(g.r, 0);
    cs.used.assign(cs.m, 0);
    if (cs.m > 0) {
        do {
            for (int i = 0; i < g.r; ++i) {
                cs.label[i].assign(g.side_sizes[cs.perm[i]], -1);
                cs.next_label[i] = 0;
            }
            cs.dfs(0);
        } while (std::next_permutation(cs.perm.begin(), cs.perm.end()));
    }
    std::ostringstream out;
    out << g.r << ' ' << cs.m << '\n';
    for (int k = 0; k < cs.m; ++k) {
        for (int i = 0; i < g.r; ++i) {
            if (i) out << ' ';
            out << cs.best[k * g.r + i];
        }
        out << '\n';
    }
    return out.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

std::string fingerprint(const PartiteHypergraph& h) {
    return fnv1a_hex("partite\n" + serialize_table(h));
}

std::string fingerprint(const GeneralHypergraph& h) {
    std::ostringstream out;
    out << "general " << h.vertex_count << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return fnv1a_hex(out.str());
}

}  // namespace ryser
