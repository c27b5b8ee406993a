#include "ryser/solvers.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>

#include "ryser/errors.hpp"

namespace ryser {

namespace {

// Shared solver view: flat vertex ids in ascending VertexRef order and a
// deduplicated edge list (duplicates never change tau or nu).
struct Flat {
    int n = 0;
    std::vector<VertexRef> names;
    std::vector<std::vector<int>> edges;
    std::vector<int> orig_index;
    std::vector<std::vector<int>> vert_edges;
};

void index_edges(Flat& f, const std::vector<std::vector<int>>& raw) {
    std::set<std::vector<int>> seen;
    for (size_t k = 0; k < raw.size(); ++k) {
        if (seen.insert(raw[k]).second) {
            f.edges.push_back(raw[k]);
            f.orig_index.push_back(static_cast<int>(k));
        }
    }
    f.vert_edges.assign(f.n, {});
    for (size_t e = 0; e < f.edges.size(); ++e)
        for (int v : f.edges[e]) f.vert_edges[v].push_back(static_cast<int>(e));
}

Flat flatten(const GeneralHypergraph& h) {
    validate(h);
    Flat f;
    f.n = h.vertex_count;
    f.names.reserve(f.n);
    for (int v = 0; v < f.n; ++v) f.names.push_back({kGeneralSide, v});
    index_edges(f, h.edges);
    return f;
}

Flat flatten(const PartiteHypergraph& h) {
    validate(h);
    Flat f;
    for (int s = 0; s < h.r; ++s)
        for (int i = 0; i < h.side_sizes[s]; ++i) f.names.push_back({s, i});
    f.n = static_cast<int>(f.names.size());
    index_edges(f, to_general(h).edges);
    return f;
}

Cover make_cover(const Flat& f, const std::vector<int>& chosen, const std::string& fp) {
    Cover c;
    c.certified_for = fp;
    for (int v : chosen) c.vertices.insert(f.names[v]);
    return c;
}

struct CoverSearch {
    const Flat* f = nullptr;
    int m = 0;
    std::vector<char> allowed;
    Budget budget;
    uint64_t nodes = 0;

    std::vector<int> cover_count;
    int uncovered = 0;
    std::vector<char> banned;
    std::vector<int> chosen;

    explicit CoverSearch(const Flat& flat, std::vector<char> allow, Budget b)
        : f(&flat), m(static_cast<int>(flat.edges.size())), allowed(std::move(allow)), budget(b) {
        cover_count.assign(m, 0);
        uncovered = m;
        banned.assign(f->n, 0);
    }

    void pick(int v, int dir) {
        for (int e : f->vert_edges[v]) {
            cover_count[e] += dir;
            if (dir > 0 && cover_count[e] == 1) --uncovered;
            if (dir < 0 && cover_count[e] == 0) ++uncovered;
        }
    }

    bool dfs(int k) {
        if ((++nodes & 255u) == 0) budget.check("cover search");
        if (uncovered == 0) return true;
        if (static_cast<int>(chosen.size()) >= k) return false;
        int branch = -1, branch_sz = INT_MAX;
        int packing = 0;
        std::vector<char> marked(f->n, 0);
        for (int e = 0; e < m; ++e) {
            if (cover_count[e] > 0) continue;
            int sz = 0;
            bool disjoint = true;
            for (int v : f->edges[e]) {
                if (allowed[v] && !banned[v]) ++sz;
                if (marked[v]) disjoint = false;
            }
            if (sz == 0) return false;
            if (sz < branch_sz) {
                branch_sz = sz;
                branch = e;
            }
            if (disjoint) {
                ++packing;
                for (int v : f->edges[e]) marked[v] = 1;
            }
        }
        if (static_cast<int>(chosen.size()) + packing > k) return false;
        std::vector<int> banned_here;
        for (int v : f->edges[branch]) {
            if (!allowed[v] || banned[v]) continue;
            chosen.push_back(v);
            pick(v, +1);
            if (dfs(k)) return true;
            pick(v, -1);
            chosen.pop_back();
            banned[v] = 1;
            banned_here.push_back(v);
        }
        for (int v : banned_here) banned[v] = 0;
        return false;
    }
};

std::optional<std::vector<int>> cover_leq_flat(const Flat& f, int k, const std::vector<char>& allowed,
                                               Budget budget) {
    if (k < 0) throw DomainError("cover budget must be non-negative");
    CoverSearch cs(f, allowed, budget);
    if (!cs.dfs(k)) return std::nullopt;
    return cs.chosen;
}

std::optional<Cover> cover_leq(const Flat& f, int k, Budget budget, const std::string& fp) {
    auto chosen = cover_leq_flat(f, k, std::vector<char>(f.n, 1), budget);
    if (!chosen) return std::nullopt;
    return make_cover(f, *chosen, fp);
}

TauResult tau_flat(const Flat& f, Budget budget, const std::string& fp) {
    if (f.edges.empty()) throw DomainError("covering number undefined for an empty edge list");
    std::vector<char> allowed(f.n, 1);
    for (int k = 1;; ++k) {
        auto chosen = cover_leq_flat(f, k, allowed, budget);
        if (chosen) return {k, make_cover(f, *chosen, fp)};
    }
}

struct MatchSearch {
    int m = 0;
    std::vector<std::vector<int>> conflicts;  // includes the edge itself
    Budget budget;
    uint64_t nodes = 0;
    std::vector<char> avail;
    int avail_cnt = 0;
    std::vector<int> current, best;

    void dfs() {
        if ((++nodes & 255u) == 0) budget.check("matching search");
        int e = -1;
        for (int i = 0; i < m; ++i)
            if (avail[i]) { e = i; break; }
        if (e < 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (static_cast<int>(current.size()) + avail_cnt <= static_cast<int>(best.size())) return;
        std::vector<int> removed;
        for (int c : conflicts[e])
            if (avail[c]) {
                avail[c] = 0;
                removed.push_back(c);
            }
        avail_cnt -= static_cast<int>(removed.size());
        current.push_back(e);
        dfs();
        current.pop_back();
        avail_cnt += static_cast<int>(removed.size());
        for (int c : removed) avail[c] = 1;
        avail[e] = 0;
        --avail_cnt;
        dfs();
        avail[e] = 1;
        ++avail_cnt;
    }
};

bool flat_edges_meet(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return true;
    }
    return false;
}

NuResult nu_flat(const Flat& f, Budget budget) {
    MatchSearch ms;
    ms.m = static_cast<int>(f.edges.size());
    ms.budget = budget;
    ms.conflicts.resize(ms.m);
    for (int i = 0; i < ms.m; ++i) {
        ms.conflicts[i].push_back(i);
        for (int j = 0; j < ms.m; ++j)
            if (j != i && flat_edges_meet(f.edges[i], f.edges[j])) ms.conflicts[i].push_back(j);
        std::sort(ms.conflicts[i].begin(), ms.conflicts[i].end());
    }
    ms.avail.assign(ms.m, 1);
    ms.avail_cnt = ms.m;
    ms.dfs();
    NuResult out;
    out.value = static_cast<int>(ms.best.size());
    for (int e : ms.best) out.matching.edge_indices.insert(f.orig_index[e]);
    return out;
}

Cover greedy_flat(const Flat& f, const std::string& fp) {
    if (f.edges.empty()) throw DomainError("greedy cover undefined for an empty edge list");
    int m = static_cast<int>(f.edges.size());
    std::vector<char> covered(m, 0);
    int left = m;
    std::vector<int> chosen;
    while (left > 0) {
        std::vector<int> deg(f.n, 0);
        for (int e = 0; e < m; ++e)
            if (!covered[e])
                for (int v : f.edges[e]) ++deg[v];
        int pick = 0;
        for (int v = 1; v < f.n; ++v)
            if (deg[v] > deg[pick]) pick = v;
        chosen.push_back(pick);
        for (int e : f.vert_edges[pick])
            if (!covered[e]) {
                covered[e] = 1;
                --left;
            }
    }
    return make_cover(f, chosen, fp);
}

struct WeightedSearch {
    const Flat* f = nullptr;
    int m = 0;
    std::vector<Rational> w;
    std::vector<char> allowed;
    Budget budget;
    uint64_t nodes = 0;

    std::vector<int> cover_count;
    int uncovered = 0;
    std::vector<char> banned;
    std::vector<int> chosen;
    Rational chosen_w;
    bool have_best = false;
    Rational best_w;
    std::vector<int> best_set;

    WeightedSearch(const Flat& flat, std::vector<Rational> weights, std::vector<char> allow, Budget b)
        : f(&flat),
          m(static_cast<int>(flat.edges.size())),
          w(std::move(weights)),
          allowed(std::move(allow)),
          budget(b) {
        cover_count.assign(m, 0);
        uncovered = m;
        banned.assign(f->n, 0);
    }

    void pick(int v, int dir) {
        for (int e : f->vert_edges[v]) {
            cover_count[e] += dir;
            if (dir > 0 && cover_count[e] == 1) --uncovered;
            if (dir < 0 && cover_count[e] == 0) ++uncovered;
        }
    }

    void dfs() {
        if ((++nodes & 255u) == 0) budget.check("weighted cover search");
        if (uncovered == 0) {
            if (!have_best || chosen_w < best_w) {
                have_best = true;
                best_w = chosen_w;
                best_set = chosen;
            }
            return;
        }
        int branch = -1, branch_sz = INT_MAX;
        Rational bound = chosen_w;
        std::vector<char> marked(f->n, 0);
        for (int e = 0; e < m; ++e) {
            if (cover_count[e] > 0) continue;
            int sz = 0;
            bool disjoint = true;
            bool have_min = false;
            Rational mn;
            for (int v : f->edges[e]) {
                if (allowed[v] && !banned[v]) {
                    ++sz;
                    if (!have_min || w[v] < mn) {
                        mn = w[v];
                        have_min = true;
                    }
                }
                if (marked[v]) disjoint = false;
            }
            if (sz == 0) return;
            if (sz < branch_sz) {
                branch_sz = sz;
                branch = e;
            }
            if (disjoint) {
                bound += mn;
                for (int v : f->edges[e]) marked[v] = 1;
            }
        }
        if (have_best && !(bound < best_w)) return;
        std::vector<int> banned_here;
        for (int v : f->edges[branch]) {
            if (!allowed[v] || banned[v]) continue;
            chosen.push_back(v);
            chosen_w += w[v];
            pick(v, +1);
            dfs();
            pick(v, -1);
            chosen_w -= w[v];
            chosen.pop_back();
            banned[v] = 1;
            banned_here.push_back(v);
        }
        for (int v : banned_here) banned[v] = 0;
    }
};

WeightedCoverResult weighted_flat(const Flat& f, const std::map<VertexRef, Rational>& w, Budget budget,
                                  const std::string& fp) {
    std::vector<Rational> weights(f.n);
    for (int v = 0; v < f.n; ++v) {
        auto it = w.find(f.names[v]);
        if (it == w.end()) throw DomainError("weight missing for a vertex");
        if (it->second.sign() < 0) throw DomainError("negative vertex weight");
        weights[v] = it->second;
    }
    WeightedSearch ws(f, std::move(weights), std::vector<char>(f.n, 1), budget);
    ws.dfs();
    WeightedCoverResult out;
    out.value = ws.best_w;
    out.cover = make_cover(f, ws.best_set, fp);
    return out;
}

}  // namespace

bool is_valid_cover(const GeneralHypergraph& h, const Cover& c) {
    for (const auto& v : c.vertices)
        if (v.side != kGeneralSide || v.index < 0 || v.index >= h.vertex_count) return false;
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : e)
            if (c.vertices.count({kGeneralSide, v})) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

bool is_valid_cover(const PartiteHypergraph& h, const Cover& c) {
    for (const auto& v : c.vertices)
        if (v.side < 0 || v.side >= h.r || v.index < 0 || v.index >= h.side_sizes[v.side])
            return false;
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int s = 0; s < h.r; ++s)
            if (c.vertices.count({s, e[s]})) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

bool is_valid_matching(const GeneralHypergraph& h, const Matching& m) {
    std::vector<int> ids(m.edge_indices.begin(), m.edge_indices.end());
    for (int i : ids)
        if (i < 0 || i >= static_cast<int>(h.edges.size())) return false;
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b)
            if (flat_edges_meet(h.edges[ids[a]], h.edges[ids[b]])) return false;
    return true;
}

bool is_valid_matching(const PartiteHypergraph& h, const Matching& m) {
    return is_valid_matching(to_general(h), m);
}

std::optional<Cover> find_cover_leq(const GeneralHypergraph& h, int k, Budget budget) {
    return cover_leq(flatten(h), k, budget, fingerprint(h));
}

std::optional<Cover> find_cover_leq(const PartiteHypergraph& h, int k, Budget budget) {
    return cover_leq(flatten(h), k, budget, fingerprint(h));
}

TauResult tau(const GeneralHypergraph& h, Budget budget) {
    return tau_flat(flatten(h), budget, fingerprint(h));
}

TauResult tau(const PartiteHypergraph& h, Budget budget) {
    return tau_flat(flatten(h), budget, fingerprint(h));
}

NuResult nu(const GeneralHypergraph& h, Budget budget) { return nu_flat(flatten(h), budget); }

NuResult nu(const PartiteHypergraph& h, Budget budget) { return nu_flat(flatten(h), budget); }

Cover greedy_cover(const GeneralHypergraph& h) { return greedy_flat(flatten(h), fingerprint(h)); }

Cover greedy_cover(const PartiteHypergraph& h) { return greedy_flat(flatten(h), fingerprint(h)); }

WeightedCoverResult weighted_min_cover(const GeneralHypergraph& h,
                                       const std::map<VertexRef, Rational>& w, Budget budget) {
    return weighted_flat(flatten(h), w, budget, fingerprint(h));
}

WeightedCoverResult weighted_min_cover(const PartiteHypergraph& h,
                                       const std::map<VertexRef, Rational>& w, Budget budget) {
    return weighted_flat(flatten(h), w, budget, fingerprint(h));
}

WeightedCoverResult min_biased_cover(const PartiteHypergraph& h, int distinguished, Budget budget) {
    if (h.r < 2) throw DomainError("biased cover needs at least 2 sides");
    if (distinguished < 0 || distinguished >= h.r) throw DomainError("side out of range");
    std::map<VertexRef, Rational> w;
    for (int s = 0; s < h.r; ++s)
        for (int i = 0; i < h.side_sizes[s]; ++i)
            w[{s, i}] = (s == distinguished) ? Rational(1) : Rational(1, h.r - 1);
    return weighted_min_cover(h, w, budget);
}

std::optional<TauResult> min_cover_avoiding(const PartiteHypergraph& h, int banned, Budget budget) {
    if (h.r < 2) throw DomainError("side-avoiding cover needs at least 2 sides");
    if (banned < 0 || banned >= h.r) throw DomainError("side out of range");
    Flat f = flatten(h);
    std::vector<char> allowed(f.n, 1);
    for (int v = 0; v < f.n; ++v)
        if (f.names[v].side == banned) allowed[v] = 0;
    for (const auto& e : f.edges) {
        bool ok = false;
        for (int v : e)
            if (allowed[v]) { ok = true; break; }
        if (!ok) return std::nullopt;
    }
    std::string fp = fingerprint(h);
    if (f.edges.empty()) return TauResult{0, Cover{{}, fp}};
    for (int k = 1;; ++k) {
        auto chosen = cover_leq_flat(f, k, allowed, budget);
        if (chosen) return TauResult{k, make_cover(f, *chosen, fp)};
    }
}

}  // namespace ryser
