#include "ryser/fractional.hpp"

#include <stdexcept>

#include "ryser/errors.hpp"
#include "ryser/solvers.hpp"

namespace ryser {

namespace {

struct VertexIndexing {
    int n = 0;
    std::vector<VertexRef> names;
    std::vector<std::vector<int>> edges;  // flat indices, duplicates kept
};

VertexIndexing vindex(const GeneralHypergraph& h) {
    validate(h);
    VertexIndexing x;
    x.n = h.vertex_count;
    for (int v = 0; v < x.n; ++v) x.names.push_back({kGeneralSide, v});
    x.edges = h.edges;
    return x;
}

VertexIndexing vindex(const PartiteHypergraph& h) {
    validate(h);
    VertexIndexing x;
    for (int s = 0; s < h.r; ++s)
        for (int i = 0; i < h.side_sizes[s]; ++i) x.names.push_back({s, i});
    x.n = static_cast<int>(x.names.size());
    x.edges = to_general(h).edges;
    return x;
}

TauStarResult tau_star_impl(const VertexIndexing& x) {
    if (x.edges.empty()) throw DomainError("fractional cover undefined for an empty edge list");
    std::vector<std::vector<Rational>> a(x.edges.size(), std::vector<Rational>(x.n, Rational(0)));
    for (size_t i = 0; i < x.edges.size(); ++i)
        for (int v : x.edges[i]) a[i][v] = Rational(1);
    std::vector<Rational> b(x.edges.size(), Rational(1));
    std::vector<Rational> c(x.n, Rational(1));
    LpResult lp = lp_min(a, b, c);
    if (lp.status != LpStatus::optimal) throw std::logic_error("covering LP must have an optimum");
    TauStarResult out;
    out.value = lp.value;
    out.cover.value = lp.value;
    for (int v = 0; v < x.n; ++v) out.cover.weights[x.names[v]] = lp.point[v];
    return out;
}

NuStarResult nu_star_impl(const VertexIndexing& x) {
    if (x.edges.empty()) throw DomainError("fractional matching undefined for an empty edge list");
    size_t m = x.edges.size();
    // Maximize the total edge weight subject to vertex loads <= 1, written as
    // a minimization of the negated total.
    std::vector<std::vector<int>> vert_edges(x.n);
    for (size_t e = 0; e < m; ++e)
        for (int v : x.edges[e]) vert_edges[v].push_back(static_cast<int>(e));
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int v = 0; v < x.n; ++v) {
        if (vert_edges[v].empty()) continue;
        std::vector<Rational> row(m, Rational(0));
        for (int e : vert_edges[v]) row[e] = Rational(1);
        a.push_back(std::move(row));
        b.push_back(Rational(1));
    }
    std::vector<Rational> c(m, Rational(-1));
    LpResult lp = lp_solve(a, std::vector<RowSense>(a.size(), RowSense::le), b, c);
    if (lp.status != LpStatus::optimal) throw std::logic_error("matching LP must have an optimum");
    NuStarResult out;
    out.value = -lp.value;
    for (size_t e = 0; e < m; ++e) out.weighting.alpha[static_cast<int>(e)] = lp.point[e];
    return out;
}

bool edges_meet(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return true;
    }
    return false;
}

TauSResult tau_s_impl(const VertexIndexing& x) {
    if (x.edges.empty()) throw DomainError("edge-coefficient cover undefined for an empty edge list");
    size_t m = x.edges.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    for (size_t f = 0; f < m; ++f)
        for (size_t e = 0; e < m; ++e)
            if (e == f || edges_meet(x.edges[e], x.edges[f])) a[f][e] = Rational(1);
    std::vector<Rational> b(m, Rational(1));
    std::vector<Rational> c(m, Rational(1));
    LpResult lp = lp_min(a, b, c);
    if (lp.status != LpStatus::optimal) throw std::logic_error("edge-cover LP must have an optimum");
    TauSResult out;
    out.value = lp.value;
    for (size_t e = 0; e < m; ++e) out.weighting.alpha[static_cast<int>(e)] = lp.point[e];
    return out;
}

bool valid_frac_cover(const VertexIndexing& x, const FractionalCover& fc) {
    Rational sum;
    for (int v = 0; v < x.n; ++v) {
        auto it = fc.weights.find(x.names[v]);
        if (it == fc.weights.end() || it->second.sign() < 0) return false;
        sum += it->second;
    }
    if (sum != fc.value) return false;
    for (const auto& e : x.edges) {
        Rational s;
        for (int v : e) s += fc.weights.at(x.names[v]);
        if (s < Rational(1)) return false;
    }
    return true;
}

bool valid_frac_matching(const VertexIndexing& x, const EdgeWeighting& w) {
    std::vector<Rational> load(x.n);
    for (size_t e = 0; e < x.edges.size(); ++e) {
        auto it = w.alpha.find(static_cast<int>(e));
        Rational a = it == w.alpha.end() ? Rational(0) : it->second;
        if (a.sign() < 0) return false;
        for (int v : x.edges[e]) load[v] += a;
    }
    for (int v = 0; v < x.n; ++v)
        if (load[v] > Rational(1)) return false;
    return true;
}

}  // namespace

bool is_valid_fractional_cover(const GeneralHypergraph& h, const FractionalCover& fc) {
    return valid_frac_cover(vindex(h), fc);
}

bool is_valid_fractional_cover(const PartiteHypergraph& h, const FractionalCover& fc) {
    return valid_frac_cover(vindex(h), fc);
}

bool is_valid_fractional_matching(const GeneralHypergraph& h, const EdgeWeighting& w) {
    return valid_frac_matching(vindex(h), w);
}

bool is_valid_fractional_matching(const PartiteHypergraph& h, const EdgeWeighting& w) {
    return valid_frac_matching(vindex(h), w);
}

TauStarResult tau_star(const GeneralHypergraph& h) { return tau_star_impl(vindex(h)); }
TauStarResult tau_star(const PartiteHypergraph& h) { return tau_star_impl(vindex(h)); }
NuStarResult nu_star(const GeneralHypergraph& h) { return nu_star_impl(vindex(h)); }
NuStarResult nu_star(const PartiteHypergraph& h) { return nu_star_impl(vindex(h)); }
TauSResult tau_s(const GeneralHypergraph& h) { return tau_s_impl(vindex(h)); }
TauSResult tau_s(const PartiteHypergraph& h) { return tau_s_impl(vindex(h)); }

CertificateReport check_cover_side_support(const PartiteHypergraph& h) {
    if (h.r < 2) throw DomainError("side-support check needs at least 2 sides");
    CertificateReport rep;
    rep.subject = "cover-side-support " + fingerprint(h);
    if (h.edges.empty()) {
        rep.claim("sides with all-positive weight", "0", "<=", "1", true);
        return rep;
    }
    TauStarResult ts = tau_star(h);
    int all_positive = 0;
    for (int s = 0; s < h.r; ++s) {
        if (h.side_sizes[s] == 0) continue;
        bool has_zero = false;
        for (int i = 0; i < h.side_sizes[s]; ++i)
            if (ts.cover.weights.at({s, i}).sign() == 0) { has_zero = true; break; }
        if (!has_zero) ++all_positive;
    }
    rep.claim("sides with all-positive weight", std::to_string(all_positive), "<=", "1",
              all_positive <= 1);
    std::string w = "fractional cover:";
    for (const auto& [v, wt] : ts.cover.weights)
        if (wt.sign() != 0)
            w += " (" + std::to_string(v.side + 1) + "," + std::to_string(v.index + 1) + ")=" + wt.str();
    rep.witnesses.push_back(w);
    return rep;
}

namespace {

Rational nu_star_or_zero(const PartiteHypergraph& h) {
    if (h.edges.empty()) return Rational(0);
    return nu_star(h).value;
}

bool try_drop(const PartiteHypergraph& h, int edge, VertexRef v, const Rational& before,
              DropWitness& out) {
    std::set<VertexRef> s;
    for (int side = 0; side < h.r; ++side) {
        VertexRef u{side, h.edges[edge][side]};
        if (u != v) s.insert(u);
    }
    Rational after = nu_star_or_zero(delete_vertices(h, s).h);
    if (before - after >= Rational(1)) {
        out = {edge, v, before, after};
        return true;
    }
    return false;
}

}  // namespace

DropWitness lovasz_frac_witness(const PartiteHypergraph& h) {
    if (h.edges.empty()) throw DomainError("drop witness undefined for an empty edge list");
    Rational before = nu_star(h).value;
    TauStarResult ts = tau_star(h);
    DropWitness out;
    bool tried_any = false;
    for (const auto& [v, wt] : ts.cover.weights) {
        if (wt.sign() != 0) continue;
        int edge = -1;
        for (size_t k = 0; k < h.edges.size(); ++k)
            if (h.edges[k][v.side] == v.index) { edge = static_cast<int>(k); break; }
        if (edge < 0) continue;
        tried_any = true;
        if (try_drop(h, edge, v, before, out)) return out;
    }
    // All zero-weight vertices were isolated (or, defensively, no tried pair
    // worked): try every pair.
    (void)tried_any;
    for (size_t k = 0; k < h.edges.size(); ++k)
        for (int side = 0; side < h.r; ++side)
            if (try_drop(h, static_cast<int>(k), {side, h.edges[k][side]}, before, out)) return out;
    throw std::logic_error("no single-edge deletion drops the fractional matching number");
}

FractionalStrongWitness fractional_strong_witness(const PartiteHypergraph& h, int v1_side) {
    validate(h);
    if (v1_side < 0 || v1_side >= h.r) throw DomainError("side out of range");
    int n1 = h.side_sizes[v1_side];
    if (n1 > 20) throw CapacityError("V1 enumeration bound of 20 vertices exceeded");
    int nu_h = h.edges.empty() ? 0 : nu(h).value;
    size_t m = h.edges.size();

    // Pairwise meeting counts away from V1; coefficient of alpha_e in the
    // cover constraint of edge f.
    std::vector<std::vector<Rational>> coeff(m, std::vector<Rational>(m, Rational(0)));
    for (size_t f = 0; f < m; ++f)
        for (size_t e = 0; e < m; ++e) {
            int cnt = 0;
            for (int s = 0; s < h.r; ++s)
                if (s != v1_side && h.edges[e][s] == h.edges[f][s]) ++cnt;
            coeff[f][e] = Rational(cnt);
        }

    std::vector<int> subset;
    // Enumerate subsets of {0..n1-1} of the given size in lexicographic order.
    auto first_subset = [&](int size) {
        subset.resize(size);
        for (int i = 0; i < size; ++i) subset[i] = i;
    };
    auto next_subset = [&](int size) {
        int i = size - 1;
        while (i >= 0 && subset[i] == n1 - size + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        return true;
    };

    for (int size = 0; size <= std::min(n1, nu_h); ++size) {
        first_subset(size);
        do {
            std::set<int> t(subset.begin(), subset.end());
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (size_t f = 0; f < m; ++f) {
                if (t.count(h.edges[f][v1_side])) continue;
                a.push_back(coeff[f]);
                b.push_back(Rational(1));
            }
            std::vector<Rational> c(m, Rational(1));
            LpResult lp = lp_min(a, b, c);
            if (lp.status == LpStatus::optimal && Rational(size) + lp.value <= Rational(nu_h)) {
                FractionalStrongWitness w;
                w.v1_side = v1_side;
                w.beta = t;
                for (size_t e = 0; e < m; ++e) w.alpha.alpha[static_cast<int>(e)] = lp.point[e];
                w.total = Rational(size) + lp.value;
                return w;
            }
        } while (next_subset(size));
    }
    throw std::logic_error("no 0/1-plus-edge-coefficient cover within the matching number");
}

CertificateReport furedi_check(const PartiteHypergraph& h, int v1_side) {
    validate(h);
    if (v1_side < 0 || v1_side >= h.r) throw DomainError("side out of range");
    if (h.edges.empty()) throw DomainError("check undefined for an empty edge list");
    CertificateReport rep;
    rep.subject = "fractional-cover-vs-matching " + fingerprint(h);
    Rational ts = tau_star(h).value;
    Rational bound = Rational(h.r - 1) * Rational(nu(h).value);
    rep.claim("fractional cover optimum", ts.str(), "<=", bound.str(), ts <= bound);
    return rep;
}

}  // namespace ryser
