#include "ryser/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ryser/errors.hpp"
#include "ryser/rng.hpp"
#include "ryser/solvers.hpp"

namespace ryser {

namespace {

bool small_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Coefficient vector (low first) of the reduction polynomial for the
// supported prime-power orders.
std::vector<int> reduction_poly(int q) {
    if (q == 4) return {1, 1, 1};
    if (q == 8) return {1, 1, 0, 1};
    if (q == 9) return {1, 0, 1};
    throw std::logic_error("reduction_poly: unexpected order");
}

std::vector<int> digits_of(int e, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = e % p;
        e /= p;
    }
    return d;
}

int value_of(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

void exhaustive_axiom_check(const FiniteField& f) {
    int q = f.order();
    for (int a = 0; a < q; ++a) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a)
            throw std::logic_error("field axiom check: identity failed");
        if (f.add(a, f.neg(a)) != 0)
            throw std::logic_error("field axiom check: additive inverse failed");
        if (a != 0 && f.mul(a, f.inv(a)) != 1)
            throw std::logic_error("field axiom check: multiplicative inverse failed");
        for (int b = 0; b < q; ++b) {
            if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a))
                throw std::logic_error("field axiom check: commutativity failed");
            for (int c = 0; c < q; ++c) {
                if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)))
                    throw std::logic_error("field axiom check: additive associativity failed");
                if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)))
                    throw std::logic_error("field axiom check: multiplicative associativity failed");
                if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
                    throw std::logic_error("field axiom check: distributivity failed");
            }
        }
    }
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    int k = 0;
    if (small_prime(q) && q <= 97) {
        p_ = q;
        k = 1;
    } else if (q == 4 || q == 8) {
        p_ = 2;
        k = (q == 4) ? 2 : 3;
    } else if (q == 9) {
        p_ = 3;
        k = 2;
    } else {
        throw DomainError("no supported finite field of order " + std::to_string(q));
    }

    add_table_.assign(static_cast<size_t>(q) * q, 0);
    mul_table_.assign(static_cast<size_t>(q) * q, 0);
    std::vector<int> poly = (k > 1) ? reduction_poly(q) : std::vector<int>{};
    for (int a = 0; a < q; ++a) {
        std::vector<int> da = digits_of(a, p_, k);
        for (int b = 0; b < q; ++b) {
            std::vector<int> db = digits_of(b, p_, k);
            std::vector<int> sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p_;
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k; ++i) {
                    int& slot = prod[d - k + i];
                    slot = ((slot - c * poly[i]) % p_ + p_) % p_;
                }
            }
            prod.resize(k);
            add_table_[static_cast<size_t>(a) * q + b] = value_of(sum, p_);
            mul_table_[static_cast<size_t>(a) * q + b] = value_of(prod, p_);
        }
    }

    if (q <= 9) exhaustive_axiom_check(*this);
}

int FiniteField::element(int a, const char* who) const {
    if (a < 0 || a >= q_)
        throw DomainError(std::string(who) + ": element " + std::to_string(a) +
                          " outside field of order " + std::to_string(q_));
    return a;
}

int FiniteField::add(int a, int b) const {
    return add_table_[static_cast<size_t>(element(a, "add")) * q_ + element(b, "add")];
}

int FiniteField::mul(int a, int b) const {
    return mul_table_[static_cast<size_t>(element(a, "mul")) * q_ + element(b, "mul")];
}

int FiniteField::neg(int a) const {
    element(a, "neg");
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("neg: no additive inverse");
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::inv(int a) const {
    element(a, "inv");
    if (a == 0) throw DomainError("inv: zero has no multiplicative inverse");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::logic_error("inv: no multiplicative inverse");
}

FiniteField finite_field(int q) { return FiniteField(q); }

ProjectivePlaneModel::ProjectivePlaneModel(int q) : field_(q) {
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) triples_.push_back({1, a, b});
    for (int a = 0; a < q; ++a) triples_.push_back({0, 1, a});
    triples_.push_back({0, 0, 1});
    for (int i = 0; i < static_cast<int>(triples_.size()); ++i) index_[triples_[i]] = i;
}

bool ProjectivePlaneModel::incident(int line, int point) const {
    const auto& l = triples_.at(line);
    const auto& p = triples_.at(point);
    int dot = 0;
    for (int i = 0; i < 3; ++i) dot = field_.add(dot, field_.mul(l[i], p[i]));
    return dot == 0;
}

std::vector<int> ProjectivePlaneModel::line_points(int line) const {
    std::vector<int> out;
    for (int p = 0; p < point_count(); ++p)
        if (incident(line, p)) out.push_back(p);
    return out;
}

std::array<int, 3> ProjectivePlaneModel::normalize(const std::array<int, 3>& t) const {
    for (int i = 0; i < 3; ++i) {
        if (t[i] == 0) continue;
        int s = field_.inv(t[i]);
        std::array<int, 3> out{};
        for (int j = 0; j < 3; ++j) out[j] = field_.mul(s, t[j]);
        return out;
    }
    throw DomainError("normalize: zero triple is not a projective point");
}

int ProjectivePlaneModel::point_index(const std::array<int, 3>& t) const {
    return index_.at(normalize(t));
}

GeneralHypergraph projective_plane(int q) {
    ProjectivePlaneModel pg(q);
    GeneralHypergraph h;
    h.vertex_count = pg.point_count();
    for (int l = 0; l < pg.line_count(); ++l) h.edges.push_back(pg.line_points(l));
    validate(h);
    return h;
}

namespace {

// Common truncation step. Removes the point (0,0,1); the q+1 pencil lines
// through it, each minus that point, become the sides, and the lines from
// keep_lines (none of which pass through it) become the edges.
PartiteHypergraph truncate_at_origin_line(const ProjectivePlaneModel& pg,
                                          const std::vector<int>& keep_lines) {
    int removed = pg.point_index({0, 0, 1});
    std::vector<int> pencil;
    for (int l = 0; l < pg.line_count(); ++l)
        if (pg.incident(l, removed)) pencil.push_back(l);

    // side_of[p] / slot_of[p]: which punctured pencil line holds point p,
    // and at which position.
    std::vector<int> side_of(pg.point_count(), -1);
    std::vector<int> slot_of(pg.point_count(), -1);
    PartiteHypergraph h;
    h.r = static_cast<int>(pencil.size());
    for (int s = 0; s < h.r; ++s) {
        int size = 0;
        for (int p : pg.line_points(pencil[s])) {
            if (p == removed) continue;
            side_of[p] = s;
            slot_of[p] = size++;
        }
        h.side_sizes.push_back(size);
    }

    for (int l : keep_lines) {
        std::vector<int> e(h.r, -1);
        for (int p : pg.line_points(l)) {
            if (side_of[p] < 0) throw std::logic_error("truncation: kept line through removed point");
            e[side_of[p]] = slot_of[p];
        }
        h.edges.push_back(std::move(e));
    }
    validate(h);
    return h;
}

}  // namespace

PartiteHypergraph truncated_projective_plane(int q) {
    ProjectivePlaneModel pg(q);
    int removed = pg.point_index({0, 0, 1});
    std::vector<int> keep;
    for (int l = 0; l < pg.line_count(); ++l)
        if (!pg.incident(l, removed)) keep.push_back(l);
    return truncate_at_origin_line(pg, keep);
}

PartiteHypergraph oval_secant_subplane(int q) {
    if (q % 2 == 0)
        throw DomainError("oval subplane requires an odd field order, got " + std::to_string(q));
    ProjectivePlaneModel pg(q);
    const FiniteField& f = pg.field();

    std::vector<bool> on_oval(pg.point_count(), false);
    for (int t = 0; t < q; ++t) on_oval[pg.point_index({f.mul(t, t), t, 1})] = true;
    on_oval[pg.point_index({1, 0, 0})] = true;

    int removed = pg.point_index({0, 0, 1});
    if (!on_oval[removed]) throw std::logic_error("oval subplane: removed point not on the conic");

    std::vector<int> keep;
    for (int l = 0; l < pg.line_count(); ++l) {
        if (pg.incident(l, removed)) continue;
        int met = 0;
        for (int p : pg.line_points(l)) met += on_oval[p] ? 1 : 0;
        if (met > 0) keep.push_back(l);
    }
    return truncate_at_origin_line(pg, keep);
}

PartiteHypergraph one_factorization_instance(int r) {
    if (r < 3 || r % 2 == 0)
        throw DomainError("one-factorization instance requires odd r >= 3, got " + std::to_string(r));

    // Round k of the circle method on K_{r+1} pairs the hub with k and
    // wraps (k+i, k-i) around the circle 0..r-1. Vertex i of side k is the
    // i-th pair of round k; the line of circle vertex u picks, in each
    // round, the pair containing u. The hub's line (all pair-0 slots) is
    // the one removed.
    PartiteHypergraph h;
    h.r = r;
    h.side_sizes.assign(r, (r + 1) / 2);
    for (int u = 0; u < r; ++u) {
        std::vector<int> e(r);
        for (int k = 0; k < r; ++k) {
            if (u == k) {
                e[k] = 0;
            } else {
                int fwd = ((u - k) % r + r) % r;
                e[k] = std::min(fwd, r - fwd);
            }
        }
        h.edges.push_back(std::move(e));
    }
    validate(h);
    return h;
}

std::string example_f7_digits() {
    return "1111111 1235354 2313664 4412343 6142564 "
           "2154322 1344433 3514555 4551234 "
           "3332221 1424266 3655163 5123253 "
           "4325512 2222135 4136465 5361365";
}

std::string example_f6_digits() {
    return "111111 444114 125334 241535 545421 "
           "222211 553315 213444 351224 "
           "333131 143252 255153 514233";
}

std::string example_f6_linear_digits() {
    return "111111 212222 221333 322144 333213 "
           "413354 424412 432531 441245 514543 "
           "525251 543132 552315";
}

PartiteHypergraph example_f7() { return parse_digit_format(example_f7_digits(), 7); }
PartiteHypergraph example_f6() { return parse_digit_format(example_f6_digits(), 6); }
PartiteHypergraph example_f6_linear() { return parse_digit_format(example_f6_linear_digits(), 6); }

PartiteHypergraph biased_counterexample(int r) {
    if (r < 4 || r > 8)
        throw DomainError("biased counterexample requires 4 <= r <= 8, got " + std::to_string(r));

    // Permutations of {0..r-2} in lexicographic order; sigma(j) is the
    // vertex used on side j, with r-2 (the split vertex) replaced by a
    // fresh vertex per edge.
    std::vector<int> sigma(r - 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    PartiteHypergraph h;
    h.r = r;
    h.side_sizes.assign(r, 0);
    std::vector<int> next_fresh(r - 1, r - 2);
    for (int i = 0; i + 2 < r; ++i) {
        std::vector<int> e(r, 0);
        for (int j = 0; j + 1 < r; ++j) e[j] = i;
        e[r - 1] = 0;
        h.edges.push_back(std::move(e));
    }
    for (const auto& p : perms) {
        std::vector<int> e(r, 0);
        for (int j = 0; j + 1 < r; ++j) e[j] = (p[j] == r - 2) ? next_fresh[j]++ : p[j];
        e[r - 1] = 1;
        h.edges.push_back(std::move(e));
    }
    for (int j = 0; j + 1 < r; ++j) h.side_sizes[j] = next_fresh[j];
    h.side_sizes[r - 1] = 2;
    validate(h);
    return h;
}

PartiteHypergraph exponential_counterexample(int r) {
    if (r < 4 || r > 12)
        throw DomainError("exponential-side counterexample requires 4 <= r <= 12, got " +
                          std::to_string(r));

    // Subset P of {2..r} with 2 in P is encoded by the bitmask of
    // {3..r} over r-2 bits; v_P is vertex p of side 0, and bit i of p
    // decides between a (vertex 0) and b (vertex 1) on side i+2.
    PartiteHypergraph h;
    h.r = r;
    h.side_sizes.assign(r, 2);
    h.side_sizes[0] = 1 << (r - 2);
    for (int p = 0; p < (1 << (r - 2)); ++p) {
        std::vector<int> plus(r, 0), minus(r, 0);
        plus[0] = minus[0] = p;
        plus[1] = 0;
        minus[1] = 1;
        for (int i = 0; i + 2 < r; ++i) {
            bool in = (p >> i) & 1;
            plus[i + 2] = in ? 0 : 1;
            minus[i + 2] = in ? 1 : 0;
        }
        h.edges.push_back(std::move(plus));
        h.edges.push_back(std::move(minus));
    }
    validate(h);
    return h;
}

PartiteHypergraph random_intersecting(int r, int m, int side_cap, std::uint64_t seed) {
    if (r < 2) throw DomainError("random intersecting instance requires r >= 2");
    if (m < 0) throw DomainError("random intersecting instance requires m >= 0");
    if (side_cap < 1) throw DomainError("random intersecting instance requires side_cap >= 1");

    PartiteHypergraph h;
    h.r = r;
    h.side_sizes.assign(r, side_cap);
    std::mt19937_64 rng(seed);
    long attempts = 0;
    const long attempt_cap = 200000;
    while (static_cast<int>(h.edges.size()) < m) {
        if (++attempts > attempt_cap)
            throw CapacityError("random intersecting instance: rejection budget exhausted");
        std::vector<int> e(r);
        for (int s = 0; s < r; ++s) e[s] = bounded_int(rng, side_cap);
        bool ok = true;
        for (const auto& f : h.edges) {
            bool meets = false;
            for (int s = 0; s < r; ++s)
                if (e[s] == f[s]) {
                    meets = true;
                    break;
                }
            if (!meets) {
                ok = false;
                break;
            }
        }
        if (ok) h.edges.push_back(std::move(e));
    }
    validate(h);
    return h;
}

PartiteHypergraph random_line_subset(const PartiteHypergraph& h, int m, std::uint64_t seed) {
    validate(h);
    int n = static_cast<int>(h.edges.size());
    if (m < 0 || m > n)
        throw DomainError("line subset size " + std::to_string(m) + " outside 0.." +
                          std::to_string(n));

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < m; ++i) std::swap(idx[i], idx[i + bounded_int(rng, n - i)]);
    idx.resize(m);
    std::sort(idx.begin(), idx.end());

    PartiteHypergraph out;
    out.r = h.r;
    out.side_sizes = h.side_sizes;
    for (int i : idx) out.edges.push_back(h.edges[i]);
    return out;
}

SubsetTauProbe tpp_subset_tau_probe(int r, int m, int trials, std::uint64_t seed, Budget budget) {
    if (trials < 1) throw DomainError("trial count must be positive");
    PartiteHypergraph base = truncated_projective_plane(r - 1);
    int n = static_cast<int>(base.edges.size());
    if (m < 0 || m > n)
        throw DomainError("subset size " + std::to_string(m) + " outside 0.." + std::to_string(n));

    std::mt19937_64 rng(seed);
    std::vector<int> idx(n);
    SubsetTauProbe probe;
    probe.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < m; ++i) std::swap(idx[i], idx[i + bounded_int(rng, n - i)]);
        std::sort(idx.begin(), idx.begin() + m);
        if (m == 0) continue;
        PartiteHypergraph sub;
        sub.r = base.r;
        sub.side_sizes = base.side_sizes;
        for (int i = 0; i < m; ++i) sub.edges.push_back(base.edges[idx[i]]);
        if (!find_cover_leq(sub, r - 2, budget)) ++probe.hits;
    }
    return probe;
}

}  // namespace ryser
