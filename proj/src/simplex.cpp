#include "ryser/simplex.hpp"

#include <stdexcept>

#include "ryser/errors.hpp"

namespace ryser {

namespace {

// Dense tableau: rows of length width, the last column holding the right hand
// side. cost mirrors the layout, with cost[width-1] = -(objective value).
struct Tableau {
    int width = 0;
    std::vector<std::vector<Rational>> row;
    std::vector<Rational> cost;
    std::vector<int> basis;

    void pivot(int pr, int pc) {
        Rational inv = Rational(1) / row[pr][pc];
        for (int j = 0; j < width; ++j) row[pr][j] *= inv;
        for (size_t i = 0; i < row.size(); ++i) {
            if (static_cast<int>(i) == pr || row[i][pc].sign() == 0) continue;
            Rational f = row[i][pc];
            for (int j = 0; j < width; ++j) row[i][j] -= f * row[pr][j];
        }
        if (cost[pc].sign() != 0) {
            Rational f = cost[pc];
            for (int j = 0; j < width; ++j) cost[j] -= f * row[pr][j];
        }
        basis[pr] = pc;
    }

    // Bland's rule: enter the least-index column with negative reduced cost;
    // leave by minimum ratio, ties broken by least basic-variable index.
    // Returns false when the objective is unbounded below.
    bool run(int usable_cols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < usable_cols; ++j)
                if (cost[j].sign() < 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i][enter].sign() <= 0) continue;
                Rational ratio = row[i][width - 1] / row[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = static_cast<int>(i);
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_solve(const std::vector<std::vector<Rational>>& a, const std::vector<RowSense>& senses,
                  const std::vector<Rational>& b, const std::vector<Rational>& c) {
    size_t m = a.size();
    size_t n = c.size();
    if (senses.size() != m || b.size() != m)
        throw DomainError("inconsistent LP dimensions");
    for (const auto& r : a)
        if (r.size() != n) throw DomainError("inconsistent LP row length");

    // Normalize to non-negative right hand sides.
    std::vector<std::vector<Rational>> rows = a;
    std::vector<Rational> rhs = b;
    std::vector<RowSense> sense = senses;
    for (size_t i = 0; i < m; ++i) {
        if (rhs[i].sign() < 0) {
            rhs[i] = -rhs[i];
            for (auto& x : rows[i]) x = -x;
            if (sense[i] == RowSense::ge) sense[i] = RowSense::le;
            else if (sense[i] == RowSense::le) sense[i] = RowSense::ge;
        }
    }

    int slacks = 0, artificials = 0;
    for (auto s : sense) {
        if (s != RowSense::eq) ++slacks;
        if (s != RowSense::le) ++artificials;
    }
    int ncols = static_cast<int>(n) + slacks + artificials;

    Tableau t;
    t.width = ncols + 1;
    t.row.assign(m, std::vector<Rational>(t.width, Rational(0)));
    t.basis.assign(m, -1);
    int next_slack = static_cast<int>(n);
    int art_begin = static_cast<int>(n) + slacks;
    int next_art = art_begin;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t.row[i][j] = rows[i][j];
        t.row[i][t.width - 1] = rhs[i];
        if (sense[i] == RowSense::le) {
            t.row[i][next_slack] = Rational(1);
            t.basis[i] = next_slack++;
        } else if (sense[i] == RowSense::ge) {
            t.row[i][next_slack++] = Rational(-1);
            t.row[i][next_art] = Rational(1);
            t.basis[i] = next_art++;
        } else {
            t.row[i][next_art] = Rational(1);
            t.basis[i] = next_art++;
        }
    }

    if (artificials > 0) {
        t.cost.assign(t.width, Rational(0));
        for (int j = art_begin; j < ncols; ++j) t.cost[j] = Rational(1);
        for (size_t i = 0; i < m; ++i)
            if (t.basis[i] >= art_begin)
                for (int j = 0; j < t.width; ++j) t.cost[j] -= t.row[i][j];
        if (!t.run(ncols)) throw std::logic_error("phase-1 objective cannot be unbounded");
        if ((-t.cost[t.width - 1]).sign() > 0) return {LpStatus::infeasible, Rational(0), {}};
        // Drive remaining artificials out of the basis; a row where that is
        // impossible is a redundant constraint and is dropped.
        for (size_t i = t.row.size(); i-- > 0;) {
            if (t.basis[i] < art_begin) continue;
            int col = -1;
            for (int j = 0; j < art_begin; ++j)
                if (t.row[i][j].sign() != 0) { col = j; break; }
            if (col >= 0) {
                t.pivot(static_cast<int>(i), col);
            } else {
                t.row.erase(t.row.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
            }
        }
    }

    // Phase 2 over the original and slack columns only.
    t.cost.assign(t.width, Rational(0));
    for (size_t j = 0; j < n; ++j) t.cost[j] = c[j];
    for (size_t i = 0; i < t.row.size(); ++i) {
        int bj = t.basis[i];
        if (bj < static_cast<int>(n) && t.cost[bj].sign() != 0) {
            Rational f = t.cost[bj];
            for (int j = 0; j < t.width; ++j) t.cost[j] -= f * t.row[i][j];
        }
    }
    if (!t.run(art_begin)) return {LpStatus::unbounded, Rational(0), {}};

    LpResult res;
    res.status = LpStatus::optimal;
    res.point.assign(n, Rational(0));
    for (size_t i = 0; i < t.row.size(); ++i)
        if (t.basis[i] < static_cast<int>(n)) res.point[t.basis[i]] = t.row[i][t.width - 1];
    for (size_t j = 0; j < n; ++j) res.value += c[j] * res.point[j];
    return res;
}

LpResult lp_min(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c) {
    return lp_solve(a, std::vector<RowSense>(a.size(), RowSense::ge), b, c);
}

}  // namespace ryser
