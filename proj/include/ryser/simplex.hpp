#ifndef RYSER_SIMPLEX_HPP
#define RYSER_SIMPLEX_HPP

#include <vector>

#include "ryser/rational.hpp"

namespace ryser {

enum class LpStatus { optimal, infeasible, unbounded };

enum class RowSense { ge, le, eq };

struct LpResult {
    LpStatus status = LpStatus::optimal;
    Rational value;
    // A basic optimal solution: a vertex of {x : Ax REL b, x >= 0}.
    std::vector<Rational> point;
};

// Minimize c.x subject to a[i].x REL b[i] for each row and x >= 0, in exact
// rational arithmetic. Two-phase primal simplex with Bland's least-index rule,
// so it always terminates. The returned point is basic.
LpResult lp_solve(const std::vector<std::vector<Rational>>& a, const std::vector<RowSense>& senses,
                  const std::vector<Rational>& b, const std::vector<Rational>& c);

// Minimize c.x subject to a[i].x >= b[i], x >= 0.
LpResult lp_min(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c);

}  // namespace ryser

#endif
