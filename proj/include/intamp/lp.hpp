#ifndef INTAMP_LP_HPP
#define INTAMP_LP_HPP

#include <vector>

#include "intamp/rational.hpp"

namespace intamp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status{LpStatus::Infeasible};
    std::vector<Rat> x;         // primal solution (Optimal)
    Rat objective{};            // c^T x (Optimal)
    std::vector<Rat> farkas_y;  // Infeasible: y with y^T A <= 0 and y^T b > 0
};

/**
 * Exact rational simplex with Bland's rule:
 *     maximize c^T x  subject to  A x = b,  x >= 0.
 * A is row major, size m x n.
 */
LpResult lp_solve(const std::vector<std::vector<Rat>>& A, std::vector<Rat> b, const std::vector<Rat>& c);

}  // namespace intamp

#endif  // INTAMP_LP_HPP
