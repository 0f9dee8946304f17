#include "intamp/lp.hpp"

#include <algorithm>

namespace intamp {

namespace {

struct Tableau {
    // rows x (ncols + 1), last column is the rhs; basis columns are identity
    std::vector<std::vector<Rat>> t;
    std::vector<long> basis;
    long ncols;

    Rat& rhs(long i) { return t[i][ncols]; }

    void pivot(long row, long col) {
        Rat inv = Rat(1) / t[row][col];
        for (auto& v : t[row]) v *= inv;
        for (size_t r = 0; r < t.size(); ++r) {
            if (static_cast<long>(r) == row || t[r][col] == 0) continue;
            Rat f = t[r][col];
            for (long j = 0; j <= ncols; ++j) t[r][j] -= f * t[row][j];
        }
        basis[row] = col;
    }
};

// Bland's rule simplex on a canonical tableau; maximizes costs^T x.
// Returns false when unbounded.
bool simplex(Tableau& tb, const std::vector<Rat>& costs) {
    const long m = static_cast<long>(tb.t.size());
    for (;;) {
        // reduced costs: rc_j = costs_j - sum_i costs[basis[i]] * t[i][j]
        long enter = -1;
        for (long j = 0; j < tb.ncols && enter < 0; ++j) {
            Rat rc = costs[j];
            for (long i = 0; i < m; ++i)
                if (costs[tb.basis[i]] != 0) rc -= costs[tb.basis[i]] * tb.t[i][j];
            if (rc > 0) enter = j;  // Bland: first improving index
        }
        if (enter < 0) return true;  // optimal
        long leave = -1;
        Rat best;
        for (long i = 0; i < m; ++i) {
            if (tb.t[i][enter] <= Rat(0)) continue;
            Rat ratio = tb.rhs(i) / tb.t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && tb.basis[i] < tb.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return false;  // unbounded
        tb.pivot(leave, enter);
    }
}

}  // namespace

LpResult lp_solve(const std::vector<std::vector<Rat>>& A_in, std::vector<Rat> b, const std::vector<Rat>& c) {
    const long m = static_cast<long>(A_in.size());
    const long n = m > 0 ? static_cast<long>(A_in[0].size()) : static_cast<long>(c.size());
    std::vector<std::vector<Rat>> A = A_in;
    std::vector<int> flip(m, 1);
    for (long i = 0; i < m; ++i) {
        if (b[i] < 0) {
            flip[i] = -1;
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }
    }

    // phase 1: artificials at columns n..n+m-1
    Tableau tb;
    tb.ncols = n + m;
    tb.t.assign(m, std::vector<Rat>(tb.ncols + 1, Rat(0)));
    tb.basis.resize(m);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < n; ++j) tb.t[i][j] = A[i][j];
        tb.t[i][n + i] = 1;
        tb.t[i][tb.ncols] = b[i];
        tb.basis[i] = n + i;
    }
    std::vector<Rat> phase1(tb.ncols, Rat(0));
    for (long j = n; j < tb.ncols; ++j) phase1[j] = -1;
    simplex(tb, phase1);  // bounded by construction

    Rat infeas(0);
    for (long i = 0; i < m; ++i)
        if (tb.basis[i] >= n) infeas += tb.rhs(i);

    LpResult res;
    if (infeas > 0) {
        // Farkas: y = costs_B^T B^{-1}, read from the artificial columns
        res.status = LpStatus::Infeasible;
        res.farkas_y.assign(m, Rat(0));
        for (long i = 0; i < m; ++i) {
            Rat yi(0);
            for (long k = 0; k < m; ++k)
                if (phase1[tb.basis[k]] != 0) yi += phase1[tb.basis[k]] * tb.t[k][n + i];
            // undo the sign normalization; flip overall sign so y^T A <= 0, y^T b > 0
            res.farkas_y[i] = Rat(flip[i]) * (-yi);
        }
        return res;
    }

    // drive remaining artificials out of the basis (degenerate rows)
    std::vector<long> keep;
    for (long i = 0; i < m; ++i) {
        if (tb.basis[i] < n) {
            keep.push_back(i);
            continue;
        }
        long col = -1;
        for (long j = 0; j < n; ++j)
            if (tb.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            tb.pivot(i, col);
            keep.push_back(i);
        }
        // else: redundant row, drop it
    }
    if (static_cast<long>(keep.size()) != m) {
        std::vector<std::vector<Rat>> rows;
        std::vector<long> basis;
        for (long i : keep) {
            rows.push_back(std::move(tb.t[i]));
            basis.push_back(tb.basis[i]);
        }
        tb.t = std::move(rows);
        tb.basis = std::move(basis);
    }
    // remove artificial columns
    for (auto& row : tb.t) {
        row.erase(row.begin() + n, row.begin() + n + m);
    }
    tb.ncols = n;

    std::vector<Rat> costs(c);
    costs.resize(n, Rat(0));
    if (!simplex(tb, costs)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x.assign(n, Rat(0));
    for (size_t i = 0; i < tb.basis.size(); ++i) res.x[tb.basis[i]] = tb.rhs(static_cast<long>(i));
    res.objective = Rat(0);
    for (long j = 0; j < n; ++j) res.objective += costs[j] * res.x[j];
    return res;
}

}  // namespace intamp
