#include "subtour/simplex.hpp"

#include <algorithm>
#include <vector>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

// Dense tableau: rows of (coefficients | rhs), rhs kept nonnegative by the
// ratio test; basis[i] names the column basic in row i.
struct Tableau {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> basis;
  int cols = 0;

  void pivot(int row, int col) {
    const Rat p = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
    auto& pr = a[static_cast<size_t>(row)];
    for (Rat& v : pr) v /= p;
    b[static_cast<size_t>(row)] /= p;
    for (size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const Rat f = a[i][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) a[i][static_cast<size_t>(j)] -= f * pr[static_cast<size_t>(j)];
      b[i] -= f * b[static_cast<size_t>(row)];
    }
    basis[static_cast<size_t>(row)] = col;
  }

  // Minimizes cost over the current basis; `allowed` masks enterable
  // columns. Returns false when unbounded below.
  bool run(const std::vector<Rat>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced costs d_j = cost_j - sum_i cost_{basis i} * a[i][j].
      int enter = -1;
      for (int j = 0; j < cols && enter < 0; ++j) {
        if (!allowed[static_cast<size_t>(j)]) continue;
        Rat d = cost[static_cast<size_t>(j)];
        for (size_t i = 0; i < a.size(); ++i) {
          const Rat& cb = cost[static_cast<size_t>(basis[i])];
          if (cb != 0 && a[i][static_cast<size_t>(j)] != 0) d -= cb * a[i][static_cast<size_t>(j)];
        }
        if (d < 0) enter = j;  // Bland: first improving column
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < a.size(); ++i) {
        const Rat& piv = a[i][static_cast<size_t>(enter)];
        if (piv <= 0) continue;
        const Rat ratio = b[i] / piv;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[static_cast<size_t>(leave)])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  Rat objective(const std::vector<Rat>& cost) const {
    Rat v = 0;
    for (size_t i = 0; i < a.size(); ++i) v += cost[static_cast<size_t>(basis[i])] * b[i];
    return v;
  }
};

}  // namespace

LpResult lp_solve(const ConstraintSystem& sys, const QPoint& objective, LpDir dir) {
  if (static_cast<int>(objective.size()) != sys.dim)
    throw DomainError("objective dimension does not match the system");

  // Detect variables with a nonnegative lower bound from single-entry rows.
  std::vector<bool> nonneg(static_cast<size_t>(sys.dim), false);
  for (const LinearConstraint& c : sys.rows) {
    if (c.coeffs.size() != 1) continue;
    const auto& [j, coef] = *c.coeffs.begin();
    const Rat bound = c.rhs / coef;  // x_j (sense adjusted by coef sign) bound
    const bool lower = (c.sense == Sense::GE && coef > 0) || (c.sense == Sense::LE && coef < 0) ||
                       c.sense == Sense::EQ;
    if (lower && bound >= 0) nonneg[static_cast<size_t>(j)] = true;
  }

  // Column layout: structural (one col for nonneg vars, two for free), then
  // slacks, then artificials.
  std::vector<int> pos_col(static_cast<size_t>(sys.dim)), neg_col(static_cast<size_t>(sys.dim), -1);
  int ncols = 0;
  for (int j = 0; j < sys.dim; ++j) {
    pos_col[static_cast<size_t>(j)] = ncols++;
    if (!nonneg[static_cast<size_t>(j)]) neg_col[static_cast<size_t>(j)] = ncols++;
  }
  const int structural = ncols;
  const int nrows = static_cast<int>(sys.rows.size());
  const int slack_base = structural;
  ncols += nrows;  // one potential slack per row (unused cols stay zero)
  const int art_base = ncols;
  ncols += nrows;  // one potential artificial per row

  Tableau t;
  t.cols = ncols;
  t.a.assign(static_cast<size_t>(nrows), std::vector<Rat>(static_cast<size_t>(ncols), Rat(0)));
  t.b.assign(static_cast<size_t>(nrows), Rat(0));
  t.basis.assign(static_cast<size_t>(nrows), -1);
  std::vector<bool> is_artificial(static_cast<size_t>(ncols), false);

  for (int i = 0; i < nrows; ++i) {
    const LinearConstraint& c = sys.rows[static_cast<size_t>(i)];
    auto& row = t.a[static_cast<size_t>(i)];
    Rat rhs = c.rhs;
    int sign = 1;
    // Normalize to rhs >= 0 first, tracking the flipped sense.
    Sense sense = c.sense;
    if (rhs < 0) {
      sign = -1;
      rhs = -rhs;
      if (sense == Sense::LE)
        sense = Sense::GE;
      else if (sense == Sense::GE)
        sense = Sense::LE;
    }
    for (const auto& [j, coef] : c.coeffs) {
      if (j < 0 || j >= sys.dim) throw DomainError("constraint column out of range");
      const Rat v = coef * sign;
      row[static_cast<size_t>(pos_col[static_cast<size_t>(j)])] += v;
      if (neg_col[static_cast<size_t>(j)] >= 0)
        row[static_cast<size_t>(neg_col[static_cast<size_t>(j)])] -= v;
    }
    t.b[static_cast<size_t>(i)] = rhs;
    if (sense == Sense::LE) {
      row[static_cast<size_t>(slack_base + i)] = 1;
      t.basis[static_cast<size_t>(i)] = slack_base + i;
    } else {
      if (sense == Sense::GE) row[static_cast<size_t>(slack_base + i)] = -1;
      row[static_cast<size_t>(art_base + i)] = 1;
      is_artificial[static_cast<size_t>(art_base + i)] = true;
      t.basis[static_cast<size_t>(i)] = art_base + i;
    }
  }

  LpResult res;

  // Phase 1: minimize the artificial sum.
  {
    std::vector<Rat> cost(static_cast<size_t>(ncols), Rat(0));
    for (int j = art_base; j < ncols; ++j)
      if (is_artificial[static_cast<size_t>(j)]) cost[static_cast<size_t>(j)] = 1;
    std::vector<bool> allowed(static_cast<size_t>(ncols), true);
    if (!t.run(cost, allowed))
      throw ContradictionError("phase-1 objective is bounded below by zero yet reported unbounded");
    if (t.objective(cost) != 0) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // Pivot lingering zero-valued artificials out of the basis when possible.
    for (size_t i = 0; i < t.basis.size(); ++i) {
      if (!is_artificial[static_cast<size_t>(t.basis[i])]) continue;
      int col = -1;
      for (int j = 0; j < art_base && col < 0; ++j)
        if (t.a[i][static_cast<size_t>(j)] != 0) col = j;
      if (col >= 0) t.pivot(static_cast<int>(i), col);
      // Otherwise the row is 0 = 0 (dependent); the artificial stays basic at
      // zero and is barred from re-entering below.
    }
  }

  // Phase 2: the real objective over the phase-1 feasible basis.
  {
    std::vector<Rat> cost(static_cast<size_t>(ncols), Rat(0));
    for (int j = 0; j < sys.dim; ++j) {
      const Rat c = dir == LpDir::Min ? objective[static_cast<size_t>(j)]
                                      : -objective[static_cast<size_t>(j)];
      cost[static_cast<size_t>(pos_col[static_cast<size_t>(j)])] += c;
      if (neg_col[static_cast<size_t>(j)] >= 0)
        cost[static_cast<size_t>(neg_col[static_cast<size_t>(j)])] -= c;
    }
    std::vector<bool> allowed(static_cast<size_t>(ncols), true);
    for (int j = 0; j < ncols; ++j)
      if (is_artificial[static_cast<size_t>(j)]) allowed[static_cast<size_t>(j)] = false;
    if (!t.run(cost, allowed)) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    res.status = LpStatus::Optimal;
    const Rat raw = t.objective(cost);
    res.value = dir == LpDir::Min ? raw : -raw;
    res.point = zero_point(sys.dim);
    std::vector<std::pair<int, int>> col_var(static_cast<size_t>(structural));  // (var, sign)
    for (int j = 0; j < sys.dim; ++j) {
      col_var[static_cast<size_t>(pos_col[static_cast<size_t>(j)])] = {j, 1};
      if (neg_col[static_cast<size_t>(j)] >= 0)
        col_var[static_cast<size_t>(neg_col[static_cast<size_t>(j)])] = {j, -1};
    }
    for (size_t i = 0; i < t.basis.size(); ++i) {
      const int col = t.basis[i];
      if (col >= structural) continue;
      const auto& [var, sign2] = col_var[static_cast<size_t>(col)];
      if (sign2 > 0)
        res.point[static_cast<size_t>(var)] += t.b[i];
      else
        res.point[static_cast<size_t>(var)] -= t.b[i];
    }
  }
  return res;
}

}  // namespace subtour
