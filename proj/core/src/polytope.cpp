#include "subtour/polytope.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "subtour/errors.hpp"
#include "subtour/linalg.hpp"
#include "subtour/simplex.hpp"

namespace subtour {

namespace {

constexpr size_t kMaxRows = 96;  // 2 * 12 box rows + 60 system rows fits
using TightSet = std::bitset<kMaxRows>;

struct IneqRow {  // a . t <= c
  RatRow a;
  Rat c;
};

struct DdVertex {
  QPoint t;
  TightSet tight;
};

QPoint dense_coeffs(const LinearConstraint& c, int dim) {
  QPoint v = zero_point(dim);
  for (const auto& [id, coef] : c.coeffs) v[static_cast<size_t>(id)] = coef;
  return v;
}

Rat dot_row(const RatRow& a, const QPoint& t) {
  Rat s = 0;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) s += a[k] * t[k];
  return s;
}

TightSet recompute_tight(const std::vector<IneqRow>& rows, int upto, const QPoint& t) {
  TightSet set;
  for (int j = 0; j <= upto; ++j)
    if (dot_row(rows[static_cast<size_t>(j)].a, t) == rows[static_cast<size_t>(j)].c)
      set.set(static_cast<size_t>(j));
  return set;
}

}  // namespace

std::vector<QPoint> enumerate_vertices(const ConstraintSystem& sys) {
  if (sys.dim > 12) throw ScaleError("vertex enumeration limited to 12 variables");
  if (static_cast<int>(sys.rows.size()) > 60)
    throw ScaleError("vertex enumeration limited to 60 constraints");

  // Split off the equalities and eliminate them.
  RatMatrix eq_a;
  RatRow eq_b;
  std::vector<const LinearConstraint*> ineqs;
  for (const LinearConstraint& c : sys.rows) {
    if (c.sense == Sense::EQ) {
      eq_a.push_back(dense_coeffs(c, sys.dim));
      eq_b.push_back(c.rhs);
    } else {
      ineqs.push_back(&c);
    }
  }

  QPoint x0 = zero_point(sys.dim);
  RatMatrix basis;  // null-space basis vectors, length sys.dim each
  if (eq_a.empty()) {
    basis.assign(static_cast<size_t>(sys.dim), RatRow(static_cast<size_t>(sys.dim), Rat(0)));
    for (int k = 0; k < sys.dim; ++k) basis[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1;
  } else {
    RatRow sol;
    if (!solve_linear(eq_a, eq_b, sol)) return {};  // inconsistent equalities
    x0 = sol;
    basis = null_space(eq_a);
  }
  const int d = static_cast<int>(basis.size());

  // Inequalities in t-space: (a . basis_k) t <= rhs - a . x0, as <= rows.
  std::vector<IneqRow> trows;
  for (const LinearConstraint* c : ineqs) {
    QPoint a = dense_coeffs(*c, sys.dim);
    Rat rhs = c->rhs;
    if (c->sense == Sense::GE) {
      for (Rat& v : a) v = -v;
      rhs = -rhs;
    }
    IneqRow row;
    row.a.assign(static_cast<size_t>(d), Rat(0));
    for (int k = 0; k < d; ++k) row.a[static_cast<size_t>(k)] = dot(a, basis[static_cast<size_t>(k)]);
    row.c = rhs - dot(a, x0);
    const bool zero = std::all_of(row.a.begin(), row.a.end(), [](const Rat& v) { return v == 0; });
    if (zero) {
      if (row.c < 0) return {};  // 0 <= negative: empty
      continue;                  // vacuous in the affine hull
    }
    trows.push_back(std::move(row));
  }

  if (d == 0) {
    return {x0};  // equalities pin a single point; all rows already vetted
  }

  // Coordinate LPs give boundedness and a bounding box.
  ConstraintSystem tsys;
  tsys.dim = d;
  for (const IneqRow& r : trows) {
    LinearConstraint c;
    for (int k = 0; k < d; ++k)
      if (r.a[static_cast<size_t>(k)] != 0) c.coeffs[k] = r.a[static_cast<size_t>(k)];
    c.sense = Sense::LE;
    c.rhs = r.c;
    tsys.rows.push_back(std::move(c));
  }
  RatRow lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    QPoint obj = zero_point(d);
    obj[static_cast<size_t>(k)] = 1;
    const LpResult mx = lp_solve(tsys, obj, LpDir::Max);
    if (mx.status == LpStatus::Infeasible) return {};
    if (mx.status == LpStatus::Unbounded)
      throw DomainError("vertex enumeration requires a bounded feasible set");
    const LpResult mn = lp_solve(tsys, obj, LpDir::Min);
    if (mn.status != LpStatus::Optimal)
      throw DomainError("vertex enumeration requires a bounded feasible set");
    hi[static_cast<size_t>(k)] = mx.value;
    lo[static_cast<size_t>(k)] = mn.value;
  }

  // Row list: 2d box rows (strictly containing the polytope), then trows.
  std::vector<IneqRow> rows;
  for (int k = 0; k < d; ++k) {
    IneqRow up, down;
    up.a.assign(static_cast<size_t>(d), Rat(0));
    up.a[static_cast<size_t>(k)] = 1;
    up.c = hi[static_cast<size_t>(k)] + 1;
    down.a.assign(static_cast<size_t>(d), Rat(0));
    down.a[static_cast<size_t>(k)] = -1;
    down.c = -(lo[static_cast<size_t>(k)] - 1);
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  }
  const int n_box = 2 * d;
  for (IneqRow& r : trows) rows.push_back(std::move(r));
  if (rows.size() > kMaxRows)
    throw ScaleError("vertex enumeration row capacity exceeded");

  // Start from the box corners.
  std::vector<DdVertex> verts;
  for (long long mask = 0; mask < (1LL << d); ++mask) {
    DdVertex v;
    v.t = zero_point(d);
    for (int k = 0; k < d; ++k) {
      const bool high = (mask >> k) & 1;
      v.t[static_cast<size_t>(k)] = high ? Rat(hi[static_cast<size_t>(k)] + 1)
                                         : Rat(lo[static_cast<size_t>(k)] - 1);
      v.tight.set(static_cast<size_t>(2 * k + (high ? 0 : 1)));
    }
    verts.push_back(std::move(v));
  }

  // Insert the polytope rows one at a time.
  for (int r = n_box; r < static_cast<int>(rows.size()); ++r) {
    const IneqRow& row = rows[static_cast<size_t>(r)];
    std::vector<DdVertex> inside, outside;
    std::vector<DdVertex> next;
    for (DdVertex& v : verts) {
      const Rat s = dot_row(row.a, v.t) - row.c;
      if (s < 0) {
        inside.push_back(v);
        next.push_back(std::move(v));
      } else if (s == 0) {
        v.tight.set(static_cast<size_t>(r));
        next.push_back(std::move(v));
      } else {
        outside.push_back(std::move(v));
      }
    }
    std::set<QPoint> fresh;
    for (const DdVertex& u : inside) {
      for (const DdVertex& w : outside) {
        const TightSet common = u.tight & w.tight;
        if (static_cast<int>(common.count()) < d - 1) continue;
        RatMatrix cm;
        for (int j = 0; j < r; ++j)
          if (common.test(static_cast<size_t>(j))) cm.push_back(rows[static_cast<size_t>(j)].a);
        if (matrix_rank(cm) != d - 1) continue;
        // Cross the hyperplane along the edge [u, w].
        const Rat su = dot_row(row.a, u.t) - row.c;
        const Rat sw = dot_row(row.a, w.t) - row.c;
        const Rat lambda = su / (su - sw);  // in (0,1)
        QPoint p = zero_point(d);
        for (int k = 0; k < d; ++k)
          p[static_cast<size_t>(k)] =
              u.t[static_cast<size_t>(k)] +
              lambda * (w.t[static_cast<size_t>(k)] - u.t[static_cast<size_t>(k)]);
        fresh.insert(std::move(p));
      }
    }
    for (const QPoint& p : fresh) {
      // Skip points that coincide with kept tight vertices.
      bool dup = false;
      for (const DdVertex& v : next)
        if (v.tight.test(static_cast<size_t>(r)) && v.t == p) {
          dup = true;
          break;
        }
      if (dup) continue;
      DdVertex nv;
      nv.tight = recompute_tight(rows, r, p);
      nv.t = p;
      next.push_back(std::move(nv));
    }
    if (next.empty())
      throw ContradictionError("incremental vertex insertion emptied a feasible system");
    verts = std::move(next);
  }

  // No surviving vertex may touch the box (margin 1 around a bounded set).
  for (const DdVertex& v : verts)
    for (int j = 0; j < n_box; ++j)
      if (v.tight.test(static_cast<size_t>(j)))
        throw ContradictionError("a reported vertex touched the artificial bounding box");

  // Map back to x-space, dedupe, canonical order.
  std::set<QPoint> out;
  for (const DdVertex& v : verts) {
    QPoint x = x0;
    for (int k = 0; k < d; ++k) {
      const Rat& tk = v.t[static_cast<size_t>(k)];
      if (tk == 0) continue;
      for (int e = 0; e < sys.dim; ++e)
        x[static_cast<size_t>(e)] += tk * basis[static_cast<size_t>(k)][static_cast<size_t>(e)];
    }
    out.insert(std::move(x));
  }
  return {out.begin(), out.end()};
}

int affine_dim(const std::vector<QPoint>& points) { return affine_rank(points); }

int face_dim(const ConstraintSystem& sys, const LinearConstraint& c) {
  const QPoint obj = dense_coeffs(c, sys.dim);
  // Validity check by LP in the tightening direction(s).
  if (c.sense == Sense::LE || c.sense == Sense::EQ) {
    const LpResult r = lp_solve(sys, obj, LpDir::Max);
    if (r.status == LpStatus::Unbounded || (r.status == LpStatus::Optimal && r.value > c.rhs))
      throw DomainError("constraint is not valid for the system");
  }
  if (c.sense == Sense::GE || c.sense == Sense::EQ) {
    const LpResult r = lp_solve(sys, obj, LpDir::Min);
    if (r.status == LpStatus::Unbounded || (r.status == LpStatus::Optimal && r.value < c.rhs))
      throw DomainError("constraint is not valid for the system");
  }
  std::vector<QPoint> tight;
  for (const QPoint& v : enumerate_vertices(sys))
    if (eval_lhs(c, v) == c.rhs) tight.push_back(v);
  if (tight.empty()) return -1;
  return affine_rank(tight);
}

RedundancyCheck is_redundant(const ConstraintSystem& sys, int row_index) {
  if (row_index < 0 || row_index >= static_cast<int>(sys.rows.size()))
    throw DomainError("row index out of range");
  const LinearConstraint& c = sys.rows[static_cast<size_t>(row_index)];
  ConstraintSystem rest;
  rest.dim = sys.dim;
  for (int i = 0; i < static_cast<int>(sys.rows.size()); ++i)
    if (i != row_index) rest.rows.push_back(sys.rows[static_cast<size_t>(i)]);

  const QPoint obj = dense_coeffs(c, sys.dim);
  RedundancyCheck out;
  auto check_side = [&](LpDir dir, bool upper) -> bool {
    const LpResult r = lp_solve(rest, obj, dir);
    if (r.status == LpStatus::Infeasible) {
      out.certificate = "remaining system is infeasible; both feasible sets are empty";
      return true;
    }
    if (r.status == LpStatus::Unbounded) {
      out.certificate = "row value is unbounded over the remaining system";
      return false;
    }
    const bool ok = upper ? r.value <= c.rhs : r.value >= c.rhs;
    out.certificate += (upper ? "max lhs = " : "min lhs = ") + rat_to_string(r.value) +
                       (ok ? " within " : " beyond ") + "rhs " + rat_to_string(c.rhs) + "; ";
    return ok;
  };
  bool redundant = true;
  if (c.sense == Sense::LE || c.sense == Sense::EQ)
    redundant = redundant && check_side(LpDir::Max, true);
  if (redundant && (c.sense == Sense::GE || c.sense == Sense::EQ))
    redundant = redundant && check_side(LpDir::Min, false);
  out.redundant = redundant;
  return out;
}

}  // namespace subtour
