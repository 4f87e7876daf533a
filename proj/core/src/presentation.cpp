#include "bps/presentation.hpp"

#include <algorithm>

#include "bps/errors.hpp"

namespace bps {

GradedPresentation make_presentation(const PolyRing& ring, FreeModule target,
                                     std::vector<Vec> columns) {
  GradedPresentation p;
  p.ring = ring;
  p.target = std::move(target);
  for (Vec& c : columns) {
    Vec v = vec_normalize(ring, std::move(c.t));
    if (v.is_zero()) continue;
    p.rel_degrees.push_back(vec_degree_homog(v, p.target));
    p.relations.push_back(std::move(v));
  }
  return p;
}

GradedPresentation free_presentation(const PolyRing& ring, FreeModule target) {
  GradedPresentation p;
  p.ring = ring;
  p.target = std::move(target);
  return p;
}

GradedPresentation shift(const GradedPresentation& p, int l) {
  GradedPresentation q = p;
  for (int& s : q.target.shifts) s += l;
  for (int& d : q.rel_degrees) d += l;
  return q;
}

GradedPresentation direct_sum(const GradedPresentation& a,
                              const GradedPresentation& b) {
  if (!(a.ring == b.ring)) throw BadInput("direct_sum: ring mismatch");
  GradedPresentation p;
  p.ring = a.ring;
  p.target.shifts = a.target.shifts;
  p.target.shifts.insert(p.target.shifts.end(), b.target.shifts.begin(),
                         b.target.shifts.end());
  p.relations = a.relations;
  p.rel_degrees = a.rel_degrees;
  const int off = a.target.rank();
  for (const Vec& c : b.relations) {
    Vec v = c;
    for (MTerm& t : v.t) t.comp += off;
    p.relations.push_back(vec_normalize(p.ring, std::move(v.t)));
  }
  p.rel_degrees.insert(p.rel_degrees.end(), b.rel_degrees.begin(),
                       b.rel_degrees.end());
  return p;
}

namespace {

// Removes component `row` from every column and renumbers; drops columns that
// become zero.
void drop_row(GradedPresentation& p, int row) {
  p.target.shifts.erase(p.target.shifts.begin() + row);
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < p.relations.size(); ++j) {
    Vec v;
    for (const MTerm& t : p.relations[j].t) {
      if (t.comp == row) continue;
      MTerm nt = t;
      if (nt.comp > row) --nt.comp;
      v.t.push_back(std::move(nt));
    }
    if (v.t.empty()) continue;
    cols.push_back(vec_normalize(p.ring, std::move(v.t)));
    degs.push_back(p.rel_degrees[j]);
  }
  p.relations = std::move(cols);
  p.rel_degrees = std::move(degs);
}

}  // namespace

GradedPresentation minimalize(const GradedPresentation& p) {
  GradedPresentation q = p;
  while (true) {
    int pivot_row = -1, pivot_col = -1;
    Rational pivot_coeff;
    for (std::size_t j = 0; j < q.relations.size() && pivot_col < 0; ++j) {
      int best_row = -1;
      Rational best_c;
      for (const MTerm& t : q.relations[j].t) {
        if (t.m.total() != 0) continue;
        if (best_row < 0 || t.comp < best_row) {
          best_row = t.comp;
          best_c = t.c;
        }
      }
      if (best_row >= 0) {
        pivot_row = best_row;
        pivot_col = static_cast<int>(j);
        pivot_coeff = best_c;
      }
    }
    if (pivot_col < 0) break;

    // Scale the pivot column so the pivot entry is 1, then clear the pivot
    // row from all other columns; afterwards row and column can be deleted
    // (the implied row operations only touch the deleted column).
    Vec pc = vec_scale(q.relations[pivot_col], Rational(1) / pivot_coeff);
    for (std::size_t j = 0; j < q.relations.size(); ++j) {
      if (static_cast<int>(j) == pivot_col) continue;
      Poly a;  // entry (pivot_row, j)
      std::vector<PTerm> terms;
      for (const MTerm& t : q.relations[j].t)
        if (t.comp == pivot_row) terms.push_back({t.m, t.c});
      a = poly_normalize(q.ring, std::move(terms));
      if (a.is_zero()) continue;
      Vec updated = q.relations[j];
      for (const PTerm& t : a.t)
        updated = vec_axpy(q.ring, updated, -t.c, t.m, pc);
      q.relations[j] = std::move(updated);
    }
    q.relations.erase(q.relations.begin() + pivot_col);
    q.rel_degrees.erase(q.rel_degrees.begin() + pivot_col);
    drop_row(q, pivot_row);
  }
  // Drop zero columns that may have appeared through cancellation.
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < q.relations.size(); ++j) {
    if (q.relations[j].is_zero()) continue;
    cols.push_back(q.relations[j]);
    degs.push_back(q.rel_degrees[j]);
  }
  q.relations = std::move(cols);
  q.rel_degrees = std::move(degs);
  return q;
}

GradedPresentation transpose(const GradedPresentation& p) {
  GradedPresentation q;
  q.ring = p.ring;
  for (int d : p.rel_degrees) q.target.shifts.push_back(-d);
  // Column i of the transpose is row i of the relation matrix.
  for (int i = 0; i < p.target.rank(); ++i) {
    std::vector<MTerm> terms;
    for (int j = 0; j < p.num_relations(); ++j)
      for (const MTerm& t : p.relations[j].t)
        if (t.comp == i) terms.push_back({t.m, j, t.c});
    Vec col = vec_normalize(p.ring, std::move(terms));
    if (col.is_zero()) continue;
    q.rel_degrees.push_back(vec_degree_homog(col, q.target));
    q.relations.push_back(std::move(col));
  }
  return q;
}

Poly presentation_entry(const GradedPresentation& p, int i, int j) {
  std::vector<PTerm> terms;
  for (const MTerm& t : p.relations[j].t)
    if (t.comp == i) terms.push_back({t.m, t.c});
  return poly_normalize(p.ring, std::move(terms));
}

Vec apply_columns(const PolyRing& ring, const std::vector<Vec>& cols,
                  const Vec& v) {
  Vec acc = Vec::zero();
  for (const MTerm& t : v.t) {
    if (t.comp < 0 || t.comp >= static_cast<int>(cols.size()))
      throw BadInput("apply_columns: component out of range");
    acc = vec_axpy(ring, acc, t.c, t.m, cols[t.comp]);
  }
  return acc;
}

}  // namespace bps
