#include "bps/syzord.hpp"

#include "bps/errors.hpp"

namespace bps {

std::vector<Vec> dual_columns(const PolyRing& ring,
                              const std::vector<Vec>& cols, int rows) {
  std::vector<std::vector<MTerm>> out(rows);
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const MTerm& t : cols[k].t) {
      if (t.comp < 0 || t.comp >= rows)
        throw BadInput("dual_columns: component out of range");
      out[t.comp].push_back({t.m, static_cast<int>(k), t.c});
    }
  std::vector<Vec> res;
  res.reserve(rows);
  for (auto& terms : out) res.push_back(vec_normalize(ring, std::move(terms)));
  return res;
}

bool ext_vanishes_with_resolution(const FreeResolution& res, int i,
                                  const GBLimits& lim) {
  if (i < 1) throw BadInput("ext_vanishes: homological degree must be >= 1");
  const int len = res.length();
  if (i >= len && !res.complete)
    throw BadInput("ext_vanishes: resolution truncated before degree i");
  if (i > len) return true;

  const FreeModule& fi = res.modules[i];
  FreeModule fi_dual;
  for (int s : fi.shifts) fi_dual.shifts.push_back(-s);

  // Generators of ker(d_{i+1}^T) inside F_i^*.
  std::vector<Vec> ker_gens;
  if (i == len) {
    for (int k = 0; k < fi.rank(); ++k) ker_gens.push_back(Vec::unit(k));
  } else {
    FreeModule next_dual;
    for (int s : res.modules[i + 1].shifts) next_dual.shifts.push_back(-s);
    ker_gens = kernel(res.ring, dual_columns(res.ring, res.mats[i], fi.rank()),
                      next_dual, lim);
  }
  if (ker_gens.empty()) return true;

  // Image of d_i^T inside F_i^*.
  std::vector<Vec> im =
      dual_columns(res.ring, res.mats[i - 1], res.modules[i - 1].rank());
  std::vector<Vec> gb = buchberger(res.ring, im, fi_dual, lim);
  for (const Vec& z : ker_gens)
    if (!normal_form(res.ring, z, gb).is_zero()) return false;
  return true;
}

bool ext_vanishes(const GradedPresentation& p, int i, const GBLimits& lim) {
  if (i < 1) throw BadInput("ext_vanishes: homological degree must be >= 1");
  FreeResolution res = minimal_free_resolution(p, i + 1, lim);
  return ext_vanishes_with_resolution(res, i, lim);
}

int syzygy_order(const GradedPresentation& p, const GBLimits& lim) {
  const int n = p.ring.n;
  GradedPresentation q = minimalize(p);
  if (q.relations.empty()) return n;  // free module
  FreeResolution res =
      minimal_free_resolution(transpose(q), n + 2, lim);
  for (int k = 1; k <= n; ++k)
    if (!ext_vanishes_with_resolution(res, k, lim)) return k - 1;
  return n;
}

}  // namespace bps
